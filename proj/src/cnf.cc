#include <rolecol/cnf.hh>
#include <rolecol/error.hh>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace rolecol {

namespace {
    [[noreturn]] void fail(int line, const std::string &what)
    {
        throw InvalidInput("cnf format, line " + std::to_string(line) + ": " + what);
    }

    void check_clause(const std::vector<int> &clause, int n, bool wide, const std::string &where)
    {
        if (clause.empty())
            throw InvalidInput(where + "empty clause");
        for (auto x : clause) {
            if (x < 0)
                throw InvalidInput(where + "negative literal " + std::to_string(x) + " (formula must be monotone)");
            if (x == 0 || x > n)
                throw InvalidInput(where + "variable " + std::to_string(x) + " outside 1.." + std::to_string(n));
        }
        auto sorted = clause;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvalidInput(where + "variable repeated within a clause");
        if (!wide && (clause.size() < 2 || clause.size() > 3))
            throw InvalidInput(where + "clause of width " + std::to_string(clause.size()) +
                               " (widths 2..3 only unless wide clauses are allowed)");
    }
}

std::vector<int> CnfFormula::occurrences() const
{
    std::vector<int> s(variable_count, 0);
    for (const auto &c : clauses)
        for (auto x : c)
            ++s.at(x - 1);
    return s;
}

void validate_cnf(const CnfFormula &f)
{
    if (f.variable_count < 1)
        throw InvalidInput("formula needs at least one variable");
    for (const auto &c : f.clauses)
        check_clause(c, f.variable_count, f.wide, "");
}

CnfFormula parse_cnf(std::istream &in, const CnfParseOptions &opts)
{
    CnfFormula f;
    f.wide = opts.allow_wide_clauses;
    long long declared = -1;
    std::vector<int> current;
    int line_no = 0, clause_line = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        std::istringstream ss(line);
        std::string token;
        if (!(ss >> token) || token == "c" || token[0] == 'c' || token == "%")
            continue;
        if (token == "p") {
            std::string kind;
            if (declared >= 0)
                fail(line_no, "duplicate header");
            if (!(ss >> kind >> f.variable_count >> declared) || kind != "cnf" || f.variable_count < 1 || declared < 0)
                fail(line_no, "expected 'p cnf <n> <m>' with n >= 1");
            if (ss >> token)
                fail(line_no, "trailing tokens after header");
            continue;
        }
        if (declared < 0)
            fail(line_no, "clause before header");
        do {
            int lit = 0;
            std::size_t used = 0;
            try {
                lit = std::stoi(token, &used);
            }
            catch (const std::exception &) {
                fail(line_no, "bad token '" + token + "'");
            }
            if (used != token.size())
                fail(line_no, "bad token '" + token + "'");
            if (current.empty())
                clause_line = line_no;
            if (lit == 0) {
                try {
                    check_clause(current, f.variable_count, f.wide, "");
                }
                catch (const InvalidInput &e) {
                    fail(clause_line, e.what());
                }
                f.clauses.push_back(std::move(current));
                current.clear();
            }
            else
                current.push_back(lit);
        } while (ss >> token);
    }
    if (declared < 0)
        throw InvalidInput("cnf format: missing 'p cnf' header");
    if (!current.empty())
        fail(clause_line, "clause not terminated by 0");
    if (static_cast<long long>(f.clauses.size()) != declared)
        throw InvalidInput("cnf format: header declares " + std::to_string(declared) + " clauses, found " +
                           std::to_string(f.clauses.size()));
    return f;
}

CnfFormula parse_cnf_file(const std::string &path, const CnfParseOptions &opts)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open cnf file '" + path + "'");
    return parse_cnf(in, opts);
}

void write_cnf(std::ostream &out, const CnfFormula &f)
{
    out << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
    for (const auto &c : f.clauses) {
        for (auto x : c)
            out << x << ' ';
        out << "0\n";
    }
}

bool is_nae_satisfying(const CnfFormula &f, const NaeAssignment &a)
{
    if (static_cast<int>(a.values.size()) != f.variable_count)
        throw InvalidInput("assignment does not cover every variable");
    for (const auto &c : f.clauses) {
        bool has_true = false, has_false = false;
        for (auto x : c)
            (a.value(x) ? has_true : has_false) = true;
        if (!has_true || !has_false)
            return false;
    }
    return true;
}

std::optional<NaeAssignment> nae_brute(const CnfFormula &f)
{
    const int n = f.variable_count;
    if (n > 24)
        throw GuardError("nae_brute enumerates at most 2^24 assignments");
    NaeAssignment a;
    a.values.resize(n);
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        for (int i = 0; i < n; ++i)
            a.values[i] = (mask >> i) & 1;
        if (is_nae_satisfying(f, a))
            return a;
    }
    return std::nullopt;
}

NaeAssignment complement(const NaeAssignment &a)
{
    NaeAssignment out = a;
    out.values.flip();
    return out;
}

} // namespace rolecol
