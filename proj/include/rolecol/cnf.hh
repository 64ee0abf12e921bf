#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rolecol {

/// Monotone CNF: every literal is a positive variable index in 1..variable_count.
struct CnfFormula {
    int variable_count = 0;
    std::vector<std::vector<int>> clauses;
    /// Set when clauses outside width 2..3 were allowed in; such formulas
    /// leave the max-degree-3 regime of the gadget builders.
    bool wide = false;

    /// s_i for i = 1..n, stored at index i - 1.
    std::vector<int> occurrences() const;
};

struct CnfParseOptions {
    bool allow_wide_clauses = false;
};

/// DIMACS-style: "c" comments, "p cnf <n> <m>", clauses of positive integers
/// each terminated by 0 (clauses may span or share lines). Rejects negative
/// literals, repeated variables within a clause, empty clauses, a clause
/// count that disagrees with the header, and widths outside 2..3 unless
/// allowed.
CnfFormula parse_cnf(std::istream &in, const CnfParseOptions &opts = {});
CnfFormula parse_cnf_file(const std::string &path, const CnfParseOptions &opts = {});
void write_cnf(std::ostream &out, const CnfFormula &f);

/// Throws InvalidInput if the formula breaks the invariants parse_cnf enforces.
void validate_cnf(const CnfFormula &f);

struct NaeAssignment {
    std::vector<bool> values;  // values[i - 1] is x_i; true means T

    bool value(int variable) const { return values.at(variable - 1); }
    friend bool operator==(const NaeAssignment &, const NaeAssignment &) = default;
};

/// Every clause has a T literal and an F literal.
bool is_nae_satisfying(const CnfFormula &f, const NaeAssignment &a);

/// Tries assignments in increasing binary order (x_1 is the low bit).
/// Guard: at most 24 variables.
std::optional<NaeAssignment> nae_brute(const CnfFormula &f);

NaeAssignment complement(const NaeAssignment &a);

} // namespace rolecol
