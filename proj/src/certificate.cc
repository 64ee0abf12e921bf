#include <rolecol/certificate.hh>
#include <rolecol/error.hh>
#include <rolecol/graph_io.hh>

#include <fstream>
#include <map>
#include <sstream>

namespace rolecol {

namespace {
    [[noreturn]] void fail(int line, const std::string &what)
    {
        throw InvalidInput("colouring format, line " + std::to_string(line) + ": " + what);
    }
}

void write_certificate(std::ostream &out, const Certificate &cert, const std::vector<std::string> &comments)
{
    for (const auto &c : comments)
        out << "c " << c << '\n';
    const auto &colours = cert.colouring.colours;
    for (std::size_t v = 0; v < colours.size(); ++v)
        out << "v " << v + 1 << ' ' << colours[v] + 1 << '\n';
    if (cert.role) {
        out << "c role\n";
        write_graph(out, cert.role->graph);
    }
}

Certificate read_certificate(std::istream &in)
{
    std::map<int, int> colour_of;
    std::vector<std::string> role_lines;
    bool in_role = false, seen_solution = false;
    int line_no = 0, role_first = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag))
            continue;
        if (tag == "c") {
            std::string word;
            ss >> word;
            if (word == "solution") {
                if (seen_solution)
                    break;
                seen_solution = true;
            }
            else if (word == "role") {
                if (in_role)
                    fail(line_no, "second role block");
                in_role = true;
                role_first = line_no + 1;
            }
            continue;
        }
        if (in_role) {
            role_lines.push_back(line);
            continue;
        }
        if (tag != "v")
            fail(line_no, "unexpected line '" + line + "'");
        int v = 0, c = 0;
        if (!(ss >> v >> c))
            fail(line_no, "expected 'v <vertex> <colour>'");
        std::string trailing;
        if (ss >> trailing)
            fail(line_no, "trailing tokens");
        if (v < 1 || c < 1)
            fail(line_no, "vertex and colour ids start at 1");
        if (!colour_of.emplace(v, c - 1).second)
            fail(line_no, "vertex " + std::to_string(v) + " coloured twice");
    }

    Certificate cert;
    const int n = colour_of.empty() ? 0 : colour_of.rbegin()->first;
    if (static_cast<int>(colour_of.size()) != n)
        throw InvalidInput("colouring format: vertices 1.." + std::to_string(n) + " are not all coloured");
    for (auto [v, c] : colour_of)
        cert.colouring.colours.push_back(c);
    if (in_role)
        cert.role = RoleGraph{parse_graph_lines(role_lines, role_first)};
    return cert;
}

Certificate read_certificate_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open colouring file '" + path + "'");
    return read_certificate(in);
}

} // namespace rolecol
