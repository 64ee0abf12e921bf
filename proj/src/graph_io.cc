#include <rolecol/error.hh>
#include <rolecol/graph_io.hh>

#include <fstream>
#include <sstream>

namespace rolecol {

namespace {
    [[noreturn]] void fail(int line, const std::string &what)
    {
        throw InvalidInput("graph format, line " + std::to_string(line) + ": " + what);
    }

    bool blank(const std::string &line)
    {
        return line.find_first_not_of(" \t\r") == std::string::npos;
    }
}

Graph parse_graph_lines(const std::vector<std::string> &lines, int first_line)
{
    int n = -1;
    long long declared_edges = -1;
    std::vector<Edge> edges;
    int line_no = first_line - 1;
    for (const auto &line : lines) {
        ++line_no;
        if (blank(line))
            continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "c")
            continue;
        if (tag == "p") {
            std::string kind;
            if (n >= 0)
                fail(line_no, "duplicate header");
            if (!(ss >> kind >> n >> declared_edges) || kind != "graph" || n < 0 || declared_edges < 0)
                fail(line_no, "expected 'p graph <n> <m>'");
        }
        else if (tag == "e") {
            if (n < 0)
                fail(line_no, "edge before header");
            int u = 0, v = 0;
            if (!(ss >> u >> v))
                fail(line_no, "expected 'e <u> <v>'");
            if (u < 1 || v < 1 || u > n || v > n)
                fail(line_no, "endpoint out of range");
            edges.emplace_back(u - 1, v - 1);
        }
        else
            fail(line_no, "unexpected line '" + line + "'");
        std::string trailing;
        if (ss >> trailing)
            fail(line_no, "trailing tokens");
    }
    if (n < 0)
        fail(line_no, "missing 'p graph' header");
    if (static_cast<long long>(edges.size()) != declared_edges)
        fail(line_no, "header declares " + std::to_string(declared_edges) + " edges, found " +
                          std::to_string(edges.size()));
    return Graph::from_edges(n, edges);
}

Graph read_graph(std::istream &in)
{
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);)
        lines.push_back(line);
    return parse_graph_lines(lines, 1);
}

Graph read_graph_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open graph file '" + path + "'");
    return read_graph(in);
}

void write_graph(std::ostream &out, const Graph &g, const std::vector<std::string> &comments)
{
    for (const auto &c : comments)
        out << "c " << c << '\n';
    out << "p graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_graph_file(const std::string &path, const Graph &g, const std::vector<std::string> &comments)
{
    std::ofstream out(path);
    if (!out)
        throw InvalidInput("cannot write graph file '" + path + "'");
    write_graph(out, g, comments);
}

} // namespace rolecol
