#include <rolecol/error.hh>
#include <rolecol/families.hh>

#include <cctype>
#include <charconv>

namespace rolecol {

namespace {
    void require(bool ok, const std::string &what)
    {
        if (!ok)
            throw InvalidInput(what);
    }

    void require_params(const GraphFamilySpec &spec, std::size_t count)
    {
        require(spec.params.size() == count,
                family_name(spec.family) + " takes " + std::to_string(count) + " parameter(s)");
    }
}

Graph path_graph(int n)
{
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n)
{
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph path_star_graph(int n)
{
    require(n >= 1, "path_star needs n >= 1");
    auto edges = path_graph(n).edges();
    edges.emplace_back(n - 1, n - 1);
    return Graph::from_edges(n, edges);
}

Graph path_star_star_graph(int n)
{
    require(n >= 1, "path_star_star needs n >= 1");
    auto edges = path_graph(n).edges();
    edges.emplace_back(0, 0);
    edges.emplace_back(n - 1, n - 1);
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int n)
{
    require(n >= 1, "complete needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph biclique_graph(int m, int n)
{
    require(m >= 1 && n >= 1, "biclique needs m, n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            edges.emplace_back(i, m + j);
    return Graph::from_edges(m + n, edges);
}

Graph h_graph(int i)
{
    require(i >= 1, "H_i needs i >= 1");
    std::vector<Edge> edges;
    for (int p = 0; p < i; ++p)
        edges.emplace_back(p, p + 1);
    edges.emplace_back(0, i + 1);
    edges.emplace_back(0, i + 2);
    edges.emplace_back(i, i + 3);
    edges.emplace_back(i, i + 4);
    return Graph::from_edges(i + 5, edges);
}

Graph spider_graph(int i, int j, int k)
{
    require(i >= 0 && j >= 0 && k >= 0, "S_ijk needs nonnegative leg lengths");
    if (i == 0 || j == 0 || k == 0)
        return path_graph(i + j + k + 1);
    std::vector<Edge> edges;
    int next = 1;
    for (int leg : {i, j, k}) {
        Vertex prev = 0;
        for (int s = 0; s < leg; ++s) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph::from_edges(next, edges);
}

Graph perfect_tree(int k, int t)
{
    require(k >= 2 && t >= 0, "perfect tree needs k >= 2 and t >= 0");
    std::vector<Edge> edges;
    std::vector<Vertex> level{0};
    int next = 1;
    for (int depth = 0; depth < t; ++depth) {
        std::vector<Vertex> below;
        const int children = depth == 0 ? k : k - 1;
        for (auto p : level)
            for (int c = 0; c < children; ++c) {
                edges.emplace_back(p, next);
                below.push_back(next++);
            }
        level = std::move(below);
    }
    return Graph::from_edges(next, edges);
}

Graph disjoint_copies(int copies, const Graph &g)
{
    require(copies >= 1, "need at least one copy");
    Graph result = g;
    for (int c = 1; c < copies; ++c)
        result = disjoint_union(result, g);
    return result;
}

Graph named_graph(const GraphFamilySpec &spec)
{
    const auto &p = spec.params;
    switch (spec.family) {
    case Family::path:
        require_params(spec, 1);
        return path_graph(p[0]);
    case Family::cycle:
        require_params(spec, 1);
        return cycle_graph(p[0]);
    case Family::path_star:
        require_params(spec, 1);
        return path_star_graph(p[0]);
    case Family::path_star_star:
        require_params(spec, 1);
        return path_star_star_graph(p[0]);
    case Family::complete:
        require_params(spec, 1);
        return complete_graph(p[0]);
    case Family::biclique:
        require_params(spec, 2);
        return biclique_graph(p[0], p[1]);
    case Family::h_graph:
        require_params(spec, 1);
        return h_graph(p[0]);
    case Family::spider:
        require_params(spec, 3);
        return spider_graph(p[0], p[1], p[2]);
    case Family::perfect_tree:
        require_params(spec, 2);
        return perfect_tree(p[0], p[1]);
    case Family::disjoint_copies:
        require_params(spec, 1);
        require(spec.inner.size() == 1, "disjoint_copies needs exactly one inner spec");
        return disjoint_copies(p[0], named_graph(spec.inner.front()));
    }
    throw InvalidInput("unknown family");
}

Family family_from_name(std::string_view name)
{
    static const std::pair<std::string_view, Family> table[] = {
        {"path", Family::path},
        {"cycle", Family::cycle},
        {"path_star", Family::path_star},
        {"path_star_star", Family::path_star_star},
        {"complete", Family::complete},
        {"biclique", Family::biclique},
        {"H", Family::h_graph},
        {"h_graph", Family::h_graph},
        {"S", Family::spider},
        {"spider", Family::spider},
        {"perfect_tree", Family::perfect_tree},
        {"disjoint_copies", Family::disjoint_copies},
    };
    for (auto [n, f] : table)
        if (n == name)
            return f;
    throw InvalidInput("unknown graph family '" + std::string(name) + "'");
}

std::string family_name(Family f)
{
    switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::path_star: return "path_star";
    case Family::path_star_star: return "path_star_star";
    case Family::complete: return "complete";
    case Family::biclique: return "biclique";
    case Family::h_graph: return "h_graph";
    case Family::spider: return "spider";
    case Family::perfect_tree: return "perfect_tree";
    case Family::disjoint_copies: return "disjoint_copies";
    }
    return "?";
}

namespace {
    // Reads "a_b_c" style integer lists.
    std::vector<int> parse_numbers(std::string_view text, std::string_view whole)
    {
        std::vector<int> out;
        while (true) {
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || ptr == text.data())
                throw InvalidInput("bad pattern '" + std::string(whole) + "'");
            out.push_back(value);
            text.remove_prefix(ptr - text.data());
            if (text.empty())
                return out;
            if (text.front() != '_')
                throw InvalidInput("bad pattern '" + std::string(whole) + "'");
            text.remove_prefix(1);
        }
    }
}

GraphFamilySpec parse_pattern(std::string_view text)
{
    const auto whole = text;
    std::size_t digits = 0;
    while (digits < text.size() && std::isdigit(static_cast<unsigned char>(text[digits])))
        ++digits;
    if (digits > 0) {
        auto copies = parse_numbers(text.substr(0, digits), whole);
        GraphFamilySpec spec{Family::disjoint_copies, {copies[0]}, {parse_pattern(text.substr(digits))}};
        return spec;
    }
    if (text.empty())
        throw InvalidInput("empty pattern");

    const char head = text.front();
    text.remove_prefix(1);
    int stars = 0;
    while (!text.empty() && text.back() == '*') {
        ++stars;
        text.remove_suffix(1);
    }
    auto nums = parse_numbers(text, whole);
    auto expect = [&](std::size_t count) {
        if (nums.size() != count)
            throw InvalidInput("bad pattern '" + std::string(whole) + "'");
    };

    GraphFamilySpec spec;
    switch (head) {
    case 'P':
        expect(1);
        spec.family = stars == 0 ? Family::path : stars == 1 ? Family::path_star : Family::path_star_star;
        if (stars > 2)
            throw InvalidInput("bad pattern '" + std::string(whole) + "'");
        break;
    case 'C':
        expect(1);
        spec.family = Family::cycle;
        break;
    case 'K':
        spec.family = nums.size() == 1 ? Family::complete : Family::biclique;
        if (nums.size() > 2)
            throw InvalidInput("bad pattern '" + std::string(whole) + "'");
        break;
    case 'H':
        expect(1);
        spec.family = Family::h_graph;
        break;
    case 'S':
        expect(3);
        spec.family = Family::spider;
        break;
    case 'T':
        expect(2);
        spec.family = Family::perfect_tree;
        break;
    default:
        throw InvalidInput("bad pattern '" + std::string(whole) + "'");
    }
    if (stars > 0 && head != 'P')
        throw InvalidInput("bad pattern '" + std::string(whole) + "'");
    spec.params = std::move(nums);
    return spec;
}

} // namespace rolecol
