#include "support.hh"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace testsupport {

std::vector<Graph> all_labelled_graphs(int n)
{
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            slots.emplace_back(u, v);
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<rolecol::Edge> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1)
                edges.push_back(slots[i]);
        out.push_back(Graph::from_edges(n, edges));
    }
    return out;
}

Graph random_graph(int n, double p, std::mt19937_64 &rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<rolecol::Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph random_connected_graph(int n, double p, std::mt19937_64 &rng)
{
    for (;;) {
        auto g = random_graph(n, p, rng);
        if (rolecol::is_connected(g))
            return g;
    }
}

std::uint64_t adjacency_code(const Graph &g, const std::vector<Vertex> &order)
{
    const int n = g.vertex_count();
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            code = code << 1 | (g.adjacent(order[i], order[j]) ? 1 : 0);
    return code;
}

std::uint64_t canonical_code(const Graph &g)
{
    const int n = g.vertex_count();
    if (n > 10)
        throw std::invalid_argument("canonical_code handles at most 10 vertices");

    // Vertices are grouped by an isomorphism invariant; only orders that list
    // the groups in invariant order need to be tried.
    std::vector<std::vector<int>> invariant(n);
    for (Vertex v = 0; v < n; ++v) {
        invariant[v].push_back(g.degree(v));
        invariant[v].push_back(g.has_loop(v));
        std::vector<int> nd;
        for (auto w : g.neighbours(v))
            nd.push_back(g.degree(w));
        std::sort(nd.begin(), nd.end());
        invariant[v].insert(invariant[v].end(), nd.begin(), nd.end());
    }
    std::map<std::vector<int>, std::vector<Vertex>> groups;
    for (Vertex v = 0; v < n; ++v)
        groups[invariant[v]].push_back(v);
    std::vector<std::vector<Vertex>> blocks;
    for (auto &[key, vs] : groups)
        blocks.push_back(vs);

    std::uint64_t best = ~std::uint64_t{0};
    std::vector<Vertex> order;
    std::function<void(std::size_t)> go = [&](std::size_t b) {
        if (b == blocks.size()) {
            best = std::min(best, adjacency_code(g, order));
            return;
        }
        auto block = blocks[b];
        do {
            order.insert(order.end(), block.begin(), block.end());
            go(b + 1);
            order.resize(order.size() - block.size());
        } while (std::next_permutation(block.begin(), block.end()));
    };
    go(0);
    return best;
}

std::vector<Graph> hereditary_classes(int n, const std::function<bool(const Graph &)> &keep)
{
    if (n < 1 || n > 8)
        throw std::invalid_argument("hereditary_classes handles 1..8 vertices");
    std::vector<Graph> level{Graph(1)};
    if (!keep(level[0]))
        return {};
    for (int size = 2; size <= n; ++size) {
        std::set<std::uint64_t> seen;
        std::vector<Graph> next;
        for (const auto &g : level) {
            const int m = size - 1;
            const auto base = g.edges();
            for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
                auto edges = base;
                for (Vertex v = 0; v < m; ++v)
                    if (mask >> v & 1)
                        edges.emplace_back(v, m);
                auto h = Graph::from_edges(size, edges);
                if (!keep(h))
                    continue;
                if (seen.insert(canonical_code(h)).second)
                    next.push_back(std::move(h));
            }
        }
        level = std::move(next);
    }
    return level;
}

bool brute_contains_induced(const Graph &g, const Graph &pattern)
{
    const int n = g.vertex_count(), p = pattern.vertex_count();
    if (p > n)
        return false;
    std::vector<Vertex> pick(p);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != p)
            continue;
        int i = 0;
        for (Vertex v = 0; v < n; ++v)
            if (mask >> v & 1)
                pick[i++] = v;
        auto order = pick;
        do {
            bool same = true;
            for (int a = 0; a < p && same; ++a)
                for (int b = a; b < p && same; ++b)
                    same = pattern.adjacent(a, b) == g.adjacent(order[a], order[b]);
            if (same)
                return true;
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return false;
}

Graph relabel(const Graph &g, const std::vector<Vertex> &perm)
{
    std::vector<rolecol::Edge> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(perm[u], perm[v]);
    return Graph::from_edges(g.vertex_count(), edges);
}

std::vector<rolecol::CnfFormula> small_monotone_formulas(int variables, int max_clauses)
{
    std::vector<std::vector<int>> clauses;
    for (std::uint32_t mask = 0; mask < (1u << variables); ++mask) {
        const int width = std::popcount(mask);
        if (width < 2 || width > 3)
            continue;
        std::vector<int> c;
        for (int i = 0; i < variables; ++i)
            if (mask >> i & 1)
                c.push_back(i + 1);
        clauses.push_back(c);
    }
    std::vector<rolecol::CnfFormula> out;
    std::vector<int> chosen;
    std::function<void(std::size_t)> go = [&](std::size_t from) {
        rolecol::CnfFormula f;
        f.variable_count = variables;
        for (auto i : chosen)
            f.clauses.push_back(clauses[i]);
        out.push_back(f);
        if (static_cast<int>(chosen.size()) == max_clauses)
            return;
        for (std::size_t i = from; i < clauses.size(); ++i) {
            chosen.push_back(static_cast<int>(i));
            go(i + 1);
            chosen.pop_back();
        }
    };
    go(0);
    return out;
}

} // namespace testsupport
