#include <rolecol/error.hh>
#include <rolecol/families.hh>
#include <rolecol/induced.hh>
#include <rolecol/poly_special.hh>

#include <algorithm>

namespace rolecol {

namespace {
    void require_2k2_free(const Graph &g)
    {
        if (g.has_loops())
            throw InvalidInput("graph has loops");
        if (contains_induced(g, disjoint_copies(2, complete_graph(2))))
            throw InvalidInput("graph contains an induced 2K2");
    }

    bool is_clique(const Graph &g)
    {
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) != g.vertex_count() - 1)
                return false;
        return true;
    }

    TwoRoleOutcome finish(const Graph &g, std::vector<int> colours, std::vector<Vertex> independent_set)
    {
        TwoRoleOutcome out;
        out.colouring.colours = std::move(colours);
        out.independent_set = std::move(independent_set);
        out.role = role_graph_of(g, out.colouring);
        auto verdict = verify_role_colouring(g, out.role, out.colouring);
        if (out.role.size() == 2 && verdict) {
            out.kind = TwoRoleOutcome::Kind::verified_colouring;
            return out;
        }
        out.kind = TwoRoleOutcome::Kind::construction_failed;
        if (out.role.size() != 2)
            out.diagnostic = "candidate does not use two colours";
        else {
            out.violation = verdict.violation;
            out.diagnostic = verdict.violation->describe();
        }
        return out;
    }
}

std::vector<Vertex> maximal_independent_set_containing(const Graph &g, Vertex u, Vertex v)
{
    const int n = g.vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw InvalidInput("vertex out of range");
    if (g.has_loops())
        throw InvalidInput("graph has loops");
    if (u == v || g.adjacent(u, v))
        throw InvalidInput("seed vertices must be distinct and non-adjacent");
    std::vector<char> blocked(n, 0);
    std::vector<Vertex> set;
    auto take = [&](Vertex x) {
        set.push_back(x);
        blocked[x] = 1;
        for (auto w : g.neighbours(x))
            blocked[w] = 1;
    };
    take(u);
    take(v);
    for (Vertex x = 0; x < n; ++x)
        if (!blocked[x])
            take(x);
    std::sort(set.begin(), set.end());
    return set;
}

TwoRoleOutcome two_role_colour_2k2_free(const Graph &g)
{
    require_2k2_free(g);
    const int n = g.vertex_count();
    if (n < 2) {
        TwoRoleOutcome out;
        out.kind = TwoRoleOutcome::Kind::too_small;
        out.diagnostic = "fewer than two vertices";
        return out;
    }

    auto comps = components(g);
    if (comps.size() > 1) {
        std::vector<int> colours(n, 1);
        bool singletons = false, all_singletons = true;
        for (const auto &c : comps) {
            if (c.size() == 1) {
                colours[c.front()] = 0;
                singletons = true;
            }
            else
                all_singletons = false;
        }
        if (all_singletons) {
            std::fill(colours.begin(), colours.end(), 1);
            colours[0] = 0;
        }
        else if (!singletons)
            for (auto v : comps.front())
                colours[v] = 0;
        return finish(g, std::move(colours), {});
    }

    if (is_clique(g)) {
        std::vector<int> colours(n, 1);
        colours[0] = 0;
        return finish(g, std::move(colours), {});
    }

    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v))
                continue;
            auto set = maximal_independent_set_containing(g, u, v);
            std::vector<int> colours(n, 1);
            for (auto x : set)
                colours[x] = 0;
            return finish(g, std::move(colours), std::move(set));
        }
    throw InternalError("non-clique graph without a non-adjacent pair");
}

bool complement_of_independent_set_connected(const Graph &g, const std::vector<Vertex> &independent_set)
{
    require_2k2_free(g);
    if (!is_connected(g))
        throw InvalidInput("graph is not connected");
    const int n = g.vertex_count();
    if (independent_set.size() < 2)
        throw InvalidInput("independent set needs at least two vertices");
    std::vector<char> in(n, 0);
    for (auto x : independent_set) {
        if (x < 0 || x >= n)
            throw InvalidInput("vertex out of range");
        if (in[x])
            throw InvalidInput("repeated vertex in independent set");
        in[x] = 1;
    }
    for (auto x : independent_set)
        for (auto w : g.neighbours(x))
            if (in[w])
                throw InvalidInput("set is not independent");
    for (Vertex x = 0; x < n; ++x) {
        if (in[x])
            continue;
        bool dominated = false;
        for (auto w : g.neighbours(x))
            dominated = dominated || in[w];
        if (!dominated)
            throw InvalidInput("independent set is not maximal");
    }
    std::vector<Vertex> rest;
    for (Vertex x = 0; x < n; ++x)
        if (!in[x])
            rest.push_back(x);
    return is_connected(induced_subgraph(g, rest));
}

} // namespace rolecol
