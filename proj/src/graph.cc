#include <rolecol/error.hh>
#include <rolecol/graph.hh>

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace rolecol {

Graph::Graph(int vertex_count)
{
    if (vertex_count < 0)
        throw InvalidInput("negative vertex count");
    adj_.resize(vertex_count);
}

Graph Graph::from_edges(int vertex_count, std::span<const Edge> edges)
{
    Graph g(vertex_count);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                               ") has an endpoint outside [0, " + std::to_string(vertex_count) + ")");
        g.adj_[u].push_back(v);
        if (u != v)
            g.adj_[v].push_back(u);
    }

    std::size_t doubled = 0, loops = 0;
    for (Vertex v = 0; v < vertex_count; ++v) {
        auto &row = g.adj_[v];
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        for (auto w : row) {
            if (w == v)
                ++loops;
            else
                ++doubled;
        }
    }
    g.edge_count_ = doubled / 2 + loops;
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    const auto &row = adj_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

bool Graph::has_loops() const
{
    for (Vertex v = 0; v < vertex_count(); ++v)
        if (has_loop(v))
            return true;
    return false;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> result;
    result.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (auto v : adj_[u])
            if (u <= v)
                result.emplace_back(u, v);
    return result;
}

Graph build_graph(int vertex_count, std::span<const Edge> one_based_edges)
{
    std::vector<Edge> shifted;
    shifted.reserve(one_based_edges.size());
    for (auto [u, v] : one_based_edges) {
        if (u < 1 || v < 1 || u > vertex_count || v > vertex_count)
            throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                               ") has an endpoint outside [1, " + std::to_string(vertex_count) + "]");
        shifted.emplace_back(u - 1, v - 1);
    }
    return Graph::from_edges(vertex_count, shifted);
}

std::vector<std::vector<Vertex>> components(const Graph &g)
{
    std::vector<std::vector<Vertex>> result;
    std::vector<char> seen(g.vertex_count(), 0);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (auto w : g.neighbours(comp[i]))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

bool is_connected(const Graph &g)
{
    return g.vertex_count() == 0 || components(g).size() == 1;
}

BasicProps basic_props(const Graph &g)
{
    BasicProps props;
    props.connected = is_connected(g);
    props.degrees.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        props.degrees[v] = g.degree(v);
    if (!props.degrees.empty()) {
        auto [lo, hi] = std::minmax_element(props.degrees.begin(), props.degrees.end());
        props.min_degree = *lo;
        props.max_degree = *hi;
    }
    return props;
}

std::vector<int> bfs_distances(const Graph &g, Vertex source)
{
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<Vertex> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        auto x = q.front();
        q.pop();
        for (auto y : g.neighbours(x))
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                q.push(y);
            }
    }
    return dist;
}

std::optional<int> girth(const Graph &g)
{
    const int n = g.vertex_count();
    for (Vertex v = 0; v < n; ++v)
        if (g.has_loop(v))
            return 1;

    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n, -1), parent(n, -1);
    std::vector<Vertex> touched;
    std::vector<Vertex> q;
    for (Vertex s = 0; s < n && best > 3; ++s) {
        q.clear();
        q.push_back(s);
        dist[s] = 0;
        touched.assign(1, s);
        for (std::size_t head = 0; head < q.size(); ++head) {
            auto x = q[head];
            // any cycle found past this depth is no shorter than best
            if (2 * dist[x] + 1 >= best)
                break;
            for (auto y : g.neighbours(x)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    touched.push_back(y);
                    q.push_back(y);
                }
                else if (y != parent[x]) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
        for (auto t : touched) {
            dist[t] = -1;
            parent[t] = -1;
        }
    }
    if (best == std::numeric_limits<int>::max())
        return std::nullopt;
    return best;
}

Graph subdivide_edge(const Graph &g, Edge edge, int times)
{
    auto [u, v] = edge;
    if (times < 1)
        throw InvalidInput("subdivision count must be positive");
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || !g.adjacent(u, v))
        throw InvalidInput("cannot subdivide a missing edge");
    if (u == v)
        throw InvalidInput("cannot subdivide a loop");

    auto edges = g.edges();
    std::erase(edges, Edge{std::min(u, v), std::max(u, v)});
    const int n = g.vertex_count();
    Vertex prev = u;
    for (int i = 0; i < times; ++i) {
        edges.emplace_back(prev, n + i);
        prev = n + i;
    }
    edges.emplace_back(prev, v);
    return Graph::from_edges(n + times, edges);
}

Graph induced_subgraph(const Graph &g, std::span<const Vertex> vertices)
{
    std::vector<int> index(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        index[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (auto w : g.neighbours(vertices[i]))
            if (index[w] >= static_cast<int>(i))
                edges.emplace_back(static_cast<int>(i), index[w]);
    return Graph::from_edges(static_cast<int>(vertices.size()), edges);
}

Graph disjoint_union(const Graph &a, const Graph &b)
{
    auto edges = a.edges();
    const int shift = a.vertex_count();
    for (auto [u, v] : b.edges())
        edges.emplace_back(u + shift, v + shift);
    return Graph::from_edges(a.vertex_count() + b.vertex_count(), edges);
}

} // namespace rolecol
