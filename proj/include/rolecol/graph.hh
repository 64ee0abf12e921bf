#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rolecol {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected graph on vertices 0..n-1 with optional loops and no multi-edges.
///
/// A loop at v places v in its own neighbourhood, so it contributes exactly
/// one to d(v) = |N(v)|. Graph values are immutable; every operation that
/// changes structure returns a new graph.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);

    /// Edges use 0-based ids and are deduplicated; (v, v) is a loop.
    static Graph from_edges(int vertex_count, std::span<const Edge> edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    /// Sorted ascending.
    std::span<const Vertex> neighbours(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(Vertex u, Vertex v) const;
    bool has_loop(Vertex v) const { return adjacent(v, v); }
    bool has_loops() const;

    /// Every edge once as (u, v) with u <= v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

/// Builds from 1-based endpoint pairs, the convention of the text formats.
Graph build_graph(int vertex_count, std::span<const Edge> one_based_edges);

struct BasicProps {
    int min_degree = 0;
    int max_degree = 0;
    bool connected = true;
    std::vector<int> degrees;
};

/// Connectivity ignores loops. The empty graph counts as connected.
BasicProps basic_props(const Graph &g);

bool is_connected(const Graph &g);
std::vector<std::vector<Vertex>> components(const Graph &g);

/// -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph &g, Vertex source);

/// Length of a shortest cycle; a loop is a cycle of length 1. nullopt for forests.
std::optional<int> girth(const Graph &g);

/// Replaces the edge by a path through `times` new vertices, appended after
/// the existing ids in order from edge.first towards edge.second.
Graph subdivide_edge(const Graph &g, Edge edge, int times);

/// Vertex i of the result is vertices[i] of g.
Graph induced_subgraph(const Graph &g, std::span<const Vertex> vertices);

/// Vertices of b are shifted by a.vertex_count().
Graph disjoint_union(const Graph &a, const Graph &b);

} // namespace rolecol
