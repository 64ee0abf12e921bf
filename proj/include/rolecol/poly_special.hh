#pragma once

#include <rolecol/graph.hh>
#include <rolecol/role_colouring.hh>

#include <optional>
#include <string>
#include <vector>

namespace rolecol {

/// Greedy extension of {u, v} in ascending vertex order. u and v must be
/// distinct and non-adjacent; g must be loop-free.
std::vector<Vertex> maximal_independent_set_containing(const Graph &g, Vertex u, Vertex v);

struct TwoRoleOutcome {
    enum class Kind { verified_colouring, too_small, construction_failed };
    Kind kind = Kind::too_small;
    RoleColouring colouring;           // the verified certificate, or the rejected candidate
    RoleGraph role;                    // role_graph_of(colouring)
    std::vector<Vertex> independent_set;  // I, when the independent-set case ran
    std::optional<Violation> violation;   // first verifier complaint on failure
    std::string diagnostic;
};

/// 2-role colouring of a 2K2-free loop-free graph by the independent-set
/// construction. Colour 0 goes to the chosen side, colour 1 to the rest.
/// Cases: fewer than two vertices; disconnected (singleton components get
/// colour 0, or else the first component); edgeless or complete (vertex 0
/// alone gets colour 0); otherwise the first non-adjacent pair u < v in
/// lexicographic order seeds I. Every candidate passes through the verifier
/// and is only reported as verified if accepted.
/// Throws InvalidInput if g has loops or contains an induced 2K2.
TwoRoleOutcome two_role_colour_2k2_free(const Graph &g);

/// Whether V \ I induces a connected subgraph. Throws InvalidInput unless g
/// is connected, loop-free and 2K2-free and I is a maximal independent set
/// with at least two vertices.
bool complement_of_independent_set_connected(const Graph &g, const std::vector<Vertex> &independent_set);

} // namespace rolecol
