#pragma once

#include <rolecol/graph.hh>

#include <string>
#include <string_view>
#include <vector>

namespace rolecol {

enum class Family {
    path,            // P_n, vertices along the walk
    cycle,           // C_n, n >= 3
    path_star,       // P_n*: P_n plus a loop at the last vertex
    path_star_star,  // P_n**: P_n plus loops at both ends
    complete,        // K_n
    biclique,        // K_{m,n}
    h_graph,         // H_i: two claw centres joined by a path of length i
    spider,          // S_{ijk}: legs of length i, j, k from one centre
    perfect_tree,    // T_k^t: root of degree k, inner vertices of degree k, radius t
    disjoint_copies  // mG
};

struct GraphFamilySpec {
    Family family = Family::path;
    std::vector<int> params;
    /// Exactly one entry for disjoint_copies, empty otherwise.
    std::vector<GraphFamilySpec> inner;
};

/// Throws InvalidInput on parameters outside the family's domain.
Graph named_graph(const GraphFamilySpec &spec);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph path_star_graph(int n);
Graph path_star_star_graph(int n);
Graph complete_graph(int n);
Graph biclique_graph(int m, int n);

/// Vertices: u = 0, the u-v path 0..i with v = i, then u's pendants i+1, i+2
/// and v's pendants i+3, i+4.
Graph h_graph(int i);

/// Centre 0 followed by the three legs in order. If a leg length is zero the
/// result is the path P_{i+j+k+1}.
Graph spider_graph(int i, int j, int k);

Graph perfect_tree(int k, int t);
Graph disjoint_copies(int copies, const Graph &g);

Family family_from_name(std::string_view name);
std::string family_name(Family f);

/// Compact pattern notation used by the CLI: "P5", "P5*", "P5**", "C4", "K3",
/// "K1_4" (biclique), "H2", "S1_1_1", "T3_2" (perfect tree k=3, t=2), with an
/// optional copy-count prefix as in "2K2".
GraphFamilySpec parse_pattern(std::string_view text);

} // namespace rolecol
