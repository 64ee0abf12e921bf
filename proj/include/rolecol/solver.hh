#pragma once

#include <rolecol/graph.hh>
#include <rolecol/role_colouring.hh>

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace rolecol {

/// Bit c set means colour c is still possible. Role graphs have at most 64 vertices.
using ColourSet = std::uint64_t;

enum class SolveStatus { found, not_found, budget_exhausted };

enum class VariableOrder { min_candidates_first, input_order };

struct SolveConfig {
    std::optional<long long> node_budget;  // positive when set
    bool enumerate_all = false;
    VariableOrder variable_order = VariableOrder::min_candidates_first;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct SolveResult {
    SolveStatus status = SolveStatus::not_found;
    /// One entry in first-solution mode; every solution with enumerate_all.
    /// After budget exhaustion, whatever was found before the cut-off.
    std::vector<RoleColouring> solutions;
    long long nodes = 0;
};

/// General form of the search. Constraint for every vertex v not marked
/// exempt: r(N(v)) = N_R(r(v)). Edges with at least one non-exempt endpoint
/// therefore map to edges of R. Exempt vertices model stubs whose other
/// neighbours lie outside the instance.
struct SearchProblem {
    Graph graph;
    RoleGraph role;
    std::vector<ColourSet> domains;  // empty: every colour allowed everywhere
    std::vector<char> exempt;        // empty: no exempt vertices
    bool require_all_colours = true;
};

SolveResult solve_search(const SearchProblem &problem, const SolveConfig &cfg);

SolveResult solve_r_rcol(const Graph &g, const RoleGraph &role, const SolveConfig &cfg = {});

/// Immediately not_found when min degree < k; otherwise a search against
/// K_k with every loop.
SolveResult solve_k_ccol(const Graph &g, int k, const SolveConfig &cfg = {});

struct KRcolResult {
    SolveStatus status = SolveStatus::not_found;
    std::vector<std::pair<RoleGraph, RoleColouring>> solutions;
    long long nodes = 0;
};

/// Tries every role graph on k vertices up to isomorphism (connected ones only
/// when g is connected, and only those with max degree <= max degree of g and
/// min degree <= min degree of g). With enumerate_all, colourings are listed
/// against each class representative exactly as labelled. Guard: k <= 5.
KRcolResult solve_k_rcol(const Graph &g, int k, const SolveConfig &cfg = {});

/// One representative per isomorphism class of graphs on k vertices with
/// loops allowed, in increasing canonical-code order. Guard: k <= 5.
std::vector<RoleGraph> role_graphs_up_to_isomorphism(int k, bool connected_only);

/// All automorphisms of a small graph (guard: at most 8 vertices).
std::vector<std::vector<Vertex>> automorphisms(const Graph &g);

} // namespace rolecol
