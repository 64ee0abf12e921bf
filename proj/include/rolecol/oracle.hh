#pragma once

#include <rolecol/graph.hh>
#include <rolecol/role_colouring.hh>

#include <optional>
#include <variant>
#include <vector>

namespace rolecol {

enum class OracleMode { rcol, ccol };

struct OracleResult {
    /// In lexicographic order of the colour vector (vertex 0 most significant).
    std::vector<RoleColouring> solutions;
    /// For rcol with a colour count: the role graph of each solution.
    std::vector<RoleGraph> role_graphs;

    bool exists() const { return !solutions.empty(); }
};

/// Exhaustive enumeration of all k^n colourings, each checked directly
/// against the definition. The target is a fixed role graph (rcol only) or a
/// colour count k: for rcol that means any role graph on exactly k colours
/// (connected when g is connected), for ccol a k-coupon colouring.
/// Guard: n <= 16 for k = 2, n <= 12 for k = 3, k^n <= 3^12 otherwise.
OracleResult brute_force_oracle(const Graph &g, const std::variant<RoleGraph, int> &target, OracleMode mode,
                                bool enumerate_all = false);

} // namespace rolecol
