#pragma once

// Independent helpers for tests: exhaustive generators and brute-force
// checks that share no code with the library's search routines.

#include <rolecol/cnf.hh>
#include <rolecol/graph.hh>

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace testsupport {

using rolecol::Graph;
using rolecol::Vertex;

/// Every loop-free graph on vertices 0..n-1 (2^(n choose 2) of them), in
/// order of the edge bitmask.
std::vector<Graph> all_labelled_graphs(int n);

/// G(n, p) with the given generator.
Graph random_graph(int n, double p, std::mt19937_64 &rng);

/// Random graph that is connected (resamples until it is).
Graph random_connected_graph(int n, double p, std::mt19937_64 &rng);

/// Adjacency bit code under a vertex order; the minimum over all orders is a
/// canonical form. Works for up to 11 vertices.
std::uint64_t adjacency_code(const Graph &g, const std::vector<Vertex> &order);
std::uint64_t canonical_code(const Graph &g);

/// One graph per isomorphism class on exactly n vertices (n <= 8) among those
/// satisfying `keep`, which must be closed under vertex deletion. Built by
/// extending the classes on n-1 vertices by one vertex.
std::vector<Graph> hereditary_classes(int n, const std::function<bool(const Graph &)> &keep);

/// Exhaustive subset-and-bijection check, for small graphs.
bool brute_contains_induced(const Graph &g, const Graph &pattern);

Graph relabel(const Graph &g, const std::vector<Vertex> &perm);

/// Every monotone formula over exactly `variables` variables with up to
/// `max_clauses` distinct clauses of width 2..3 (as unordered clause sets).
std::vector<rolecol::CnfFormula> small_monotone_formulas(int variables, int max_clauses);

} // namespace testsupport
