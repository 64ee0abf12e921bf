#pragma once

#include <rolecol/graph.hh>

#include <optional>
#include <span>
#include <vector>

namespace rolecol {

/// Finds an injective map pattern -> g whose image induces a copy of the
/// pattern. witness[p] is the g-vertex assigned to pattern vertex p.
/// The pattern must be loop-free; looped g-vertices are never used.
std::optional<std::vector<Vertex>> find_induced(const Graph &g, const Graph &pattern);

bool contains_induced(const Graph &g, const Graph &pattern);

/// True iff g contains none of the patterns as an induced subgraph.
bool is_free(const Graph &g, std::span<const Graph> patterns);

} // namespace rolecol
