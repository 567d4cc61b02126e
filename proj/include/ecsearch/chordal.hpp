#pragma once

#include <optional>
#include <vector>

#include "ecsearch/graph.hpp"

namespace ecsearch {

/// Permutation of the vertices of an undirected graph whose induced
/// orientation (earlier endpoint wins) is acyclic and collider-free.
using PerfectOrdering = std::vector<VertexId>;

/// Maximum cardinality search seeded on a complete prefix. Returns a perfect
/// ordering beginning with `prefix` verbatim, or nothing when u is not
/// chordal. Ties between equally weighted vertices go to the smallest id, so
/// the result is deterministic. Disconnected input is handled by a single
/// global sweep: the prefix component comes first, remaining components start
/// at their smallest id.
///
/// pre: u has no arrows; prefix vertices are distinct and pairwise adjacent.
std::optional<PerfectOrdering> mcs_ordering(const MixedGraph& u,
                                            const std::vector<VertexId>& prefix);

/// pre: u has no arrows.
bool is_chordal(const MixedGraph& u);

/// Direct every line a -- b from a to b when a precedes b in `order`.
/// pre: order is a permutation of u's vertices.
MixedGraph orient_by_ordering(const MixedGraph& u, const PerfectOrdering& order);

}  // namespace ecsearch
