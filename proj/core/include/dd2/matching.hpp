#pragma once

#include "dd2/graph.hpp"

namespace dd2 {

/// Maximum-cardinality matching of a general graph (Edmonds' blossom
/// algorithm, O(V^3)). Edges are returned sorted.
EdgeList maximum_matching(const Graph& g);

bool is_matching(const Graph& g, const EdgeList& edges);

}  // namespace dd2
