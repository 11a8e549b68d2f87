#pragma once

#include <string>
#include <string_view>

#include "dd2/graph.hpp"

namespace dd2 {

// Edge-list document:
//
//   n m
//   u v      (m lines, 0 <= u, v < n, u != v)
//
// Blank lines are ignored. Simple graphs reject repeated pairs; multigraphs
// accept them.

Graph parse_graph(std::string_view text);
MultiGraph parse_multigraph(std::string_view text);

/// Canonical serialization; parse_graph(to_text(g)) == g.
std::string to_text(const Graph& g);
std::string to_text(const MultiGraph& h);

}  // namespace dd2
