#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "dd2/graph.hpp"

namespace dd2::detail {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(std::size_t v) { return Mask{1} << v; }

/// Adjacency bitmasks for graphs with at most 64 vertices.
struct BitGraph {
  std::size_t n = 0;
  Mask full = 0;
  std::vector<Mask> adj;

  BitGraph() = default;
  explicit BitGraph(const Graph& g) : n(g.order()), full(n == 64 ? ~Mask{0} : bit(n) - 1), adj(n, 0) {
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : g.neighbors(v)) adj[v] |= bit(w);
    }
  }
};

/// (D, V - D) is a DD2-pair.
inline bool is_dd2_partition(const BitGraph& g, Mask d) {
  for (std::size_t v = 0; v < g.n; ++v) {
    if (d & bit(v)) {
      if (popcount(g.adj[v] & ~d) < 2) return false;
    } else if ((g.adj[v] & d) == 0) {
      return false;
    }
  }
  return true;
}

namespace bitgraph_impl {

// Preorder over subsets in lexicographic order of their sorted sequences.
// A subtree is cut once a member of D has fewer than two neighbours outside
// D, since adding vertices to D can only shrink that count.
inline bool first_partition(const BitGraph& g, Mask d, std::size_t start, Mask& out) {
  if (d != 0 && is_dd2_partition(g, d)) {
    out = d;
    return true;
  }
  for (std::size_t v = start; v < g.n; ++v) {
    const Mask next = d | bit(v);
    if (popcount(g.adj[v] & ~next) < 2) continue;
    bool viable = true;
    for (Mask rest = d; rest; rest &= rest - 1) {
      const auto w = static_cast<std::size_t>(std::countr_zero(rest));
      if (popcount(g.adj[w] & ~next) < 2) {
        viable = false;
        break;
      }
    }
    if (viable && first_partition(g, next, v + 1, out)) return true;
  }
  return false;
}

}  // namespace bitgraph_impl

/// Lexicographically first D such that (D, V - D) is a DD2-pair.
inline std::optional<Mask> first_dd2_partition(const BitGraph& g) {
  if (g.n == 0) return std::nullopt;
  Mask out = 0;
  if (bitgraph_impl::first_partition(g, 0, 0, out)) return out;
  return std::nullopt;
}

inline VertexSet to_vertex_set(Mask m) {
  VertexSet out;
  for (; m; m &= m - 1) out.push_back(static_cast<Vertex>(std::countr_zero(m)));
  return out;
}

}  // namespace dd2::detail
