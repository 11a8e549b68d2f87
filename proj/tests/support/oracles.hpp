#pragma once

// Plain exhaustive reference implementations used by the tests. They only
// rely on the Graph value type and on the edit operations, never on the
// algorithms they are compared against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "dd2/graph.hpp"
#include "dd2/graph_ops.hpp"

namespace oracle {

using dd2::Edge;
using dd2::EdgeList;
using dd2::Graph;
using dd2::Vertex;

inline bool dominates(const Graph& g, const std::vector<char>& in_d) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in_d[v]) continue;
    bool hit = false;
    for (Vertex w : g.neighbors(v)) hit = hit || in_d[w];
    if (!hit) return false;
  }
  return true;
}

inline bool two_dominates(const Graph& g, const std::vector<char>& in_d2) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in_d2[v]) continue;
    int hits = 0;
    for (Vertex w : g.neighbors(v)) hits += in_d2[w] ? 1 : 0;
    if (hits < 2) return false;
  }
  return true;
}

/// Some D with D dominating and V - D 2-dominating (n <= 20).
inline bool is_dd2(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return false;
  std::vector<char> d(n), rest(n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    for (std::size_t v = 0; v < n; ++v) {
      d[v] = (mask >> v) & 1;
      rest[v] = !d[v];
    }
    if (dominates(g, d) && two_dominates(g, rest)) return true;
  }
  return false;
}

/// min |D| + |D2| over all 3^n labellings; max() when there is none.
inline std::size_t gamma_gamma2(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<int> label(n, 0);  // 0 none, 1 D, 2 D2
  std::vector<char> d(n), d2(n);
  while (true) {
    std::size_t cost = 0;
    for (std::size_t v = 0; v < n; ++v) {
      d[v] = label[v] == 1;
      d2[v] = label[v] == 2;
      cost += label[v] != 0;
    }
    if (cost < best && dominates(g, d) && two_dominates(g, d2)) best = cost;
    std::size_t i = 0;
    while (i < n && label[i] == 2) label[i++] = 0;
    if (i == n) break;
    ++label[i];
  }
  return best;
}

inline bool is_matching(const EdgeList& edges, std::size_t n) {
  std::vector<char> used(n, 0);
  for (const Edge& e : edges) {
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

/// Maximum matching size over all edge subsets (m <= 20).
inline std::size_t max_matching_size(const Graph& g) {
  const auto edges = g.edges();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    EdgeList pick;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if ((mask >> i) & 1) pick.push_back(edges[i]);
    }
    if (pick.size() > best && is_matching(pick, g.order())) best = pick.size();
  }
  return best;
}

/// Fewest single-edge subdivisions after which `goal` holds. Subdividing an
/// edge created by an earlier subdivision yields the same graph (up to
/// relabelling) as subdividing the original edge again, so it is enough to
/// try multisets of original edges, by increasing size.
inline std::optional<std::size_t> min_subdivisions(const Graph& g, std::size_t max_count,
                                                   const std::function<bool(const Graph&)>& goal) {
  const auto edges = g.edges();
  for (std::size_t count = 0; count <= max_count; ++count) {
    std::vector<std::size_t> times(edges.size(), 0);
    bool found = false;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t index, std::size_t left) {
      if (found) return;
      if (index == edges.size()) {
        if (left != 0) return;
        Graph h = g;
        for (std::size_t i = 0; i < edges.size(); ++i) {
          Edge e = edges[i];
          for (std::size_t t = 0; t < times[i]; ++t) {
            // Keep subdividing the segment next to e.u.
            h = dd2::subdivide_edges(h, {e});
            e = dd2::make_edge(e.u, static_cast<Vertex>(h.order() - 1));
          }
        }
        found = goal(h);
        return;
      }
      for (std::size_t t = 0; t <= left; ++t) {
        times[index] = t;
        rec(index + 1, left - t);
      }
      times[index] = 0;
    };
    rec(0, count);
    if (found) return count;
  }
  return std::nullopt;
}

/// k-subsets of {0..n-1} in lexicographic order until visit returns true.
inline bool combinations(std::size_t n, std::size_t k,
                         const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return false;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    if (visit(c)) return true;
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

inline EdgeList non_edges(const Graph& g) {
  EdgeList out;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) out.push_back({u, v});
    }
  }
  return out;
}

struct EdgeAddition {
  std::size_t k = 0;
  EdgeList edges;
};

/// Smallest k <= k_max and the lexicographically first k non-edges whose
/// addition satisfies `goal`; plain enumeration without pruning.
inline std::optional<EdgeAddition> min_edge_addition(const Graph& g, std::size_t k_max,
                                                     const std::function<bool(const Graph&)>& goal) {
  if (goal(g)) return EdgeAddition{};
  const EdgeList pool = non_edges(g);
  for (std::size_t k = 1; k <= k_max; ++k) {
    std::optional<EdgeAddition> found;
    combinations(pool.size(), k, [&](const std::vector<std::size_t>& c) {
      EdgeList pick;
      for (std::size_t i : c) pick.push_back(pool[i]);
      if (!goal(dd2::add_edges(g, pick))) return false;
      found = EdgeAddition{k, pick};
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

/// Every component is DD2 and no proper spanning subgraph of it is, by
/// enumerating all edge subsets of every component (small graphs only).
inline bool is_minimal_dd2(const Graph& g) {
  for (const auto& part : dd2::split_components(g)) {
    const Graph& c = part.graph;
    if (!oracle::is_dd2(c)) return false;
    const auto edges = c.edges();
    for (std::uint32_t mask = 0; mask + 1 < (1u << edges.size()); ++mask) {
      EdgeList pick;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if ((mask >> i) & 1) pick.push_back(edges[i]);
      }
      if (oracle::is_dd2(Graph(c.order(), pick))) return false;
    }
  }
  return true;
}

/// g contains K1 + K_{2,n-3} as a spanning subgraph.
inline bool contains_spanning_k1_k2n(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) return false;
  for (Vertex a = 0; a < n; ++a) {
    if (g.degree(a) != n - 1) continue;
    for (Vertex b1 = 0; b1 < n; ++b1) {
      for (Vertex b2 = b1 + 1; b2 < n; ++b2) {
        if (b1 == a || b2 == a) continue;
        bool ok = true;
        for (Vertex w = 0; w < n && ok; ++w) {
          if (w == a || w == b1 || w == b2) continue;
          ok = g.adjacent(w, b1) && g.adjacent(w, b2);
        }
        if (ok) return true;
      }
    }
  }
  return false;
}

}  // namespace oracle
