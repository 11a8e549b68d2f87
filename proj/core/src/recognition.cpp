#include "dd2/recognition.hpp"

#include <algorithm>
#include <string>

#include "bitgraph.hpp"
#include "dd2/error.hpp"
#include "dd2/graph_ops.hpp"

namespace dd2 {

namespace {

enum class Role : std::uint8_t { other, leaf, support, leaf_and_support };

bool is_leaf(Role r) { return r == Role::leaf || r == Role::leaf_and_support; }
bool is_support(Role r) { return r == Role::support || r == Role::leaf_and_support; }

// Per vertex: leaf and/or support. Also returns the leaf-neighbour counts.
std::vector<Role> roles(const Graph& g, std::vector<std::uint32_t>& leaf_neighbors) {
  const std::size_t n = g.order();
  std::vector<Role> r(n, Role::other);
  leaf_neighbors.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 1) ++leaf_neighbors[g.neighbors(v).front()];
  }
  for (Vertex v = 0; v < n; ++v) {
    const bool leaf = g.degree(v) == 1;
    const bool support = leaf_neighbors[v] > 0;
    r[v] = leaf && support ? Role::leaf_and_support : leaf ? Role::leaf : support ? Role::support : Role::other;
  }
  return r;
}

void require_no_isolated(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) throw InvalidArgument("vertex " + std::to_string(v) + " is isolated");
  }
}

// Weak supports whose every neighbour is a leaf or a support, ascending.
VertexSet blocked_weak_supports(const Graph& g, bool stop_at_first) {
  std::vector<std::uint32_t> leaf_neighbors;
  const auto r = roles(g, leaf_neighbors);
  VertexSet out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (leaf_neighbors[s] != 1) continue;
    const auto nb = g.neighbors(s);
    const bool blocked = std::all_of(nb.begin(), nb.end(), [&](Vertex w) {
      return is_leaf(r[w]) || is_support(r[w]);
    });
    if (blocked) {
      out.push_back(s);
      if (stop_at_first) break;
    }
  }
  return out;
}

DD2Pair build_pair(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> leaf_neighbors;
  const auto r = roles(g, leaf_neighbors);

  // 0 = free, 1 = in N[S] or next to I, 2 = in D.
  std::vector<std::uint8_t> state(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (!is_support(r[s])) continue;
    state[s] = 2;
    for (Vertex w : g.neighbors(s)) {
      if (state[w] == 0) state[w] = 1;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (state[v] != 0) continue;
    state[v] = 2;
    for (Vertex w : g.neighbors(v)) {
      if (state[w] == 0) state[w] = 1;
    }
  }
  DD2Pair pair;
  for (Vertex v = 0; v < n; ++v) (state[v] == 2 ? pair.d : pair.d2).push_back(v);
  return pair;
}

}  // namespace

VertexSet blocking_set(const Graph& g) { return blocked_weak_supports(g, false); }

DD2Verdict is_dd2(const Graph& g) {
  require_no_isolated(g);
  DD2Verdict verdict;
  const auto blocked = blocked_weak_supports(g, true);
  if (!blocked.empty()) {
    verdict.blocking_witness = blocked.front();
    return verdict;
  }
  verdict.is_dd2 = true;
  verdict.pair = build_pair(g);
  return verdict;
}

DD2Pair construct_dd2_pair(const Graph& g) {
  require_no_isolated(g);
  const auto blocked = blocked_weak_supports(g, true);
  if (!blocked.empty()) {
    throw InvalidArgument("not a DD2-graph: weak support " + std::to_string(blocked.front()) +
                          " has only leaves and supports as neighbours");
  }
  return build_pair(g);
}

bool verify_dd2_pair(const Graph& g, const DD2Pair& pair) {
  const std::size_t n = g.order();
  std::vector<std::uint8_t> in_d(n, 0);
  std::vector<std::uint8_t> in_d2(n, 0);
  for (Vertex v : pair.d) {
    if (v >= n) return false;
    in_d[v] = 1;
  }
  for (Vertex v : pair.d2) {
    if (v >= n || in_d[v]) return false;
    in_d2[v] = 1;
  }
  for (Vertex v = 0; v < n; ++v) {
    std::size_t to_d = 0;
    std::size_t to_d2 = 0;
    for (Vertex w : g.neighbors(v)) {
      to_d += in_d[w];
      to_d2 += in_d2[w];
    }
    if (!in_d[v] && to_d == 0) return false;
    if (!in_d2[v] && to_d2 < 2) return false;
  }
  return true;
}

CertifiedDomReport certified_dom_report(const Graph& g, const VertexSet& d) {
  const std::size_t n = g.order();
  std::vector<std::uint8_t> in_d(n, 0);
  for (Vertex v : d) {
    if (v >= n) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    in_d[v] = 1;
  }
  CertifiedDomReport report;
  report.is_dominating = true;
  bool counts_ok = true;
  for (Vertex v = 0; v < n; ++v) {
    std::size_t inside = 0;
    for (Vertex w : g.neighbors(v)) inside += in_d[w];
    if (!in_d[v]) {
      if (inside == 0) report.is_dominating = false;
      continue;
    }
    const std::size_t outside = g.degree(v) - inside;
    if (outside == 1) counts_ok = false;
    if (outside == 0) report.shadowed.push_back(v);
  }
  report.is_certified = report.is_dominating && counts_ok;
  return report;
}

std::optional<DD2Pair> is_dd2_bruteforce(const Graph& g, const SearchLimits& limits) {
  if (g.order() > limits.max_bruteforce_order || g.order() > 64) {
    throw GuardExceeded("is_dd2_bruteforce: order " + std::to_string(g.order()) + " exceeds guard " +
                        std::to_string(std::min<std::size_t>(limits.max_bruteforce_order, 64)));
  }
  const detail::BitGraph bg(g);
  const auto d = detail::first_dd2_partition(bg);
  if (!d) return std::nullopt;
  return DD2Pair{detail::to_vertex_set(*d), detail::to_vertex_set(bg.full & ~*d)};
}

}  // namespace dd2
