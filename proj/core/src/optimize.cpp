#include "dd2/optimize.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bitgraph.hpp"
#include "dd2/error.hpp"
#include "dd2/graph_ops.hpp"
#include "dd2/matching.hpp"
#include "parallel.hpp"

namespace dd2 {

namespace {

using detail::bit;
using detail::BitGraph;
using detail::Mask;
using detail::popcount;

void require_no_isolated(const Graph& g, const char* who) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) {
      throw InvalidArgument(std::string(who) + ": vertex " + std::to_string(v) + " is isolated");
    }
  }
}

// Branch and bound over labels {none, D2, D} in ascending vertex order.
// After labelling vertex i only the vertices of N[i] can become unsatisfiable.
class GammaSearch {
 public:
  GammaSearch(const BitGraph& g, std::size_t upper_bound) : g_(g), best_(upper_bound) {}

  std::size_t minimum() {
    search(0, 0);
    return best_;
  }

 private:
  bool satisfiable(std::size_t v) const {
    const Mask open = g_.full & ~assigned_;
    const Mask nb = g_.adj[v];
    const bool can_dominate = (nb & (d_ | open)) != 0;
    const bool can_two_dominate = popcount(nb & (d2_ | open)) >= 2;
    if (!(assigned_ & bit(v))) return can_dominate || can_two_dominate;
    if (d_ & bit(v)) return can_two_dominate;
    if (d2_ & bit(v)) return can_dominate;
    return can_dominate && can_two_dominate;
  }

  bool neighbourhood_satisfiable(std::size_t i) const {
    if (!satisfiable(i)) return false;
    for (Mask rest = g_.adj[i]; rest; rest &= rest - 1) {
      if (!satisfiable(static_cast<std::size_t>(std::countr_zero(rest)))) return false;
    }
    return true;
  }

  void search(std::size_t i, std::size_t cost) {
    if (cost >= best_) return;
    if (i == g_.n) {
      best_ = cost;
      return;
    }
    assigned_ |= bit(i);
    if (neighbourhood_satisfiable(i)) search(i + 1, cost);
    if (cost + 1 < best_) {
      d2_ |= bit(i);
      if (neighbourhood_satisfiable(i)) search(i + 1, cost + 1);
      d2_ &= ~bit(i);
      d_ |= bit(i);
      if (neighbourhood_satisfiable(i)) search(i + 1, cost + 1);
      d_ &= ~bit(i);
    }
    assigned_ &= ~bit(i);
  }

  const BitGraph& g_;
  std::size_t best_;
  Mask assigned_ = 0;
  Mask d_ = 0;
  Mask d2_ = 0;
};

// Lexicographically first (D, D2) with |D| + |D2| = total: D in preorder of
// sorted sequences, and for the first D admitting a partner, the first D2
// of the required size.
class LexFirstPair {
 public:
  LexFirstPair(const BitGraph& g, std::size_t total) : g_(g), total_(total) {}

  std::optional<std::pair<Mask, Mask>> run() {
    if (visit_d(0, 0, 0)) return std::make_pair(d_found_, d2_found_);
    return std::nullopt;
  }

 private:
  bool dominating(Mask d) const {
    for (std::size_t v = 0; v < g_.n; ++v) {
      if (!(d & bit(v)) && !(g_.adj[v] & d)) return false;
    }
    return true;
  }

  bool two_dominating(Mask d2) const {
    for (std::size_t v = 0; v < g_.n; ++v) {
      if (!(d2 & bit(v)) && popcount(g_.adj[v] & d2) < 2) return false;
    }
    return true;
  }

  bool visit_d2(Mask d, Mask d2, std::size_t size, std::size_t start, std::size_t want) {
    if (size == want) {
      if (two_dominating(d2)) {
        d_found_ = d;
        d2_found_ = d2;
        return true;
      }
      return false;
    }
    for (std::size_t v = start; v < g_.n; ++v) {
      if (d & bit(v)) continue;
      if (visit_d2(d, d2 | bit(v), size + 1, v + 1, want)) return true;
    }
    return false;
  }

  bool visit_d(Mask d, std::size_t size, std::size_t start) {
    if (size > 0 && size < total_ && dominating(d)) {
      if (visit_d2(d, 0, 0, 0, total_ - size)) return true;
    }
    if (size + 1 >= total_) return false;
    for (std::size_t v = start; v < g_.n; ++v) {
      const Mask next = d | bit(v);
      // Members of D need two D2-neighbours outside D; adding to D only hurts.
      bool viable = true;
      for (Mask rest = next; rest; rest &= rest - 1) {
        const auto w = static_cast<std::size_t>(std::countr_zero(rest));
        if (popcount(g_.adj[w] & ~next) < 2) {
          viable = false;
          break;
        }
      }
      if (viable && visit_d(next, size + 1, v + 1)) return true;
    }
    return false;
  }

  const BitGraph& g_;
  std::size_t total_;
  Mask d_found_ = 0;
  Mask d2_found_ = 0;
};

}  // namespace

std::optional<GammaGamma2Result> gamma_gamma2(const Graph& g, const SearchLimits& limits) {
  const std::size_t n = g.order();
  if (n > limits.max_gamma_order || n > 64) {
    throw GuardExceeded("gamma_gamma2: order " + std::to_string(n) + " exceeds guard " +
                        std::to_string(std::min<std::size_t>(limits.max_gamma_order, 64)));
  }
  if (n == 0 || has_isolated_vertex(g) || !is_dd2(g).is_dd2) return std::nullopt;

  const BitGraph bg(g);
  // (D, V - D) from the constructive pair already costs n.
  const std::size_t value = GammaSearch(bg, n + 1).minimum();
  const auto pair = LexFirstPair(bg, value).run();
  if (!pair) throw std::logic_error("gamma_gamma2: no pair of the optimal size found");

  GammaGamma2Result result{value, {detail::to_vertex_set(pair->first), detail::to_vertex_set(pair->second)}};
  if (!verify_dd2_pair(g, result.witness)) throw std::logic_error("gamma_gamma2: witness failed verification");
  return result;
}

namespace {

// Cheapest family of weighted candidate masks covering all of X (|X| <= 64).
// Each branch covers the lowest uncovered vertex.
class CoverSearch {
 public:
  CoverSearch(std::vector<Mask> masks, std::vector<std::size_t> weights, std::size_t x_count)
      : masks_(std::move(masks)), weights_(std::move(weights)) {
    by_vertex_.resize(x_count);
    for (std::size_t c = 0; c < masks_.size(); ++c) {
      widest_ = std::max(widest_, static_cast<std::size_t>(popcount(masks_[c])));
      for (Mask m = masks_[c]; m; m &= m - 1) by_vertex_[std::countr_zero(m)].push_back(c);
    }
  }

  // Candidates with index >= low and total weight <= budget cover `open`.
  bool feasible(Mask open, std::size_t low, std::size_t budget) const {
    if (!open) return true;
    if (static_cast<std::size_t>(popcount(open)) > budget * widest_) return false;
    for (std::size_t c : by_vertex_[std::countr_zero(open)]) {
      if (c >= low && weights_[c] <= budget && feasible(open & ~masks_[c], low, budget - weights_[c])) {
        return true;
      }
    }
    return false;
  }

  std::size_t minimum_weight(Mask open) const {
    std::size_t budget = 1;
    while (!feasible(open, 0, budget)) ++budget;
    return budget;
  }

  // Lexicographically first cover of minimum weight `budget`.
  std::vector<std::size_t> first_cover(Mask open, std::size_t budget) const {
    std::vector<std::size_t> picked;
    std::size_t low = 0;
    while (open) {
      for (std::size_t c = low;; ++c) {
        if (weights_[c] <= budget && feasible(open & ~masks_[c], c + 1, budget - weights_[c])) {
          picked.push_back(c);
          open &= ~masks_[c];
          budget -= weights_[c];
          low = c + 1;
          break;
        }
      }
    }
    return picked;
  }

 private:
  std::vector<Mask> masks_;
  std::vector<std::size_t> weights_;
  std::vector<std::vector<std::size_t>> by_vertex_;
  std::size_t widest_ = 1;
};

}  // namespace

SubdivisionPlan min_subdivisions_to_dd2(const Graph& g, const SearchLimits& limits) {
  require_no_isolated(g, "min_subdivisions_to_dd2");
  SubdivisionPlan plan;
  plan.blocking_set = blocking_set(g);
  const VertexSet& x = plan.blocking_set;
  if (x.size() > std::min<std::size_t>(limits.max_subdivision_blocking, 64)) {
    throw GuardExceeded("min_subdivisions_to_dd2: blocking set of " + std::to_string(x.size()) +
                        " vertices exceeds guard " +
                        std::to_string(std::min<std::size_t>(limits.max_subdivision_blocking, 64)));
  }
  const auto induced = induced_subgraph(g, x);
  for (const Edge& e : maximum_matching(induced.graph)) {
    plan.matching.push_back(make_edge(induced.to_original[e.u], induced.to_original[e.v]));
  }
  std::sort(plan.matching.begin(), plan.matching.end());
  plan.matching_bound = x.size() - plan.matching.size();
  if (x.empty()) return plan;

  std::vector<std::size_t> index(g.order(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i) index[x[i]] = i;
  std::vector<Vertex> candidates;
  std::vector<Mask> masks;
  std::vector<std::size_t> weights;
  for (Vertex s : classify_vertices(g).supports()) {
    Mask m = index[s] < x.size() ? bit(index[s]) : 0;
    std::size_t leaves = 0;
    for (Vertex w : g.neighbors(s)) {
      if (index[w] < x.size()) m |= bit(index[w]);
      leaves += g.degree(w) == 1;
    }
    if (m == 0) continue;
    candidates.push_back(s);
    masks.push_back(m);
    weights.push_back(leaves);
  }

  const Mask all = x.size() == 64 ? ~Mask{0} : bit(x.size()) - 1;
  const CoverSearch search(masks, weights, x.size());
  for (std::size_t c : search.first_cover(all, search.minimum_weight(all))) plan.cover.push_back(candidates[c]);
  for (Vertex s : plan.cover) {
    for (Vertex w : g.neighbors(s)) {
      if (g.degree(w) == 1) plan.subdivide.push_back(make_edge(s, w));
    }
  }
  std::sort(plan.subdivide.begin(), plan.subdivide.end());
  plan.count = plan.subdivide.size();

  if (plan.count > plan.matching_bound || !is_dd2(subdivide_edges(g, plan.subdivide)).is_dd2) {
    throw std::logic_error("min_subdivisions_to_dd2: plan does not produce a DD2-graph");
  }
  return plan;
}

namespace {

// Dynamic bitset over the blocking set.
using Cover = std::vector<std::uint64_t>;

void or_into(Cover& into, const Cover& from) {
  for (std::size_t i = 0; i < into.size(); ++i) into[i] |= from[i];
}

bool covers_all(const Cover& c, const Cover& full) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if ((c[i] & full[i]) != full[i]) return false;
  }
  return true;
}

struct EdgeAdditionSpace {
  const Graph& g;
  EdgeList candidates;
  std::vector<Cover> rescue;  // blocked vertices each candidate can release
  std::vector<Cover> suffix;  // union of rescue[i..]
  Cover full;
};

// k-subsets of the candidates in lexicographic order, starting with a fixed
// first edge. A blocked weak support x can only be released by an added edge
// touching N[x] or a leaf next to N(x) (otherwise its neighbourhood and the
// leaf/support status of its neighbours are unchanged); subsets failing that
// are skipped.
class EdgeAdditionSearch {
 public:
  EdgeAdditionSearch(const EdgeAdditionSpace& space, std::size_t k)
      : s_(space), k_(k), acc_(k + 1, Cover(space.full.size(), 0)) {}

  std::optional<EdgeList> run_from(std::size_t first) {
    if (!covers_all(k_ == 1 ? s_.rescue[first] : s_.suffix[first], s_.full)) return std::nullopt;
    return extend(first, 0);
  }

 private:
  // acc_[depth] holds the zones hit by the edges chosen before this one.
  std::optional<EdgeList> extend(std::size_t index, std::size_t depth) {
    Cover& with = acc_[depth + 1];
    with = acc_[depth];
    or_into(with, s_.rescue[index]);
    chosen_.push_back(s_.candidates[index]);
    std::optional<EdgeList> found;
    if (chosen_.size() == k_) {
      if (is_dd2(add_edges(s_.g, chosen_)).is_dd2) found = chosen_;
    } else {
      const std::size_t needed = k_ - chosen_.size();
      for (std::size_t j = index + 1; j + needed <= s_.candidates.size(); ++j) {
        if (!covers_union(with, s_.suffix[j])) break;
        if (needed == 1 && !covers_union(with, s_.rescue[j])) continue;
        if ((found = extend(j, depth + 1))) break;
      }
    }
    chosen_.pop_back();
    return found;
  }

  bool covers_union(const Cover& a, const Cover& b) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (((a[i] | b[i]) & s_.full[i]) != s_.full[i]) return false;
    }
    return true;
  }

  const EdgeAdditionSpace& s_;
  std::size_t k_;
  std::vector<Cover> acc_;
  EdgeList chosen_;
};

}  // namespace

std::optional<EdgeAdditionResult> min_edges_to_dd2(const Graph& g, std::size_t k_max,
                                                   const SearchLimits& limits) {
  require_no_isolated(g, "min_edges_to_dd2");
  if (is_dd2(g).is_dd2) return EdgeAdditionResult{};

  const std::size_t n = g.order();
  const VertexSet blocked = blocking_set(g);
  const std::size_t words = (blocked.size() + 63) / 64;

  // vertex_cover[v] = blocked vertices whose rescue zone contains v.
  std::vector<Cover> vertex_cover(n, Cover(words, 0));
  auto mark = [&](Vertex v, std::size_t i) { vertex_cover[v][i / 64] |= std::uint64_t{1} << (i % 64); };
  for (std::size_t i = 0; i < blocked.size(); ++i) {
    const Vertex x = blocked[i];
    mark(x, i);
    for (Vertex y : g.neighbors(x)) {
      mark(y, i);
      for (Vertex l : g.neighbors(y)) {
        if (g.degree(l) == 1) mark(l, i);
      }
    }
  }

  EdgeAdditionSpace space{g, {}, {}, {}, Cover(words, 0)};
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      space.candidates.push_back({u, v});
      Cover c = vertex_cover[u];
      or_into(c, vertex_cover[v]);
      space.rescue.push_back(std::move(c));
    }
  }
  for (std::size_t i = 0; i < blocked.size(); ++i) space.full[i / 64] |= std::uint64_t{1} << (i % 64);
  space.suffix.assign(space.candidates.size() + 1, Cover(words, 0));
  for (std::size_t i = space.candidates.size(); i-- > 0;) {
    space.suffix[i] = space.suffix[i + 1];
    or_into(space.suffix[i], space.rescue[i]);
  }

  const std::size_t pool = space.candidates.size();
  for (std::size_t k = 1; k <= k_max && k <= pool; ++k) {
    if (detail::binomial_saturating(pool, k) > limits.max_edge_subsets) {
      throw GuardExceeded("min_edges_to_dd2: C(" + std::to_string(pool) + ", " + std::to_string(k) +
                          ") edge sets exceed guard " + std::to_string(limits.max_edge_subsets));
    }
    auto found = detail::first_success<EdgeList>(pool - k + 1, limits.threads, [&](std::size_t first) {
      return EdgeAdditionSearch(space, k).run_from(first);
    });
    if (found) return EdgeAdditionResult{k, std::move(*found)};
  }
  return std::nullopt;
}

}  // namespace dd2
