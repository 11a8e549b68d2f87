#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "dd2/error.hpp"
#include "dd2/graph_ops.hpp"
#include "dd2/minimal.hpp"
#include "dd2/optimize.hpp"
#include "parallel.hpp"

namespace dd2 {

namespace {

// Include-first DFS over the sorted edge list, so the first hit is the
// lexicographically first edge set of the requested size.
class SpanningSearch {
 public:
  SpanningSearch(const Graph& g, std::size_t size)
      : g_(g), edges_(g.edges()), size_(size), degree_(g.order(), 0), remaining_(g.order(), 0) {}

  // Sets whose smallest edge index is `first`.
  std::optional<EdgeList> run_from(std::size_t first) {
    std::fill(degree_.begin(), degree_.end(), 0);
    for (Vertex v = 0; v < g_.order(); ++v) remaining_[v] = g_.degree(v);
    uncovered_ = g_.order();
    chosen_.clear();
    for (std::size_t i = 0; i < first; ++i) {
      const Edge& e = edges_[i];
      --remaining_[e.u];
      --remaining_[e.v];
      if (remaining_[e.u] == 0 || remaining_[e.v] == 0) return std::nullopt;
    }
    if (!include(first)) return std::nullopt;
    return found_ ? std::optional<EdgeList>(chosen_) : std::nullopt;
  }

 private:
  bool include(std::size_t i) {
    const Edge& e = edges_[i];
    // Every edge of a minimal DD2-graph has an end of degree at most 2.
    if (degree_[e.u] >= 2 && degree_[e.v] >= 2) return false;
    --remaining_[e.u];
    --remaining_[e.v];
    if (degree_[e.u]++ == 0) --uncovered_;
    if (degree_[e.v]++ == 0) --uncovered_;
    chosen_.push_back(e);
    const bool done = descend(i + 1);
    if (done) return true;
    chosen_.pop_back();
    if (--degree_[e.u] == 0) ++uncovered_;
    if (--degree_[e.v] == 0) ++uncovered_;
    ++remaining_[e.u];
    ++remaining_[e.v];
    return false;
  }

  bool skip_only(std::size_t i) {
    const Edge& e = edges_[i];
    --remaining_[e.u];
    --remaining_[e.v];
    bool done = false;
    if (alive(e)) done = descend(i + 1);
    ++remaining_[e.u];
    ++remaining_[e.v];
    return done;
  }

  bool alive(const Edge& e) const {
    return (degree_[e.u] > 0 || remaining_[e.u] > 0) && (degree_[e.v] > 0 || remaining_[e.v] > 0);
  }

  bool descend(std::size_t i) {
    const std::size_t have = chosen_.size();
    if (have == size_) {
      if (uncovered_ != 0) return false;
      if (!is_minimal_dd2(spanning_subgraph(g_, chosen_)).is_minimal) return false;
      found_ = true;
      return true;
    }
    const std::size_t need = size_ - have;
    if (edges_.size() - i < need || 2 * need < uncovered_) return false;
    if (include(i)) return true;
    return skip_only(i);
  }

  const Graph& g_;
  EdgeList edges_;
  std::size_t size_;
  std::vector<std::size_t> degree_;
  std::vector<std::size_t> remaining_;
  std::size_t uncovered_ = 0;
  EdgeList chosen_;
  bool found_ = false;
};

}  // namespace

std::size_t spanning_size_lower_bound(std::size_t order) { return (2 * order + 2) / 3; }

bool verify_spanning_minimal(const Graph& g, const EdgeList& edges) {
  const Graph h = spanning_subgraph(g, edges);
  if (h.order() == 0 || has_isolated_vertex(h)) return false;
  return is_minimal_dd2(h).is_minimal;
}

std::optional<EdgeList> find_spanning_minimal_of_size(const Graph& g, std::size_t size,
                                                      const SearchLimits& limits) {
  const std::size_t m = g.size();
  if (detail::binomial_saturating(m, size) > limits.max_edge_subsets) {
    throw GuardExceeded("find_spanning_minimal_of_size: C(" + std::to_string(m) + ", " +
                        std::to_string(size) + ") edge sets exceed guard " +
                        std::to_string(limits.max_edge_subsets));
  }
  if (g.order() == 0 || size == 0 || size > m || has_isolated_vertex(g)) return std::nullopt;
  return detail::first_success<EdgeList>(m - size + 1, limits.threads, [&](std::size_t first) {
    return SpanningSearch(g, size).run_from(first);
  });
}

std::optional<SpanningSearchResult> spanning_minimal_search(const Graph& g, Objective objective,
                                                            const SearchLimits& limits) {
  const std::size_t m = g.size();
  if (m > limits.max_spanning_size) {
    throw GuardExceeded("spanning_minimal_search: " + std::to_string(m) + " edges exceed guard " +
                        std::to_string(limits.max_spanning_size));
  }
  if (g.order() == 0 || has_isolated_vertex(g) || !is_dd2(g).is_dd2) return std::nullopt;

  SearchLimits inner = limits;
  inner.max_edge_subsets = std::numeric_limits<std::uint64_t>::max();
  const std::size_t low = std::min(spanning_size_lower_bound(g.order()), m);
  for (std::size_t step = 0; step + low <= m; ++step) {
    const std::size_t size = objective == Objective::min ? low + step : m - step;
    if (auto edges = find_spanning_minimal_of_size(g, size, inner)) {
      return SpanningSearchResult{objective, size, std::move(*edges)};
    }
  }
  // A DD2-graph always has a minimal spanning DD2 subgraph.
  throw std::logic_error("spanning_minimal_search: no spanning minimal subgraph found");
}

}  // namespace dd2
