#include "dd2/minimal.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "bitgraph.hpp"
#include "dd2/error.hpp"
#include "dd2/graph_ops.hpp"

namespace dd2 {

namespace {

// H on the B side, one edge per A-vertex (A-vertices have degree 2).
CoronaDecomposition build_decomposition(const Graph& g, const VertexSet& side_a,
                                        const VertexSet& side_b) {
  std::vector<Vertex> h_index(g.order(), 0);
  for (std::size_t i = 0; i < side_b.size(); ++i) h_index[side_b[i]] = static_cast<Vertex>(i);

  std::vector<std::tuple<Vertex, Vertex, Vertex>> incidences;
  incidences.reserve(side_a.size());
  for (Vertex a : side_a) {
    const auto nb = g.neighbors(a);
    const Edge e = make_edge(h_index[nb[0]], h_index[nb[1]]);
    incidences.emplace_back(e.u, e.v, a);
  }
  std::sort(incidences.begin(), incidences.end());

  CoronaDecomposition out;
  EdgeList edges;
  edges.reserve(incidences.size());
  for (const auto& [u, v, a] : incidences) {
    edges.push_back({u, v});
    out.edge_vertex.push_back(a);
  }
  out.h = MultiGraph(side_b.size(), std::move(edges));
  out.h_vertex = side_b;
  return out;
}

struct Sides {
  VertexSet a;  // uniform degree 2
  VertexSet b;  // holds the leaves, if any
};

bool contains_leaf(const Graph& g, const VertexSet& side) {
  return std::any_of(side.begin(), side.end(), [&](Vertex v) { return g.degree(v) == 1; });
}

bool uniform_degree_two(const Graph& g, const VertexSet& side) {
  return std::all_of(side.begin(), side.end(), [&](Vertex v) { return g.degree(v) == 2; });
}

std::optional<Sides> corona_sides(const Graph& g, const Bipartition& bp) {
  const bool leaves_a = contains_leaf(g, bp.side_a);
  const bool leaves_b = contains_leaf(g, bp.side_b);
  if (leaves_a && leaves_b) return std::nullopt;
  Sides s;
  if (leaves_a) {
    s = {bp.side_b, bp.side_a};
  } else if (leaves_b || uniform_degree_two(g, bp.side_a)) {
    s = {bp.side_a, bp.side_b};
  } else {
    s = {bp.side_b, bp.side_a};
  }
  if (!uniform_degree_two(g, s.a)) return std::nullopt;
  return s;
}

CoronaDecomposition relabel(CoronaDecomposition d, const std::vector<Vertex>& to_original) {
  for (Vertex& v : d.h_vertex) v = to_original[v];
  for (Vertex& v : d.edge_vertex) v = to_original[v];
  return d;
}

ComponentShape classify_component(const Graph& c, const std::vector<Vertex>& to_original) {
  const std::size_t n = c.order();
  const std::size_t m = c.size();
  if (n < 3) return shape::NotMinimal{"order below 3"};

  if (m == n - 1) {
    for (Vertex v = 0; v < n; ++v) {
      if (c.degree(v) == n - 1) return shape::Star{n - 1};
    }
  }
  if (n == 4 && m == 4 && uniform_degree_two(c, {0, 1, 2, 3})) return shape::Cycle4{};

  const auto bp = bipartition(c);
  if (!bp) return shape::NotMinimal{"not bipartite"};
  if (minimum_degree(c) >= 2) return shape::NotMinimal{"minimum degree at least 2"};

  const bool leaves_a = contains_leaf(c, bp->side_a);
  const bool leaves_b = contains_leaf(c, bp->side_b);
  if (leaves_a && leaves_b) return shape::NotMinimal{"leaves on both sides of the bipartition"};
  const VertexSet& side_b = leaves_a ? bp->side_a : bp->side_b;
  const VertexSet& side_a = leaves_a ? bp->side_b : bp->side_a;

  for (Vertex a : side_a) {
    if (c.degree(a) != 2) {
      return shape::NotMinimal{"vertex " + std::to_string(to_original[a]) + " has degree " +
                               std::to_string(c.degree(a)) + " on the side without leaves"};
    }
  }

  std::vector<std::uint8_t> near_leaf(n, 0);
  for (Vertex l = 0; l < n; ++l) {
    if (c.degree(l) != 1) continue;
    for (Vertex a : c.neighbors(l)) {
      for (Vertex b : c.neighbors(a)) near_leaf[b] = 1;
    }
  }
  for (Vertex b : side_b) {
    if (c.degree(b) != 1 && !near_leaf[b]) {
      return shape::NotMinimal{"vertex " + std::to_string(to_original[b]) +
                               " is neither a leaf nor at distance two from one"};
    }
  }
  return shape::SubdivisionOfCorona{relabel(build_decomposition(c, side_a, side_b), to_original)};
}

}  // namespace

bool is_corona_multigraph(const MultiGraph& h) {
  std::vector<std::uint8_t> near_leaf(h.order(), 0);
  for (const Edge& e : h.edges()) {
    if (h.degree(e.u) == 1) near_leaf[e.v] = 1;
    if (h.degree(e.v) == 1) near_leaf[e.u] = 1;
  }
  for (Vertex v = 0; v < h.order(); ++v) {
    if (h.degree(v) != 1 && !near_leaf[v]) return false;
  }
  return true;
}

MinimalVerdict is_minimal_dd2(const Graph& g) {
  MinimalVerdict verdict;
  verdict.is_minimal = true;
  for (auto& part : split_components(g)) {
    ComponentVerdict cv{part.to_original, classify_component(part.graph, part.to_original)};
    if (std::holds_alternative<shape::NotMinimal>(cv.shape)) verdict.is_minimal = false;
    verdict.components.push_back(std::move(cv));
  }
  return verdict;
}

std::optional<CoronaDecomposition> corona_decompose(const Graph& g) {
  if (g.order() == 0 || connected_components(g).size() != 1) return std::nullopt;
  const auto bp = bipartition(g);
  if (!bp) return std::nullopt;
  const auto sides = corona_sides(g, *bp);
  if (!sides) return std::nullopt;
  return build_decomposition(g, sides->a, sides->b);
}

bool is_minimal_dd2_bruteforce(const Graph& g, const SearchLimits& limits) {
  for (const auto& part : split_components(g)) {
    const Graph& c = part.graph;
    if (c.size() > limits.max_oracle_component_size || c.order() > 64) {
      throw GuardExceeded("is_minimal_dd2_bruteforce: component with " + std::to_string(c.size()) +
                          " edges exceeds guard " + std::to_string(limits.max_oracle_component_size));
    }
    detail::BitGraph bg(c);
    if (!detail::first_dd2_partition(bg)) return false;
    // DD2 is preserved by adding edges, so a proper spanning subgraph that is
    // DD2 exists iff some single-edge deletion is DD2.
    for (const Edge& e : c.edges()) {
      bg.adj[e.u] &= ~detail::bit(e.v);
      bg.adj[e.v] &= ~detail::bit(e.u);
      const bool still_dd2 = detail::first_dd2_partition(bg).has_value();
      bg.adj[e.u] |= detail::bit(e.v);
      bg.adj[e.v] |= detail::bit(e.u);
      if (still_dd2) return false;
    }
  }
  return true;
}

}  // namespace dd2
