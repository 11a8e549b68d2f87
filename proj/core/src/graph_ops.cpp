#include "dd2/graph_ops.hpp"

#include <algorithm>
#include <string>

#include "dd2/error.hpp"

namespace dd2 {

VertexSet VertexClassification::supports() const {
  VertexSet out;
  out.reserve(weak_supports.size() + strong_supports.size());
  std::merge(weak_supports.begin(), weak_supports.end(), strong_supports.begin(),
             strong_supports.end(), std::back_inserter(out));
  return out;
}

VertexClassification classify_vertices(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> leaf_neighbors(n, 0);
  VertexClassification c;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 1) {
      c.leaves.push_back(v);
      ++leaf_neighbors[g.neighbors(v).front()];
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (leaf_neighbors[v] == 1) c.weak_supports.push_back(v);
    if (leaf_neighbors[v] >= 2) c.strong_supports.push_back(v);
  }
  return c;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::int8_t> side(n, -1);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex root = 0; root < n; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    queue.clear();
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = static_cast<std::int8_t>(1 - side[v]);
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition b;
  for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? b.side_a : b.side_b).push_back(v);
  return b;
}

namespace {

// Component index per vertex, components numbered by smallest member.
std::vector<std::uint32_t> component_labels(const Graph& g, std::size_t& count) {
  const std::size_t n = g.order();
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> label(n, unset);
  std::vector<Vertex> stack;
  count = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (label[root] != unset) continue;
    const auto id = static_cast<std::uint32_t>(count++);
    label[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (label[w] == unset) {
          label[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return label;
}

}  // namespace

std::vector<VertexSet> connected_components(const Graph& g) {
  std::size_t count = 0;
  const auto label = component_labels(g, count);
  std::vector<VertexSet> out(count);
  for (Vertex v = 0; v < g.order(); ++v) out[label[v]].push_back(v);
  return out;
}

std::vector<InducedSubgraph> split_components(const Graph& g) {
  std::size_t count = 0;
  const auto label = component_labels(g, count);
  std::vector<std::vector<Vertex>> members(count);
  std::vector<Vertex> local(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    local[v] = static_cast<Vertex>(members[label[v]].size());
    members[label[v]].push_back(v);
  }
  std::vector<EdgeList> edges(count);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex w : g.neighbors(u)) {
      if (u < w) edges[label[u]].push_back({local[u], local[w]});
    }
  }
  std::vector<InducedSubgraph> out;
  out.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    out.push_back({Graph(members[c].size(), edges[c]), std::move(members[c])});
  }
  return out;
}

bool has_isolated_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) return true;
  }
  return false;
}

std::size_t minimum_degree(const Graph& g) {
  std::size_t best = g.order() == 0 ? 0 : g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

Graph subdivide_edges(const Graph& g, const EdgeList& edges) {
  EdgeList targets;
  targets.reserve(edges.size());
  for (const Edge& raw : edges) {
    const Edge e = make_edge(raw.u, raw.v);
    if (e.v >= g.order() || e.u == e.v || !g.adjacent(e.u, e.v)) {
      throw InvalidArgument("cannot subdivide " + std::to_string(e.u) + " " + std::to_string(e.v) +
                            ": not an edge");
    }
    targets.push_back(e);
  }
  EdgeList sorted = targets;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("an edge is listed twice for subdivision");
  }

  EdgeList out;
  out.reserve(g.size() + targets.size());
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(sorted.begin(), sorted.end(), e)) out.push_back(e);
  }
  auto fresh = static_cast<Vertex>(g.order());
  for (const Edge& e : targets) {
    out.push_back({e.u, fresh});
    out.push_back({e.v, fresh});
    ++fresh;
  }
  return Graph(fresh, out);
}

Subdivision subdivision_graph(const MultiGraph& h) {
  Subdivision s;
  EdgeList edges;
  edges.reserve(2 * h.size());
  auto fresh = static_cast<Vertex>(h.order());
  for (const Edge& e : h.edges()) {
    edges.push_back({e.u, fresh});
    edges.push_back({e.v, fresh});
    s.edge_vertex.push_back(fresh);
    ++fresh;
  }
  s.graph = Graph(fresh, edges);
  return s;
}

Graph add_edges(const Graph& g, const EdgeList& edges) {
  EdgeList all = g.edges();
  for (const Edge& raw : edges) {
    const Edge e = make_edge(raw.u, raw.v);
    if (e.u == e.v) throw InvalidArgument("cannot add loop at " + std::to_string(e.u));
    if (e.v >= g.order()) throw InvalidArgument("vertex " + std::to_string(e.v) + " out of range");
    if (g.adjacent(e.u, e.v)) {
      throw InvalidArgument("cannot add " + std::to_string(e.u) + " " + std::to_string(e.v) +
                            ": already an edge");
    }
    all.push_back(e);
  }
  return Graph(g.order(), all);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  constexpr auto absent = static_cast<Vertex>(-1);
  std::vector<Vertex> local(g.order(), absent);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.order()) throw InvalidArgument("vertex " + std::to_string(vertices[i]) + " out of range");
    local[vertices[i]] = static_cast<Vertex>(i);
  }
  EdgeList edges;
  for (Vertex u : vertices) {
    for (Vertex w : g.neighbors(u)) {
      if (u < w && local[w] != absent) edges.push_back(make_edge(local[u], local[w]));
    }
  }
  return {Graph(vertices.size(), edges), vertices};
}

Graph spanning_subgraph(const Graph& g, const EdgeList& edges) {
  for (const Edge& e : edges) {
    if (e.u >= g.order() || e.v >= g.order() || e.u == e.v || !g.adjacent(e.u, e.v)) {
      throw InvalidArgument(std::to_string(e.u) + " " + std::to_string(e.v) + " is not an edge of the graph");
    }
  }
  return Graph(g.order(), edges);
}

}  // namespace dd2
