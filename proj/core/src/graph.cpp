#include "dd2/graph.hpp"

#include <algorithm>
#include <string>

#include "dd2/error.hpp"

namespace dd2 {

namespace {

void check_pair(std::size_t order, Edge e) {
  if (e.u >= order || e.v >= order) {
    throw InvalidArgument("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                          " has an endpoint outside 0.." + std::to_string(order));
  }
  if (e.u == e.v) {
    throw InvalidArgument("loop at vertex " + std::to_string(e.u));
  }
}

}  // namespace

Graph::Graph(std::size_t order) : adjacency_(order) {}

Graph::Graph(std::size_t order, std::span<const Edge> edges) : adjacency_(order) {
  for (const Edge& raw : edges) {
    const Edge e = make_edge(raw.u, raw.v);
    check_pair(order, e);
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (std::size_t v = 0; v < order; ++v) {
    auto& list = adjacency_[v];
    std::sort(list.begin(), list.end());
    if (auto it = std::adjacent_find(list.begin(), list.end()); it != list.end()) {
      throw InvalidArgument("duplicate edge " + std::to_string(std::min<std::size_t>(v, *it)) +
                            " " + std::to_string(std::max<std::size_t>(v, *it)));
    }
  }
  size_ = edges.size();
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  const Vertex target = &a == &adjacency_[u] ? v : u;
  return std::binary_search(a.begin(), a.end(), target);
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(size_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({static_cast<Vertex>(u), v});
    }
  }
  return out;
}

MultiGraph::MultiGraph(std::size_t order, EdgeList edges) : degree_(order, 0) {
  for (Edge& e : edges) {
    e = make_edge(e.u, e.v);
    check_pair(order, e);
    ++degree_[e.u];
    ++degree_[e.v];
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
}

}  // namespace dd2
