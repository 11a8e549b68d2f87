#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace dd2 {

using Vertex = std::uint32_t;

/// Unordered vertex pair stored with `u <= v`.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

constexpr Edge make_edge(Vertex a, Vertex b) noexcept {
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;
using EdgeList = std::vector<Edge>;

/// Simple undirected graph on vertices 0..order()-1.
///
/// Adjacency lists are kept sorted, so neighbors() doubles as a set view.
/// Values are immutable once built; every edit operation returns a new graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);

  /// Throws InvalidArgument on loops, out-of-range ids and repeated edges.
  Graph(std::size_t order, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return size_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Canonical (sorted) edge list.
  EdgeList edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t size_ = 0;
};

/// Undirected multigraph: parallel edges allowed, loops rejected.
/// The edge list is stored sorted, which fixes the edge numbering.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(std::size_t order, EdgeList edges);

  std::size_t order() const noexcept { return degree_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }
  const EdgeList& edges() const noexcept { return edges_; }

  /// Number of edge ends at `v`.
  std::size_t degree(Vertex v) const { return degree_[v]; }

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  std::vector<std::size_t> degree_;
  EdgeList edges_;
};

}  // namespace dd2
