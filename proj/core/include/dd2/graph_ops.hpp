#pragma once

#include <optional>
#include <vector>

#include "dd2/graph.hpp"

namespace dd2 {

/// Leaves (degree one) and their supports, split by how many leaves each
/// support carries. A K2 component contributes both ends to `leaves` and to
/// `weak_supports`.
struct VertexClassification {
  VertexSet leaves;
  VertexSet weak_supports;
  VertexSet strong_supports;

  /// weak_supports ∪ strong_supports, sorted.
  VertexSet supports() const;
};

VertexClassification classify_vertices(const Graph& g);

/// Proper 2-colouring; in every component the side holding the smallest id
/// is `side_a`.
struct Bipartition {
  VertexSet side_a;
  VertexSet side_b;
};

std::optional<Bipartition> bipartition(const Graph& g);

/// Components ordered by smallest member; each component sorted.
std::vector<VertexSet> connected_components(const Graph& g);

bool has_isolated_vertex(const Graph& g);
std::size_t minimum_degree(const Graph& g);

/// Replaces each listed edge uv by u-w-v with a fresh w. Fresh ids are
/// order(), order()+1, ... in input order.
Graph subdivide_edges(const Graph& g, const EdgeList& edges);

/// S(H) together with the vertex n_e inserted on each edge of H.
/// `edge_vertex[i]` belongs to `h.edges()[i]`; it equals h.order() + i.
struct Subdivision {
  Graph graph;
  std::vector<Vertex> edge_vertex;
};

Subdivision subdivision_graph(const MultiGraph& h);

/// Throws InvalidArgument when a pair is a loop, an existing edge or repeated.
Graph add_edges(const Graph& g, const EdgeList& edges);

/// Graph induced on `vertices`; `to_original[i]` is the id of new vertex i.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices);

/// Same as induced_subgraph applied to every component, in linear total time.
std::vector<InducedSubgraph> split_components(const Graph& g);

/// Spanning subgraph of `g` with only the given edges (which must be edges of g).
Graph spanning_subgraph(const Graph& g, const EdgeList& edges);

}  // namespace dd2
