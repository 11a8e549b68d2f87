#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dd2/graph.hpp"
#include "dd2/limits.hpp"

namespace dd2 {

/// G = S(H): `h_vertex[x]` is the vertex of G playing H-vertex x and
/// `edge_vertex[i]` the vertex inserted on `h.edges()[i]`.
struct CoronaDecomposition {
  MultiGraph h;
  std::vector<Vertex> h_vertex;
  std::vector<Vertex> edge_vertex;
};

namespace shape {
struct Star {
  std::size_t leaves = 0;
};
struct Cycle4 {};
struct SubdivisionOfCorona {
  CoronaDecomposition decomposition;
};
struct NotMinimal {
  std::string reason;
};
}  // namespace shape

using ComponentShape = std::variant<shape::Star, shape::Cycle4,
                                    shape::SubdivisionOfCorona, shape::NotMinimal>;

/// Per-component result. Decomposition ids refer to the input graph.
struct ComponentVerdict {
  VertexSet vertices;
  ComponentShape shape;
};

struct MinimalVerdict {
  bool is_minimal = false;
  std::vector<ComponentVerdict> components;
};

/// Every vertex is a leaf (exactly one edge end) or adjacent to one.
bool is_corona_multigraph(const MultiGraph& h);

/// Linear-time recognition of minimal DD2-graphs, component by component.
MinimalVerdict is_minimal_dd2(const Graph& g);

/// Recovers H with S(H) = g for connected bipartite g having a side of
/// uniform degree 2 (the side without leaves). Ids in the result refer to g.
std::optional<CoronaDecomposition> corona_decompose(const Graph& g);

/// Exhaustive oracle: every component is DD2 and no proper spanning subgraph
/// of it is. Throws GuardExceeded if a component has more edges than
/// limits.max_oracle_component_size.
bool is_minimal_dd2_bruteforce(const Graph& g, const SearchLimits& limits = {});

std::string to_text(const MinimalVerdict& verdict);
std::string to_text(const CoronaDecomposition& decomposition);

}  // namespace dd2
