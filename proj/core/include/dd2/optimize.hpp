#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "dd2/graph.hpp"
#include "dd2/limits.hpp"
#include "dd2/recognition.hpp"

namespace dd2 {

struct GammaGamma2Result {
  std::size_t value = 0;
  /// Lexicographically first D among optimal pairs, then first D2 for it.
  DD2Pair witness;
};

/// min |D| + |D2| over DD2-pairs, by branch and bound over per-vertex labels.
/// Empty iff g is not a DD2-graph. Throws GuardExceeded when
/// order > limits.max_gamma_order (hard cap 64).
std::optional<GammaGamma2Result> gamma_gamma2(const Graph& g,
                                              const SearchLimits& limits = {});

struct SubdivisionPlan {
  VertexSet blocking_set;          // X_G
  EdgeList matching;               // maximum matching of G[X_G], ids of g
  std::size_t matching_bound = 0;  // |X_G| - |matching|, an upper bound on count
  VertexSet cover;                 // supports all of whose pendant edges are subdivided
  EdgeList subdivide;              // those pendant edges, sorted
  std::size_t count = 0;
};

/// Fewest single-edge subdivisions turning g into a DD2-graph. A blocked
/// vertex is released once a neighbour (or itself) stops being a support,
/// which for a support s costs one subdivision per leaf of s and releases all
/// of N[s] ∩ X_G; other subdivisions release at most what one of these
/// does. So the minimum is a cheapest cover of X_G by such N[s]; the
/// lexicographically first cheapest cover is returned. Exact search; throws
/// GuardExceeded when |X_G| > limits.max_subdivision_blocking (hard cap 64)
/// and InvalidArgument on isolated vertices. The plan is re-verified.
SubdivisionPlan min_subdivisions_to_dd2(const Graph& g, const SearchLimits& limits = {});

struct EdgeAdditionResult {
  std::size_t k = 0;
  EdgeList edges;
};

/// Smallest k <= k_max such that adding k non-edges gives a DD2-graph, with
/// the lexicographically first such edge set. Returns k = 0 when g already
/// is DD2. Throws InvalidArgument on isolated vertices and GuardExceeded when
/// C(#non-edges, k) exceeds limits.max_edge_subsets.
std::optional<EdgeAdditionResult> min_edges_to_dd2(const Graph& g, std::size_t k_max,
                                                   const SearchLimits& limits = {});

enum class Objective { min, max };

struct SpanningSearchResult {
  Objective objective = Objective::min;
  std::size_t size = 0;
  EdgeList subgraph;
};

/// Spanning subgraph of extremal size whose components are all minimal
/// DD2-graphs (lexicographically first edge set at that size). Empty iff g
/// is not DD2. Throws GuardExceeded when size() > limits.max_spanning_size.
std::optional<SpanningSearchResult> spanning_minimal_search(
    const Graph& g, Objective objective, const SearchLimits& limits = {});

/// Lexicographically first spanning minimal DD2 subgraph with exactly
/// `size` edges. Uses the subset-count guard instead of the edge-count guard.
std::optional<EdgeList> find_spanning_minimal_of_size(const Graph& g, std::size_t size,
                                                      const SearchLimits& limits = {});

/// True iff `edges` ⊆ E(g) covers every vertex and every component of the
/// resulting spanning subgraph is a minimal DD2-graph. Throws
/// InvalidArgument when an edge is not in g.
bool verify_spanning_minimal(const Graph& g, const EdgeList& edges);

/// ceil(2n/3): no spanning minimal DD2 subgraph can be smaller.
std::size_t spanning_size_lower_bound(std::size_t order);

std::string to_text(const GammaGamma2Result& result);
std::string to_text(const SubdivisionPlan& plan);
std::string to_text(const EdgeAdditionResult& result);
std::string to_text(const SpanningSearchResult& result);

}  // namespace dd2
