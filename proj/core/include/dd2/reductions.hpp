#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dd2/graph.hpp"
#include "dd2/limits.hpp"

namespace dd2 {

/// Restricted 3-dimensional matching instance on the bipartite graph
/// (X ∪ Y ∪ Z) ∪ U with X = 0..q-1, Y = q..2q-1, Z = 2q..3q-1 and
/// U = 3q..3q+|U|-1. Planarity is not checked.
struct ThreeDM3Instance {
  std::size_t q = 0;
  std::size_t u_count = 0;
  Graph base;

  Vertex x(std::size_t i) const { return static_cast<Vertex>(i); }
  Vertex y(std::size_t i) const { return static_cast<Vertex>(q + i); }
  Vertex z(std::size_t i) const { return static_cast<Vertex>(2 * q + i); }
  Vertex u(std::size_t j) const { return static_cast<Vertex>(3 * q + j); }
  std::size_t v_count() const { return 3 * q; }

  /// Builds the base graph from one (x, y, z) index triple per u-vertex.
  static ThreeDM3Instance from_triples(std::size_t q,
                                       const std::vector<std::array<std::size_t, 3>>& triples);

  /// Throws InvalidArgument naming the first violated constraint.
  void validate() const;
};

struct SetCoverInstance {
  std::size_t n_items = 0;
  std::vector<std::vector<std::size_t>> sets;  // item ids, sorted
  std::size_t k = 0;

  /// Throws InvalidArgument naming the first violated constraint.
  void validate() const;
};

/// Supergraph G^super: every v ∈ X∪Y∪Z gets a leaf l_v, every u ∈ U a path
/// a_u b_u c_u with u adjacent to b_u. Base ids are kept; then all l_v in v
/// order, then (a_u, b_u, c_u) per u.
struct ThreeDM3Reduction {
  ThreeDM3Instance instance;
  Graph graph;
  std::size_t k = 0;  // |V| + 3|U| + 2q
  std::vector<Vertex> leaf_of;                 // by v
  std::vector<std::array<Vertex, 3>> path_of;  // by u index: a_u, b_u, c_u
};

/// Set-cover gadget graph with eta = 2k+1 copies of the item layer.
/// Ids: F_j = j; u^i_j = m + i*n + j; l^i_j = m + eta*n + i*n + j;
/// L^j_1, L^j_2 = m + 2*eta*n + 2j, +1.
struct SetCoverReduction {
  SetCoverInstance instance;
  Graph graph;
  std::size_t k = 0;
  std::size_t eta = 0;
  std::vector<Vertex> set_vertex;                        // F_j
  std::vector<std::vector<Vertex>> item_copy;            // [i][j] = u^i_j
  std::vector<std::vector<Vertex>> item_leaf;            // [i][j] = l^i_j
  std::vector<std::array<Vertex, 2>> set_leaves;         // L^j_1, L^j_2
};

ThreeDM3Reduction build_3dm3_supergraph(const ThreeDM3Instance& instance);

/// Spanning subgraph made of P3 = a_u b_u c_u and the 7-vertex tree around u
/// for u in `cover`, and the 4-vertex tree {w, a_w, b_w, c_w} for the other
/// u's. `cover` lists u indices (0-based within U).
EdgeList build_3dm3_witness(const ThreeDM3Reduction& reduction,
                            const std::vector<std::size_t>& cover);

/// u indices lying in components that contain a leaf l_v, provided
/// `spanning_edges` is a spanning minimal DD2 subgraph of size k and the
/// recovered u's form a 3DM3 solution.
std::optional<std::vector<std::size_t>> extract_3dm3_solution(
    const ThreeDM3Reduction& reduction, const EdgeList& spanning_edges);

/// Lexicographically first q-subset of U (as u indices) dominating X∪Y∪Z.
std::optional<std::vector<std::size_t>> solve_3dm3_bruteforce(
    const ThreeDM3Instance& instance, const SearchLimits& limits = {});

SetCoverReduction build_setcover_reduction(const SetCoverInstance& instance);

/// The edges L^j_1 L^j_2 for every j in `sets`.
EdgeList build_setcover_witness(const SetCoverReduction& reduction,
                                const std::vector<std::size_t>& sets);

/// Given added edges making the gadget graph DD2 with |edges| <= k, first
/// replaces them by the consistent set {L^j_1 L^j_2 : F_j stopped being a
/// support}, re-checks it, and returns those j (a cover of size <= k).
std::optional<std::vector<std::size_t>> extract_setcover_solution(
    const SetCoverReduction& reduction, const EdgeList& added_edges);

/// Smallest cover of size <= k; lexicographically first among the smallest.
std::optional<std::vector<std::size_t>> solve_setcover_bruteforce(
    const SetCoverInstance& instance, const SearchLimits& limits = {});

// Instance files.
//   Set cover:  "n m k", then m lines of item ids (a line may be empty).
//   3DM3:       "q |U|", then the edge-list document of the base graph.
SetCoverInstance parse_setcover(std::string_view text);
ThreeDM3Instance parse_3dm3(std::string_view text);
std::string to_text(const SetCoverInstance& instance);
std::string to_text(const ThreeDM3Instance& instance);

std::string to_text(const ThreeDM3Reduction& reduction);
std::string to_text(const SetCoverReduction& reduction);

}  // namespace dd2
