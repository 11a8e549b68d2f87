#pragma once

#include <optional>
#include <string>

#include "dd2/graph.hpp"
#include "dd2/limits.hpp"

namespace dd2 {

/// Disjoint pair (D, D2): D dominates, D2 2-dominates.
struct DD2Pair {
  VertexSet d;
  VertexSet d2;

  friend bool operator==(const DD2Pair&, const DD2Pair&) = default;
};

struct DD2Verdict {
  bool is_dd2 = false;
  /// Smallest weak support whose neighbourhood holds only leaves and supports.
  std::optional<Vertex> blocking_witness;
  std::optional<DD2Pair> pair;
};

struct CertifiedDomReport {
  bool is_dominating = false;
  bool is_certified = false;
  /// Members v of D with N[v] inside D.
  VertexSet shadowed;
};

/// Weak supports s with N(s) ⊆ L ∪ S (empty exactly for DD2-graphs without
/// isolated vertices).
VertexSet blocking_set(const Graph& g);

/// Linear-time decision. Throws InvalidArgument if g has an isolated vertex.
DD2Verdict is_dd2(const Graph& g);

/// D = S ∪ I with I the greedy (ascending id) maximal independent subset of
/// V - N[S]; D2 = V - D. Throws InvalidArgument when g is not a DD2-graph or
/// has an isolated vertex.
DD2Pair construct_dd2_pair(const Graph& g);

/// Definitional check: disjoint, D dominating, D2 2-dominating.
bool verify_dd2_pair(const Graph& g, const DD2Pair& pair);

CertifiedDomReport certified_dom_report(const Graph& g, const VertexSet& d);

/// Exhaustive oracle over D ⊆ V (it suffices to try D2 = V - D since any
/// superset of a 2-dominating set is 2-dominating). Returns the pair whose D
/// is lexicographically first as a sorted sequence.
std::optional<DD2Pair> is_dd2_bruteforce(const Graph& g,
                                         const SearchLimits& limits = {});

std::string to_text(const DD2Verdict& verdict);
std::string to_text(const DD2Pair& pair);
std::string to_text(const CertifiedDomReport& report);

}  // namespace dd2
