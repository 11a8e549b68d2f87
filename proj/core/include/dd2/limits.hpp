#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>

namespace dd2 {

/// Size guards for the exhaustive searches and oracles, plus the worker
/// count used by the searches that split work by prefix.
struct SearchLimits {
  std::size_t max_bruteforce_order = 24;        // is_dd2_bruteforce
  std::size_t max_oracle_component_size = 16;   // is_minimal_dd2_bruteforce
  std::size_t max_gamma_order = 15;             // gamma_gamma2
  std::size_t max_spanning_size = 22;           // spanning_minimal_search
  std::size_t max_subdivision_blocking = 40;    // min_subdivisions_to_dd2
  std::uint64_t max_edge_subsets = 2'000'000'000;  // min_edges_to_dd2, per k
  std::size_t max_setcover_sets = 12;
  std::size_t max_3dm3_triples = 20;
  unsigned threads = 1;

  /// Lifts every guard (the caller accepts exponential running time).
  static SearchLimits unlimited() {
    constexpr auto big = std::numeric_limits<std::size_t>::max();
    SearchLimits l;
    l.max_bruteforce_order = big;
    l.max_oracle_component_size = big;
    l.max_gamma_order = big;
    l.max_spanning_size = big;
    l.max_subdivision_blocking = big;
    l.max_edge_subsets = std::numeric_limits<std::uint64_t>::max();
    l.max_setcover_sets = big;
    l.max_3dm3_triples = big;
    return l;
  }
};

}  // namespace dd2
