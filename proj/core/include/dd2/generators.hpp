#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dd2/graph.hpp"

namespace dd2::gen {

Graph path(std::size_t n);                 // 0-1-...-(n-1)
Graph cycle(std::size_t n);                // path plus (n-1, 0); n >= 3
Graph star(std::size_t leaves);            // K_{1,leaves}, centre 0
Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);  // {0..a-1} x {a..a+b-1}

/// Attaches `t` fresh leaves to every vertex of `f`; the leaves of vertex v
/// get ids f.order() + v*t, ..., f.order() + v*t + t - 1.
Graph corona(const Graph& f, std::size_t t);

/// Disjoint union, second graph relabelled after the first.
Graph disjoint_union(const Graph& a, const Graph& b);

/// K1 + ((k-3)K1 ∪ K_{n+2-k}) for variant 1, K1 + ((k-3)K1 ∪ K_{2,n-k}) for
/// variant 2. Apex is 0, then the isolates, then the last block.
/// Requires 3 <= k <= n, and k < n for variant 2.
Graph gnk(std::size_t n, std::size_t k, int variant);

/// Connected corona multigraph: random spanning tree on `nodes` vertices,
/// `extra_edges` additional random edges (at most `max_mult` copies of any
/// pair), then a pendant vertex for every vertex that is neither a leaf nor
/// next to one.
MultiGraph random_corona_multigraph(std::size_t nodes, std::size_t extra_edges,
                                    std::size_t max_mult, std::uint64_t seed);

/// Uniform random labelled tree on n vertices plus `extra_edges` distinct
/// random chords (fewer if the graph saturates).
Graph random_connected_graph(std::size_t n, std::size_t extra_edges, std::uint64_t seed);

/// G(n, p) with p = numerator / denominator.
Graph random_gnp(std::size_t n, std::uint32_t numerator, std::uint32_t denominator,
                 std::uint64_t seed);

/// Number of labelled graphs on n vertices, 2^(n(n-1)/2). Requires n <= 11.
std::uint64_t labeled_graph_count(std::size_t n);

/// Labelled graph whose edge set is `mask` over the pairs (0,1), (0,2), ...,
/// (0,n-1), (1,2), ... (bit i = i-th pair).
Graph labeled_graph(std::size_t n, std::uint64_t mask);

/// Calls `visit` for every labelled graph on n vertices with mask in
/// [first, last), in increasing mask order. Requires n <= 7 (the full range
/// is 2^21 graphs); pass last = labeled_graph_count(n) for everything.
void enumerate_graphs(std::size_t n, const std::function<void(const Graph&)>& visit);
void enumerate_graphs(std::size_t n, std::uint64_t first, std::uint64_t last,
                      const std::function<void(const Graph&)>& visit);

/// Family names accepted by make(): path, cycle, star, complete,
/// complete-bipartite, gnk.
Graph make(const std::string& family, const std::vector<std::size_t>& params);

}  // namespace dd2::gen
