#include "dd2/generators.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <string>

#include "dd2/error.hpp"

namespace dd2::gen {

namespace {

// mt19937_64 output is fixed by the standard; distributions are not, so
// bounded draws are done by hand to keep seeded output portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(engine_() % bound); }
  bool chance(std::uint32_t numerator, std::uint32_t denominator) {
    return below(denominator) < numerator;
  }

 private:
  std::mt19937_64 engine_;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

// Prüfer decoding of a uniformly random sequence.
EdgeList random_tree(std::size_t n, Rng& rng) {
  EdgeList edges;
  if (n < 2) return edges;
  if (n == 2) return {{0, 1}};
  std::vector<std::size_t> code(n - 2);
  for (auto& c : code) c = rng.below(n);
  std::vector<std::size_t> degree(n, 1);
  for (auto c : code) ++degree[c];
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  for (auto c : code) {
    const std::size_t leaf = leaves.top();
    leaves.pop();
    edges.push_back(make_edge(static_cast<Vertex>(leaf), static_cast<Vertex>(c)));
    if (--degree[c] == 1) leaves.push(c);
  }
  const std::size_t a = leaves.top();
  leaves.pop();
  const std::size_t b = leaves.top();
  edges.push_back(make_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)));
  return edges;
}

}  // namespace

Graph path(std::size_t n) {
  EdgeList edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({static_cast<Vertex>(i - 1), static_cast<Vertex>(i)});
  return Graph(n, edges);
}

Graph cycle(std::size_t n) {
  require(n >= 3, "cycle needs at least 3 vertices");
  EdgeList edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({static_cast<Vertex>(i - 1), static_cast<Vertex>(i)});
  edges.push_back({0, static_cast<Vertex>(n - 1)});
  return Graph(n, edges);
}

Graph star(std::size_t leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  EdgeList edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, static_cast<Vertex>(i)});
  return Graph(leaves + 1, edges);
}

Graph complete(std::size_t n) {
  require(n >= 1, "complete graph needs at least one vertex");
  EdgeList edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Graph(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  require(a >= 1 && b >= 1, "complete bipartite sides must be non-empty");
  EdgeList edges;
  for (std::size_t u = 0; u < a; ++u) {
    for (std::size_t v = a; v < a + b; ++v) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Graph(a + b, edges);
}

Graph corona(const Graph& f, std::size_t t) {
  require(t >= 1, "corona needs at least one pendant per vertex");
  EdgeList edges = f.edges();
  auto fresh = static_cast<Vertex>(f.order());
  for (Vertex v = 0; v < f.order(); ++v) {
    for (std::size_t i = 0; i < t; ++i) edges.push_back({v, fresh++});
  }
  return Graph(fresh, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  EdgeList edges = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(a.order() + b.order(), edges);
}

Graph gnk(std::size_t n, std::size_t k, int variant) {
  require(variant == 1 || variant == 2, "gnk variant must be 1 or 2");
  require(3 <= k && k <= n, "gnk needs 3 <= k <= n");
  require(variant == 1 || k < n, "gnk variant 2 needs k < n");
  EdgeList edges;
  for (std::size_t v = 1; v < n; ++v) edges.push_back({0, static_cast<Vertex>(v)});
  const std::size_t first = k - 2;  // after apex and k-3 isolates
  if (variant == 1) {
    for (std::size_t u = first; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  } else {
    for (std::size_t u = first; u < first + 2; ++u) {
      for (std::size_t v = first + 2; v < n; ++v) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  }
  return Graph(n, edges);
}

MultiGraph random_corona_multigraph(std::size_t nodes, std::size_t extra_edges,
                                    std::size_t max_mult, std::uint64_t seed) {
  require(nodes >= 1, "random corona multigraph needs at least one node");
  require(max_mult >= 1, "maximum multiplicity must be at least 1");
  Rng rng(seed);
  EdgeList edges = random_tree(nodes, rng);
  std::map<Edge, std::size_t> multiplicity;
  for (const Edge& e : edges) ++multiplicity[e];

  if (nodes >= 2) {
    for (std::size_t i = 0; i < extra_edges; ++i) {
      for (int attempt = 0; attempt < 64; ++attempt) {
        const auto u = static_cast<Vertex>(rng.below(nodes));
        const auto v = static_cast<Vertex>(rng.below(nodes));
        if (u == v) continue;
        const Edge e = make_edge(u, v);
        if (multiplicity[e] >= max_mult) continue;
        ++multiplicity[e];
        edges.push_back(e);
        break;
      }
    }
  }

  std::vector<std::size_t> degree(nodes, 0);
  for (const Edge& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  std::vector<std::uint8_t> near_leaf(nodes, 0);
  for (const Edge& e : edges) {
    if (degree[e.u] == 1) near_leaf[e.v] = 1;
    if (degree[e.v] == 1) near_leaf[e.u] = 1;
  }
  auto fresh = static_cast<Vertex>(nodes);
  for (Vertex v = 0; v < nodes; ++v) {
    if (degree[v] != 1 && !near_leaf[v]) edges.push_back({v, fresh++});
  }
  return MultiGraph(fresh, std::move(edges));
}

Graph random_connected_graph(std::size_t n, std::size_t extra_edges, std::uint64_t seed) {
  Rng rng(seed);
  EdgeList edges = random_tree(n, rng);
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t max_edges = n * (n - (n > 0 ? 1 : 0)) / 2;
  for (std::size_t i = 0; i < extra_edges && edges.size() < max_edges; ++i) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      const auto u = static_cast<Vertex>(rng.below(n));
      const auto v = static_cast<Vertex>(rng.below(n));
      if (u == v) continue;
      const Edge e = make_edge(u, v);
      auto it = std::lower_bound(sorted.begin(), sorted.end(), e);
      if (it != sorted.end() && *it == e) continue;
      sorted.insert(it, e);
      edges.push_back(e);
      break;
    }
  }
  return Graph(n, edges);
}

Graph random_gnp(std::size_t n, std::uint32_t numerator, std::uint32_t denominator,
                 std::uint64_t seed) {
  require(denominator > 0 && numerator <= denominator, "edge probability must lie in [0, 1]");
  Rng rng(seed);
  EdgeList edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.chance(numerator, denominator)) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  }
  return Graph(n, edges);
}

std::uint64_t labeled_graph_count(std::size_t n) {
  require(n <= 11, "labelled graph count overflows beyond 11 vertices");
  return std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
}

Graph labeled_graph(std::size_t n, std::uint64_t mask) {
  EdgeList edges;
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1U) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  }
  return Graph(n, edges);
}

void enumerate_graphs(std::size_t n, const std::function<void(const Graph&)>& visit) {
  require(n <= 7, "enumeration is limited to 7 vertices");
  enumerate_graphs(n, 0, labeled_graph_count(n), visit);
}

void enumerate_graphs(std::size_t n, std::uint64_t first, std::uint64_t last,
                      const std::function<void(const Graph&)>& visit) {
  require(n <= 7, "enumeration is limited to 7 vertices");
  last = std::min(last, labeled_graph_count(n));
  for (std::uint64_t mask = first; mask < last; ++mask) visit(labeled_graph(n, mask));
}

Graph make(const std::string& family, const std::vector<std::size_t>& params) {
  auto expect = [&](std::size_t count) {
    require(params.size() == count, family + " expects " + std::to_string(count) + " parameter(s)");
  };
  if (family == "path") {
    expect(1);
    require(params[0] >= 1, "path needs at least one vertex");
    return path(params[0]);
  }
  if (family == "cycle") {
    expect(1);
    return cycle(params[0]);
  }
  if (family == "star") {
    expect(1);
    return star(params[0]);
  }
  if (family == "complete") {
    expect(1);
    return complete(params[0]);
  }
  if (family == "complete-bipartite") {
    expect(2);
    return complete_bipartite(params[0], params[1]);
  }
  if (family == "gnk") {
    expect(3);
    return gnk(params[0], params[1], static_cast<int>(params[2]));
  }
  throw InvalidArgument("unknown graph family \"" + family + "\"");
}

}  // namespace dd2::gen
