// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//
//   dd2_acceptance            run everything
//   dd2_acceptance 3 8        run only the listed criteria

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dd2/error.hpp"
#include "dd2/generators.hpp"
#include "dd2/graph_ops.hpp"
#include "dd2/minimal.hpp"
#include "dd2/optimize.hpp"
#include "dd2/recognition.hpp"
#include "dd2/reductions.hpp"
#include "oracles.hpp"

using namespace dd2;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

// Collects the first few mismatches and a count.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what();
  }
  Result result(const std::string& summary) const {
    std::ostringstream s;
    s << summary << ", " << checks_ << " checks, " << failures_ << " mismatches";
    if (!notes_.empty()) s << " [" << notes_ << "]";
    return {failures_ == 0, s.str()};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string notes_;
};

std::string describe(const Graph& g) {
  std::string s = "n=" + std::to_string(g.order()) + " E={";
  for (const Edge& e : g.edges()) s += std::to_string(e.u) + "-" + std::to_string(e.v) + " ";
  return s + "}";
}

bool connected(const Graph& g) { return g.order() > 0 && connected_components(g).size() == 1; }

std::size_t ceil_two_thirds(std::size_t n) { return (2 * n + 2) / 3; }

void each_graph(std::size_t n, const std::function<void(const Graph&)>& visit) {
  gen::enumerate_graphs(n, visit);
}

// ---------------------------------------------------------------- criteria

Result c1_recognizer_vs_oracle() {
  Tally t;
  std::size_t exhaustive = 0;
  each_graph(7, [&](const Graph& g) {
    if (has_isolated_vertex(g)) return;
    ++exhaustive;
    const bool fast = is_dd2(g).is_dd2;
    const bool slow = is_dd2_bruteforce(g).has_value();
    t.check(fast == slow, [&] { return describe(g); });
  });
  std::mt19937_64 rng(20240611);
  std::size_t random = 0;
  while (random < 10000) {
    const std::size_t n = 8 + rng() % 9;
    const std::uint64_t seed = rng();
    Graph g = random % 2 == 0 ? gen::random_connected_graph(n, rng() % (2 * n), seed)
                              : gen::random_gnp(n, 1 + rng() % 5, 10, seed);
    if (has_isolated_vertex(g)) continue;
    ++random;
    t.check(is_dd2(g).is_dd2 == is_dd2_bruteforce(g).has_value(), [&] { return describe(g); });
  }
  return t.result(std::to_string(exhaustive) + " graphs on 7 vertices, " + std::to_string(random) + " random");
}

Result c2_family_table() {
  Tally t;
  for (std::size_t n = 3; n <= 50; ++n) {
    const std::string tag = " n=" + std::to_string(n);
    t.check(is_dd2(gen::path(n)).is_dd2 == (n == 3 || n >= 5), [&] { return "P" + tag; });
    t.check(is_dd2(gen::cycle(n)).is_dd2, [&] { return "C" + tag; });
    t.check(is_dd2(gen::complete(n)).is_dd2, [&] { return "K" + tag; });
  }
  std::size_t bases = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    each_graph(n, [&](const Graph& f) {
      if (!connected(f)) return;
      ++bases;
      t.check(!is_dd2(gen::corona(f, 1)).is_dd2, [&] { return "corona(F,1) " + describe(f); });
      t.check(is_dd2(gen::corona(f, 2)).is_dd2, [&] { return "corona(F,2) " + describe(f); });
    });
  }
  return t.result("paths, cycles, cliques 3..50, " + std::to_string(bases) + " connected bases");
}

Result c3_minimal_vs_oracle() {
  Tally t;
  std::size_t count = 0, minimal = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    each_graph(n, [&](const Graph& g) {
      if (g.size() > 16 || !connected(g)) return;
      ++count;
      const bool fast = is_minimal_dd2(g).is_minimal;
      minimal += fast;
      t.check(fast == is_minimal_dd2_bruteforce(g), [&] { return describe(g); });
    });
  }
  return t.result(std::to_string(count) + " connected graphs, " + std::to_string(minimal) + " minimal");
}

Result c4_gamma_of_minimal() {
  Tally t;
  std::size_t coronas = 0;
  for (std::uint64_t seed = 1; coronas < 200; ++seed) {
    std::mt19937_64 rng(seed);
    const MultiGraph h = gen::random_corona_multigraph(1 + rng() % 6, rng() % 4, 1 + rng() % 3, seed);
    const Graph s = subdivision_graph(h).graph;
    if (s.order() > 14) continue;
    ++coronas;
    t.check(is_minimal_dd2(s).is_minimal, [&] { return "not minimal " + describe(s); });
    const auto r = gamma_gamma2(s);
    t.check(r && r->value == s.order(), [&] { return describe(s); });
  }
  for (std::size_t leaves = 2; leaves <= 13; ++leaves) {
    const auto r = gamma_gamma2(gen::star(leaves));
    t.check(r && r->value == leaves + 1, [&] { return "star " + std::to_string(leaves); });
  }
  const auto c4 = gamma_gamma2(gen::cycle(4));
  t.check(c4 && c4->value == 4, [] { return std::string("C4"); });
  return t.result(std::to_string(coronas) + " subdivided coronas, stars 2..13, C4");
}

Result c5_closed_forms() {
  Tally t;
  for (std::size_t n = 3; n <= 11; ++n) {
    for (std::size_t k = 3; k <= n; ++k) {
      for (int variant : {1, 2}) {
        if (variant == 2 && k == n) continue;
        const auto r = gamma_gamma2(gen::gnk(n, k, variant));
        t.check(r && r->value == k, [&] {
          return "G(" + std::to_string(n) + "," + std::to_string(k) + ") variant " + std::to_string(variant);
        });
      }
    }
  }

  std::size_t scanned = 0, threes = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    each_graph(n, [&](const Graph& g) {
      ++scanned;
      std::optional<std::size_t> value;
      if (!has_isolated_vertex(g)) {
        if (auto r = gamma_gamma2(g)) value = r->value;
      }
      const bool three = value == std::size_t{3};
      threes += three;
      t.check(three == oracle::contains_spanning_k1_k2n(g), [&] { return "gamma 3 " + describe(g); });
    });
  }

  const auto k33 = gamma_gamma2(gen::complete_bipartite(3, 3));
  t.check(k33 && k33->value == 6, [] { return std::string("K3,3"); });
  std::size_t extremal = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    each_graph(n, [&](const Graph& g) {
      if (!connected(g) || minimum_degree(g) < 3) return;
      const auto r = gamma_gamma2(g);
      if (!r || r->value != n) return;
      ++extremal;
      const auto sides = bipartition(g);
      const bool k33_shape = n == 6 && g.size() == 9 && sides && sides->side_a.size() == 3;
      t.check(k33_shape, [&] { return "extremal " + describe(g); });
    });
  }
  // 10 labelled copies of K3,3 on six vertices.
  t.check(extremal == 10, [&] { return "extremal count " + std::to_string(extremal); });
  return t.result(std::to_string(scanned) + " graphs scanned, " + std::to_string(threes) + " with value 3, " +
                  std::to_string(extremal) + " labelled K3,3");
}

bool dd2_goal(const Graph& g) { return is_dd2(g).is_dd2; }

void check_subdivision(Tally& t, const Graph& g) {
  const auto plan = min_subdivisions_to_dd2(g);
  t.check(is_dd2(subdivide_edges(g, plan.subdivide)).is_dd2, [&] { return "plan " + describe(g); });
  t.check(plan.subdivide.size() == plan.count, [&] { return "plan size " + describe(g); });
  const auto best = oracle::min_subdivisions(g, plan.count, dd2_goal);
  t.check(best == plan.count, [&] { return "count " + describe(g); });
}

Result c6_subdivisions() {
  Tally t;
  std::size_t exhaustive = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    each_graph(n, [&](const Graph& g) {
      if (g.size() > 10 || !connected(g) || is_dd2(g).is_dd2) return;
      ++exhaustive;
      check_subdivision(t, g);
    });
  }
  std::mt19937_64 rng(77);
  std::size_t random = 0;
  while (random < 1000) {
    const std::size_t n = 7 + rng() % 5;
    Graph g;
    if (rng() % 2 == 0) {
      g = gen::random_connected_graph(n, rng() % (11 - (n - 1) + 1), rng());
    } else {
      const std::size_t core = 2 + rng() % 4;  // corona order 2*core <= 10
      g = gen::corona(gen::random_connected_graph(core, rng() % (11 - 2 * core + 1), rng()), 1);
    }
    if (g.size() > 10 || is_dd2(g).is_dd2) continue;
    ++random;
    check_subdivision(t, g);
  }
  return t.result(std::to_string(exhaustive) + " graphs with n <= 6, " + std::to_string(random) + " random");
}

Result c7_k9_constructions() {
  Tally t;
  const std::size_t q = 3;
  const Graph k9 = gen::complete(3 * q);
  const EdgeList paths{{0, 1}, {1, 2}, {3, 4}, {4, 5}, {6, 7}, {7, 8}};
  t.check(paths.size() == 2 * q && verify_spanning_minimal(k9, paths), [] { return std::string("3 x P3"); });

  // H: two vertices joined by 3q - 6 = 3 parallel edges, then a pendant on each.
  const MultiGraph corona_h(4, {{0, 1}, {0, 1}, {0, 1}, {0, 2}, {1, 3}});
  const Graph s = subdivision_graph(corona_h).graph;
  t.check(s.order() == 9 && s.size() == 6 * q - 8 && verify_spanning_minimal(k9, s.edges()),
          [] { return std::string("S(H o K1)"); });

  std::size_t searched = 0;
  auto bound_holds = [&](const Graph& g) {
    const auto r = spanning_minimal_search(g, Objective::min);
    if (!r) return;
    ++searched;
    t.check(r->size >= ceil_two_thirds(g.order()) && verify_spanning_minimal(g, r->subgraph),
            [&] { return describe(g); });
  };
  for (std::size_t n = 3; n <= 5; ++n) {
    each_graph(n, [&](const Graph& g) {
      if (!has_isolated_vertex(g)) bound_holds(g);
    });
  }
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t n = 6 + seed % 7;
    const Graph g = gen::random_connected_graph(n, seed % 5, seed);
    if (g.size() <= 16) bound_holds(g);
  }
  return t.result("both K9 witnesses, " + std::to_string(searched) + " searches");
}

void each_family(std::size_t n, std::size_t m, const std::function<void(const std::vector<std::vector<std::size_t>>&)>& visit) {
  // Multisets of m nonempty subsets of {0..n-1}, as non-decreasing masks.
  const std::size_t top = (std::size_t{1} << n) - 1;
  std::vector<std::size_t> masks(m, 1);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t low) {
    if (i == m) {
      std::size_t all = 0;
      for (std::size_t mask : masks) all |= mask;
      if (all != top) return;
      std::vector<std::vector<std::size_t>> sets(m);
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t item = 0; item < n; ++item) {
          if ((masks[j] >> item) & 1) sets[j].push_back(item);
        }
      }
      visit(sets);
      return;
    }
    for (std::size_t mask = low; mask <= top; ++mask) {
      masks[i] = mask;
      rec(i + 1, mask);
    }
  };
  rec(0, 1);
}

bool covers(const SetCoverInstance& inst, const std::vector<std::size_t>& chosen) {
  std::set<std::size_t> items;
  for (std::size_t j : chosen) items.insert(inst.sets.at(j).begin(), inst.sets.at(j).end());
  return items.size() == inst.n_items && chosen.size() <= inst.k;
}

Result c8_setcover_reduction() {
  Tally t;
  std::size_t instances = 0, feasible = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t m = 1; m <= 4; ++m) {
      each_family(n, m, [&](const std::vector<std::vector<std::size_t>>& sets) {
        for (std::size_t k = 1; k <= std::min<std::size_t>(2, m); ++k) {
          const SetCoverInstance inst{n, sets, k};
          ++instances;
          const auto r = build_setcover_reduction(inst);
          const auto direct = solve_setcover_bruteforce(inst);
          const auto added = min_edges_to_dd2(r.graph, k);
          auto label = [&] {
            std::string s = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " F=";
            for (const auto& set : sets) {
              s += "{";
              for (std::size_t item : set) s += std::to_string(item);
              s += "}";
            }
            return s;
          };
          t.check(direct.has_value() == added.has_value(), label);
          if (direct) {
            ++feasible;
            t.check(covers(inst, *direct), label);
            t.check(is_dd2(add_edges(r.graph, build_setcover_witness(r, *direct))).is_dd2, label);
          }
          if (added) {
            t.check(added->k <= k && is_dd2(add_edges(r.graph, added->edges)).is_dd2, label);
            const auto extracted = extract_setcover_solution(r, added->edges);
            t.check(extracted && covers(inst, *extracted), label);
          }
        }
      });
    }
  }
  return t.result(std::to_string(instances) + " instances, " + std::to_string(feasible) + " feasible");
}

bool exact_cover(const ThreeDM3Instance& inst, const std::vector<std::size_t>& chosen) {
  if (chosen.size() != inst.q) return false;
  std::set<Vertex> hit;
  for (std::size_t j : chosen) {
    for (Vertex v : inst.base.neighbors(inst.u(j))) hit.insert(v);
  }
  return hit.size() == inst.v_count();
}

Result c9_3dm3_reduction() {
  Tally t;
  std::vector<std::pair<std::string, ThreeDM3Instance>> cases;
  for (std::size_t u = 2; u <= 3; ++u) {
    cases.emplace_back("q=1 |U|=" + std::to_string(u),
                       ThreeDM3Instance::from_triples(1, std::vector<std::array<std::size_t, 3>>(u, {0, 0, 0})));
  }
  cases.emplace_back("q=2 feasible",
                     ThreeDM3Instance::from_triples(2, {{0, 0, 0}, {1, 1, 1}, {0, 1, 1}, {1, 0, 0}}));
  cases.emplace_back("q=2 infeasible",
                     ThreeDM3Instance::from_triples(2, {{0, 0, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 0}}));

  std::size_t feasible = 0;
  for (const auto& [name, inst] : cases) {
    const auto r = build_3dm3_supergraph(inst);
    const std::size_t v = inst.v_count(), u = inst.u_count;
    t.check(r.graph.order() == 2 * v + 4 * u && r.graph.size() == v + 6 * u && r.k == v + 3 * u + 2 * inst.q,
            [&] { return name + " counts"; });
    const auto solution = solve_3dm3_bruteforce(inst);
    const auto found = find_spanning_minimal_of_size(r.graph, r.k);
    t.check(solution.has_value() == found.has_value(), [&] { return name + " feasibility"; });
    if (solution) {
      ++feasible;
      t.check(exact_cover(inst, *solution), [&] { return name + " oracle solution"; });
      const EdgeList w = build_3dm3_witness(r, *solution);
      t.check(w.size() == r.k && verify_spanning_minimal(r.graph, w), [&] { return name + " forward witness"; });
      const auto back = extract_3dm3_solution(r, w);
      t.check(back && exact_cover(inst, *back), [&] { return name + " witness extraction"; });
    }
    if (found) {
      t.check(verify_spanning_minimal(r.graph, *found), [&] { return name + " found subgraph"; });
      const auto back = extract_3dm3_solution(r, *found);
      t.check(back && exact_cover(inst, *back), [&] { return name + " search extraction"; });
    }
  }
  return t.result(std::to_string(cases.size()) + " instances, " + std::to_string(feasible) + " feasible");
}

double median_seconds(const std::function<void()>& fn) {
  fn();  // warm-up
  std::vector<double> runs;
  for (int i = 0; i < 9; ++i) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    runs.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  std::sort(runs.begin(), runs.end());
  return runs[runs.size() / 2];
}

Result c10_scaling() {
  Tally t;
  std::ostringstream detail;
  detail.precision(3);
  struct Case {
    std::string name;
    std::function<Graph(std::size_t)> make;
  };
  const std::vector<Case> cases{
      {"path", [](std::size_t n) { return gen::path(n); }},
      {"corona", [](std::size_t n) { return gen::corona(gen::path(n / 2), 1); }},
  };
  for (const auto& c : cases) {
    const Graph small = c.make(100000);
    const Graph large = c.make(200000);
    for (int op = 0; op < 2; ++op) {
      const char* name = op == 0 ? "is_dd2" : "is_minimal_dd2";
      auto timed = [&](const Graph& g) {
        return median_seconds([&] {
          volatile bool sink = op == 0 ? is_dd2(g).is_dd2 : is_minimal_dd2(g).is_minimal;
          (void)sink;
        });
      };
      const double a = timed(small), b = timed(large);
      const double ratio = b / a;
      detail << " " << name << "/" << c.name << " " << a << "s->" << b << "s x" << ratio << ";";
      t.check(ratio <= 2.5 && a < 1.0 && b < 1.0, [&] { return std::string(name) + " on " + c.name; });
    }
  }
  return t.result("medians of 9 runs:" + detail.str());
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"recognizer matches exhaustive oracle", c1_recognizer_vs_oracle},
      {"family table", c2_family_table},
      {"minimality recognizer matches exhaustive oracle", c3_minimal_vs_oracle},
      {"minimal DD2-graphs have gamma_gamma2 = n", c4_gamma_of_minimal},
      {"gamma_gamma2 closed forms", c5_closed_forms},
      {"subdivision minimizer matches breadth-first minimum", c6_subdivisions},
      {"K9 spanning constructions and size bound", c7_k9_constructions},
      {"set cover reduction end to end", c8_setcover_reduction},
      {"3DM3 reduction end to end", c9_3dm3_reduction},
      {"linear-time scaling", c10_scaling},
  };
  std::set<std::size_t> only;
  for (int i = 1; i < argc; ++i) only.insert(std::strtoul(argv[i], nullptr, 10));

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!only.empty() && !only.count(i + 1)) continue;
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s (%.1fs) %s\n", r.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                secs, r.detail.c_str());
    std::fflush(stdout);
    failed += !r.pass;
  }
  return failed == 0 ? 0 : 1;
}
