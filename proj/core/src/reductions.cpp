#include "dd2/reductions.hpp"

#include <algorithm>
#include <stdexcept>

#include "dd2/error.hpp"
#include "dd2/graph_io.hpp"
#include "dd2/graph_ops.hpp"
#include "dd2/optimize.hpp"
#include "dd2/recognition.hpp"
#include "text_util.hpp"

namespace dd2 {

namespace {

std::string join(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

// Visits k-subsets of {0..n-1} in lexicographic order until visit returns true.
template <class Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return false;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    if (visit(c)) return true;
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace

// ---------------------------------------------------------------- 3DM3

ThreeDM3Instance ThreeDM3Instance::from_triples(std::size_t q,
                                                const std::vector<std::array<std::size_t, 3>>& triples) {
  ThreeDM3Instance inst;
  inst.q = q;
  inst.u_count = triples.size();
  EdgeList edges;
  for (std::size_t j = 0; j < triples.size(); ++j) {
    for (std::size_t part = 0; part < 3; ++part) {
      if (triples[j][part] >= q) {
        throw InvalidArgument("from_triples: index " + std::to_string(triples[j][part]) + " of triple " +
                              std::to_string(j) + " is not below q = " + std::to_string(q));
      }
      edges.push_back(make_edge(static_cast<Vertex>(part * q + triples[j][part]), inst.u(j)));
    }
  }
  inst.base = Graph(3 * q + triples.size(), edges);
  inst.validate();
  return inst;
}

void ThreeDM3Instance::validate() const {
  if (q == 0) throw InvalidArgument("3dm3: q must be positive");
  if (base.order() != 3 * q + u_count) {
    throw InvalidArgument("3dm3: base graph has " + std::to_string(base.order()) + " vertices, expected 3q + |U| = " +
                          std::to_string(3 * q + u_count));
  }
  const std::size_t nv = v_count();
  for (Vertex v = 0; v < base.order(); ++v) {
    const std::size_t d = base.degree(v);
    if (d < 2) throw InvalidArgument("3dm3: vertex " + std::to_string(v) + " has degree " + std::to_string(d) + " < 2");
    if (d > 3) throw InvalidArgument("3dm3: vertex " + std::to_string(v) + " has degree " + std::to_string(d) + " > 3");
    for (Vertex w : base.neighbors(v)) {
      if ((v < nv) == (w < nv)) {
        throw InvalidArgument("3dm3: edge " + std::to_string(v) + " " + std::to_string(w) +
                              " does not join V and U");
      }
    }
  }
  for (std::size_t j = 0; j < u_count; ++j) {
    const auto nb = base.neighbors(u(j));
    if (nb.size() != 3 || nb[0] >= q || nb[1] < q || nb[1] >= 2 * q || nb[2] < 2 * q) {
      throw InvalidArgument("3dm3: u-vertex " + std::to_string(u(j)) +
                            " is not adjacent to exactly one vertex of each of X, Y, Z");
    }
  }
}

ThreeDM3Reduction build_3dm3_supergraph(const ThreeDM3Instance& instance) {
  instance.validate();
  ThreeDM3Reduction r;
  r.instance = instance;
  const std::size_t base_order = instance.base.order();
  const std::size_t nv = instance.v_count();
  EdgeList edges = instance.base.edges();
  for (std::size_t v = 0; v < nv; ++v) {
    r.leaf_of.push_back(static_cast<Vertex>(base_order + v));
    edges.push_back({static_cast<Vertex>(v), r.leaf_of.back()});
  }
  for (std::size_t j = 0; j < instance.u_count; ++j) {
    const auto first = static_cast<Vertex>(base_order + nv + 3 * j);
    const std::array<Vertex, 3> abc{first, first + 1, first + 2};
    r.path_of.push_back(abc);
    edges.push_back({abc[0], abc[1]});
    edges.push_back({abc[1], abc[2]});
    edges.push_back(make_edge(instance.u(j), abc[1]));
  }
  r.graph = Graph(base_order + nv + 3 * instance.u_count, edges);
  r.k = nv + 3 * instance.u_count + 2 * instance.q;
  return r;
}

namespace {

bool is_exact_cover(const ThreeDM3Instance& inst, const std::vector<std::size_t>& cover) {
  if (cover.size() != inst.q) return false;
  std::vector<std::uint8_t> hit(inst.v_count(), 0);
  for (std::size_t j : cover) {
    if (j >= inst.u_count) return false;
    for (Vertex v : inst.base.neighbors(inst.u(j))) {
      if (hit[v]++) return false;
    }
  }
  return true;
}

}  // namespace

EdgeList build_3dm3_witness(const ThreeDM3Reduction& reduction, const std::vector<std::size_t>& cover) {
  const auto& inst = reduction.instance;
  if (!is_exact_cover(inst, cover)) throw InvalidArgument("build_3dm3_witness: not a 3DM3 solution");
  std::vector<std::uint8_t> chosen(inst.u_count, 0);
  for (std::size_t j : cover) chosen[j] = 1;
  EdgeList edges;
  for (std::size_t j = 0; j < inst.u_count; ++j) {
    const auto& abc = reduction.path_of[j];
    edges.push_back({abc[0], abc[1]});
    edges.push_back({abc[1], abc[2]});
    if (chosen[j]) {
      for (Vertex v : inst.base.neighbors(inst.u(j))) {
        edges.push_back(make_edge(v, inst.u(j)));
        edges.push_back(make_edge(v, reduction.leaf_of[v]));
      }
    } else {
      edges.push_back(make_edge(inst.u(j), abc[1]));
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::optional<std::vector<std::size_t>> extract_3dm3_solution(const ThreeDM3Reduction& reduction,
                                                              const EdgeList& spanning_edges) {
  if (spanning_edges.size() != reduction.k) return std::nullopt;
  Graph h;
  try {
    h = spanning_subgraph(reduction.graph, spanning_edges);
  } catch (const InvalidArgument&) {
    return std::nullopt;
  }
  if (!verify_spanning_minimal(reduction.graph, spanning_edges)) return std::nullopt;

  const auto& inst = reduction.instance;
  std::vector<std::size_t> component(h.order(), 0);
  const auto parts = connected_components(h);
  for (std::size_t c = 0; c < parts.size(); ++c) {
    for (Vertex v : parts[c]) component[v] = c;
  }
  std::vector<std::uint8_t> has_leaf(parts.size(), 0);
  for (Vertex l : reduction.leaf_of) has_leaf[component[l]] = 1;

  std::vector<std::size_t> cover;
  for (std::size_t j = 0; j < inst.u_count; ++j) {
    if (has_leaf[component[inst.u(j)]]) cover.push_back(j);
  }
  if (!is_exact_cover(inst, cover)) return std::nullopt;
  return cover;
}

std::optional<std::vector<std::size_t>> solve_3dm3_bruteforce(const ThreeDM3Instance& instance,
                                                              const SearchLimits& limits) {
  instance.validate();
  if (instance.u_count > limits.max_3dm3_triples) {
    throw GuardExceeded("solve_3dm3_bruteforce: |U| = " + std::to_string(instance.u_count) + " exceeds guard " +
                        std::to_string(limits.max_3dm3_triples));
  }
  std::optional<std::vector<std::size_t>> found;
  for_each_combination(instance.u_count, instance.q, [&](const std::vector<std::size_t>& c) {
    if (!is_exact_cover(instance, c)) return false;
    found = c;
    return true;
  });
  return found;
}

// ----------------------------------------------------------- set cover

void SetCoverInstance::validate() const {
  if (k == 0) throw InvalidArgument("setcover: k must be positive");
  if (k > sets.size()) {
    throw InvalidArgument("setcover: k = " + std::to_string(k) + " exceeds the number of sets " +
                          std::to_string(sets.size()));
  }
  std::vector<std::uint8_t> covered(n_items, 0);
  for (std::size_t j = 0; j < sets.size(); ++j) {
    for (std::size_t i = 0; i < sets[j].size(); ++i) {
      const std::size_t item = sets[j][i];
      if (item >= n_items) {
        throw InvalidArgument("setcover: set " + std::to_string(j) + " has item " + std::to_string(item) +
                              " outside 0.." + std::to_string(n_items == 0 ? 0 : n_items - 1));
      }
      if (i > 0 && sets[j][i - 1] >= item) {
        throw InvalidArgument("setcover: set " + std::to_string(j) + " is not strictly increasing");
      }
      covered[item] = 1;
    }
  }
  for (std::size_t item = 0; item < n_items; ++item) {
    if (!covered[item]) throw InvalidArgument("setcover: item " + std::to_string(item) + " is in no set");
  }
}

SetCoverReduction build_setcover_reduction(const SetCoverInstance& instance) {
  instance.validate();
  SetCoverReduction r;
  r.instance = instance;
  r.k = instance.k;
  r.eta = 2 * instance.k + 1;
  const std::size_t n = instance.n_items;
  const std::size_t m = instance.sets.size();
  const std::size_t eta = r.eta;

  for (std::size_t j = 0; j < m; ++j) r.set_vertex.push_back(static_cast<Vertex>(j));
  r.item_copy.assign(eta, std::vector<Vertex>(n));
  r.item_leaf.assign(eta, std::vector<Vertex>(n));
  for (std::size_t i = 0; i < eta; ++i) {
    for (std::size_t t = 0; t < n; ++t) {
      r.item_copy[i][t] = static_cast<Vertex>(m + i * n + t);
      r.item_leaf[i][t] = static_cast<Vertex>(m + eta * n + i * n + t);
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    const auto first = static_cast<Vertex>(m + 2 * eta * n + 2 * j);
    r.set_leaves.push_back({first, first + 1});
  }

  EdgeList edges;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t t : instance.sets[j]) {
      for (std::size_t i = 0; i < eta; ++i) edges.push_back(make_edge(r.set_vertex[j], r.item_copy[i][t]));
    }
  }
  for (std::size_t i = 0; i < eta; ++i) {
    for (std::size_t t = 0; t < n; ++t) edges.push_back({r.item_copy[i][t], r.item_leaf[i][t]});
  }
  for (std::size_t j = 0; j < m; ++j) {
    edges.push_back({r.set_vertex[j], r.set_leaves[j][0]});
    edges.push_back({r.set_vertex[j], r.set_leaves[j][1]});
  }
  r.graph = Graph(2 * eta * n + 3 * m, edges);
  return r;
}

EdgeList build_setcover_witness(const SetCoverReduction& reduction, const std::vector<std::size_t>& sets) {
  EdgeList edges;
  for (std::size_t j : sets) {
    if (j >= reduction.set_leaves.size()) {
      throw InvalidArgument("build_setcover_witness: set index " + std::to_string(j) + " out of range");
    }
    edges.push_back({reduction.set_leaves[j][0], reduction.set_leaves[j][1]});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

std::optional<std::vector<std::size_t>> extract_setcover_solution(const SetCoverReduction& reduction,
                                                                  const EdgeList& added_edges) {
  if (added_edges.size() > reduction.k) return std::nullopt;
  Graph augmented;
  try {
    augmented = add_edges(reduction.graph, added_edges);
  } catch (const InvalidArgument&) {
    return std::nullopt;
  }
  if (!is_dd2(augmented).is_dd2) return std::nullopt;

  // F_j stops being a support exactly when both of its pendant leaves
  // received an added edge; those j give the consistent replacement.
  std::vector<std::size_t> chosen;
  for (std::size_t j = 0; j < reduction.set_leaves.size(); ++j) {
    const auto& [a, b] = reduction.set_leaves[j];
    if (augmented.degree(a) > 1 && augmented.degree(b) > 1) chosen.push_back(j);
  }
  const EdgeList consistent = build_setcover_witness(reduction, chosen);
  if (chosen.size() > reduction.k || !is_dd2(add_edges(reduction.graph, consistent)).is_dd2) {
    throw std::logic_error("extract_setcover_solution: consistent replacement failed");
  }
  std::vector<std::uint8_t> covered(reduction.instance.n_items, 0);
  for (std::size_t j : chosen) {
    for (std::size_t t : reduction.instance.sets[j]) covered[t] = 1;
  }
  if (std::find(covered.begin(), covered.end(), 0) != covered.end()) {
    throw std::logic_error("extract_setcover_solution: recovered family is not a cover");
  }
  return chosen;
}

std::optional<std::vector<std::size_t>> solve_setcover_bruteforce(const SetCoverInstance& instance,
                                                                  const SearchLimits& limits) {
  instance.validate();
  const std::size_t m = instance.sets.size();
  if (m > limits.max_setcover_sets) {
    throw GuardExceeded("solve_setcover_bruteforce: " + std::to_string(m) + " sets exceed guard " +
                        std::to_string(limits.max_setcover_sets));
  }
  std::optional<std::vector<std::size_t>> found;
  for (std::size_t size = 0; size <= instance.k && !found; ++size) {
    for_each_combination(m, size, [&](const std::vector<std::size_t>& c) {
      std::vector<std::uint8_t> covered(instance.n_items, 0);
      for (std::size_t j : c) {
        for (std::size_t t : instance.sets[j]) covered[t] = 1;
      }
      if (std::find(covered.begin(), covered.end(), 0) != covered.end()) return false;
      found = c;
      return true;
    });
  }
  return found;
}

// ------------------------------------------------------------- text I/O

SetCoverInstance parse_setcover(std::string_view text) {
  detail::LineReader reader(text);
  auto header = reader.next_nonblank();
  if (!header) throw ParseError(1, "missing header \"n m k\"");
  const auto head = detail::parse_uints(*header, reader.line_number());
  if (head.size() != 3) throw ParseError(reader.line_number(), "header must be \"n m k\"");

  SetCoverInstance inst;
  inst.n_items = head[0];
  inst.k = head[2];
  inst.sets.resize(head[1]);
  for (auto& set : inst.sets) {
    // Missing trailing lines read as empty sets.
    const auto line = reader.next();
    if (!line) break;
    for (std::size_t item : detail::parse_uints(*line, reader.line_number())) {
      if (item >= inst.n_items) {
        throw ParseError(reader.line_number(), "item " + std::to_string(item) + " out of range");
      }
      set.push_back(item);
    }
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
      throw ParseError(reader.line_number(), "repeated item in set");
    }
  }
  if (reader.next_nonblank()) throw ParseError(reader.line_number(), "unexpected content after the sets");
  return inst;
}

ThreeDM3Instance parse_3dm3(std::string_view text) {
  detail::LineReader reader(text);
  auto header = reader.next_nonblank();
  if (!header) throw ParseError(1, "missing header \"q |U|\"");
  const std::size_t header_line = reader.line_number();
  const auto head = detail::parse_uints(*header, header_line);
  if (head.size() != 2) throw ParseError(header_line, "header must be \"q |U|\"");

  std::size_t offset = 0;
  for (std::size_t i = 0; i < header_line; ++i) {
    const auto end = text.find('\n', offset);
    offset = end == std::string_view::npos ? text.size() : end + 1;
  }
  ThreeDM3Instance inst;
  inst.q = head[0];
  inst.u_count = head[1];
  try {
    inst.base = parse_graph(text.substr(offset));
  } catch (const ParseError& e) {
    throw ParseError(e.line() + header_line, e.message());
  }
  return inst;
}

std::string to_text(const SetCoverInstance& instance) {
  std::string out = std::to_string(instance.n_items) + ' ' + std::to_string(instance.sets.size()) + ' ' +
                    std::to_string(instance.k) + '\n';
  for (const auto& set : instance.sets) out += join(set) + '\n';
  return out;
}

std::string to_text(const ThreeDM3Instance& instance) {
  return std::to_string(instance.q) + ' ' + std::to_string(instance.u_count) + '\n' + to_text(instance.base);
}

std::string to_text(const ThreeDM3Reduction& reduction) {
  std::string out = "k " + std::to_string(reduction.k) + '\n';
  out += "vertices " + std::to_string(reduction.graph.order()) + '\n';
  out += "edges " + std::to_string(reduction.graph.size()) + '\n';
  for (std::size_t v = 0; v < reduction.leaf_of.size(); ++v) {
    out += "leaf " + std::to_string(v) + ' ' + std::to_string(reduction.leaf_of[v]) + '\n';
  }
  for (std::size_t j = 0; j < reduction.path_of.size(); ++j) {
    const auto& p = reduction.path_of[j];
    out += "path " + std::to_string(reduction.instance.u(j)) + ' ' + std::to_string(p[0]) + ' ' +
           std::to_string(p[1]) + ' ' + std::to_string(p[2]) + '\n';
  }
  return out;
}

std::string to_text(const SetCoverReduction& reduction) {
  std::string out = "k " + std::to_string(reduction.k) + '\n';
  out += "eta " + std::to_string(reduction.eta) + '\n';
  out += "vertices " + std::to_string(reduction.graph.order()) + '\n';
  out += "edges " + std::to_string(reduction.graph.size()) + '\n';
  for (std::size_t j = 0; j < reduction.set_vertex.size(); ++j) {
    out += "set " + std::to_string(j) + ' ' + std::to_string(reduction.set_vertex[j]) + ' ' +
           std::to_string(reduction.set_leaves[j][0]) + ' ' + std::to_string(reduction.set_leaves[j][1]) + '\n';
  }
  for (std::size_t i = 0; i < reduction.item_copy.size(); ++i) {
    for (std::size_t t = 0; t < reduction.item_copy[i].size(); ++t) {
      out += "copy " + std::to_string(i) + ' ' + std::to_string(t) + ' ' +
             std::to_string(reduction.item_copy[i][t]) + ' ' + std::to_string(reduction.item_leaf[i][t]) + '\n';
    }
  }
  return out;
}

}  // namespace dd2
