#include "dd2/matching.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace dd2 {

namespace {

constexpr int none = -1;

// Edmonds' algorithm with explicit blossom contraction through `base`.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(g), n_(static_cast<int>(g.order())), match_(n_, none), parent_(n_), base_(n_),
        used_(n_), blossom_(n_), queue_(n_) {}

  std::vector<int> run() {
    // Greedy start shortens the augmenting phase.
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != none) continue;
      for (Vertex w : g_.neighbors(v)) {
        if (match_[w] == none) {
          match_[v] = static_cast<int>(w);
          match_[w] = v;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != none) continue;
      int u = find_augmenting_path(v);
      while (u != none) {
        const int pv = parent_[u];
        const int next = match_[pv];
        match_[u] = pv;
        match_[pv] = u;
        u = next;
      }
    }
    return match_;
  }

 private:
  int lowest_common_ancestor(int a, int b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == none) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = true;
      blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_augmenting_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), none);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = true;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue_[tail++] = root;
    while (head < tail) {
      const int v = queue_[head++];
      for (Vertex wv : g_.neighbors(v)) {
        const int to = static_cast<int>(wv);
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != none && parent_[match_[to]] != none)) {
          const int current = lowest_common_ancestor(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          mark_path(v, current, to);
          mark_path(to, current, v);
          for (int i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = current;
              if (!used_[i]) {
                used_[i] = true;
                queue_[tail++] = i;
              }
            }
          }
        } else if (parent_[to] == none) {
          parent_[to] = v;
          if (match_[to] == none) return to;
          used_[match_[to]] = true;
          queue_[tail++] = match_[to];
        }
      }
    }
    return none;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> used_;
  std::vector<bool> blossom_;
  std::vector<int> queue_;
};

}  // namespace

EdgeList maximum_matching(const Graph& g) {
  const auto mate = BlossomMatcher(g).run();
  EdgeList out;
  for (std::size_t v = 0; v < mate.size(); ++v) {
    if (mate[v] != none && static_cast<int>(v) < mate[v]) {
      out.push_back({static_cast<Vertex>(v), static_cast<Vertex>(mate[v])});
    }
  }
  return out;
}

bool is_matching(const Graph& g, const EdgeList& edges) {
  std::vector<bool> covered(g.order(), false);
  for (const Edge& e : edges) {
    if (e.u >= g.order() || e.v >= g.order() || e.u == e.v || !g.adjacent(e.u, e.v)) return false;
    if (covered[e.u] || covered[e.v]) return false;
    covered[e.u] = covered[e.v] = true;
  }
  return true;
}

}  // namespace dd2
