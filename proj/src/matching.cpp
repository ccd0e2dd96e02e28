// Maximum cardinality matching in general graphs (Edmonds' blossom algorithm).

#include <queue>

#include "relcay/oracles.hpp"

namespace relcay {

namespace {

class Blossom {
 public:
  explicit Blossom(const BitGraph& g)
      : g_(g), n_(g.n), match_(n_, -1), parent_(n_, -1), base_(n_), used_(n_), in_blossom_(n_) {}

  std::vector<int> solve() {
    for (int root = 0; root < n_; ++root) {
      if (match_[root] != -1) continue;
      int v = find_path(root);
      while (v != -1) {
        const int pv = parent_[v];
        const int ppv = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = ppv;
      }
    }
    return match_;
  }

 private:
  int lca(int a, int b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
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
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int to : bits_of(g_.rows[v])) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const BitGraph& g_;
  int n_;
  std::vector<int> match_, parent_, base_;
  std::vector<bool> used_, in_blossom_;
};

}  // namespace

std::vector<std::pair<int, int>> maximum_matching(const BitGraph& g) {
  const auto mate = Blossom(g).solve();
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < g.n; ++v)
    if (mate[v] > v) out.emplace_back(v, mate[v]);
  return out;
}

int matching_number(const BitGraph& g) { return static_cast<int>(maximum_matching(g).size()); }

}  // namespace relcay
