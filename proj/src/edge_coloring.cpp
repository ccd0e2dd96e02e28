// Misra-Gries constructive Vizing colouring (at most Delta+1 colours).

#include <algorithm>

#include "relcay/error.hpp"
#include "relcay/theorems.hpp"

namespace relcay {

namespace {

class MisraGries {
 public:
  MisraGries(int n, int colours) : n_(n), k_(colours), at_(n, std::vector<int>(colours, -1)), col_(n, std::vector<int>(n, -1)) {}

  void colour_edge(int x, int y) {
    std::vector<int> fan = maximal_fan(x, y);
    const int c = free_colour(x);
    const int d = free_colour(fan.back());
    invert_path(x, c, d);
    // Longest prefix of the fan that is still a fan, ending at a vertex where d is free.
    std::size_t w = 0;
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (i > 0 && !is_free(fan[i - 1], col_[x][fan[i]])) break;
      if (is_free(fan[i], d)) {
        w = i;
        break;
      }
    }
    std::vector<int> shifted;
    for (std::size_t i = 0; i < w; ++i) shifted.push_back(col_[x][fan[i + 1]]);
    for (std::size_t i = 0; i <= w; ++i) set(x, fan[i], -1);
    for (std::size_t i = 0; i < w; ++i) set(x, fan[i], shifted[i]);
    set(x, fan[w], d);
  }

  int colour(int u, int v) const { return col_[u][v]; }

 private:
  bool is_free(int v, int c) const { return c >= 0 && at_[v][c] == -1; }

  int free_colour(int v) const {
    for (int c = 0; c < k_; ++c)
      if (at_[v][c] == -1) return c;
    throw InternalConsistencyError("no free colour at a vertex during Misra-Gries");
  }

  void set(int u, int v, int c) {
    const int old = col_[u][v];
    if (old >= 0) {
      at_[u][old] = -1;
      at_[v][old] = -1;
    }
    col_[u][v] = col_[v][u] = c;
    if (c >= 0) {
      at_[u][c] = v;
      at_[v][c] = u;
    }
  }

  std::vector<int> maximal_fan(int x, int y) const {
    std::vector<int> fan{y};
    bool extended = true;
    while (extended) {
      extended = false;
      for (int v = 0; v < n_; ++v) {
        const int c = col_[x][v];
        if (c < 0 || std::find(fan.begin(), fan.end(), v) != fan.end()) continue;
        if (is_free(fan.back(), c)) {
          fan.push_back(v);
          extended = true;
        }
      }
    }
    return fan;
  }

  // Swaps c and d along the maximal path from x that starts with a d-edge.
  void invert_path(int x, int c, int d) {
    std::vector<std::pair<int, int>> path;
    int v = x, want = d;
    while (at_[v][want] != -1) {
      const int u = at_[v][want];
      path.emplace_back(v, u);
      v = u;
      want = want == d ? c : d;
    }
    std::vector<int> colours;
    for (auto [a, b] : path) colours.push_back(col_[a][b]);
    for (auto [a, b] : path) set(a, b, -1);
    for (std::size_t i = 0; i < path.size(); ++i) set(path[i].first, path[i].second, colours[i] == c ? d : c);
  }

  int n_, k_;
  std::vector<std::vector<int>> at_;   // at_[v][colour] = neighbour or -1
  std::vector<std::vector<int>> col_;  // col_[u][v] = colour or -1
};

}  // namespace

std::vector<int> misra_gries_edge_coloring(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> degree(n, 0);
  for (auto [u, v] : edges) {
    ++degree[u];
    ++degree[v];
  }
  const int delta = n ? *std::max_element(degree.begin(), degree.end()) : 0;
  MisraGries mg(n, delta + 1);
  for (auto [u, v] : edges) mg.colour_edge(u, v);
  std::vector<int> out;
  out.reserve(edges.size());
  for (auto [u, v] : edges) out.push_back(mg.colour(u, v));
  return out;
}

}  // namespace relcay
