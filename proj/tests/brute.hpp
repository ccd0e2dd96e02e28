#pragma once

// Slow reference computations over plain adjacency matrices and subset scans.
// Kept deliberately naive so they share no code with the library's searches.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <vector>

#include "relcay/group.hpp"

namespace brute {

using Matrix = std::vector<std::vector<bool>>;

// Adjacency straight from the definition: x ~ y iff x != y, (x in H or y in H), x^{-1}y in C.
inline Matrix relcay_matrix(const relcay::GroupTable& g, const std::vector<int>& h, const std::vector<int>& c) {
  const int n = g.order();
  auto in = [](const std::vector<int>& s, int x) { return std::find(s.begin(), s.end(), x) != s.end(); };
  Matrix m(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && (in(h, x) || in(h, y)) && in(c, g.mul(g.inv(x), y))) m[x][y] = true;
  return m;
}

inline int edges(const Matrix& m) {
  int e = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) e += m[i][j];
  return e;
}

inline bool independent(const Matrix& m, std::uint64_t s) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if ((s >> i & 1) && (s >> j & 1) && m[i][j]) return false;
  return true;
}

inline bool clique(const Matrix& m, std::uint64_t s) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if ((s >> i & 1) && (s >> j & 1) && !m[i][j]) return false;
  return true;
}

// Subset scans; only for n <= 16.
inline int alpha(const Matrix& m) {
  int best = 0;
  for (std::uint64_t s = 0; s < (1ull << m.size()); ++s)
    if (independent(m, s)) best = std::max(best, __builtin_popcountll(s));
  return best;
}

inline int omega(const Matrix& m) {
  int best = 0;
  for (std::uint64_t s = 0; s < (1ull << m.size()); ++s)
    if (clique(m, s)) best = std::max(best, __builtin_popcountll(s));
  return best;
}

inline int vertex_cover(const Matrix& m) {
  int best = static_cast<int>(m.size());
  for (std::uint64_t s = 0; s < (1ull << m.size()); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < m.size() && ok; ++i)
      for (std::size_t j = i + 1; j < m.size() && ok; ++j)
        if (m[i][j] && !(s >> i & 1) && !(s >> j & 1)) ok = false;
    if (ok) best = std::min(best, __builtin_popcountll(s));
  }
  return best;
}

inline int domination(const Matrix& m) {
  int best = static_cast<int>(m.size());
  for (std::uint64_t s = 0; s < (1ull << m.size()); ++s) {
    bool ok = true;
    for (std::size_t v = 0; v < m.size() && ok; ++v) {
      bool dom = s >> v & 1;
      for (std::size_t u = 0; u < m.size() && !dom; ++u) dom = (s >> u & 1) && m[u][v];
      ok = dom;
    }
    if (ok) best = std::min(best, __builtin_popcountll(s));
  }
  return best;
}

inline std::vector<std::pair<int, int>> edge_list(const Matrix& m) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m[i][j]) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return out;
}

// Edge subsets; only for small edge counts.
inline int matching(const Matrix& m) {
  const auto e = edge_list(m);
  int best = 0;
  for (std::uint64_t s = 0; s < (1ull << e.size()); ++s) {
    std::vector<int> used(m.size(), 0);
    bool ok = true;
    for (std::size_t i = 0; i < e.size() && ok; ++i)
      if (s >> i & 1) ok = !used[e[i].first]++ && !used[e[i].second]++;
    if (ok) best = std::max(best, __builtin_popcountll(s));
  }
  return best;
}

inline std::optional<int> edge_cover(const Matrix& m) {
  const auto e = edge_list(m);
  std::optional<int> best;
  for (std::uint64_t s = 0; s < (1ull << e.size()); ++s) {
    std::vector<int> covered(m.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (s >> i & 1) covered[e[i].first] = covered[e[i].second] = 1;
    if (std::all_of(covered.begin(), covered.end(), [](int x) { return x; })) {
      const int k = __builtin_popcountll(s);
      if (!best || k < *best) best = k;
    }
  }
  return best;
}

// Smallest k admitting a proper k-colouring, by trying every assignment.
inline int chromatic(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  for (int k = 1; k <= std::max(1, n); ++k) {
    std::vector<int> col(n, 0);
    std::function<bool(int)> go = [&](int v) {
      if (v == n) return true;
      for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u) ok = !(m[u][v] && col[u] == c);
        if (ok) {
          col[v] = c;
          if (go(v + 1)) return true;
        }
      }
      return false;
    };
    if (go(0)) return k;
  }
  return n;
}

inline int edge_chromatic(const Matrix& m) {
  const auto e = edge_list(m);
  Matrix line(e.size(), std::vector<bool>(e.size(), false));
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j)
      if (i != j && (e[i].first == e[j].first || e[i].first == e[j].second || e[i].second == e[j].first ||
                     e[i].second == e[j].second))
        line[i][j] = true;
  return e.empty() ? 0 : chromatic(line);
}

// All-pairs BFS; nullopt when disconnected.
inline std::optional<int> diameter(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  int best = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> d(n, -1);
    std::queue<int> q;
    d[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int u = 0; u < n; ++u)
        if (m[v][u] && d[u] < 0) {
          d[u] = d[v] + 1;
          q.push(u);
        }
    }
    for (int x : d) {
      if (x < 0) return std::nullopt;
      best = std::max(best, x);
    }
  }
  return best;
}

// Every subset closed under the product, containing 1 (finite => subgroup).
inline int subgroup_count(const relcay::GroupTable& g) {
  const int n = g.order();
  int count = 0;
  for (std::uint64_t s = 1; s < (1ull << n); s += 2) {  // bit 0: identity
    bool closed = true;
    for (int x = 0; x < n && closed; ++x)
      for (int y = 0; y < n && closed; ++y)
        if ((s >> x & 1) && (s >> y & 1) && !(s >> g.mul(x, y) & 1)) closed = false;
    count += closed;
  }
  return count;
}

}  // namespace brute
