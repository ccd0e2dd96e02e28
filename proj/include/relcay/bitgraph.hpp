#pragma once

#include <vector>

#include "relcay/bits.hpp"

namespace relcay {

/// A simple undirected graph on at most 64 vertices, one adjacency word per
/// vertex. Oracles work on this type only, so they never see group structure.
struct BitGraph {
  int n = 0;
  std::vector<Mask> rows;

  BitGraph() = default;
  explicit BitGraph(int vertices) : n(vertices), rows(vertices, 0) {}

  Mask vertices() const { return low_bits(n); }
  bool adjacent(int u, int v) const { return contains(rows[u], v); }
  int degree(int v) const { return popcount(rows[v]); }
  void add_edge(int u, int v) {
    rows[u] |= bit(v);
    rows[v] |= bit(u);
  }
  int edge_count() const {
    int twice = 0;
    for (Mask r : rows) twice += popcount(r);
    return twice / 2;
  }
  int max_degree() const {
    int d = 0;
    for (Mask r : rows) d = popcount(r) > d ? popcount(r) : d;
    return d;
  }
  /// Subgraph induced on `keep`, relabelled 0..|keep|-1 in index order.
  BitGraph induced(Mask keep) const {
    std::vector<int> index(n, -1);
    int k = 0;
    for_each_bit(keep, [&](int v) { index[v] = k++; });
    BitGraph out(k);
    for_each_bit(keep, [&](int v) {
      for_each_bit(rows[v] & keep, [&](int u) { out.rows[index[v]] |= bit(index[u]); });
    });
    return out;
  }
};

}  // namespace relcay
