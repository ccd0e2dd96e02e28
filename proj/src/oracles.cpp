#include "relcay/oracles.hpp"

#include <algorithm>
#include <array>

#include "relcay/error.hpp"
#include "relcay/relcay.hpp"

namespace relcay {

namespace {

// Branch and bound with a greedy colouring bound (MCQ style).
class CliqueSearch {
 public:
  explicit CliqueSearch(const BitGraph& g) : g_(g) {}

  Mask run() {
    if (g_.n > 0) expand(0, 0, g_.vertices());
    return best_;
  }

 private:
  void expand(Mask current, int size, Mask cand) {
    std::array<int, 64> order{};
    std::array<int, 64> colour{};
    int k = 0;
    int c = 0;
    Mask uncoloured = cand;
    while (uncoloured) {
      ++c;
      Mask avail = uncoloured;
      while (avail) {
        const int v = lowest(avail);
        avail &= ~bit(v) & ~g_.rows[v];
        uncoloured &= ~bit(v);
        order[k] = v;
        colour[k] = c;
        ++k;
      }
    }
    for (int i = k - 1; i >= 0; --i) {
      if (size + colour[i] <= best_size_) return;
      const int v = order[i];
      const Mask next = cand & g_.rows[v];
      if (next == 0) {
        if (size + 1 > best_size_) {
          best_size_ = size + 1;
          best_ = current | bit(v);
        }
      } else {
        expand(current | bit(v), size + 1, next);
      }
      cand &= ~bit(v);
    }
  }

  const BitGraph& g_;
  Mask best_ = 0;
  int best_size_ = 0;
};

BitGraph complement(const BitGraph& g) {
  BitGraph out(g.n);
  for (int v = 0; v < g.n; ++v) out.rows[v] = ~g.rows[v] & g.vertices() & ~bit(v);
  return out;
}

class VertexCoverSearch {
 public:
  explicit VertexCoverSearch(const BitGraph& g) : g_(g), best_(g.n) {}

  int run() {
    search(g_.vertices(), 0);
    return best_;
  }

 private:
  void search(Mask alive, int cost) {
    if (cost >= best_) return;
    int v = -1, max_deg = 0, edges2 = 0;
    int leaf_neighbor = -1;
    for_each_bit(alive, [&](int u) {
      const int d = popcount(g_.rows[u] & alive);
      edges2 += d;
      if (d > max_deg) {
        max_deg = d;
        v = u;
      }
      if (d == 1 && leaf_neighbor < 0) leaf_neighbor = lowest(g_.rows[u] & alive);
    });
    if (max_deg == 0) {
      best_ = cost;
      return;
    }
    const int edges = edges2 / 2;
    if (cost + (edges + max_deg - 1) / max_deg >= best_) return;
    if (leaf_neighbor >= 0) {
      search(alive & ~bit(leaf_neighbor), cost + 1);
      return;
    }
    search(alive & ~bit(v), cost + 1);
    const Mask nb = g_.rows[v] & alive;
    search(alive & ~bit(v) & ~nb, cost + popcount(nb));
  }

  const BitGraph& g_;
  int best_;
};

class DominationSearch {
 public:
  explicit DominationSearch(const BitGraph& g) : g_(g), closed_(g.n) {
    for (int v = 0; v < g.n; ++v) closed_[v] = g.rows[v] | bit(v);
  }

  int run() {
    // Greedy upper bound, then search strictly below it.
    Mask dominated = 0;
    int greedy = 0;
    while (dominated != g_.vertices()) {
      int pick = 0, gain = -1;
      for (int w = 0; w < g_.n; ++w) {
        const int gw = popcount(closed_[w] & ~dominated);
        if (gw > gain) {
          gain = gw;
          pick = w;
        }
      }
      dominated |= closed_[pick];
      ++greedy;
    }
    best_ = greedy;
    search(0, 0);
    return best_;
  }

 private:
  void search(Mask dominated, int count) {
    if (count >= best_) return;
    const Mask undominated = g_.vertices() & ~dominated;
    if (undominated == 0) {
      best_ = count;
      return;
    }
    int max_cover = 0;
    for (int w = 0; w < g_.n; ++w) max_cover = std::max(max_cover, popcount(closed_[w] & undominated));
    const int need = popcount(undominated);
    if (count + (need + max_cover - 1) / max_cover >= best_) return;
    // Branch on the undominated vertex with the fewest possible dominators.
    int u = -1, fewest = 65;
    for_each_bit(undominated, [&](int x) {
      if (popcount(closed_[x]) < fewest) {
        fewest = popcount(closed_[x]);
        u = x;
      }
    });
    std::vector<int> options = bits_of(closed_[u]);
    std::stable_sort(options.begin(), options.end(), [&](int a, int b) {
      return popcount(closed_[a] & undominated) > popcount(closed_[b] & undominated);
    });
    for (int w : options) search(dominated | closed_[w], count + 1);
  }

  const BitGraph& g_;
  std::vector<Mask> closed_;
  int best_ = 0;
};

// Exact edge cover by branch and bound; deliberately not derived from the
// matching so the Gallai identity stays a genuine cross-check.
class EdgeCoverSearch {
 public:
  explicit EdgeCoverSearch(const BitGraph& g) : g_(g) {}

  int run() {
    Mask covered = 0;
    int greedy = 0;
    while (covered != g_.vertices()) {
      const int u = lowest(g_.vertices() & ~covered);
      const Mask fresh = g_.rows[u] & ~covered;
      const int w = fresh ? lowest(fresh) : lowest(g_.rows[u]);
      covered |= bit(u) | bit(w);
      ++greedy;
    }
    best_ = greedy;
    search(0, 0);
    return best_;
  }

 private:
  void search(Mask covered, int count) {
    if (count >= best_) return;
    const Mask uncovered = g_.vertices() & ~covered;
    if (uncovered == 0) {
      best_ = count;
      return;
    }
    if (count + std::max((popcount(uncovered) + 1) / 2, independent_lower_bound(uncovered)) >= best_) return;
    int u = -1, fewest = 65;
    for_each_bit(uncovered, [&](int x) {
      const int f = popcount(g_.rows[x] & uncovered);
      if (f < fewest) {
        fewest = f;
        u = x;
      }
    });
    for_each_bit(g_.rows[u] & uncovered, [&](int w) { search(covered | bit(u) | bit(w), count + 1); });
    // Covering u through an already covered neighbour: all such choices are equivalent.
    if (g_.rows[u] & covered) search(covered | bit(u), count + 1);
  }

  // An edge covers at most one vertex of an independent set, so a greedy
  // independent set inside the uncovered vertices bounds the remaining cost.
  int independent_lower_bound(Mask uncovered) const {
    int size = 0;
    Mask left = uncovered;
    while (left) {
      int pick = -1, fewest = 65;
      for_each_bit(left, [&](int x) {
        const int d = popcount(g_.rows[x] & left);
        if (d < fewest) {
          fewest = d;
          pick = x;
        }
      });
      ++size;
      left &= ~(bit(pick) | g_.rows[pick]);
    }
    return size;
  }

  const BitGraph& g_;
  int best_ = 0;
};

// Exact k-colourability by DSATUR-ordered backtracking.
class ColouringSearch {
 public:
  explicit ColouringSearch(const BitGraph& g) : g_(g) {}

  bool colourable(int k) {
    k_ = k;
    classes_.assign(k, 0);
    return assign(0, g_.vertices());
  }

  int greedy_dsatur() {
    std::vector<Mask> classes;
    Mask uncoloured = g_.vertices();
    while (uncoloured) {
      const int v = pick(uncoloured, classes);
      std::size_t c = 0;
      while (c < classes.size() && (classes[c] & g_.rows[v])) ++c;
      if (c == classes.size()) classes.push_back(0);
      classes[c] |= bit(v);
      uncoloured &= ~bit(v);
    }
    return static_cast<int>(classes.size());
  }

 private:
  int pick(Mask uncoloured, const std::vector<Mask>& classes) const {
    int best = -1, best_sat = -1, best_deg = -1;
    for_each_bit(uncoloured, [&](int v) {
      int sat = 0;
      for (Mask cls : classes) sat += (cls & g_.rows[v]) ? 1 : 0;
      const int deg = popcount(g_.rows[v] & uncoloured);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    });
    return best;
  }

  bool assign(int used, Mask uncoloured) {
    if (uncoloured == 0) return true;
    std::vector<Mask> active(classes_.begin(), classes_.begin() + used);
    const int v = pick(uncoloured, active);
    // New colours are interchangeable, so only the first unused one is tried.
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (classes_[c] & g_.rows[v]) continue;
      classes_[c] |= bit(v);
      if (assign(std::max(used, c + 1), uncoloured & ~bit(v))) return true;
      classes_[c] &= ~bit(v);
    }
    return false;
  }

  const BitGraph& g_;
  int k_ = 0;
  std::vector<Mask> classes_;
};

}  // namespace

Mask maximum_clique(const BitGraph& g) { return CliqueSearch(g).run(); }

int clique_number(const BitGraph& g) { return popcount(maximum_clique(g)); }

int independence_number(const BitGraph& g) { return clique_number(complement(g)); }

int min_vertex_cover(const BitGraph& g) { return VertexCoverSearch(g).run(); }

int domination_number(const BitGraph& g) {
  if (g.n == 0) return 0;
  return DominationSearch(g).run();
}

std::optional<int> edge_cover_number(const BitGraph& g) {
  for (int v = 0; v < g.n; ++v)
    if (g.rows[v] == 0) return std::nullopt;
  if (g.n == 0) return 0;
  return EdgeCoverSearch(g).run();
}

int chromatic_number(const BitGraph& g) {
  if (g.n == 0) return 0;
  ColouringSearch search(g);
  const int upper = search.greedy_dsatur();
  for (int k = std::max(1, clique_number(g)); k < upper; ++k)
    if (search.colourable(k)) return k;
  return upper;
}

std::optional<int> edge_chromatic_number(const BitGraph& g, int cutoff) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n; ++u)
    for_each_bit(g.rows[u] & ~low_bits(u + 1), [&](int v) { edges.emplace_back(u, v); });
  const int m = static_cast<int>(edges.size());
  if (m > std::min(cutoff, kMaxSupportedOrder)) return std::nullopt;
  BitGraph line(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const auto [a, b] = edges[i];
      const auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) line.add_edge(i, j);
    }
  return chromatic_number(line);
}

ComponentsAndDiameter diameter_components(const BitGraph& g) {
  ComponentsAndDiameter out;
  Mask unseen = g.vertices();
  while (unseen) {
    const int s = lowest(unseen);
    Mask comp = bit(s), frontier = bit(s);
    while (frontier) {
      Mask next = 0;
      for_each_bit(frontier, [&](int v) { next |= g.rows[v]; });
      frontier = next & ~comp;
      comp |= frontier;
    }
    out.components.push_back(comp);
    unseen &= ~comp;
  }
  if (out.components.size() == 1) {
    int diam = 0;
    for (int s = 0; s < g.n; ++s) {
      Mask seen = bit(s), frontier = bit(s);
      int ecc = 0;
      while (true) {
        Mask next = 0;
        for_each_bit(frontier, [&](int v) { next |= g.rows[v]; });
        frontier = next & ~seen;
        if (!frontier) break;
        seen |= frontier;
        ++ecc;
      }
      diam = std::max(diam, ecc);
    }
    out.diameter = diam;
  }
  return out;
}

StructureFlags structure_flags(const BitGraph& g) {
  StructureFlags f;
  const auto cd = diameter_components(g);
  const int comps = static_cast<int>(cd.components.size());
  f.connected = comps == 1;
  const int m = g.edge_count();
  f.forest = m == g.n - comps;
  f.tree = f.forest && f.connected;

  std::vector<int> side(g.n, -1);
  f.bipartite = true;
  for (Mask comp : cd.components) {
    const int s = lowest(comp);
    side[s] = 0;
    Mask frontier = bit(s), seen = bit(s);
    while (frontier && f.bipartite) {
      Mask next = 0;
      for_each_bit(frontier, [&](int v) {
        for_each_bit(g.rows[v], [&](int u) {
          if (side[u] == -1) {
            side[u] = 1 - side[v];
            next |= bit(u);
          } else if (side[u] == side[v]) {
            f.bipartite = false;
          }
        });
      });
      frontier = next & ~seen;
      seen |= next;
    }
  }

  f.triangle_free = true;
  f.square_subgraph_free = true;
  f.claw_free = true;
  for (int u = 0; u < g.n; ++u) {
    for_each_bit(g.rows[u], [&](int v) {
      if (g.rows[u] & g.rows[v]) f.triangle_free = false;
    });
    for (int v = u + 1; v < g.n; ++v)
      if (popcount(g.rows[u] & g.rows[v]) >= 2) f.square_subgraph_free = false;
    const Mask nb = g.rows[u];
    for_each_bit(nb, [&](int a) {
      for_each_bit(nb & ~g.rows[a] & ~low_bits(a + 1), [&](int b) {
        if (nb & ~g.rows[a] & ~g.rows[b] & ~bit(a) & ~bit(b)) f.claw_free = false;
      });
    });
  }

  std::vector<int> degrees;
  for (int v = 0; v < g.n; ++v) degrees.push_back(g.degree(v));
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  f.regular = degrees.size() <= 1;
  f.semi_regular = degrees.size() == 2;
  return f;
}

InvariantReport invariant_report(const BitGraph& g, const OracleLimits& limits) {
  if (g.n > kMaxSupportedOrder) throw CapacityError("oracles support at most 64 vertices");
  InvariantReport r;
  r.clique_number = clique_number(g);
  r.independence_number = independence_number(g);
  r.min_vertex_cover = min_vertex_cover(g);
  r.matching_number = matching_number(g);
  r.domination_number = domination_number(g);
  r.edge_cover_number = edge_cover_number(g);
  r.chromatic_number = chromatic_number(g);
  r.edge_chromatic_number = edge_chromatic_number(g, limits.edge_color_cutoff);
  const auto cd = diameter_components(g);
  r.diameter = cd.diameter;
  r.component_count = static_cast<int>(cd.components.size());
  r.max_degree = g.max_degree();
  return r;
}

ComponentsAndDiameter diameter_components(const RelCayGraph& g) { return diameter_components(g.bit_graph()); }

StructureFlags structure_flags(const RelCayGraph& g) { return structure_flags(g.bit_graph()); }

InvariantReport invariant_report(const RelCayGraph& g, const OracleLimits& limits) {
  return invariant_report(g.bit_graph(), limits);
}

}  // namespace relcay
