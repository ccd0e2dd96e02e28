#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "relcay/oracles.hpp"
#include "relcay/relcay.hpp"

using namespace relcay;

namespace {

Mask elems(const GroupTable& g, const char* list) {
  return ElementSet::from_members(g, parse_elements(g, list)).mask();
}

RelCayGraph make(const GroupTable& g, Mask h, Mask c) {
  return build_relcay(g, Subgroup(ElementSet(g, h)), ConnectionSet(ElementSet(g, c)));
}

BitGraph from_matrix(const brute::Matrix& m) {
  BitGraph g(static_cast<int>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m[i][j]) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

brute::Matrix to_matrix(const BitGraph& g) {
  brute::Matrix m(g.n, std::vector<bool>(g.n, false));
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) m[i][j] = contains(g.rows[i], j);
  return m;
}

bool brute_triangle(const brute::Matrix& m) {
  const int n = static_cast<int>(m.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (m[a][b] && m[b][c] && m[a][c]) return true;
  return false;
}

bool brute_square(const brute::Matrix& m) {
  const int n = static_cast<int>(m.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          if (a != c && b != d && a != b && a != d && b != c && c != d && m[a][b] && m[b][c] && m[c][d] && m[d][a])
            return true;
  return false;
}

bool brute_claw(const brute::Matrix& m) {
  const int n = static_cast<int>(m.size());
  for (int v = 0; v < n; ++v)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
          if (m[v][a] && m[v][b] && m[v][c] && !m[a][b] && !m[a][c] && !m[b][c]) return true;
  return false;
}

bool brute_bipartite(const brute::Matrix& m) {
  const std::size_t n = m.size();
  for (std::uint64_t s = 0; s < (1ull << n); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if (m[i][j] && ((s >> i & 1) == (s >> j & 1))) ok = false;
    if (ok) return true;
  }
  return false;
}

int brute_components(const brute::Matrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> label(n);
  for (int i = 0; i < n; ++i) label[i] = i;
  for (int round = 0; round < n; ++round)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (m[i][j]) label[i] = label[j] = std::min(label[i], label[j]);
  std::set<int> distinct(label.begin(), label.end());
  return static_cast<int>(distinct.size());
}

void compare_with_brute(const BitGraph& g, bool small_edges) {
  const brute::Matrix m = to_matrix(g);
  const InvariantReport r = invariant_report(g);
  CHECK(r.clique_number == brute::omega(m));
  CHECK(r.independence_number == brute::alpha(m));
  CHECK(r.min_vertex_cover == brute::vertex_cover(m));
  CHECK(r.domination_number == brute::domination(m));
  CHECK(r.chromatic_number == brute::chromatic(m));
  CHECK(r.diameter == brute::diameter(m));
  CHECK(r.component_count == brute_components(m));
  if (small_edges) {
    CHECK(r.matching_number == brute::matching(m));
    CHECK(r.edge_cover_number == brute::edge_cover(m));
    REQUIRE(r.edge_chromatic_number.has_value());
    CHECK(*r.edge_chromatic_number == brute::edge_chromatic(m));
  }
  const StructureFlags f = structure_flags(g);
  CHECK(f.triangle_free == !brute_triangle(m));
  CHECK(f.square_subgraph_free == !brute_square(m));
  CHECK(f.claw_free == !brute_claw(m));
  CHECK(f.bipartite == brute_bipartite(m));
  CHECK(f.connected == brute::diameter(m).has_value());
  CHECK(f.forest == (brute::edges(m) == g.n - brute_components(m)));
  // Implications between flags.
  if (f.tree) CHECK((f.forest && f.connected));
  if (f.forest) CHECK((f.square_subgraph_free && f.triangle_free));
  if (f.bipartite) CHECK(f.triangle_free);
  CHECK(r.clique_number <= r.chromatic_number);
  if (r.edge_chromatic_number) {
    CHECK(*r.edge_chromatic_number >= r.max_degree);
    CHECK(*r.edge_chromatic_number <= r.max_degree + 1);
  }
}

}  // namespace

TEST_CASE("invariants on the 4-cycle instance") {
  const GroupTable c4 = make_group("C4");
  const RelCayGraph g = make(c4, elems(c4, "1,a2"), elems(c4, "a,a3"));
  const InvariantReport r = invariant_report(g);
  const brute::Matrix m = to_matrix(g.bit_graph());
  CHECK(r.clique_number == 2);
  CHECK(r.independence_number == 2);
  CHECK(r.matching_number == 2);
  CHECK(r.domination_number == 2);
  CHECK(r.edge_cover_number == 2);
  CHECK(r.chromatic_number == 2);
  CHECK(r.edge_chromatic_number == 2);
  CHECK(r.diameter == 2);
  CHECK(brute::domination(m) == 2);
  const StructureFlags f = structure_flags(g);
  CHECK(f.connected);
  CHECK(f.bipartite);
  CHECK_FALSE(f.forest);
  CHECK_FALSE(f.square_subgraph_free);
  CHECK(f.triangle_free);
  CHECK(f.claw_free);
  CHECK(f.regular);
}

TEST_CASE("invariants on the D5 corona") {
  const GroupTable d5 = make_group("D5");
  const RelCayGraph g = make(d5, d5.closure(elems(d5, "a")), elems(d5, "a,a4,b"));
  const InvariantReport r = invariant_report(g);
  CHECK(r.independence_number == 5);
  CHECK(r.matching_number == 5);
  CHECK(r.domination_number == 5);
  CHECK(r.edge_cover_number == 5);
  CHECK(r.chromatic_number == 3);
  CHECK(r.edge_chromatic_number == 3);
  CHECK(r.diameter == 4);
  CHECK(r.clique_number == 2);
  const StructureFlags f = structure_flags(g);
  CHECK(f.connected);
  CHECK_FALSE(f.bipartite);
  CHECK(f.triangle_free);
  CHECK(f.square_subgraph_free);
  CHECK_FALSE(f.claw_free);
  CHECK(f.semi_regular);
  compare_with_brute(g.bit_graph(), true);
}

TEST_CASE("edgeless graph") {
  const BitGraph g(7);
  const InvariantReport r = invariant_report(g);
  CHECK(r.independence_number == 7);
  CHECK(r.domination_number == 7);
  CHECK(r.matching_number == 0);
  CHECK_FALSE(r.edge_cover_number.has_value());
  CHECK(r.chromatic_number == 1);
  CHECK_FALSE(r.diameter.has_value());
  CHECK(r.component_count == 7);
}

TEST_CASE("S3 tree instance") {
  const GroupTable s3 = make_group("S3");
  const RelCayGraph g = make(s3, elems(s3, "1,(12)"), elems(s3, "(12),(13),(23)"));
  const StructureFlags f = structure_flags(g);
  CHECK(f.tree);
  CHECK(g.bit_graph().edge_count() == 5);
}

TEST_CASE("components of a disconnected instance") {
  const GroupTable c4 = make_group("C4");
  const RelCayGraph g = make(c4, elems(c4, "1,a2"), elems(c4, "a2"));
  const ComponentsAndDiameter cd = diameter_components(g);
  REQUIRE(cd.components.size() == 3);
  CHECK(cd.components[0] == elems(c4, "1,a2"));
  CHECK(cd.components[1] == elems(c4, "a"));
  CHECK(cd.components[2] == elems(c4, "a3"));
  CHECK_FALSE(cd.diameter.has_value());
}

TEST_CASE("edge colouring cutoff") {
  BitGraph k5(5);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) k5.add_edge(i, j);
  CHECK(edge_chromatic_number(k5, 40) == 5);  // odd complete graph is class two
  CHECK_FALSE(edge_chromatic_number(k5, 9).has_value());
}

TEST_CASE("oracles agree with subset scans on every small instance") {
  for (const char* spec : {"C4", "C5", "S3", "C6", "D4", "Q8", "C2xC4", "C2xC2xC2"}) {
    CAPTURE(spec);
    const GroupTable g = make_group(spec);
    const ConnectionSetEnumerator en(g);
    for (Mask h : g.subgroup_masks()) {
      if (h == g.all()) continue;
      for (std::uint64_t i = 0; i < en.count(); ++i) {
        const RelCayGraph graph = make(g, h, en.mask_at(i));
        const BitGraph bg = graph.bit_graph();
        CAPTURE(g.format(h));
        CAPTURE(g.format(en.mask_at(i)));
        compare_with_brute(bg, bg.edge_count() <= 16);
      }
    }
  }
}

TEST_CASE("oracles agree with subset scans on random graphs") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const double p = (rng() % 100) / 100.0;
    brute::Matrix m(n, std::vector<bool>(n, false));
    int e = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((rng() % 1000) / 1000.0 < p) {
          m[i][j] = m[j][i] = true;
          ++e;
        }
    compare_with_brute(from_matrix(m), e <= 16);
  }
}

TEST_CASE("relabelling by inversion leaves the report unchanged") {
  for (const char* spec : {"C6", "C2xC4", "C8"}) {
    const GroupTable g = make_group(spec);
    const ConnectionSetEnumerator en(g);
    for (Mask h : g.subgroup_masks()) {
      if (h == g.all()) continue;
      for (std::uint64_t i = 0; i < en.count(); i += 3) {
        const BitGraph bg = make(g, h, en.mask_at(i)).bit_graph();
        BitGraph relabelled(g.order());
        for (int x = 0; x < g.order(); ++x)
          for_each_bit(bg.rows[x], [&](int y) {
            if (x < y) relabelled.add_edge(g.inv(x), g.inv(y));
          });
        const InvariantReport a = invariant_report(bg), b = invariant_report(relabelled);
        CHECK(a.clique_number == b.clique_number);
        CHECK(a.independence_number == b.independence_number);
        CHECK(a.matching_number == b.matching_number);
        CHECK(a.domination_number == b.domination_number);
        CHECK(a.edge_cover_number == b.edge_cover_number);
        CHECK(a.chromatic_number == b.chromatic_number);
        CHECK(a.edge_chromatic_number == b.edge_chromatic_number);
        CHECK(a.diameter == b.diameter);
        CHECK(a.component_count == b.component_count);
      }
    }
  }
}
