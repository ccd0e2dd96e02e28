#include "relcay/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "relcay/error.hpp"

namespace relcay {

namespace {

constexpr Mask kOne = Mask{1};  // {identity}

const GroupTable& group_of(const Instance& in) {
  if (!in.group) throw PreconditionError("instance has no group");
  return *in.group;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::Unevaluated: return "unevaluated";
  }
  return "?";
}

ValencyPrediction predict_valencies(const Instance& in) {
  const GroupTable& g = group_of(in);
  const int n = g.order();
  const int hs = popcount(in.h);
  ValencyPrediction out;
  out.index = n / hs;
  out.valency_bound = std::min(out.index, hs + 2);
  out.sqrt_bound = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n + 1)))) + 1;
  out.degrees.resize(n);
  for (Element x = 0; x < n; ++x) {
    out.degrees[x] = contains(in.h, x) ? popcount(in.c) : popcount(g.left_translate(g.inv(x), in.h) & in.c);
    out.valencies.insert(out.degrees[x]);
  }
  out.predicted_regular = out.index == 2 && (in.h & in.c) == 0;

  std::optional<int> common;
  bool same = true;
  Mask seen = in.h;
  for (Element x = 0; x < n; ++x) {
    if (contains(seen, x)) continue;
    const Mask coset = g.left_translate(x, in.h);
    seen |= coset;
    const int k = popcount(coset & in.c);
    if (common && *common != k) same = false;
    common = k;
  }
  out.semi_regular_same_count = same;
  for (Element x = 0; x < n; ++x) {
    if (contains(in.h, x)) continue;
    if (is_subset(in.c, g.right_translate(in.h, x))) {
      out.semi_regular_right_coset = true;
      break;
    }
  }
  out.predicted_semi_regular = out.semi_regular_same_count || out.semi_regular_right_coset;

  out.full_degree_coset = g.all();
  for_each_bit(in.c, [&](int c) { out.full_degree_coset &= g.right_translate(in.h, c); });
  out.isolated_forced = g.all() & ~g.product(in.h, in.c | kOne);
  return out;
}

ConnectivityPrediction predict_connectivity(const Instance& in) {
  const GroupTable& g = group_of(in);
  const Mask s = in.h & in.c;
  const Mask outside = in.c & ~in.h;
  ConnectivityPrediction out;
  out.hc_star_covers = g.product(in.h, in.c | kOne) == g.all();
  out.gen_hc = g.closure(s);
  out.h_c_minus_h_sq = in.h & g.product(outside, outside);
  out.gen_h_c_minus_h_sq = g.closure(out.h_c_minus_h_sq);
  for (Element x = 0; x < g.order(); ++x) {
    if (contains(in.h, x)) continue;
    const Mask meet = in.h & g.left_translate(x, in.c);
    if (g.product(g.product(meet, out.gen_hc), out.gen_h_c_minus_h_sq) == in.h) out.witnesses |= bit(x);
  }
  out.predicted_connected = out.witnesses != 0 && out.hc_star_covers;
  out.disjoint_case = s == 0;
  out.disjoint_criterion = out.hc_star_covers && g.closure(in.h & g.product(in.c, in.c)) == in.h;
  out.h_is_aba = aba_decomposition(g, in.h).is_aba;
  out.aba_criterion = out.hc_star_covers && (out.gen_hc == in.h || out.gen_h_c_minus_h_sq == in.h);
  out.width_hc = width_of(g, s);
  out.width_sq = width_of(g, out.h_c_minus_h_sq);

  const double hs = popcount(in.h);
  const bool conn = out.predicted_connected;
  DiameterBound w{"width", 0, false};
  if (out.width_hc && out.width_sq) {
    w.value = 2 + *out.width_hc + 2 * *out.width_sq;
    w.applicable = conn;
  }
  out.diameter_bounds.push_back(w);
  out.diameter_bounds.push_back(
      {"half_sum", 2 + popcount(out.gen_hc) / 2.0 + popcount(out.gen_h_c_minus_h_sq), conn});
  out.diameter_bounds.push_back({"three_halves", 1.5 * hs + 2, conn});
  out.diameter_bounds.push_back({"h_plus_2", hs + 2, conn && s == 0});
  out.diameter_bounds.push_back({"half_h_plus_2", hs / 2 + 2, conn && out.h_c_minus_h_sq == kOne});
  return out;
}

CliquePrediction predict_clique(const Instance& in) {
  const GroupTable& g = group_of(in);
  const Mask s = in.h & in.c;
  const Mask outside = in.c & ~in.h;
  CliquePrediction out;
  out.clique_upper = popcount(s) + 2;
  if (g.is_subgroup(s | kOne)) {
    for_each_bit(outside, [&](int c) {
      if (is_subset(s, g.left_translate(c, in.c))) out.clique_upper_is_equality = true;
    });
  }
  out.psi_hc = psi_of(g, s);
  out.clique_lower_psi = out.psi_hc;
  for (Mask k : g.subgroup_masks()) {
    if (popcount(k) != out.psi_hc || !is_subset(k, s | kOne)) continue;
    for_each_bit(outside, [&](int c) {
      if (is_subset(k, g.left_translate(c, in.c))) out.clique_lower_psi_plus = true;
    });
  }
  if (out.clique_lower_psi_plus) out.clique_lower_psi = out.psi_hc + 1;
  out.cube_closed = in.c != 0 && is_subset(g.product(g.product(in.c, in.c), in.c), in.c);
  if (out.cube_closed) out.c_cubed_case = CubeClosedCase{g.product(in.c, in.c), lowest(in.c)};
  return out;
}

void verify_cube_decomposition(const GroupTable& group, Mask c, const CubeClosedCase& cc) {
  if (!group.is_subgroup(cc.d)) throw InternalConsistencyError("C^2 is not a subgroup: " + group.format(cc.d));
  if (group.right_translate(cc.d, cc.c) != c)
    throw InternalConsistencyError("C differs from C^2 " + group.name(cc.c));
  if (!contains(cc.d, group.mul(cc.c, cc.c)))
    throw InternalConsistencyError(group.name(cc.c) + "^2 is not in C^2");
  Mask conj = 0;
  for_each_bit(cc.d, [&](int d) { conj |= bit(group.mul(group.mul(group.inv(cc.c), d), cc.c)); });
  if (conj != cc.d) throw InternalConsistencyError("C^2 is not normalised by " + group.name(cc.c));
}

AlphaBetaPrediction predict_alpha_beta(const Instance& in) {
  const GroupTable& g = group_of(in);
  const int hs = popcount(in.h);
  const int rest = g.order() - hs;
  return {rest, hs, hs, rest, (in.c & ~in.h) != 0};
}

namespace {

// Condition (ii): H cyclic with a generator h such that every partition of H
// into three nonempty blocks X_i with X_i h n X_i empty has some g outside H
// with C n gX_i nonempty for all i. Blocks are labelled; vacuous when no
// such partition exists.
bool chromatic_condition_ii(const GroupTable& g, const Instance& in) {
  const int k = popcount(in.h);
  std::vector<Mask> hits;  // hits[g] = {x in H : gx in C} for g outside H
  for (Element x = 0; x < g.order(); ++x)
    if (!contains(in.h, x)) hits.push_back(in.h & g.left_translate(g.inv(x), in.c));

  for (Element gen : bits_of(in.h)) {
    if (g.closure(bit(gen)) != in.h) continue;
    std::vector<Element> cycle{GroupTable::identity()};
    while (static_cast<int>(cycle.size()) < k) cycle.push_back(g.mul(cycle.back(), gen));

    std::vector<int> colour(k, -1);
    bool all_hit = true;
    std::function<void(int)> dfs = [&](int pos) {
      if (!all_hit) return;
      if (pos == k) {
        if (colour[k - 1] == colour[0]) return;  // wrap-around edge back to 1
        Mask part[3] = {0, 0, 0};
        for (int i = 0; i < k; ++i) part[colour[i]] |= bit(cycle[i]);
        if (!part[0] || !part[1] || !part[2]) return;  // partitions have nonempty blocks
        bool hit = false;
        for (Mask m : hits)
          if ((m & part[0]) && (m & part[1]) && (m & part[2])) {
            hit = true;
            break;
          }
        if (!hit) all_hit = false;
        return;
      }
      for (int col = 0; col < 3; ++col) {
        if (pos > 0 && colour[pos - 1] == col) continue;
        colour[pos] = col;
        dfs(pos + 1);
      }
    };
    dfs(0);
    if (all_hit) return true;
  }
  return false;
}

}  // namespace

ChromaticPrediction predict_chromatic(const Instance& in, const TheoremLimits& limits) {
  const GroupTable& g = group_of(in);
  const Mask s = in.h & in.c;
  ChromaticPrediction out;
  out.chromatic_upper = popcount(s) + 2;
  if (is_subset(in.h & ~kOne, in.c)) {
    for (Element x = 0; x < g.order(); ++x)
      if (!contains(in.h, x) && is_subset(g.left_translate(x, in.h), in.c)) {
        out.equality_i = true;
        break;
      }
  }
  if (popcount(in.h) > limits.chromatic_ii_cap)
    out.equality_ii = Tri::Unevaluated;
  else
    out.equality_ii = chromatic_condition_ii(g, in) ? Tri::True : Tri::False;
  out.predicted_equality = out.equality_i ? Tri::True : out.equality_ii;
  return out;
}

ForbiddenKind parse_forbidden_kind(const std::string& name) {
  static const std::map<std::string, ForbiddenKind> names{
      {"claw_free", ForbiddenKind::ClawFree},
      {"forest", ForbiddenKind::Forest},
      {"tree", ForbiddenKind::Tree},
      {"triangle_free", ForbiddenKind::TriangleFree},
      {"square_free_as_printed", ForbiddenKind::SquareFreeAsPrinted},
      {"bipartite_sufficient", ForbiddenKind::BipartiteSufficient},
  };
  const auto it = names.find(name);
  if (it == names.end()) throw UnknownNameError("unknown forbidden-subgraph kind: " + name);
  return it->second;
}

std::string to_string(ForbiddenKind kind) {
  switch (kind) {
    case ForbiddenKind::ClawFree: return "claw_free";
    case ForbiddenKind::Forest: return "forest";
    case ForbiddenKind::Tree: return "tree";
    case ForbiddenKind::TriangleFree: return "triangle_free";
    case ForbiddenKind::SquareFreeAsPrinted: return "square_free_as_printed";
    case ForbiddenKind::BipartiteSufficient: return "bipartite_sufficient";
  }
  return "?";
}

namespace {

ForbiddenPrediction claw_free(const GroupTable& g, const Instance& in) {
  const Mask s = in.h & in.c;
  const Mask outside = in.c & ~in.h;
  const bool c1 = popcount(in.c) <= 2;
  bool c2 = false;
  for (Element a : bits_of(outside))
    for (Element b : bits_of(outside)) {
      if (a == b) continue;
      const Element ab = g.mul(a, g.inv(b));
      if (!contains(in.h, ab)) continue;
      if (in.c == (bit(a) | bit(b) | bit(ab) | bit(g.mul(b, g.inv(a))))) c2 = true;
    }
  bool c3 = false;
  if (popcount(outside) == 1) {
    const Element c = lowest(outside);
    c3 = g.mul(c, c) == GroupTable::identity() && g.is_subgroup(s | kOne);
  }
  bool c4 = false;
  if (is_subset(in.c, in.h)) {
    const Mask x = in.h & ~in.c & ~kOne;
    c4 = !contains(g.product(g.product(x, x), x), GroupTable::identity());
  }
  ForbiddenPrediction out;
  out.predicted = c1 || c2 || c3 || c4;
  out.detail = "i=" + yes_no(c1) + " ii=" + yes_no(c2) + " iii=" + yes_no(c3) + " iv=" + yes_no(c4);
  return out;
}

ForbiddenPrediction forest(const GroupTable& g, const Instance& in) {
  const Mask s = in.h & in.c;
  const bool a = (in.h & g.product(in.c, in.c)) == kOne;
  const bool b = s == 0 || (popcount(s) == 1 && g.mul(lowest(s), lowest(s)) == GroupTable::identity());
  ForbiddenPrediction out;
  out.predicted = a && b;
  out.applicable = in.c != 0;
  out.detail = "HnC^2={1}:" + yes_no(a) + " HnC:" + yes_no(b);
  return out;
}

ForbiddenPrediction tree(const GroupTable& g, const Instance& in) {
  const bool trivial = in.h == kOne && in.c == (g.all() & ~kOne);
  bool two = false;
  if (popcount(in.h) == 2) {
    const Element a = lowest(in.h & ~kOne);
    const Mask d = g.right_translate(in.c, g.inv(a));
    two = g.product(d, in.h) == g.all() && popcount(d) * 2 == g.order() && (d & in.h) == kOne &&
          g.right_translate(d, a) == in.c;
  }
  ForbiddenPrediction out;
  out.predicted = trivial || two;
  out.detail = "trivial_h=" + yes_no(trivial) + " order_two=" + yes_no(two);
  return out;
}

ForbiddenPrediction triangle_free(const GroupTable& g, const Instance& in) {
  const Mask s = in.h & in.c;
  ForbiddenPrediction out;
  out.predicted = (s & g.product(in.c, in.c)) == 0;
  out.detail = "HnC n C^2 empty:" + yes_no(out.predicted);
  return out;
}

ForbiddenPrediction square_free(const GroupTable& g, const Instance& in) {
  const Mask s = in.h & in.c;
  const Mask outside = in.c & ~in.h;
  bool c1 = true;
  for (Element x : bits_of(in.h & ~kOne)) {
    int reps = 0;
    for_each_bit(s, [&](int a) {
      if (contains(s, g.mul(g.inv(a), x))) ++reps;
    });
    if (reps >= 2) c1 = false;
  }
  const bool c2 = is_subset(g.product(s, s) & g.product(outside, outside), kOne);
  int lhs = 0;
  for_each_bit(outside, [&](int c) { lhs += popcount(g.left_translate(g.inv(c), in.h) & in.c); });
  const int rhs = popcount(in.h & g.product(outside, outside)) + popcount(outside);
  const bool c3 = lhs == rhs;
  ForbiddenPrediction out;
  out.predicted = c1 && c2 && c3;
  out.audited = true;
  out.detail = "gprime=" + yes_no(c1) + " squares=" + yes_no(c2) + " degree_sum=" + yes_no(c3) + " (" +
               std::to_string(lhs) + " vs " + std::to_string(rhs) + ")";
  return out;
}

}  // namespace

ForbiddenPrediction predict_forbidden(const Instance& in, ForbiddenKind kind) {
  const GroupTable& g = group_of(in);
  switch (kind) {
    case ForbiddenKind::ClawFree: return claw_free(g, in);
    case ForbiddenKind::Forest: return forest(g, in);
    case ForbiddenKind::Tree: return tree(g, in);
    case ForbiddenKind::TriangleFree: return triangle_free(g, in);
    case ForbiddenKind::SquareFreeAsPrinted: return square_free(g, in);
    case ForbiddenKind::BipartiteSufficient: {
      ForbiddenPrediction out;
      out.applicable = (in.h & in.c) == 0;
      out.predicted = true;
      out.detail = "HnC empty:" + yes_no(out.applicable);
      return out;
    }
  }
  throw UnknownNameError("unknown forbidden-subgraph kind");
}

PredictionSet predict_all(const Instance& in, const TheoremLimits& limits) {
  PredictionSet out;
  out.valency = predict_valencies(in);
  out.connectivity = predict_connectivity(in);
  out.clique = predict_clique(in);
  out.alpha_beta = predict_alpha_beta(in);
  out.chromatic = predict_chromatic(in, limits);
  for (ForbiddenKind k : {ForbiddenKind::ClawFree, ForbiddenKind::Forest, ForbiddenKind::Tree,
                          ForbiddenKind::TriangleFree, ForbiddenKind::SquareFreeAsPrinted,
                          ForbiddenKind::BipartiteSufficient})
    out.forbidden[k] = predict_forbidden(in, k);
  return out;
}

EdgeColoring build_class_one_coloring(const RelCayGraph& graph) { return build_class_one_coloring(Instance::of(graph)); }

EdgeColoring build_class_one_coloring(const Instance& in) {
  const GroupTable& g = group_of(in);
  const Mask s = in.h & in.c;
  const Mask outside = in.c & ~in.h;
  if (outside == 0) throw PreconditionError("class-one colouring needs C outside H");
  EdgeColoring out;
  out.fixed_c = lowest(outside);

  // Gamma' on compact indices.
  const std::vector<Element> hv = bits_of(in.h);
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < hv.size(); ++i) index[hv[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> inner;
  for (Element u : hv)
    for_each_bit(s, [&](int x) {
      const Element v = g.mul(u, x);
      if (u < v) inner.emplace_back(index[u], index[v]);
    });
  const std::vector<int> mg = misra_gries_edge_coloring(static_cast<int>(hv.size()), inner);
  std::vector<Element> labels{GroupTable::identity()};
  for (Element x : bits_of(s)) labels.push_back(x);

  std::vector<Mask> used(g.order(), 0);
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (mg[i] >= static_cast<int>(labels.size()))
      throw InternalConsistencyError("Misra-Gries used more than |HnC|+1 colours");
    const Element u = hv[inner[i].first], v = hv[inner[i].second];
    const Element label = labels[mg[i]];
    out.edges.push_back({u, v, label});
    used[u] |= bit(label);
    used[v] |= bit(label);
  }
  for (Element h : hv) {
    for_each_bit(outside, [&](int d) {
      const Element x = g.mul(h, d);
      Element label = d;
      if (d == out.fixed_c) {
        const Mask missing = (s | kOne) & ~used[h];
        if (!missing) throw InternalConsistencyError("no free label at " + g.name(h));
        label = lowest(missing);
      }
      out.edges.push_back({std::min(h, x), std::max(h, x), label});
    });
  }
  std::sort(out.edges.begin(), out.edges.end(),
            [](const ColoredEdge& a, const ColoredEdge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });

  std::vector<Mask> seen(g.order(), 0);
  for (const ColoredEdge& e : out.edges) {
    if (contains(seen[e.u], e.color) || contains(seen[e.v], e.color))
      throw InternalConsistencyError("colour " + g.name(e.color) + " repeats at an edge {" + g.name(e.u) + "," +
                                     g.name(e.v) + "}");
    seen[e.u] |= bit(e.color);
    seen[e.v] |= bit(e.color);
    out.colors_used |= bit(e.color);
  }
  return out;
}

}  // namespace relcay
