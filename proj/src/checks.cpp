// Check registry and per-instance evaluation. Each check compares a value
// computed by the theorems module with one computed by the oracles module.

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "relcay/audit.hpp"
#include "relcay/error.hpp"

namespace relcay {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Agree: return "agree";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::NotApplicable: return "not-applicable";
    case Verdict::Unevaluated: return "unevaluated";
  }
  return "?";
}

namespace {

constexpr Mask kOne = Mask{1};

template <class T, class F>
const T& lazy(std::optional<T>& slot, F&& make) {
  if (!slot) slot.emplace(make());
  return *slot;
}

std::string str(bool b) { return b ? "true" : "false"; }
std::string str(int v) { return std::to_string(v); }

std::string str(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

std::string str(const std::set<int>& xs) {
  std::string out = "{";
  for (int x : xs) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

}  // namespace

struct InstanceContext::Cache {
  const GroupTable& g;
  Mask h, c;
  AuditLimits limits;

  std::optional<RelCayGraph> graph_;
  std::optional<BitGraph> bits_;
  std::optional<ValencyPrediction> valency_;
  std::optional<ConnectivityPrediction> connectivity_;
  std::optional<CliquePrediction> clique_;
  std::optional<ChromaticPrediction> chromatic_;
  std::map<ForbiddenKind, ForbiddenPrediction> forbidden_;
  std::optional<StructureFlags> flags_;
  std::optional<ComponentsAndDiameter> diam_;
  std::optional<int> omega_, alpha_, cover_, matching_, domination_, chi_;
  std::optional<std::optional<int>> edge_cover_, chi_edge_;

  Cache(const GroupTable& group, Mask hm, Mask cm, const AuditLimits& l) : g(group), h(hm), c(cm), limits(l) {}

  Instance instance() const { return {&g, h, c}; }
  Mask s() const { return h & c; }
  Mask outside() const { return c & ~h; }

  const RelCayGraph& graph() {
    return lazy(graph_, [&] {
      return build_relcay(g, Subgroup(ElementSet(g, h)), ConnectionSet(ElementSet(g, c)));
    });
  }
  const BitGraph& bits() { return lazy(bits_, [&] { return graph().bit_graph(); }); }
  const ValencyPrediction& valency() { return lazy(valency_, [&] { return predict_valencies(instance()); }); }
  const ConnectivityPrediction& connectivity() {
    return lazy(connectivity_, [&] { return predict_connectivity(instance()); });
  }
  const CliquePrediction& clique() { return lazy(clique_, [&] { return predict_clique(instance()); }); }
  const ChromaticPrediction& chromatic() {
    return lazy(chromatic_, [&] { return predict_chromatic(instance(), TheoremLimits{limits.chromatic_ii_cap}); });
  }
  const ForbiddenPrediction& forbidden(ForbiddenKind k) {
    auto it = forbidden_.find(k);
    if (it == forbidden_.end()) it = forbidden_.emplace(k, predict_forbidden(instance(), k)).first;
    return it->second;
  }
  const StructureFlags& flags() { return lazy(flags_, [&] { return structure_flags(bits()); }); }
  const ComponentsAndDiameter& diam() { return lazy(diam_, [&] { return diameter_components(bits()); }); }
  int omega() { return lazy(omega_, [&] { return clique_number(bits()); }); }
  int alpha() { return lazy(alpha_, [&] { return independence_number(bits()); }); }
  int cover() { return lazy(cover_, [&] { return min_vertex_cover(bits()); }); }
  int matching() { return lazy(matching_, [&] { return matching_number(bits()); }); }
  int domination() { return lazy(domination_, [&] { return domination_number(bits()); }); }
  int chi() { return lazy(chi_, [&] { return chromatic_number(bits()); }); }
  std::optional<int> edge_cover() { return lazy(edge_cover_, [&] { return edge_cover_number(bits()); }); }
  std::optional<int> chi_edge() {
    return lazy(chi_edge_, [&] { return edge_chromatic_number(bits(), limits.edge_color_cutoff); });
  }
  bool connected() { return diam().components.size() == 1; }
  Mask isolated() {
    Mask out = 0;
    for (int v = 0; v < g.order(); ++v)
      if (!bits().rows[v]) out |= bit(v);
    return out;
  }
};

namespace {

using Cache = InstanceContext::Cache;
using Evaluator = std::function<void(Cache&, AuditRecord&)>;

struct CheckDef {
  CheckInfo info;
  Evaluator eval;
};

void compare(AuditRecord& r, const std::string& predicted, const std::string& observed) {
  r.predicted = predicted;
  r.observed = observed;
  r.verdict = predicted == observed ? Verdict::Agree : Verdict::Mismatch;
}

void holds(AuditRecord& r, bool ok, const std::string& predicted, const std::string& observed) {
  r.predicted = predicted;
  r.observed = observed;
  r.verdict = ok ? Verdict::Agree : Verdict::Mismatch;
}

bool not_applicable(AuditRecord& r, bool applicable, const std::string& why) {
  if (applicable) return false;
  r.verdict = Verdict::NotApplicable;
  r.witness = why;
  return true;
}

void forbidden_check(Cache& x, AuditRecord& r, ForbiddenKind kind, bool observed) {
  const ForbiddenPrediction& p = x.forbidden(kind);
  if (not_applicable(r, p.applicable, p.detail)) return;
  compare(r, str(p.predicted), str(observed));
  r.witness = p.detail;
}

void diameter_check(Cache& x, AuditRecord& r, const std::string& bound) {
  const auto& bounds = x.connectivity().diameter_bounds;
  const auto it = std::find_if(bounds.begin(), bounds.end(), [&](const DiameterBound& b) { return b.name == bound; });
  if (not_applicable(r, it != bounds.end() && it->applicable, "bound hypothesis not met")) return;
  const auto& d = x.diam().diameter;
  if (!d) {
    holds(r, false, "<= " + str(it->value), "disconnected");
    return;
  }
  holds(r, *d <= it->value + 1e-9, "<= " + str(it->value), str(*d));
}

std::vector<CheckDef> make_registry() {
  std::vector<CheckDef> defs;
  auto add = [&](std::string name, std::string family, bool audited, Evaluator e) {
    defs.push_back({CheckInfo{std::move(name), std::move(family), audited}, std::move(e)});
  };

  add("degree_formula", "degrees", false, [](Cache& x, AuditRecord& r) {
    const auto& pred = x.valency().degrees;
    std::set<int> observed;
    r.verdict = Verdict::Agree;
    for (int v = 0; v < x.g.order(); ++v) {
      const int d = x.bits().degree(v);
      observed.insert(d);
      if (d != pred[v] && r.witness.empty()) r.witness = "vertex " + x.g.name(v);
    }
    try {
      degree_profile(x.graph());
    } catch (const InternalConsistencyError& e) {
      if (r.witness.empty()) r.witness = e.what();
    }
    holds(r, r.witness.empty(), str(x.valency().valencies), str(observed));
  });

  add("degree_left_coset", "degrees", true, [](Cache& x, AuditRecord& r) {
    bool constant = true;
    for (int v = 0; v < x.g.order() && constant; ++v)
      for_each_bit(x.g.left_translate(v, x.h), [&](int u) {
        if (x.bits().degree(u) != x.bits().degree(v) && constant) {
          constant = false;
          r.witness = x.g.name(v) + " and " + x.g.name(u);
        }
      });
    compare(r, "true", str(constant));
  });

  add("induced_cayley", "degrees", false, [](Cache& x, AuditRecord& r) {
    const InducedCayley ic = induced_cayley(x.graph());
    for_each_bit(x.h, [&](int v) {
      if (ic.rows[v] != x.g.left_translate(v, x.s()) && r.witness.empty()) r.witness = "vertex " + x.g.name(v);
    });
    const int predicted = popcount(x.h) * popcount(x.s()) / 2;
    holds(r, r.witness.empty() && predicted == ic.edge_count(), str(predicted), str(ic.edge_count()));
  });

  add("edge_count", "edges", false, [](Cache& x, AuditRecord& r) {
    const int predicted = popcount(x.h) * (2 * popcount(x.c) - popcount(x.s())) / 2;
    compare(r, str(predicted), str(x.bits().edge_count()));
  });

  add("valency_bound", "valency", false, [](Cache& x, AuditRecord& r) {
    const auto& v = x.valency();
    std::set<int> observed;
    for (int u = 0; u < x.g.order(); ++u) observed.insert(x.bits().degree(u));
    const int k = static_cast<int>(observed.size());
    holds(r, k <= v.valency_bound && v.valency_bound <= v.sqrt_bound,
          "<= " + str(v.valency_bound) + " <= " + str(v.sqrt_bound), str(k));
  });

  add("regular_iff", "regular", false, [](Cache& x, AuditRecord& r) {
    if (not_applicable(r, x.c != 0, "C is empty")) return;
    compare(r, str(x.valency().predicted_regular), str(x.flags().regular));
  });

  add("regular_cayley", "regular", false, [](Cache& x, AuditRecord& r) {
    if (not_applicable(r, x.c != 0, "C is empty")) return;
    bool same = true;
    for (int v = 0; v < x.g.order(); ++v)
      if (x.bits().rows[v] != x.g.left_translate(v, x.c)) {
        same = false;
        if (r.witness.empty()) r.witness = "vertex " + x.g.name(v);
      }
    compare(r, str(x.valency().predicted_regular), str(same));
  });

  add("semi_regular_iff", "semi_regular", false, [](Cache& x, AuditRecord& r) {
    if (not_applicable(r, x.c != 0, "C is empty")) return;
    if (not_applicable(r, !x.valency().predicted_regular, "graph is predicted regular")) return;
    const auto& v = x.valency();
    compare(r, str(v.predicted_semi_regular), str(x.flags().semi_regular));
    r.witness = "same_count=" + str(v.semi_regular_same_count) + " right_coset=" + str(v.semi_regular_right_coset);
  });

  add("full_degree_coset", "full_degree", false, [](Cache& x, AuditRecord& r) {
    Mask observed = 0;
    for (int v = 0; v < x.g.order(); ++v)
      if (!contains(x.h, v) && x.bits().degree(v) == popcount(x.c)) observed |= bit(v);
    compare(r, x.g.format(x.valency().full_degree_coset & ~x.h), x.g.format(observed));
  });

  add("isolated_vertex", "isolated", false, [](Cache& x, AuditRecord& r) {
    const Mask forced = x.valency().isolated_forced;
    holds(r, is_subset(forced, x.isolated()), x.g.format(forced), x.g.format(x.isolated()));
  });

  add("hc_star_necessary", "connectivity", false, [](Cache& x, AuditRecord& r) {
    const bool covers = x.connectivity().hc_star_covers;
    holds(r, covers || !x.connected(), "connected => " + str(covers), "connected=" + str(x.connected()));
  });

  add("connectivity_iff", "connectivity", false, [](Cache& x, AuditRecord& r) {
    const auto& p = x.connectivity();
    compare(r, str(p.predicted_connected), str(x.connected()));
    r.witness = "witnesses=" + x.g.format(p.witnesses) + " HC*=G:" + str(p.hc_star_covers);
  });

  add("connectivity_disjoint", "connectivity", false, [](Cache& x, AuditRecord& r) {
    if (not_applicable(r, x.s() == 0, "H meets C")) return;
    compare(r, str(x.connectivity().disjoint_criterion), str(x.connected()));
  });

  add("aba_criterion", "connectivity", false, [](Cache& x, AuditRecord& r) {
    if (not_applicable(r, !x.connectivity().h_is_aba, "H is an ABA-group")) return;
    compare(r, str(x.connectivity().aba_criterion), str(x.connected()));
  });

  add("diam_width", "diameter", false, [](Cache& x, AuditRecord& r) { diameter_check(x, r, "width"); });
  add("diam_half_sum", "diameter", false, [](Cache& x, AuditRecord& r) { diameter_check(x, r, "half_sum"); });
  add("diam_three_halves", "diameter", false,
      [](Cache& x, AuditRecord& r) { diameter_check(x, r, "three_halves"); });
  add("diam_h_plus_2", "diameter", false, [](Cache& x, AuditRecord& r) { diameter_check(x, r, "h_plus_2"); });
  add("diam_half_h_plus_2", "diameter", false,
      [](Cache& x, AuditRecord& r) { diameter_check(x, r, "half_h_plus_2"); });

  add("clique_upper", "clique", false, [](Cache& x, AuditRecord& r) {
    holds(r, x.omega() <= x.clique().clique_upper, "<= " + str(x.clique().clique_upper), str(x.omega()));
  });

  add("clique_equality", "clique", false, [](Cache& x, AuditRecord& r) {
    compare(r, str(x.clique().clique_upper_is_equality), str(x.omega() == x.clique().clique_upper));
    r.witness = "omega=" + str(x.omega());
  });

  add("clique_psi_lower", "clique", false, [](Cache& x, AuditRecord& r) {
    const int lower = x.clique().clique_lower_psi;
    holds(r, x.omega() >= lower, ">= " + str(lower), str(x.omega()));
  });

  add("clique_c3_upper", "clique", false, [](Cache& x, AuditRecord& r) {
    if (not_applicable(r, x.clique().cube_closed, "C^3 not inside C")) return;
    const int upper = x.clique().psi_hc + 1;
    holds(r, x.omega() <= upper, "<= " + str(upper), str(x.omega()));
  });

  add("c3_decomposition", "clique", false, [](Cache& x, AuditRecord& r) {
    if (not_applicable(r, x.clique().cube_closed, "C^3 not inside C")) return;
    const CubeClosedCase& cc = *x.clique().c_cubed_case;
    r.predicted = "C=(C^2)" + x.g.name(cc.c);
    try {
      verify_cube_decomposition(x.g, x.c, cc);
      r.observed = "holds";
      r.verdict = Verdict::Agree;
    } catch (const InternalConsistencyError& e) {
      r.observed = "fails";
      r.witness = e.what();
      r.verdict = Verdict::Mismatch;
    }
  });

  const auto alpha_gate = [](Cache& x, AuditRecord& r) {
    return not_applicable(r, x.outside() != 0, "C inside H");
  };
  add("alpha", "alpha_beta", false, [alpha_gate](Cache& x, AuditRecord& r) {
    if (alpha_gate(x, r)) {
      r.observed = str(x.alpha());
      return;
    }
    compare(r, str(x.g.order() - popcount(x.h)), str(x.alpha()));
  });
  add("alpha_prime", "alpha_beta", false, [alpha_gate](Cache& x, AuditRecord& r) {
    if (alpha_gate(x, r)) return;
    compare(r, str(popcount(x.h)), str(x.matching()));
  });
  add("beta", "alpha_beta", false, [alpha_gate](Cache& x, AuditRecord& r) {
    if (alpha_gate(x, r)) return;
    compare(r, str(popcount(x.h)), str(x.cover()));
  });
  add("beta_prime", "alpha_beta", false, [alpha_gate](Cache& x, AuditRecord& r) {
    if (alpha_gate(x, r)) return;
    const auto ec = x.edge_cover();
    if (not_applicable(r, ec.has_value(), "isolated vertex present")) return;
    compare(r, str(x.g.order() - popcount(x.h)), str(*ec));
  });
  add("domination_as_printed", "alpha_beta", true, [alpha_gate](Cache& x, AuditRecord& r) {
    if (alpha_gate(x, r)) return;
    compare(r, str(popcount(x.h)), str(x.domination()));
  });

  add("class_one", "class_one", false, [](Cache& x, AuditRecord& r) {
    if (not_applicable(r, x.outside() != 0, "C inside H")) return;
    const int delta = x.bits().max_degree();
    r.predicted = "proper, <= " + str(delta) + " colours";
    try {
      const EdgeColoring col = build_class_one_coloring(x.instance());
      BitGraph painted(x.g.order());
      for (const ColoredEdge& e : col.edges) painted.add_edge(e.u, e.v);
      const int used = popcount(col.colors_used);
      r.observed = "proper, " + str(used) + " colours";
      if (painted.rows != x.bits().rows) {
        r.verdict = Verdict::Mismatch;
        r.witness = "coloured edges differ from the graph";
      } else {
        r.verdict = used <= delta ? Verdict::Agree : Verdict::Mismatch;
      }
    } catch (const InternalConsistencyError& e) {
      r.observed = "improper";
      r.witness = e.what();
      r.verdict = Verdict::Mismatch;
    }
  });

  add("class_one_oracle", "class_one", true, [](Cache& x, AuditRecord& r) {
    const int delta = x.bits().max_degree();
    r.predicted = str(delta);
    const auto ce = x.chi_edge();
    if (!ce) {
      r.verdict = Verdict::Unevaluated;
      r.witness = "edge count above cutoff";
      return;
    }
    compare(r, str(delta), str(*ce));
  });

  add("chromatic_upper", "chromatic", false, [](Cache& x, AuditRecord& r) {
    const int upper = x.chromatic().chromatic_upper;
    holds(r, x.chi() <= upper, "<= " + str(upper), str(x.chi()));
  });

  add("chromatic_equality", "chromatic", false, [](Cache& x, AuditRecord& r) {
    const auto& p = x.chromatic();
    r.witness = "i=" + str(p.equality_i) + " ii=" + to_string(p.equality_ii) + " chi=" + str(x.chi());
    if (p.predicted_equality == Tri::Unevaluated) {
      r.verdict = Verdict::Unevaluated;
      return;
    }
    compare(r, str(p.predicted_equality == Tri::True), str(x.chi() == p.chromatic_upper));
  });

  add("claw_free_iff", "claw_free", false,
      [](Cache& x, AuditRecord& r) { forbidden_check(x, r, ForbiddenKind::ClawFree, x.flags().claw_free); });
  add("forest_iff", "forest", false,
      [](Cache& x, AuditRecord& r) { forbidden_check(x, r, ForbiddenKind::Forest, x.flags().forest); });
  add("tree_iff", "tree", false,
      [](Cache& x, AuditRecord& r) { forbidden_check(x, r, ForbiddenKind::Tree, x.flags().tree); });
  add("triangle_free_iff", "triangle_free", false, [](Cache& x, AuditRecord& r) {
    forbidden_check(x, r, ForbiddenKind::TriangleFree, x.flags().triangle_free);
  });
  add("square_free_as_printed", "square_free_as_printed", true, [](Cache& x, AuditRecord& r) {
    forbidden_check(x, r, ForbiddenKind::SquareFreeAsPrinted, x.flags().square_subgraph_free);
  });
  add("bipartite_sufficient", "bipartite", false, [](Cache& x, AuditRecord& r) {
    const ForbiddenPrediction& p = x.forbidden(ForbiddenKind::BipartiteSufficient);
    if (not_applicable(r, p.applicable, "H meets C")) {
      r.observed = str(x.flags().bipartite);
      return;
    }
    holds(r, x.flags().bipartite, "true", str(x.flags().bipartite));
  });

  add("gallai_vertex", "gallai", false, [](Cache& x, AuditRecord& r) {
    compare(r, str(x.g.order()), str(x.alpha() + x.cover()));
  });
  add("gallai_edge", "gallai", false, [](Cache& x, AuditRecord& r) {
    const auto ec = x.edge_cover();
    if (not_applicable(r, ec.has_value(), "isolated vertex present")) return;
    compare(r, str(x.g.order()), str(x.matching() + *ec));
  });
  return defs;
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = make_registry();
  return defs;
}

const CheckDef& find_def(const std::string& name) {
  for (const CheckDef& d : registry())
    if (d.info.name == name) return d;
  throw UnknownNameError("unknown check: " + name);
}

}  // namespace

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const CheckDef& d : registry()) out.push_back(d.info);
    return out;
  }();
  return infos;
}

const CheckInfo& check_info(const std::string& name) { return find_def(name).info; }

std::vector<std::string> resolve_checks(const std::vector<std::string>& selection) {
  std::vector<std::string> out;
  if (selection.empty()) {
    for (const CheckInfo& c : check_registry()) out.push_back(c.name);
    return out;
  }
  static const std::set<std::string> forbidden_families{"claw_free",     "forest", "tree", "triangle_free",
                                                        "square_free_as_printed", "bipartite"};
  std::set<std::string> wanted;
  for (const std::string& s : selection) {
    // A check name shadows a family of the same name.
    const bool is_name = std::any_of(check_registry().begin(), check_registry().end(),
                                     [&](const CheckInfo& c) { return c.name == s; });
    bool matched = false;
    for (const CheckInfo& c : check_registry())
      if (c.name == s || (!is_name && (c.family == s || (s == "forbidden" && forbidden_families.count(c.family))))) {
        wanted.insert(c.name);
        matched = true;
      }
    if (!matched) throw UnknownNameError("unknown check or family: " + s);
  }
  for (const CheckInfo& c : check_registry())
    if (wanted.count(c.name)) out.push_back(c.name);
  return out;
}

InstanceContext::InstanceContext(const GroupTable& group, Mask h, Mask c, const AuditLimits& limits)
    : group_(&group), h_(h), c_(c), limits_(limits), cache_(std::make_unique<Cache>(group, h, c, limits)) {}

InstanceContext::~InstanceContext() = default;

AuditRecord InstanceContext::evaluate(const std::string& check) {
  const CheckDef& def = find_def(check);
  AuditRecord r;
  r.group = group_->spec();
  r.h = h_;
  r.c = c_;
  r.h_text = group_->format(h_);
  r.c_text = group_->format(c_);
  r.check = check;
  r.audited = def.info.audited;
  def.eval(*cache_, r);
  return r;
}

AuditRecord evaluate_check(const GroupTable& group, Mask h, Mask c, const std::string& check,
                           const AuditLimits& limits) {
  InstanceContext ctx(group, h, c, limits);
  return ctx.evaluate(check);
}

}  // namespace relcay
