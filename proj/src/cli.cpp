#include "relcay/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "relcay/audit.hpp"
#include "relcay/error.hpp"
#include "relcay/oracles.hpp"
#include "relcay/relcay.hpp"
#include "relcay/theorems.hpp"

namespace relcay {

int default_max_order() {
  if (const char* env = std::getenv("RELCAY_MAX_ORDER")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min<long>(v, kMaxSupportedOrder));
  }
  return kDefaultMaxOrder;
}

namespace {

struct Loaded {
  std::unique_ptr<GroupTable> group;
  Mask h = 0;
  Mask c = 0;

  RelCayGraph graph() const {
    return build_relcay(*group, Subgroup(ElementSet(*group, h)), ConnectionSet(ElementSet(*group, c)));
  }
};

Loaded load_instance(const std::string& spec, const std::string& subgroup, const std::string& conn, int max_order) {
  Loaded out;
  out.group = std::make_unique<GroupTable>(make_group(spec, max_order));
  const GroupTable& g = *out.group;
  out.h = generated_subgroup(ElementSet::from_members(g, parse_elements(g, subgroup))).mask();
  out.c = make_connection_set(g, parse_elements(g, conn)).mask();
  if (out.h == g.all()) throw ImproperSubgroupError("subgroup generated by '" + subgroup + "' is all of " + g.spec());
  return out;
}

std::string opt(const std::optional<int>& v, const char* none) { return v ? std::to_string(*v) : none; }

void print_summary(const Loaded& in, std::ostream& out) {
  const GroupTable& g = *in.group;
  const RelCayGraph graph = in.graph();
  const DegreeProfile dp = degree_profile(graph);
  out << "group " << g.spec() << " (order " << g.order() << ")\n";
  out << "H = " << g.format(in.h) << " (order " << popcount(in.h) << ", index " << g.order() / popcount(in.h) << ")\n";
  out << "C = " << g.format(in.c) << "\n";
  out << "vertices " << g.order() << ", edges " << edge_count(graph) << "\n";
  out << "degree by right coset:";
  for (const auto& [rep, d] : dp.per_coset) out << " H" << g.name(rep) << "=" << d;
  out << "\nvalencies {";
  bool first = true;
  for (int d : dp.distinct_valencies) {
    out << (first ? "" : ",") << d;
    first = false;
  }
  out << "}, max degree " << dp.max_degree << "\n";
}

void print_invariants(const Loaded& in, const OracleLimits& limits, std::ostream& out) {
  const RelCayGraph graph = in.graph();
  const InvariantReport r = invariant_report(graph, limits);
  const StructureFlags f = structure_flags(graph);
  const InducedCayley ic = induced_cayley(graph);
  const BitGraph gp = ic.compact();
  out << "clique_number " << r.clique_number << "\n"
      << "independence_number " << r.independence_number << "\n"
      << "min_vertex_cover " << r.min_vertex_cover << "\n"
      << "matching_number " << r.matching_number << "\n"
      << "domination_number " << r.domination_number << "\n"
      << "edge_cover_number " << opt(r.edge_cover_number, "undefined") << "\n"
      << "chromatic_number " << r.chromatic_number << "\n"
      << "chromatic_number_gprime " << chromatic_number(gp) << "\n"
      << "edge_chromatic_number " << opt(r.edge_chromatic_number, "skipped") << "\n"
      << "diameter " << opt(r.diameter, "disconnected") << "\n"
      << "components " << r.component_count << "\n"
      << "max_degree " << r.max_degree << "\n";
  auto flag = [&](const char* name, bool v) { out << name << " " << (v ? "true" : "false") << "\n"; };
  flag("connected", f.connected);
  flag("bipartite", f.bipartite);
  flag("forest", f.forest);
  flag("tree", f.tree);
  flag("triangle_free", f.triangle_free);
  flag("square_free", f.square_subgraph_free);
  flag("claw_free", f.claw_free);
  flag("regular", f.regular);
  flag("semi_regular", f.semi_regular);
}

int run_check(const Loaded& in, const std::vector<std::string>& theorems, const AuditLimits& limits, std::ostream& out) {
  InstanceContext ctx(*in.group, in.h, in.c, limits);
  int status = 0;
  for (const std::string& name : resolve_checks(theorems)) {
    const AuditRecord r = ctx.evaluate(name);
    out << name << ": predicted " << (r.predicted.empty() ? "-" : r.predicted) << ", observed "
        << (r.observed.empty() ? "-" : r.observed) << ", " << to_string(r.verdict);
    if (r.audited) out << " (audited)";
    if (!r.witness.empty()) out << "; " << r.witness;
    out << "\n";
    if (r.verdict == Verdict::Mismatch && !r.audited) status = 2;
  }
  return status;
}

struct Figure {
  std::string name;
  std::string spec;
  Mask h;
  Mask c;
  std::optional<int> expected_diameter;
};

Mask power_mask(const GroupTable& g, Element x, std::initializer_list<int> exps) {
  Mask m = 0;
  for (int e : exps) {
    Element y = GroupTable::identity();
    const int k = ((e % g.order()) + g.order()) % g.order();
    for (int i = 0; i < k; ++i) y = g.mul(y, x);
    m |= bit(y);
  }
  return m;
}

int run_figures(const std::string& out_dir, int max_order, std::ostream& out) {
  std::vector<std::pair<Figure, std::unique_ptr<GroupTable>>> figs;
  auto add = [&](std::string name, std::string spec, const std::string& sub, const std::string& conn,
                 std::optional<int> diam = std::nullopt) {
    Loaded l = load_instance(spec, sub, conn, max_order);
    figs.push_back({Figure{std::move(name), std::move(spec), l.h, l.c, diam}, std::move(l.group)});
  };
  add("fig1", "D5", "a", "a,a4,b");
  add("fig2", "D5", "a", "a,a4,b,ab,a4b");
  add("fig3", "D4", "a2,b", "a,a3,b");
  for (int n = 2; n <= 5; ++n) {
    auto g = std::make_unique<GroupTable>(make_group("D" + std::to_string(2 * n), max_order));
    const Element a = *g->find("a");
    const Mask h = g->closure(bit(a));
    const Mask c = bit(a) | bit(g->inv(a)) | bit(*g->find("b"));
    figs.push_back({Figure{"corona" + std::to_string(n), g->spec(), h, c, n + 2}, std::move(g)});
  }
  for (auto [m, n] : {std::pair{1, 2}, {2, 2}, {1, 1}, {2, 1}}) {
    auto g = std::make_unique<GroupTable>(make_group("C" + std::to_string(4 * m * n), max_order));
    const Element a = *g->find("a");
    const Mask h = g->closure(power_mask(*g, a, {2 * n}));
    Mask c = 0;
    for (int k = 1; k <= n; ++k) c |= power_mask(*g, a, {k, -k});
    figs.push_back({Figure{"cyclic_m" + std::to_string(m) + "_n" + std::to_string(n), g->spec(), h, c, 2 * m + 2},
                    std::move(g)});
  }

  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  for (const auto& [fig, group] : figs) {
    const GroupTable& g = *group;
    const RelCayGraph graph = build_relcay(g, Subgroup(ElementSet(g, fig.h)), ConnectionSet(ElementSet(g, fig.c)));
    const BitGraph bg = graph.bit_graph();
    const StructureFlags f = structure_flags(bg);
    const auto dc = diameter_components(bg);
    out << fig.name << " " << fig.spec << " H=" << g.format(fig.h) << " C=" << g.format(fig.c) << " nodes=" << g.order()
        << " edges=" << bg.edge_count() << " chi=" << chromatic_number(bg)
        << " chi_gprime=" << chromatic_number(induced_cayley(graph).compact())
        << " diameter=" << opt(dc.diameter, "disconnected") << " bipartite=" << (f.bipartite ? "true" : "false")
        << " triangle_free=" << (f.triangle_free ? "true" : "false");
    if (fig.expected_diameter) {
      out << " expected_diameter=" << *fig.expected_diameter;
      if (dc.diameter != fig.expected_diameter) out << " (finding)";
    }
    out << "\n";
    if (!out_dir.empty()) {
      std::ofstream file(std::filesystem::path(out_dir) / (fig.name + ".dot"));
      file << export_dot(graph, DotOptions{fig.name, true});
    }
  }
  return 0;
}

}  // namespace

int execute_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relative Cayley graphs: construction, invariants and theorem audits", "relcay"};
  app.require_subcommand(1);

  CliConfig cfg;
  cfg.max_order = default_max_order();
  std::string spec, subgroup, conn, out_dir;
  bool dot = false;
  std::vector<std::string> theorems, catalog, checks;
  std::uint64_t max_sets = 0;
  std::uint64_t max_mismatches = AuditLimits{}.max_mismatch_records;
  bool no_shrink = false;

  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("spec", spec, "group spec, e.g. D5 or C2xC4")->required();
    sub->add_option("--subgroup", subgroup, "generators of H, comma separated (empty for {1})");
    sub->add_option("--conn", conn, "elements of C, comma separated");
  };
  auto* build = app.add_subcommand("build", "build Cay(G,H,C) and print a summary");
  add_instance(build);
  build->add_flag("--dot", dot, "print Graphviz DOT instead of the summary");

  auto* inv = app.add_subcommand("invariants", "print oracle invariants and structure flags");
  add_instance(inv);
  inv->add_option("--edge-color-cutoff", cfg.edge_color_cutoff)->check(CLI::Range(1, 64));

  auto* check = app.add_subcommand("check", "compare theorem predictions with oracles on one instance");
  add_instance(check);
  check->add_option("--theorem", theorems, "check or family names")->delimiter(',');
  check->add_option("--edge-color-cutoff", cfg.edge_color_cutoff)->check(CLI::Range(1, 64));
  check->add_option("--chromatic-ii-cap", cfg.chromatic_ii_cap)->check(CLI::PositiveNumber);

  auto* audit = app.add_subcommand("audit", "run every selected check over a group catalog");
  audit->add_option("--catalog", catalog, "group specs (default catalog when omitted)")->delimiter(',');
  audit->add_option("--checks", checks, "check or family names (all when omitted)")->delimiter(',');
  audit->add_option("--max-order", cfg.max_order)->check(CLI::Range(1, 64));
  audit->add_option("--edge-color-cutoff", cfg.edge_color_cutoff)->check(CLI::Range(1, 64));
  audit->add_option("--chromatic-ii-cap", cfg.chromatic_ii_cap)->check(CLI::PositiveNumber);
  audit->add_option("--parallelism", cfg.parallelism)->check(CLI::Range(1, 256));
  audit->add_option("--max-connection-sets", max_sets, "per subgroup; 0 scans all");
  audit->add_option("--max-mismatches", max_mismatches, "mismatch records kept per check; 0 keeps all");
  audit->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv", "text"}));
  audit->add_flag("--full", cfg.full_records, "include every record");
  audit->add_flag("--no-shrink", no_shrink, "report mismatches without shrinking");

  auto* figures = app.add_subcommand("figures", "reproduce the example instances and diameter families");
  figures->add_option("--out", out_dir, "directory for DOT files");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << " (run 'relcay --help')\n";
    return 1;
  }

  try {
    AuditLimits limits;
    limits.max_order = cfg.max_order;
    limits.edge_color_cutoff = cfg.edge_color_cutoff;
    limits.chromatic_ii_cap = cfg.chromatic_ii_cap;
    limits.parallelism = cfg.parallelism;
    limits.max_connection_sets = max_sets;
    limits.max_mismatch_records = max_mismatches;
    limits.full_records = cfg.full_records;
    limits.shrink = !no_shrink;

    if (*build) {
      const Loaded in = load_instance(spec, subgroup, conn, cfg.max_order);
      if (dot)
        out << export_dot(in.graph(), DotOptions{spec, false});
      else
        print_summary(in, out);
      return 0;
    }
    if (*inv) {
      print_invariants(load_instance(spec, subgroup, conn, cfg.max_order), OracleLimits{cfg.edge_color_cutoff}, out);
      return 0;
    }
    if (*check) return run_check(load_instance(spec, subgroup, conn, cfg.max_order), theorems, limits, out);
    if (*audit) {
      const AuditReport report = run_audit(catalog.empty() ? default_catalog() : catalog, checks, limits);
      if (cfg.format == "json")
        out << report_json(report);
      else if (cfg.format == "csv")
        out << report_csv(report);
      else
        out << report_text(report);
      err << "audit: " << report.instances << " instances in " << report.wall_seconds << " s\n";
      return report.failing_mismatches() ? 2 : 0;
    }
    if (*figures) return run_figures(out_dir, cfg.max_order, out);
  } catch (const Error& e) {
    err << "error[" << e.kind() << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace relcay
