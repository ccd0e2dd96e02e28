#include "relcay/audit.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "relcay/error.hpp"

namespace relcay {

std::vector<std::string> default_catalog() {
  std::vector<std::string> out;
  for (int n = 2; n <= 12; ++n) out.push_back("C" + std::to_string(n));
  for (int n = 3; n <= 8; ++n) out.push_back("D" + std::to_string(n));
  for (const char* s : {"S3", "S4", "Q8", "C2xC2", "C2xC4", "C2xC2xC2", "C2xC6", "E2^4"}) out.push_back(s);
  return out;
}

std::uint64_t AuditReport::count(const std::string& check, Verdict v) const {
  const auto it = totals.find(check);
  if (it == totals.end()) return 0;
  const auto jt = it->second.find(v);
  return jt == it->second.end() ? 0 : jt->second;
}

std::uint64_t AuditReport::failing_mismatches() const {
  std::uint64_t n = 0;
  for (const auto& [check, counts] : totals) {
    if (check_info(check).audited) continue;
    const auto it = counts.find(Verdict::Mismatch);
    if (it != counts.end()) n += it->second;
  }
  return n;
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

// Fills `quota` round-robin over strata with `sizes[k]` items each, at most `cap` in total.
std::vector<std::uint64_t> round_robin(const std::vector<std::uint64_t>& sizes, std::uint64_t cap) {
  std::vector<std::uint64_t> quota(sizes.size(), 0);
  std::uint64_t given = 0;
  bool progress = true;
  while (given < cap && progress) {
    progress = false;
    for (std::size_t k = 0; k < sizes.size() && given < cap; ++k)
      if (quota[k] < sizes[k]) {
        ++quota[k];
        ++given;
        progress = true;
      }
  }
  return quota;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r > 1e18L ? std::uint64_t{1000000000000000000ull} : static_cast<std::uint64_t>(r + 0.5L);
}

}  // namespace

std::vector<std::uint64_t> select_connection_sets(const ConnectionSetEnumerator& en, std::uint64_t cap,
                                                  std::uint64_t seed) {
  const int m = static_cast<int>(en.orbits().size());
  std::vector<std::uint64_t> out;
  if (cap == 0 || (m < 63 && en.count() <= cap)) {
    if (m > 40) throw CapacityError("too many connection sets to scan without a cap");
    out.resize(en.count());
    for (std::uint64_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
  }
  std::minstd_rand lcg(static_cast<std::minstd_rand::result_type>(seed % 2147483646u + 1));
  if (m <= 20) {
    // Strata by |C|.
    std::vector<std::vector<std::uint64_t>> strata;
    for (std::uint64_t i = 0; i < en.count(); ++i) {
      const int size = popcount(en.mask_at(i));
      if (static_cast<int>(strata.size()) <= size) strata.resize(size + 1);
      strata[size].push_back(i);
    }
    std::vector<std::uint64_t> sizes;
    for (const auto& s : strata) sizes.push_back(s.size());
    const auto quota = round_robin(sizes, cap);
    for (std::size_t k = 0; k < strata.size(); ++k) {
      auto& s = strata[k];
      for (std::uint64_t j = 0; j < quota[k]; ++j) {
        const std::uint64_t pick = j + lcg() % (s.size() - j);
        std::swap(s[j], s[pick]);
        out.push_back(s[j]);
      }
    }
  } else {
    // Too many to list: strata by number of orbits, random orbit subsets.
    std::vector<std::uint64_t> sizes;
    for (int k = 0; k <= m; ++k) sizes.push_back(binomial(m, k));
    const auto quota = round_robin(sizes, cap);
    for (int k = 0; k <= m; ++k) {
      std::set<std::uint64_t> chosen;
      while (chosen.size() < quota[k]) {
        std::set<int> orbits;
        for (int j = m - k; j < m; ++j) {  // Floyd's sampling
          const int t = static_cast<int>(lcg() % (j + 1));
          orbits.insert(orbits.count(t) ? j : t);
        }
        std::uint64_t index = 0;
        for (int o : orbits) index |= std::uint64_t{1} << o;
        chosen.insert(index);
      }
      out.insert(out.end(), chosen.begin(), chosen.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

AuditRecord shrink_counterexample(const GroupTable& group, const AuditRecord& record, const AuditLimits& limits) {
  if (record.verdict != Verdict::Mismatch) return record;
  const ConnectionSetEnumerator en(group);
  AuditRecord cur = record;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Mask orbit : en.orbits()) {
      if (!is_subset(orbit, cur.c)) continue;
      AuditRecord next = evaluate_check(group, cur.h, cur.c & ~orbit, cur.check, limits);
      if (next.verdict == Verdict::Mismatch) {
        cur = std::move(next);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (Mask k : group.subgroup_masks()) {
      if (k == cur.h || !is_subset(k, cur.h)) continue;
      AuditRecord next = evaluate_check(group, k, cur.c, cur.check, limits);
      if (next.verdict == Verdict::Mismatch) {
        cur = std::move(next);
        changed = true;
        break;
      }
    }
  }
  return cur;
}

namespace {

struct WorkItem {
  int group;
  Mask h;
  Mask c;
};

struct ItemResult {
  std::vector<Verdict> verdicts;     // indexed like the check list
  std::vector<AuditRecord> kept;     // mismatches, or everything with full_records
};

template <class F>
void parallel_for(std::size_t n, int workers, F&& f) {
  workers = std::max(1, std::min<int>(workers, static_cast<int>(std::max<std::size_t>(n, 1))));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(n);
        return;
      }
    }
  };
  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

AuditReport run_audit(const std::vector<std::string>& catalog, const std::vector<std::string>& checks,
                      const AuditLimits& limits) {
  const auto start = std::chrono::steady_clock::now();
  AuditReport report;
  report.limits = limits;
  report.checks = resolve_checks(checks);
  // Instance order, then check name.
  std::vector<std::size_t> by_name(report.checks.size());
  for (std::size_t i = 0; i < by_name.size(); ++i) by_name[i] = i;
  std::sort(by_name.begin(), by_name.end(), [&](std::size_t a, std::size_t b) {
    return report.checks[a] < report.checks[b];
  });

  std::vector<GroupTable> groups;
  std::vector<WorkItem> items;
  for (const std::string& spec : catalog) {
    groups.push_back(make_group(spec, limits.max_order));
    const GroupTable& g = groups.back();
    const int gi = static_cast<int>(groups.size()) - 1;
    const ConnectionSetEnumerator en(g);
    CatalogEntry entry;
    entry.spec = g.spec();
    entry.order = g.order();
    entry.connection_sets = en.count();
    for (Mask h : g.subgroup_masks()) {
      if (h == g.all()) continue;
      ++entry.proper_subgroups;
      const auto picked = select_connection_sets(en, limits.max_connection_sets, fnv1a(g.spec() + ":" + std::to_string(h)));
      for (std::uint64_t index : picked) items.push_back({gi, h, en.mask_at(index)});
      entry.instances += picked.size();
    }
    report.catalog.push_back(entry);
  }
  report.instances = items.size();

  for (const std::string& name : report.checks) {
    auto& counts = report.totals[name];
    for (Verdict v : {Verdict::Agree, Verdict::Mismatch, Verdict::NotApplicable, Verdict::Unevaluated}) counts[v] = 0;
  }
  std::vector<std::pair<int, AuditRecord>> mismatches;
  std::map<std::string, std::uint64_t> kept_per_check;

  // Chunks bound memory on large catalogs; merging is in instance order.
  constexpr std::size_t kChunk = 1 << 14;
  std::vector<ItemResult> results;
  for (std::size_t base = 0; base < items.size(); base += kChunk) {
    const std::size_t len = std::min(kChunk, items.size() - base);
    results.assign(len, ItemResult{});
    parallel_for(len, limits.parallelism, [&](std::size_t j) {
      const WorkItem& w = items[base + j];
      InstanceContext ctx(groups[w.group], w.h, w.c, limits);
      ItemResult& out = results[j];
      out.verdicts.resize(report.checks.size());
      for (std::size_t k : by_name) {
        AuditRecord r = ctx.evaluate(report.checks[k]);
        out.verdicts[k] = r.verdict;
        if (limits.full_records || r.verdict == Verdict::Mismatch) out.kept.push_back(std::move(r));
      }
    });
    for (std::size_t j = 0; j < len; ++j) {
      for (std::size_t k = 0; k < report.checks.size(); ++k) ++report.totals[report.checks[k]][results[j].verdicts[k]];
      for (AuditRecord& r : results[j].kept) {
        if (r.verdict == Verdict::Mismatch) {
          std::uint64_t& n = kept_per_check[r.check];
          if (limits.max_mismatch_records == 0 || n < limits.max_mismatch_records) {
            ++n;
            mismatches.emplace_back(items[base + j].group, r);
          }
        }
        if (limits.full_records) report.records.push_back(std::move(r));
      }
    }
  }

  report.mismatches.resize(mismatches.size());
  parallel_for(mismatches.size(), limits.parallelism, [&](std::size_t i) {
    const auto& [gi, r] = mismatches[i];
    report.mismatches[i].record = r;
    report.mismatches[i].shrunk = limits.shrink ? shrink_counterexample(groups[gi], r, limits) : r;
  });

  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

using nlohmann::ordered_json;

ordered_json record_json(const AuditRecord& r, bool with_check) {
  ordered_json j;
  if (with_check) j["check"] = r.check;
  j["instance"] = {{"group", r.group}, {"H", r.h_text}, {"C", r.c_text}};
  j["predicted"] = r.predicted;
  j["observed"] = r.observed;
  j["verdict"] = to_string(r.verdict);
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j;
}

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

}  // namespace

std::string report_json(const AuditReport& report) {
  ordered_json j;
  j["config"] = {{"checks", report.checks},
                 {"max_order", report.limits.max_order},
                 {"edge_color_cutoff", report.limits.edge_color_cutoff},
                 {"chromatic_ii_cap", report.limits.chromatic_ii_cap},
                 {"max_connection_sets", report.limits.max_connection_sets},
                 {"max_mismatch_records", report.limits.max_mismatch_records},
                 {"shrink", report.limits.shrink},
                 {"full", report.limits.full_records}};
  j["catalog"] = ordered_json::array();
  for (const CatalogEntry& e : report.catalog)
    j["catalog"].push_back({{"group", e.spec},
                            {"order", e.order},
                            {"proper_subgroups", e.proper_subgroups},
                            {"connection_sets", e.connection_sets},
                            {"instances", e.instances}});
  ordered_json totals;
  totals["instances"] = report.instances;
  for (const std::string& name : report.checks) {
    ordered_json t;
    for (Verdict v : {Verdict::Agree, Verdict::Mismatch, Verdict::NotApplicable, Verdict::Unevaluated})
      t[to_string(v)] = report.count(name, v);
    t["audited"] = check_info(name).audited;
    totals["checks"][name] = t;
  }
  j["totals"] = totals;
  j["mismatches"] = ordered_json::array();
  for (const MismatchEntry& m : report.mismatches) {
    ordered_json e = record_json(m.record, true);
    e["audited"] = m.record.audited;
    e["shrunk"] = record_json(m.shrunk, false);
    j["mismatches"].push_back(e);
  }
  if (report.limits.full_records) {
    j["records"] = ordered_json::array();
    for (const AuditRecord& r : report.records) j["records"].push_back(record_json(r, true));
  }
  return j.dump(2) + "\n";
}

std::string report_csv(const AuditReport& report) {
  std::ostringstream out;
  out << "instance_group,instance_H,instance_C,check,predicted,observed,verdict\n";
  auto row = [&](const AuditRecord& r) {
    out << csv_field(r.group) << ',' << csv_field(r.h_text) << ',' << csv_field(r.c_text) << ',' << csv_field(r.check)
        << ',' << csv_field(r.predicted) << ',' << csv_field(r.observed) << ',' << csv_field(to_string(r.verdict))
        << '\n';
  };
  if (report.limits.full_records) {
    for (const AuditRecord& r : report.records) row(r);
  } else {
    for (const MismatchEntry& m : report.mismatches) row(m.record);
  }
  return out.str();
}

std::string report_text(const AuditReport& report) {
  std::ostringstream out;
  out << "instances: " << report.instances << "\n";
  out << std::left << std::setw(26) << "check" << std::right << std::setw(10) << "agree" << std::setw(10) << "mismatch"
      << std::setw(10) << "n/a" << std::setw(12) << "unevaluated" << "\n";
  for (const std::string& name : report.checks) {
    out << std::left << std::setw(26) << (name + (check_info(name).audited ? "*" : "")) << std::right << std::setw(10)
        << report.count(name, Verdict::Agree) << std::setw(10) << report.count(name, Verdict::Mismatch)
        << std::setw(10) << report.count(name, Verdict::NotApplicable) << std::setw(12)
        << report.count(name, Verdict::Unevaluated) << "\n";
  }
  out << "(* audited: mismatches are findings and do not affect the exit status)\n";
  const std::size_t shown = std::min<std::size_t>(report.mismatches.size(), 20);
  for (std::size_t i = 0; i < shown; ++i) {
    const AuditRecord& r = report.mismatches[i].record;
    const AuditRecord& s = report.mismatches[i].shrunk;
    out << "mismatch " << r.check << ": " << r.group << " H=" << r.h_text << " C=" << r.c_text << " predicted "
        << r.predicted << " observed " << r.observed << "; shrunk to H=" << s.h_text << " C=" << s.c_text << "\n";
  }
  if (report.mismatches.size() > shown) out << "... " << report.mismatches.size() - shown << " more mismatches\n";
  return out.str();
}

}  // namespace relcay
