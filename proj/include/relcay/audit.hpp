#pragma once

// Theorem-versus-oracle audit over a catalog of small groups.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "relcay/group.hpp"
#include "relcay/oracles.hpp"
#include "relcay/theorems.hpp"

namespace relcay {

enum class Verdict { Agree, Mismatch, NotApplicable, Unevaluated };
std::string to_string(Verdict v);

struct CheckInfo {
  std::string name;
  std::string family;
  bool audited = false;  // disagreement is reported but does not fail a run
};

/// Every check in evaluation order.
const std::vector<CheckInfo>& check_registry();
const CheckInfo& check_info(const std::string& name);  // throws UnknownNameError

/// Expands family and check names into check names, registry order, no duplicates.
/// An empty selection means every check. Throws UnknownNameError.
std::vector<std::string> resolve_checks(const std::vector<std::string>& selection);

std::vector<std::string> default_catalog();

struct AuditLimits {
  int max_order = kDefaultMaxOrder;
  int edge_color_cutoff = 40;
  int chromatic_ii_cap = 11;
  std::uint64_t max_connection_sets = 0;  // per (G, H); 0 means no cap
  std::uint64_t max_mismatch_records = 25;  // per check, kept and shrunk; 0 keeps all
  int parallelism = 1;
  bool shrink = true;
  bool full_records = false;
};

struct AuditRecord {
  std::string group;
  Mask h = 0;
  Mask c = 0;
  std::string h_text;
  std::string c_text;
  std::string check;
  std::string predicted;
  std::string observed;
  Verdict verdict = Verdict::Agree;
  std::string witness;
  bool audited = false;
};

/// Lazily computed theorem and oracle data for one instance.
class InstanceContext {
 public:
  InstanceContext(const GroupTable& group, Mask h, Mask c, const AuditLimits& limits);
  ~InstanceContext();
  InstanceContext(const InstanceContext&) = delete;
  InstanceContext& operator=(const InstanceContext&) = delete;

  AuditRecord evaluate(const std::string& check);

  const GroupTable& group() const { return *group_; }
  Mask h() const { return h_; }
  Mask c() const { return c_; }

  struct Cache;

 private:
  const GroupTable* group_;
  Mask h_, c_;
  AuditLimits limits_;
  std::unique_ptr<Cache> cache_;
};

/// One-shot evaluation of a check on (G, H, C).
AuditRecord evaluate_check(const GroupTable& group, Mask h, Mask c, const std::string& check,
                           const AuditLimits& limits = {});

struct CatalogEntry {
  std::string spec;
  int order = 0;
  int proper_subgroups = 0;
  std::uint64_t connection_sets = 0;  // full count per subgroup
  std::uint64_t instances = 0;        // instances actually scanned
};

struct MismatchEntry {
  AuditRecord record;
  AuditRecord shrunk;
};

struct AuditReport {
  std::vector<std::string> checks;
  AuditLimits limits;
  std::vector<CatalogEntry> catalog;
  std::map<std::string, std::map<Verdict, std::uint64_t>> totals;
  std::vector<MismatchEntry> mismatches;
  std::vector<AuditRecord> records;  // only with full_records
  std::uint64_t instances = 0;
  double wall_seconds = 0;  // reported on the side; kept out of the JSON

  std::uint64_t count(const std::string& check, Verdict v) const;
  /// Mismatches in checks that are not marked audited.
  std::uint64_t failing_mismatches() const;
};

AuditReport run_audit(const std::vector<std::string>& catalog, const std::vector<std::string>& checks,
                      const AuditLimits& limits = {});

/// Greedily drops inverse orbits from C, then moves to smaller subgroups H,
/// while the record's check still mismatches. Idempotent.
AuditRecord shrink_counterexample(const GroupTable& group, const AuditRecord& record,
                                  const AuditLimits& limits = {});

/// Connection-set indices scanned for one (G, H) pair: all of them, or a
/// stratified deterministic sample when the cap binds.
std::vector<std::uint64_t> select_connection_sets(const ConnectionSetEnumerator& en, std::uint64_t cap,
                                                  std::uint64_t seed);

std::string report_json(const AuditReport& report);
std::string report_csv(const AuditReport& report);
std::string report_text(const AuditReport& report);

}  // namespace relcay
