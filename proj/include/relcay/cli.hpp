#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relcay {

struct CliConfig {
  int max_order = 64;
  int edge_color_cutoff = 40;
  int chromatic_ii_cap = 11;
  int parallelism = 1;
  std::string format = "text";  // json | csv | dot | text
  bool full_records = false;
};

/// Order cap from RELCAY_MAX_ORDER, else 64.
int default_max_order();

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 on usage or library errors, 2 when audit/check saw a mismatch in a check
/// that is not marked audited.
int execute_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relcay
