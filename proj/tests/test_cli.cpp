#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <nlohmann/json.hpp>
#include <sstream>

#include "relcay/cli.hpp"

using relcay::execute_command;

namespace {

struct Run {
  int rc;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int rc = execute_command(args, out, err);
  return {rc, out.str(), err.str()};
}

std::string line_of(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.rfind(prefix, 0) == 0) return line;
  return {};
}

}  // namespace

TEST_CASE("check command") {
  const Run r = run({"check", "D5", "--subgroup", "a", "--conn", "a,a4,b", "--theorem", "chromatic"});
  CHECK(r.rc == 0);
  CHECK(line_of(r.out, "chromatic_upper:").find("observed 3") != std::string::npos);
  CHECK(line_of(r.out, "chromatic_equality:").find("agree") != std::string::npos);
  CHECK(run({"check", "D5", "--subgroup", "a", "--conn", "a,a4,b", "--theorem", "nope"}).rc == 1);
}

TEST_CASE("figures summary") {
  const Run r = run({"figures"});
  REQUIRE(r.rc == 0);
  for (const auto& [name, counts] : std::vector<std::pair<std::string, std::string>>{
           {"fig1 ", "nodes=10 edges=10"}, {"fig2 ", "nodes=10 edges=20"}, {"fig3 ", "nodes=8 edges=10"}}) {
    CHECK(line_of(r.out, name).find(counts) != std::string::npos);
  }
  CHECK(line_of(r.out, "fig1 ").find("chi=3") != std::string::npos);
  CHECK(line_of(r.out, "fig2 ").find("chi=4") != std::string::npos);
  CHECK(line_of(r.out, "fig3 ").find("bipartite=true") != std::string::npos);

  const auto dir = std::filesystem::temp_directory_path() / "relcay_cli_figs";
  std::filesystem::remove_all(dir);
  CHECK(run({"figures", "--out", dir.string()}).rc == 0);
  CHECK(std::filesystem::exists(dir / "fig1.dot"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("build and invariants") {
  const Run dot = run({"build", "C4", "--subgroup", "a2", "--conn", "a,a3", "--dot"});
  CHECK(dot.rc == 0);
  CHECK(dot.out.rfind("graph ", 0) == 0);
  const Run inv = run({"invariants", "C4", "--subgroup", "a2", "--conn", "a,a3"});
  CHECK(inv.rc == 0);
  CHECK(inv.out.find("diameter") != std::string::npos);
}

TEST_CASE("audit command") {
  const Run r = run({"audit", "--catalog", "C4", "--checks", "regular"});
  CHECK(r.rc == 0);
  CHECK(r.err.find("8 instances") != std::string::npos);
  const Run j = run({"audit", "--catalog", "C4,S3", "--checks", "alpha", "--format", "json"});
  CHECK(j.rc == 0);
  const auto doc = nlohmann::json::parse(j.out);
  // C4: 2 proper subgroups x 4 sets; S3: 5 proper subgroups x 16 sets
  CHECK(doc["totals"]["instances"] == 2 * 4 + 5 * 16);
  const Run csv = run({"audit", "--catalog", "C3", "--checks", "alpha", "--format", "csv", "--full"});
  CHECK(csv.out.rfind("instance_group,", 0) == 0);
  // chromatic_equality is not audited, so its mismatches fail the run
  CHECK(run({"audit", "--catalog", "C4", "--checks", "chromatic_equality"}).rc == 2);
  CHECK(run({"audit", "--catalog", "S3", "--checks", "square_free_as_printed"}).rc == 0);
}

TEST_CASE("errors and exit codes") {
  const Run usage = run({"audit", "--bogus"});
  CHECK(usage.rc == 1);
  CHECK(usage.err.rfind("usage error:", 0) == 0);
  CHECK(run({}).rc == 1);
  const Run bad = run({"build", "Q7", "--subgroup", "a", "--conn", "a"});
  CHECK(bad.rc == 1);
  CHECK(bad.err.rfind("error[", 0) == 0);
  const Run conn = run({"build", "C4", "--subgroup", "a2", "--conn", "a"});
  CHECK(conn.rc == 1);
  CHECK(conn.err.find("inverse") != std::string::npos);
  CHECK(run({"audit", "--catalog", "C4", "--checks", "nope"}).rc == 1);
  CHECK(run({"audit", "--catalog", "C4", "--format", "xml"}).rc == 1);
}

TEST_CASE("order cap from the environment") {
  ::setenv("RELCAY_MAX_ORDER", "6", 1);
  CHECK(relcay::default_max_order() == 6);
  const Run capped = run({"audit", "--catalog", "C8", "--checks", "alpha"});
  CHECK(capped.rc == 1);
  CHECK(capped.err.find("capacity") != std::string::npos);
  CHECK(run({"audit", "--catalog", "C8", "--checks", "alpha", "--max-order", "8"}).rc == 0);
  ::unsetenv("RELCAY_MAX_ORDER");
  CHECK(relcay::default_max_order() == 64);
}
