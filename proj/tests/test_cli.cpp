#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "doctest.h"

using nlohmann::json;

namespace {

const char* kCli = SNELL_CLI_PATH;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// run a shell pipeline with the CLI available as $SNELL, capturing stdout
RunResult run(const std::string& pipeline) {
  static int counter = 0;
  std::string out_path = "/tmp/snell_cli_test_" + std::to_string(counter++) + ".out";
  std::string cmd =
      "( SNELL=" + std::string(kCli) + "; " + pipeline + " ) > " + out_path + " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  std::remove(out_path.c_str());
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("help and usage errors") {
  CHECK(run("$SNELL --help").exit_code == 0);
  CHECK(run("$SNELL gen --help").exit_code == 0);
  CHECK(run("$SNELL does-not-exist").exit_code == 2);
  CHECK(run("$SNELL gen bn").exit_code == 2);  // missing size argument
}

TEST_CASE("generated posets verify end to end") {
  RunResult r = run("$SNELL gen bn 3 | $SNELL verify-snelling -");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "snelling: yes"));

  CHECK(run("$SNELL gen pin 4 | $SNELL verify-el -").exit_code == 0);
  CHECK(run("$SNELL gen nc 4 | $SNELL check-graded -").exit_code == 0);
  CHECK(run("$SNELL gen nc 4 | $SNELL supersolvable --method both -").exit_code == 0);
}

TEST_CASE("generator argument validation") {
  CHECK(run("$SNELL gen bn 21").exit_code == 2);  // above the size cap
  CHECK(run("$SNELL gen pin 1").exit_code == 2);  // family needs at least two points
  CHECK(run("$SNELL gen pin 8").exit_code == 2);  // above the size cap
}

TEST_CASE("negative verdicts exit with one and explain themselves") {
  RunResult lat = run("$SNELL fixture b4-minus-edge | $SNELL check-lattice -");
  CHECK(lat.exit_code == 1);
  CHECK(contains(lat.out, "lattice: no"));
  CHECK(contains(lat.out, "pair {1,3,4}, {2,3,4} has no meet"));
  CHECK(contains(lat.out, "maximal lower bounds: {3}, {4}"));

  RunResult none = run(
      "printf '%s' '{\"elements\":[\"a\",\"b\",\"c\",\"d\",\"e\",\"f\"],"
      "\"covers\":[[\"a\",\"b\"],[\"a\",\"c\"],[\"b\",\"d\"],[\"b\",\"e\"],"
      "[\"c\",\"d\"],[\"c\",\"e\"],[\"d\",\"f\"],[\"e\",\"f\"]]}'"
      " | $SNELL find-snelling -");
  CHECK(none.exit_code == 1);
  CHECK(contains(none.out, "none exists"));
}

TEST_CASE("the bundled action reconstructs to nothing") {
  RunResult r = run("$SNELL fixture bowtie-action | $SNELL reconstruct -");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "(2,1)"));
  CHECK(contains(r.out, "(1,2)"));
  CHECK(contains(r.out, "312"));
  CHECK(contains(r.out, "231"));
}

TEST_CASE("verdict commands emit machine-readable reports on request") {
  RunResult r = run("$SNELL fixture bowtie-action | $SNELL verify-good --json -");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["command"] == "verify-good");
  CHECK(j["ok"] == true);
  CHECK(j["format"] == 1);
  CHECK(j["ch"]["{}"] == 1);
  CHECK(j["ch"]["{1}"] == 1);
  CHECK(j["ch"]["{2}"] == 1);
  CHECK(j["ch"]["{1,2}"] == 1);

  // byte-stable across runs
  RunResult again = run("$SNELL fixture bowtie-action | $SNELL verify-good --json -");
  CHECK(r.out == again.out);

  // the flag also works in front of the subcommand
  RunResult front = run("$SNELL fixture bowtie-action | $SNELL --json verify-good -");
  CHECK(front.out == r.out);
}

TEST_CASE("verify-hecke reports the failing relation") {
  RunResult r = run(
      "$SNELL fixture bowtie-action -o /tmp/snell_cli_bowtie.json && "
      "$SNELL verify-hecke /tmp/snell_cli_bowtie.json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "relations: ok"));
  std::remove("/tmp/snell_cli_bowtie.json");
}

TEST_CASE("malformed input exits with two") {
  CHECK(run("printf '{ nope' | $SNELL check-graded -").exit_code == 2);
  CHECK(run("printf '[]' | $SNELL check-graded -").exit_code == 2);
  CHECK(run("$SNELL check-graded /tmp/snell_cli_missing_file.json").exit_code == 2);
  // labels required but absent
  RunResult strip = run(
      "printf '%s' '{\"elements\":[\"a\",\"b\"],\"covers\":[[\"a\",\"b\"]]}'"
      " | $SNELL verify-snelling -");
  CHECK(strip.exit_code == 2);
}

TEST_CASE("labeling, action, and recovery form a verified loop") {
  RunResult r = run(
      "$SNELL gen pin 4 -o /tmp/snell_cli_pin4.json && "
      "$SNELL build-action /tmp/snell_cli_pin4.json -o /tmp/snell_cli_pin4_action.json && "
      "$SNELL verify-hecke /tmp/snell_cli_pin4_action.json && "
      "$SNELL verify-good /tmp/snell_cli_pin4_action.json && "
      "$SNELL reconstruct /tmp/snell_cli_pin4_action.json -o /tmp/snell_cli_pin4_back.json");
  CHECK(r.exit_code == 0);

  // the reconstructed document carries the same labels
  json a = json::parse(std::ifstream("/tmp/snell_cli_pin4.json"));
  json b = json::parse(std::ifstream("/tmp/snell_cli_pin4_back.json"));
  CHECK(a["labels"] == b["labels"]);
  for (const char* f : {"/tmp/snell_cli_pin4.json", "/tmp/snell_cli_pin4_action.json",
                        "/tmp/snell_cli_pin4_back.json"})
    std::remove(f);
}

TEST_CASE("closure report for a chain of the noncrossing lattice") {
  RunResult r = run(
      "$SNELL gen nc 4 | $SNELL qm - --chain 1-2-3-4 24-1-3 234-1 1234");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "321"));
  CHECK(contains(r.out, "8"));  // closure element count

  RunResult bad = run("$SNELL gen nc 4 | $SNELL qm - --chain 1-2-3-4 1234");
  CHECK(bad.exit_code == 2);

  RunResult noflag = run("$SNELL gen nc 4 | $SNELL qm -");
  CHECK(noflag.exit_code == 2);
}

TEST_CASE("flag vector and series output") {
  RunResult fv = run("$SNELL gen bn 3 | $SNELL flag-vectors -");
  CHECK(fv.exit_code == 0);
  CHECK(contains(fv.out, "{1,2}"));

  RunResult fp = run("$SNELL gen bn 3 | $SNELL fp - -m 3");
  CHECK(fp.exit_code == 0);
  CHECK(contains(fp.out, "x1 x2 x3: 6"));

  RunResult sym = run("$SNELL gen bn 3 | $SNELL fp - --omega");
  CHECK(sym.exit_code == 0);
}
