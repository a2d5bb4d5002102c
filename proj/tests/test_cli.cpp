#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(EQMON_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string strip_timing(const std::string& text) {
  std::string out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.find("elapsed_ms") == std::string::npos) out += line + "\n";
  }
  return out;
}

}  // namespace

TEST_CASE("family generation") {
  RunResult r = run("family gen --n 2 --xi 01");
  CHECK(r.exit_code == 0);
  // 48 whitespace-separated tokens
  std::istringstream is(r.output);
  std::string token;
  size_t count = 0;
  while (is >> token) ++count;
  CHECK(count == 48);
  CHECK(r.output.find("x2_2 x1_2") != std::string::npos);  // the swapped pair
}

TEST_CASE("identity checks and exit codes") {
  RunResult violated = run("check --monoid b21 \"x y z x y = y x z y x\"");
  CHECK(violated.exit_code == 1);
  CHECK(violated.output.find("violated") != std::string::npos);

  RunResult satisfied = run("check --monoid q8 \"x y z x y = y x z y x\"");
  CHECK(satisfied.exit_code == 0);
  CHECK(satisfied.output.find("satisfied") != std::string::npos);

  RunResult family_check = run("check --words xytzsxzy \"w_00 = w_01\"");
  CHECK(family_check.exit_code == 0);

  RunResult usage = run("check \"x = x\"");
  CHECK(usage.exit_code == 2);

  RunResult bad = run("frobnicate");
  CHECK(bad.exit_code != 0);
}

TEST_CASE("json outputs parse") {
  RunResult r = run("--json check --monoid b21 \"x x = x x x\"");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["overall"] == "pass");

  RunResult m = run("--json monoid show b21");
  CHECK(m.exit_code == 0);
  nlohmann::json mj = nlohmann::json::parse(m.output);
  CHECK(mj["names"].size() == 6);

  RunResult fam = run("--json factor-monoid build xyx");
  nlohmann::json fj = nlohmann::json::parse(fam.output);
  CHECK(fj["elements"] == 7);

  RunResult lemma = run("--json verify lemma directly --n 2");
  CHECK(lemma.exit_code == 0);
  nlohmann::json lj = nlohmann::json::parse(lemma.output);
  CHECK(lj["violations"].empty());
  CHECK(lj["instances"] == 4);
}

TEST_CASE("rewrite subcommands") {
  std::string sigma_path = std::string(EQMON_TEST_DIR) + "/sigma_square.txt";
  {
    std::ofstream f(sigma_path);
    f << "x x = x x x\n";
  }
  RunResult closure = run("--json rewrite closure --sigma " + sigma_path +
                          " --from \"x x\" --maxlen 5");
  CHECK(closure.exit_code == 0);
  nlohmann::json cj = nlohmann::json::parse(closure.output);
  CHECK(cj["exhausted"] == true);
  CHECK(cj["words"].size() == 4);

  RunResult derivable = run("--json rewrite derivable --sigma " + sigma_path +
                            " --from \"x x\" --to \"x x x x\" --maxlen 6");
  nlohmann::json dj = nlohmann::json::parse(derivable.output);
  CHECK(dj["found"] == true);
  CHECK(dj["path"].size() == 3);
  std::remove(sigma_path.c_str());
}

TEST_CASE("lattice subcommands") {
  RunResult eq = run("lattice eq --n 3");
  CHECK(eq.exit_code == 0);
  std::istringstream is(eq.output);
  std::string line;
  size_t lines = 0;
  while (std::getline(is, line)) ++lines;
  CHECK(lines == 5);

  RunResult n5 = run("lattice embed --lattice n5 --n 4");
  CHECK(n5.exit_code == 0);
  CHECK(n5.output.find("verified") != std::string::npos);

  RunResult none = run("lattice embed --lattice n5 --n 3");
  CHECK(none.exit_code == 1);
}

TEST_CASE("identical runs give identical json") {
  RunResult a = run("--json check --words \"x y x\" \"x y = y x\"");
  RunResult b = run("--json check --words \"x y x\" \"x y = y x\"");
  CHECK(strip_timing(a.output) == strip_timing(b.output));
}

TEST_CASE("a monoid exported as json can be loaded back") {
  std::string path = std::string(EQMON_TEST_DIR) + "/d5.json";
  RunResult dump = run("--json monoid show d5");
  CHECK(dump.exit_code == 0);
  {
    std::ofstream f(path);
    f << dump.output;
  }
  RunResult check = run("check --monoid " + path + " \"x y z x y = y x z y x\"");
  CHECK(check.exit_code == 1);  // dihedral groups violate it
  RunResult sat = run("check --monoid " + path + " \"x x = x x x x x x x x x x x x\"");
  CHECK(sat.exit_code == 0);  // exponent 10: x^2 = x^12
  std::remove(path.c_str());

  std::string bad = std::string(EQMON_TEST_DIR) + "/bad.json";
  {
    std::ofstream f(bad);
    f << "{\"names\": [\"1\"], \"table\": [[0, 0]], \"identity\": 0}";
  }
  RunResult broken = run("monoid show " + bad);
  CHECK(broken.exit_code == 2);
  std::remove(bad.c_str());
}

TEST_CASE("reduce subcommand") {
  RunResult r = run("--json reduce \"x y t x y = x y t y x\"");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["steps"].size() == 1);
  CHECK(j["steps"][0]["kind"] == "island_swap");
}

TEST_CASE("isoterm subcommand") {
  RunResult iso = run("isoterm --monoid b21 xyzxy --maxlen 6");
  CHECK(iso.exit_code == 0);
  CHECK(iso.output.find("isoterm up to length 6") != std::string::npos);

  RunResult counter = run("isoterm --monoid trivial \"x y\" --maxlen 2");
  CHECK(counter.exit_code == 1);
  CHECK(counter.output.find("counterexample") != std::string::npos);
}
