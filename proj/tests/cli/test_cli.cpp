#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

std::string cli_binary() {
  const char* bin = std::getenv("GPW_CLI_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "GPW_CLI_BIN must point at the gpw binary");
  return bin;
}

std::string golden_dir() {
  const char* dir = std::getenv("GPW_GOLDEN_DIR");
  REQUIRE_MESSAGE(dir != nullptr, "GPW_GOLDEN_DIR must point at the golden files");
  return dir;
}

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string command = env + " \"" + cli_binary() + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

json golden(const std::string& name) {
  std::ifstream in(golden_dir() + "/" + name);
  REQUIRE_MESSAGE(in.good(), ("missing golden file " + name).c_str());
  json j;
  in >> j;
  return j;
}

void check_schema(const json& j) {
  REQUIRE(j.is_object());
  CHECK(j.size() == 4);
  CHECK(j.contains("command"));
  CHECK(j.contains("input"));
  CHECK(j.contains("result"));
  CHECK(j.contains("diagnostics"));
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("json outputs match the golden files") {
  const struct {
    const char* args;
    const char* file;
  } cases[] = {
      {"generate '1^w;(EERR)^w' --steps 6 --format json", "generate_up6.json"},
      {"normalize '(011)^w;(EER)^w' --format json", "normalize_eer.json"},
      {"normalize '1^w;(EERR)^w' --format json", "normalize_up.json"},
      {"periodicity '(011)^w;(EER)^w' --format json", "periodicity_eer.json"},
      {"periodicity '1^w;(EERR)^w' --format json", "periodicity_up.json"},
      {"complexity '1^w;(EERR)^w' --n-max 10 --format json", "complexity_up10.json"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.args);
    const RunResult r = run(c.args);
    CHECK(r.exit_code == 0);
    const json actual = json::parse(r.output);
    check_schema(actual);
    CHECK(actual == golden(c.file));
  }
}

TEST_CASE("text mode wraps long words at 53 letters") {
  const RunResult r = run("generate '1^w;(EERR)^w' --steps 7");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.output);
  std::string line, last_word_line;
  bool saw_53 = false, saw_24 = false;
  while (std::getline(lines, line)) {
    if (line.rfind("k=7", 0) == 0) {
      std::string w1, w2;
      std::getline(lines, w1);
      std::getline(lines, w2);
      saw_53 = w1.size() == 53;
      saw_24 = w2.size() == 24;  // |w_7| = 77 = 53 + 24
    }
  }
  CHECK(saw_53);
  CHECK(saw_24);
}

TEST_CASE("csv header and row shape") {
  const RunResult r = run("complexity '0^w;R^w' --n-max 3 --format csv");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.output);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,C,dC,d2C,saturated");
  std::getline(lines, line);
  CHECK(line == "0,1,0,0,true");
  std::getline(lines, line);
  CHECK(line == "1,1,0,0,true");
}

TEST_CASE("svg chart is written as a single self-contained file") {
  const std::string path = "/tmp/gpw_cli_test_chart.svg";
  std::remove(path.c_str());
  const RunResult r =
      run("complexity '1^w;(EERR)^w' --n-max 16 --format csv --svg " + path);
  CHECK(r.exit_code == 0);
  std::ifstream svg(path);
  REQUIRE(svg.good());
  std::stringstream content;
  content << svg.rdbuf();
  CHECK(content.str().rfind("<svg", 0) == 0);
  CHECK(content.str().find("4n") != std::string::npos);
  CHECK(content.str().find("polyline") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("exit codes: usage, parse, resource cap, verification") {
  CHECK(run("verify-4n --n-max 9").exit_code == 2);
  CHECK(run("generate '1^w;(EERR)^w'").exit_code == 2);  // neither --steps nor --length
  CHECK(run("periodicity '1^w;(EXRR)^w'").exit_code == 2);
  CHECK(run("periodicity '1^w(EERR)^w'").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("generate '1^w;(EERR)^w' --steps 25", "PSEUDO_GROWTH_CAP=1000").exit_code == 3);
  CHECK(run("generate '1^w;(EERR)^w' --steps 5", "PSEUDO_GROWTH_CAP=1000").exit_code == 0);
}

TEST_CASE("verify-4n passes at headline scale") {
  const RunResult r = run("verify-4n --n-max 32 --k-max 1 --format json");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.output);
  check_schema(j);
  CHECK(j["result"]["passed"] == true);
  CHECK(j["result"]["c10"] == 42);
  CHECK(j["result"]["delta_c9"] == 6);
  CHECK(j["result"]["violations"].empty());
}

TEST_CASE("sweep is deterministic under a seed and exits zero on agreement") {
  const RunResult r = run("sweep --count 12 --seed 42 --n-max 128 --format json");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.output);
  check_schema(j);
  CHECK(j["result"]["agreements"] == 12);
  CHECK(j["result"]["mismatches"].empty());
  const RunResult again = run("sweep --count 12 --seed 42 --n-max 128 --format json");
  CHECK(json::parse(again.output) == j);
}

TEST_CASE("generate --length emits the exact prefix") {
  const RunResult r = run("generate '0^w;R^w' --length 5");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "00000\n");
  const RunResult json_run = run("generate '(011)^w;(EER)^w' --length 8 --format json");
  const json j = json::parse(json_run.output);
  CHECK(j["result"]["prefix"] == "01100110");
  CHECK(j["result"]["length"] == 8);
}

TEST_SUITE_END();
