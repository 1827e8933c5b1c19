#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_path() {
  const char* bin = std::getenv("ESEQ_CLI_BIN");
  REQUIRE_MESSAGE(bin != nullptr,
                  "ESEQ_CLI_BIN must point at the CLI binary");
  return bin;
}

RunResult run_cli(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  res.exit_code = WEXITSTATUS(status);
  return res;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    if (end > start) out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> out;
  for (const std::string& line : lines_of(text)) {
    out.push_back(json::parse(line));
  }
  return out;
}

}  // namespace

TEST_CASE("cli trajectory emits one record per step") {
  RunResult res = run_cli("trajectory --x 7 --n 5");
  CHECK(res.exit_code == 0);
  std::vector<json> rows = json_lines(res.out);
  REQUIRE(rows.size() == 5);
  const char* xs[] = {"11", "17", "13", "5", "1"};
  const int as[] = {1, 1, 2, 3, 4};
  const int bs[] = {1, 2, 4, 7, 11};
  const char* Bs[] = {"1", "5", "19", "73", "347"};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(rows[i]["schema"] == 1);
    CHECK(rows[i]["type"] == "trajectory-step");
    CHECK(rows[i]["k"] == i + 1);
    CHECK(rows[i]["x"] == xs[i]);
    CHECK(rows[i]["a"] == as[i]);
    CHECK(rows[i]["b"] == bs[i]);
    CHECK(rows[i]["B"] == Bs[i]);
  }
}

TEST_CASE("cli trajectory from 1 repeats the 1-cycle") {
  RunResult res = run_cli("trajectory --x 1 --n 2");
  CHECK(res.exit_code == 0);
  std::vector<json> rows = json_lines(res.out);
  REQUIRE(rows.size() == 2);
  for (const json& row : rows) {
    CHECK(row["a"] == 2);
    CHECK(row["x"] == "1");
  }
}

TEST_CASE("cli trajectory rejects even starts") {
  CHECK(run_cli("trajectory --x 4 --n 3").exit_code == 2);
}

TEST_CASE("cli trajectory csv format") {
  RunResult res = run_cli("--format csv trajectory --x 7 --n 3");
  CHECK(res.exit_code == 0);
  std::vector<std::string> rows = lines_of(res.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "type,k,x,a,b,B");
  CHECK(rows[1] == "trajectory-step,1,11,1,1,1");
  CHECK(rows[2] == "trajectory-step,2,17,1,2,5");
  CHECK(rows[3] == "trajectory-step,3,13,2,4,19");
}

TEST_CASE("cli omega converges on explicit prefixes and trajectories") {
  RunResult res = run_cli("omega --gen explicit:1,1,2,3,4");
  CHECK(res.exit_code == 0);
  std::vector<json> rows = json_lines(res.out);
  REQUIRE(!rows.empty());
  json summary = rows.back();
  CHECK(summary["type"] == "omega-summary");
  CHECK(summary["verdict"] == "convergent-to");
  CHECK(summary["witness"] == "7");
  CHECK(summary["depth"] == 5);

  RunResult r27 = run_cli("omega --x 27 --max-n 200");
  std::vector<json> rows27 = json_lines(r27.out);
  REQUIRE(!rows27.empty());
  json s27 = rows27.back();
  CHECK(s27["verdict"] == "convergent-to");
  CHECK(s27["witness"] == "27");
}

TEST_CASE("cli omega reports divergence evidence past the threshold") {
  RunResult res = run_cli("omega --gen powers2 --threshold 2^64");
  CHECK(res.exit_code == 0);
  std::vector<json> rows = json_lines(res.out);
  REQUIRE(!rows.empty());
  CHECK(rows.back()["verdict"] == "divergent-evidence");

  RunResult ones = run_cli("omega --gen 'periodic:(1)' --threshold 2^64");
  CHECK(ones.exit_code == 0);
  std::vector<json> ones_rows = json_lines(ones.out);
  REQUIRE(!ones_rows.empty());
  CHECK(ones_rows.back()["verdict"] == "divergent-evidence");
  CHECK(ones_rows.back()["depth"] == 65);
}

TEST_CASE("cli omega never certifies the squares generator") {
  RunResult res = run_cli("omega --gen squares --max-n 120");
  CHECK(res.exit_code == 0);
  for (const json& row : json_lines(res.out)) {
    if (row["type"] == "omega-summary") {
      CHECK(row["verdict"] != "divergent-certified");
    }
  }
}

TEST_CASE("cli omega requires exactly one source") {
  CHECK(run_cli("omega").exit_code == 2);
  CHECK(run_cli("omega --x 7 --gen powers2").exit_code == 2);
}

TEST_CASE("cli periodic decision records") {
  RunResult res = run_cli("periodic --periodic 2");
  CHECK(res.exit_code == 0);
  std::vector<json> rows = json_lines(res.out);
  REQUIRE(rows.size() == 1);
  const json& row = rows[0];
  CHECK(row["type"] == "periodic-verdict");
  CHECK(row["verdict"] == "convergent-to");
  CHECK(row["witness"] == "1");
  CHECK(row["x_cycle"] == "1/1");
  CHECK(row["canonical_l"] == 0);
  CHECK(row["canonical_r"] == 1);

  std::vector<json> ones_rows = json_lines(run_cli("periodic --periodic 1").out);
  REQUIRE(!ones_rows.empty());
  const json& ones = ones_rows[0];
  CHECK(ones["verdict"] == "divergent-certified");
  CHECK(ones["criterion"] == "periodic-exponent-deficit");
  CHECK(ones["x_cycle"] == "-1/1");

  std::vector<json> entry_rows =
      json_lines(run_cli("periodic --prefix 1,4 --periodic 2").out);
  REQUIRE(!entry_rows.empty());
  const json& entry = entry_rows[0];
  CHECK(entry["verdict"] == "convergent-to");
  CHECK(entry["witness"] == "3");
  CHECK(entry["x0_candidate"] == "3/1");
  CHECK(entry["s"] == 2);
  CHECK(entry["b_l"] == 5);
  CHECK(entry["B_r"] == "1");
  CHECK(entry["terms"] == json::array({1, 4, 2}));
}

TEST_CASE("cli sweep enumerates canonical specs deterministically") {
  RunResult res = run_cli("sweep-periodic --l-max 0 --r-max 2 --term-max 2");
  CHECK(res.exit_code == 0);
  std::vector<json> rows = json_lines(res.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0]["terms"] == json::array({1}));
  CHECK(rows[0]["verdict"] == "divergent-certified");
  CHECK(rows[1]["terms"] == json::array({2}));
  CHECK(rows[1]["verdict"] == "convergent-to");
  CHECK(rows[1]["witness"] == "1");
  CHECK(rows[2]["terms"] == json::array({1, 2}));
  CHECK(rows[2]["verdict"] == "divergent-certified");
  CHECK(rows[3]["terms"] == json::array({2, 1}));
  CHECK(rows[3]["verdict"] == "divergent-certified");

  RunResult threaded =
      run_cli("sweep-periodic --l-max 0 --r-max 2 --term-max 2 --threads 3");
  CHECK(threaded.out == res.out);
}

TEST_CASE("cli sweep covers the cycle entry example") {
  RunResult res = run_cli("sweep-periodic --l-max 2 --r-max 1 --term-max 4");
  CHECK(res.exit_code == 0);
  bool found = false;
  for (const json& row : json_lines(res.out)) {
    if (row["terms"] == json::array({1, 4, 2})) {
      found = true;
      CHECK(row["verdict"] == "convergent-to");
      CHECK(row["witness"] == "3");
    }
  }
  CHECK(found);
}

TEST_CASE("cli sweep with empty bounds emits nothing") {
  RunResult res = run_cli("sweep-periodic --l-max 0 --r-max 0 --term-max 3");
  CHECK(res.exit_code == 0);
  CHECK(lines_of(res.out).empty());
}

TEST_CASE("cli sturmian certifies the critical density") {
  RunResult res = run_cli("sturmian --theta log2_3 --max-n 30");
  CHECK(res.exit_code == 0);
  std::vector<json> rows = json_lines(res.out);
  REQUIRE(!rows.empty());
  CHECK(rows.front()["type"] == "sturmian-terms");
  json summary = rows.back();
  CHECK(summary["type"] == "sturmian-summary");
  CHECK(summary["verdict"] == "divergent-certified");
  CHECK(summary["criterion"] == "sturmian-critical-density");
  CHECK(summary["family"] == "log2-3-floors");
}

TEST_CASE("cli sturmian reduces rational theta") {
  std::vector<json> rows = json_lines(run_cli("sturmian --theta 3/2").out);
  REQUIRE(!rows.empty());
  CHECK(rows.back()["verdict"] == "divergent-certified");
  CHECK(rows.back()["criterion"] == "periodic-exponent-deficit");
}

TEST_CASE("cli sturmian walks subcritical convergents") {
  RunResult res = run_cli("sturmian --theta 'cf:1,(2)' --max-n 200");
  CHECK(res.exit_code == 0);
  std::vector<json> rows = json_lines(res.out);
  REQUIRE(!rows.empty());
  int convergent_rows = 0;
  for (const json& row : rows) {
    if (row["type"] == "sturmian-convergent") {
      ++convergent_rows;
      if (convergent_rows == 2) {
        CHECK(row["s"] == "3");
        CHECK(row["r"] == "2");
        CHECK(row["side"] == 1);
        CHECK(row["depth"] == 5);
        CHECK(row["bound"] == "39/1");
      }
    }
  }
  CHECK(convergent_rows >= 4);
  CHECK(rows.back()["criterion"] == "sturmian-subcritical-density");
}

TEST_CASE("cli sturmian exits 4 when the expansion cannot decide") {
  CHECK(run_cli("sturmian --theta cf:1,1,1,2,2").exit_code == 4);
}

TEST_CASE("cli verify suites pass") {
  for (const char* args : {"verify --suite bounds45 --n-max 300",
                           "verify --suite bounds48 --n-max 25",
                           "verify --suite diagnostics410 --n-max 301",
                           "verify --suite split26 --n-max 40 --samples 40",
                           "verify --suite mw41 --n-max 120 --samples 20"}) {
    RunResult res = run_cli(args);
    CHECK(res.exit_code == 0);
    std::vector<json> rows = json_lines(res.out);
    REQUIRE(!rows.empty());
    json summary = rows.back();
    CHECK(summary["type"] == "verify-result");
    CHECK(summary["pass"] == true);
    CHECK(summary["violations"] == 0);
    CHECK(summary["checked"].get<std::uint64_t>() > 0);
  }
}

TEST_CASE("cli verify rejects unknown suites") {
  CHECK(run_cli("verify --suite nope").exit_code == 2);
}

TEST_CASE("cli usage errors exit 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("trajectory --n 3").exit_code == 2);
  CHECK(run_cli("trajectory --x 7 --n 3 --bogus").exit_code == 2);
}

TEST_CASE("cli bit cap aborts exit 3") {
  CHECK(run_cli("trajectory --x 7 --n 100000 --bit-cap 64").exit_code == 3);
  CHECK(run_cli("omega --gen explicit:900000,200000 --bit-cap 1048576"
                " --threshold 2^1000001")
            .exit_code == 3);
}

TEST_CASE("cli reads the bit cap from the environment") {
  setenv("ESEQ_BIT_CAP", "64", 1);
  RunResult res = run_cli("trajectory --x 7 --n 100000");
  unsetenv("ESEQ_BIT_CAP");
  CHECK(res.exit_code == 3);
}

TEST_CASE("cli config file supplies defaults") {
  const char* path = "eseq_test_config.ini";
  {
    std::ofstream f(path);
    f << "format=json\n\n[omega]\nmax-n=60\n";
  }
  RunResult res = run_cli(std::string("--config ") + path + " omega --x 27");
  std::remove(path);
  CHECK(res.exit_code == 0);
  std::vector<json> rows = json_lines(res.out);
  REQUIRE(!rows.empty());
  CHECK(rows.back()["verdict"] == "convergent-to");
  CHECK(rows.back()["witness"] == "27");
}

TEST_CASE("cli writes to an output file when asked") {
  const char* path = "eseq_test_output.jsonl";
  RunResult res = run_cli(std::string("--output ") + path +
                          " trajectory --x 7 --n 2");
  CHECK(res.exit_code == 0);
  CHECK(res.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  std::string line;
  REQUIRE(std::getline(f, line));
  json row = json::parse(line);
  CHECK(row["x"] == "11");
  f.close();
  std::remove(path);
}

TEST_CASE("cli output is deterministic") {
  RunResult a = run_cli("omega --gen sturmian:log2_3 --max-n 200");
  RunResult b = run_cli("omega --gen sturmian:log2_3 --max-n 200");
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}
