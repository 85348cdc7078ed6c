// End-to-end tests against the installed binary: every documented example,
// exit code, and the byte-determinism guarantee.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(GASKETWALK_CLI_PATH) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

double field(const std::string& table_output, const std::string& key) {
  std::istringstream in(table_output);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key, 0) == 0) {
      const auto eq = line.find('=');
      REQUIRE(eq != std::string::npos);
      return std::stod(line.substr(eq + 1));
    }
  }
  FAIL("field not found: " << key);
  return 0.0;
}

}  // namespace

TEST_CASE("formula examples") {
  CHECK(run_cli("formula --variant 1to3 --n 2").out == "64/3\n");
  CHECK(run_cli("formula --variant 1toA --n 6 --format json").out ==
        "{\"num\":\"364\",\"den\":\"1\"}\n");

  RunResult grid = run_cli("formula --all --n-max 1");
  CHECK(grid.exit_code == 0);
  std::istringstream in(grid.out);
  std::string header, row;
  std::getline(in, header);
  CHECK(contains(header, "n=1"));
  bool saw_rtoa = false;
  while (std::getline(in, row)) {
    if (row.rfind("rtoA", 0) == 0) {
      saw_rtoa = true;
      std::istringstream cells(row);
      std::string name, value;
      cells >> name >> value;
      CHECK(value == "0");
    }
  }
  CHECK(saw_rtoa);

  RunResult csv = run_cli("formula --all --n-max 3 --format csv");
  CHECK(contains(csv.out, "variant,n=1,n=2,n=3"));
  CHECK(contains(csv.out, "1to3,2,64/3,1274/9"));
  CHECK(contains(csv.out, "rto1,4/3,146/9,3034/27"));
}

TEST_CASE("exact examples") {
  CHECK(run_cli("exact --variant rto1 --n 2").out == "146/9\n");
  CHECK(contains(run_cli("exact --pq --n 2").out, "p1 = 5/8"));
  CHECK(contains(run_cli("exact --pq --n 2").out, "q3 = 1/4"));
  CHECK(run_cli("exact --variant 1to3 --n 13").exit_code == 3);

  json pq = json::parse(run_cli("exact --pq --n 2 --format json").out);
  CHECK(pq["p2"]["num"] == "3");
  CHECK(pq["p2"]["den"] == "16");

  // Float mode converges to the same value.
  const double f64 = std::stod(run_cli("exact --variant 1to3 --n 4 --mode f64").out);
  CHECK(f64 == doctest::Approx(21760.0 / 27.0).epsilon(1e-9));
  // ...unless starved of sweeps, which is a reported solver failure.
  CHECK(run_cli("exact --variant 1to3 --n 4 --mode f64 --max-sweeps 2").exit_code == 4);
}

TEST_CASE("simulate example: mean near 4 with a small z-score") {
  RunResult r = run_cli("simulate --n 2 --variant 1toA --trials 100000 --seed 42");
  REQUIRE(r.exit_code == 0);
  CHECK(field(r.out, "mean") == doctest::Approx(4.0).epsilon(0.05));
  CHECK(std::abs(field(r.out, "z")) < 4.0);
  CHECK(contains(r.out, "exact    = 4\n"));

  // Identical flags reproduce identical bytes; worker count changes nothing.
  RunResult again = run_cli("simulate --n 2 --variant 1toA --trials 100000 --seed 42");
  CHECK(r.out == again.out);
  RunResult threaded =
      run_cli("simulate --n 2 --variant 1toA --trials 100000 --seed 42 --workers 4");
  CHECK(r.out == threaded.out);

  json j = json::parse(
      run_cli("simulate --n 2 --variant 1toA --trials 1000 --seed 1 --format json").out);
  CHECK(j["trials"] == 1000);
  CHECK(j["exact"]["num"] == "4");
  CHECK(j["censored"] == 0);
}

TEST_CASE("simulate rejects bad configs") {
  CHECK(run_cli("simulate --n 2 --variant 1toA --trials 0").exit_code == 2);
  CHECK(run_cli("simulate --n 2 --trials 10").exit_code == 2);        // variant required
  CHECK(run_cli("simulate --n 2 --variant nope --trials 10").exit_code == 2);
}

TEST_CASE("cv estimation through the CLI") {
  RunResult r = run_cli("simulate --n 2 --variant 1to3 --trials 2000 --seed 3 --cv");
  REQUIRE(r.exit_code == 0);
  CHECK(field(r.out, "cv") > 0.0);
  RunResult again = run_cli("simulate --n 2 --variant 1to3 --trials 2000 --seed 3 --cv");
  CHECK(r.out == again.out);
}

TEST_CASE("resist examples") {
  RunResult r1 = run_cli("resist --n 1");
  CHECK(contains(r1.out, "R       = 1/3\n"));
  CHECK(contains(r1.out, "one-way = 2\n"));
  CHECK(contains(run_cli("resist --n 3").out, "one-way = 1274/9\n"));

  json r64 = json::parse(run_cli("resist --n 64 --format json").out);
  const std::string num = r64["one_way"]["num"];
  const std::string den = r64["one_way"]["den"];
  CHECK(num.size() > 40);  // 5^64-scale numerator, exact
  CHECK(den == "1144561273430837494885949696427");  // 3^63
}

TEST_CASE("verify: deterministic report, clean exit") {
  RunResult a = run_cli("verify --n-max 3 --trials 1000 --seed 7");
  CHECK(a.exit_code == 0);
  CHECK(contains(a.out, "PASS"));
  RunResult b = run_cli("verify --n-max 3 --trials 1000 --seed 7");
  CHECK(a.out == b.out);
}

TEST_CASE("verify: fault injection flips the exit code and names the culprit") {
  fs::path dir = fs::temp_directory_path() / "gasketwalk-cli-inject";
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "A003462.txt");
    out << "1 1\n2 4\n3 14\n";
  }
  RunResult r = run_cli("verify --n-max 2 --trials 1000 --seed 7 --fixture-dir " + dir.string());
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "[FAIL]"));
  CHECK(contains(r.out, "A003462"));
  CHECK(contains(r.out, "index 3"));
  fs::remove_all(dir);
}

TEST_CASE("oeis examples") {
  RunResult r = run_cli("oeis A007798 --count 5");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "0 2 18 116 660\n"));
  CHECK(contains(r.out, "fixture: PASS"));

  CHECK(contains(run_cli("oeis A003462 --count 6").out, "1 4 13 40 121 364\n"));
  CHECK(run_cli("oeis A000000").exit_code == 5);
  CHECK(run_cli("oeis a226511 --count 4").out.substr(0, 10) == "0 3 24 147");

  json j = json::parse(run_cli("oeis A000244 --count 4 --format json").out);
  CHECK(j["terms"] == json::array({"1", "3", "9", "27"}));
  CHECK(j["fixture"]["passed"] == true);
}

TEST_CASE("graph export") {
  CHECK(run_cli("graph --n 1").out == "0 1\n0 2\n1 2\n");
  CHECK(run_cli("graph --n 15").exit_code == 3);

  fs::path out = fs::temp_directory_path() / "gasketwalk-cli-edges.txt";
  CHECK(run_cli("graph --n 2 --out " + out.string()).exit_code == 0);
  std::ifstream in(out);
  std::string first;
  std::getline(in, first);
  CHECK(first == "0 1");
  std::size_t lines = 1;
  while (std::getline(in, first)) ++lines;
  CHECK(lines == 12);
  fs::remove(out);
}

TEST_CASE("argument errors exit 2, help exits 0") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("formula --help").exit_code == 0);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("formula").exit_code == 2);                       // no variant, no --all
  CHECK(run_cli("formula --variant 1to3").exit_code == 2);        // --n missing
  CHECK(run_cli("formula --variant 1to3 --n 0").exit_code == 2);
  CHECK(run_cli("formula --variant zzz --n 2").exit_code == 2);
  CHECK(run_cli("exact --n 2").exit_code == 2);                   // neither --variant nor --pq
  CHECK(run_cli("exact --pq --variant 1to3 --n 2").exit_code == 2);
  CHECK(run_cli("verify --n-max 9").exit_code == 2);
  CHECK(run_cli("oeis").exit_code == 2);
}

TEST_CASE("variant spellings are case-insensitive") {
  CHECK(run_cli("formula --variant RTOA --n 2").out == "2\n");
  CHECK(run_cli("formula --variant HALFTOA --n 2").out == "3\n");
  CHECK(run_cli("formula --variant HalfToA --n 2").out == "3\n");
}
