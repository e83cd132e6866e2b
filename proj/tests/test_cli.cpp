// End-to-end tests of the command-line tool, driven through a shell.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

constexpr double kPi = 3.14159265358979323846;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(VDW_CLI_PATH) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

const char* kStaticAtom = R"('{"alpha_e":{"static":1.0}}')";

}  // namespace

TEST_CASE("energy: retarded electric limit in vacuum") {
  const RunResult r = run_cli(
      std::string("energy --separation 5 --atom-a ") + kStaticAtom +
      " --atom-b " + kStaticAtom + " --terms ee");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  const double expected = -23.0 / (4.0 * kPi * std::pow(5.0, 7));
  CHECK(std::abs(j["W_ee"].get<double>() - expected) < 1e-8 * std::abs(expected));
  CHECK(j["W_total"] == j["W_ee"]);
  CHECK(j["method"] == "modesum");
  CHECK(j["converged"] == true);
  CHECK(j["err"].contains("ee"));
}

TEST_CASE("energy: mixed term vanishes for purely electric atoms") {
  const RunResult r = run_cli(
      std::string("energy --separation 2 --atom-a ") + kStaticAtom +
      " --atom-b " + kStaticAtom + " --terms em");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["W_em"].get<double>() == 0.0);
}

TEST_CASE("energy: green method stands alone") {
  const RunResult r = run_cli(
      std::string("energy --separation 5 --method green --terms ee --atom-a ") +
      kStaticAtom + " --atom-b " + kStaticAtom);
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  const double expected = -23.0 / (4.0 * kPi * std::pow(5.0, 7));
  CHECK(std::abs(j["W_ee"].get<double>() - expected) < 1e-7 * std::abs(expected));
  CHECK(j["method"] == "green");
}

TEST_CASE("energy: both methods report the path discrepancy") {
  const RunResult r = run_cli(
      "energy --separation 1.5 --method both"
      " --atom-a '{\"alpha_e\":{\"two_level\":{\"w0\":1.0,\"alpha0\":0.8}}}'"
      " --atom-b '{\"alpha_e\":{\"static\":0.6},\"alpha_m\":{\"static\":0.2}}'"
      " --medium '{\"eps\":{\"terms\":[{\"wp\":1.1,\"w0\":0.9,\"gamma\":0.2}]}}'");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  REQUIRE(j.contains("path_discrepancy"));
  CHECK(j["path_discrepancy"].get<double>() <= 1e-6);
  CHECK(j["method"] == "both");
}

TEST_CASE("energy: malformed spec exits 1 and names the field") {
  const RunResult r = run_cli(
      "energy --separation 2 --atom-a '{\"alpha_e\":{\"static\":-1}}'");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("alpha_e.static") != std::string::npos);

  const RunResult bad_medium = run_cli(
      std::string("energy --separation 2 --atom-a ") + kStaticAtom +
      " --medium '{\"eps\":{\"terms\":[{\"w0\":1.0}]}}'");
  CHECK(bad_medium.exit_code == 1);
  CHECK(bad_medium.output.find("medium.eps.terms[0].wp") != std::string::npos);
}

TEST_CASE("energy: unreachable tolerance exits 2") {
  const RunResult r = run_cli(
      std::string("energy --separation 2 --rel-tol 1e-30 --abs-tol 1e-300 "
                  "--atom-a ") + kStaticAtom + " --atom-b " + kStaticAtom +
      " --terms ee");
  CHECK(r.exit_code == 2);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["converged"] == false);
}

TEST_CASE("energy: usage errors exit 1") {
  CHECK(run_cli("energy").exit_code == 1);                    // missing separation
  CHECK(run_cli("energy --separation -1").exit_code == 1);    // not positive
  CHECK(run_cli("bogus").exit_code == 1);                     // unknown subcommand
  CHECK(run_cli("energy --separation 1 --no-such-flag 1").exit_code == 1);
}

TEST_CASE("dratio: limits, ordering, row count") {
  const RunResult r =
      run_cli("dratio --C 0 --C 3 --r-min 1e-4 --r-max 10 --points 6 --spacing log");
  REQUIRE(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 7);  // header + 6 points
  CHECK(rows[0] == std::vector<std::string>{"r", "D_C0", "D_C3"});

  const double d0 = std::stod(rows[1][1]);
  const double d3 = std::stod(rows[1][2]);
  CHECK(std::abs(d0 - 1.0) < 1e-3);
  CHECK(std::abs(d3 - 0.125) < 1e-3);
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(std::stod(rows[i][2]) < std::stod(rows[i][1]));
}

TEST_CASE("dratio: exactly --points data rows") {
  const RunResult r = run_cli("dratio --C 1 --r-min 0.1 --r-max 1 --points 2");
  REQUIRE(r.exit_code == 0);
  CHECK(parse_csv(r.output).size() == 3);  // header + 2
}

TEST_CASE("dratio: byte-identical reruns") {
  const std::string args = "dratio --C 0 --C 3 --r-min 0.01 --r-max 10 --points 5 --spacing log";
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("VDW_THREADS caps parallelism without changing the output") {
  const std::string args = "dratio --C 3 --r-min 0.1 --r-max 5 --points 6 --spacing log";
  const RunResult base = run_cli(args);
  REQUIRE(base.exit_code == 0);
  const std::string capped_cmd = "VDW_THREADS=1 " + std::string(VDW_CLI_PATH) +
                                 " " + args + " 2>&1";
  FILE* pipe = popen(capped_cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string capped;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) capped.append(buf, n);
  REQUIRE(pclose(pipe) == 0);
  CHECK(capped == base.output);
}

TEST_CASE("sweep: retarded slope and sign columns") {
  const RunResult r = run_cli(
      std::string("sweep --r-min 5 --r-max 50 --points 9 --spacing log "
                  "--atom-a '{\"alpha_e\":{\"static\":1.0},\"alpha_m\":{\"static\":0.2}}' "
                  "--atom-b '{\"alpha_e\":{\"static\":1.0},\"alpha_m\":{\"static\":0.2}}'"));
  REQUIRE(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0][0] == "R");

  double prev_r = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double rr = std::stod(rows[i][0]);
    CHECK(rr > prev_r);
    prev_r = rr;
    CHECK(std::stod(rows[i][1]) <= 0.0);  // W_ee
    CHECK(std::stod(rows[i][3]) >= 0.0);  // W_em
  }

  // log-log slope of |W_ee| across the decade: -7
  const double r1 = std::stod(rows[1][0]), w1 = std::abs(std::stod(rows[1][1]));
  const double r2 = std::stod(rows[9][0]), w2 = std::abs(std::stod(rows[9][1]));
  const double slope = (std::log(w2) - std::log(w1)) / (std::log(r2) - std::log(r1));
  CHECK(std::abs(slope + 7.0) < 0.05);
}

TEST_CASE("sweep: zero polarizabilities give zero columns") {
  const RunResult r = run_cli(
      "sweep --r-min 1 --r-max 2 --points 3 --atom-a '{}' --atom-b '{}'");
  REQUIRE(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  for (std::size_t i = 1; i < rows.size(); ++i)
    for (int c = 1; c <= 4; ++c) CHECK(std::stod(rows[i][c]) == 0.0);
}

TEST_CASE("sweep: json format") {
  const RunResult r = run_cli(
      std::string("sweep --r-min 1 --r-max 2 --points 2 --format json --atom-a ") +
      kStaticAtom + " --atom-b " + kStaticAtom);
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  REQUIRE(j.is_array());
  CHECK(j.size() == 2);
  CHECK(j[0]["R"] == 1.0);
}

TEST_CASE("config file supplies flags, command line wins") {
  const std::string cfg_path = "/tmp/vdw_cli_test_config.json";
  {
    std::ofstream f(cfg_path);
    f << R"({"energy": {"separation": 2.0, "terms": "ee",
             "atom-a": "{\"alpha_e\":{\"static\":1.0}}",
             "atom-b": "{\"alpha_e\":{\"static\":1.0}}"}})";
  }
  const RunResult from_cfg = run_cli("energy --config " + cfg_path);
  REQUIRE(from_cfg.exit_code == 0);
  const auto j1 = nlohmann::json::parse(from_cfg.output);
  CHECK(j1["R"].get<double>() == 2.0);

  const RunResult overridden =
      run_cli("energy --separation 4.0 --config " + cfg_path);
  REQUIRE(overridden.exit_code == 0);
  const auto j2 = nlohmann::json::parse(overridden.output);
  CHECK(j2["R"].get<double>() == 4.0);
  std::remove(cfg_path.c_str());
}

TEST_CASE("--out writes the payload to a file") {
  const std::string out_path = "/tmp/vdw_cli_test_out.json";
  const RunResult r = run_cli(
      std::string("energy --separation 3 --out ") + out_path + " --atom-a " +
      kStaticAtom + " --atom-b " + kStaticAtom + " --terms ee");
  REQUIRE(r.exit_code == 0);
  std::ifstream f(out_path);
  REQUIRE(f.good());
  nlohmann::json j;
  f >> j;
  CHECK(j["R"].get<double>() == 3.0);
  std::remove(out_path.c_str());
}

TEST_CASE("validate --quick passes on a fresh build") {
  const RunResult r = run_cli("validate --quick");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("PASS") != std::string::npos);
  CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("validate with an unreachable tolerance fails loudly") {
  const RunResult r = run_cli("validate --quick --rel-tol 1e-30 --abs-tol 1e-300");
  CHECK(r.exit_code != 0);
  CHECK(r.output.find("FAIL") != std::string::npos);
}
