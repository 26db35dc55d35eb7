// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "qmom/moments.hpp"

using namespace qmom;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(QMOMENTS_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

// first data row whose first column equals key; returns the full line
std::string find_row(const std::string& csv, const std::string& key) {
  std::istringstream is(csv);
  std::string line;
  while (std::getline(is, line))
    if (line.rfind(key + ",", 0) == 0) return line;
  return {};
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string cell;
  while (std::getline(is, cell, ',')) out.push_back(cell);
  return out;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("--help") == 0);
  CHECK(run("nonsense-subcommand") == 2);
  CHECK(run("thresholds --nmax 2") == 2);
  CHECK(run("histogram --state product") == 2);  // seed required
  CHECK(run("scan --class bogus --seed 1 --samples 1") == 2);
  CHECK(run("designs-verify --names octahedron") == 0);
}

TEST_CASE("designs-verify reports and certifies") {
  const std::string out = "/tmp/qmom_cli_dv.csv";
  CHECK(run("designs-verify --out " + out) == 0);
  const auto csv = slurp(out);
  CHECK(csv.rfind("name,kind,declared_t,t,statistic,value,pass", 0) == 0);
  CHECK(csv.find("octahedron,spherical,3,4,residual,0.13") != std::string::npos);
  {
    std::istringstream is(csv);
    std::string line;
    bool found = false;
    while (std::getline(is, line))
      if (line.rfind("sl2f5,unitary,5,5,frame_potential,", 0) == 0) {
        found = true;
        CHECK(std::abs(std::stod(split(line)[5]) - 42.0) < 1e-9);
      }
    CHECK(found);
  }
  CHECK(csv.find("FAIL") == std::string::npos);

  // a design file that overclaims its strength exits 3
  const std::string bad = "/tmp/qmom_cli_bad.json";
  {
    std::ofstream f(bad);
    f << R"({"kind":"spherical","name":"octa7","t":7,"points":[)"
      << R"([1,0,0],[-1,0,0],[0,1,0],[0,-1,0],[0,0,1],[0,0,-1]]})";
  }
  CHECK(run("designs-verify --names octahedron --design " + bad) == 3);
  std::remove(bad.c_str());
  std::remove(out.c_str());
}

TEST_CASE("histogram summary matches closed forms") {
  const std::string out = "/tmp/qmom_cli_hist.csv";
  CHECK(run("histogram --state werner --samples 20000 --seed 7 --out " + out) == 0);
  const auto csv = slurp(out);
  const double r2 = std::stod(split(find_row(csv, "r2_empirical"))[2]);
  const double se2 = std::stod(split(find_row(csv, "r2_stderr"))[2]);
  CHECK(std::abs(r2 - 1.0 / 9.0) < 3.0 * se2 + 1e-12);

  // maximally mixed: all sampled E values are zero
  CHECK(run("histogram --state mixed --samples 200 --seed 3 --out " + out) == 0);
  const auto mm = slurp(out);
  CHECK(std::stod(split(find_row(mm, "r4_empirical"))[2]) == 0.0);
  std::remove(out.c_str());
}

TEST_CASE("scan landmarks match library closed forms") {
  const std::string out = "/tmp/qmom_cli_scan.csv";
  CHECK(run("scan --class w --n 3 --samples 5 --seed 11 --out " + out) == 0);
  auto csv = slurp(out);
  {
    const auto w = split(find_row(csv, "landmark_w"));
    CHECK(std::abs(std::stod(w[2]) - 11.0 / 81.0) < 1e-10);
    CHECK(std::abs(std::stod(w[3]) - 3561.0 / 91125.0) < 1e-10);
    const auto qb = split(find_row(csv, "landmark_qubit_bell"));
    CHECK(std::abs(std::stod(qb[2]) - 1.0 / 9.0) < 1e-10);
    CHECK(std::abs(std::stod(qb[3]) - 1.0 / 25.0) < 1e-10);
  }
  CHECK(run("scan --class generic --n 4 --samples 5 --seed 11 --out " + out) == 0);
  csv = slurp(out);
  {
    const auto bb = split(find_row(csv, "landmark_bell_bell"));
    CHECK(std::abs(std::stod(bb[2]) - 1.0 / 9.0) < 1e-10);
    CHECK(std::abs(std::stod(bb[3]) - 1.0 / 25.0) < 1e-10);
    const auto gh = split(find_row(csv, "landmark_ghz"));
    CHECK(std::abs(std::stod(gh[2]) - 1.0 / 9.0) < 1e-10);
    CHECK(std::abs(std::stod(gh[3]) - ghz_r4(4)) < 1e-10);
  }
  std::remove(out.c_str());
}

TEST_CASE("reruns are byte-identical") {
  const std::string a = "/tmp/qmom_cli_a.csv", b = "/tmp/qmom_cli_b.csv";
  CHECK(run("scan --class w-mixed --n 3 --samples 20 --seed 42 --out " + a) == 0);
  CHECK(run("scan --class w-mixed --n 3 --samples 20 --seed 42 --out " + b) == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(!slurp(a).empty());

  CHECK(run("scan --class w-mixed --n 3 --samples 20 --seed 43 --out " + b) == 0);
  CHECK(slurp(a) != slurp(b));

  CHECK(run("histogram --state w_marginal --samples 500 --seed 9 --out " + a) == 0);
  CHECK(run("histogram --state w_marginal --samples 500 --seed 9 --out " + b) == 0);
  CHECK(slurp(a) == slurp(b));
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("thresholds output") {
  const std::string out = "/tmp/qmom_cli_thr.csv";
  CHECK(run("thresholds --nmax 6 --out " + out) == 0);
  const auto csv = slurp(out);
  const auto r3 = split(find_row(csv, "3"));
  CHECK(std::abs(std::stod(r3[1]) - 0.042572) < 1e-4);
  CHECK(std::abs(std::stod(r3[3]) - 2.0 / 7.0) < 1e-12);
  const auto r4 = split(find_row(csv, "4"));
  CHECK(std::abs(std::stod(r4[1]) - 1.0 / 3.0) < 1e-9);
  CHECK(std::abs(std::stod(r4[3]) - 8.0 / 15.0) < 1e-12);
  const auto r6 = split(find_row(csv, "6"));
  CHECK(std::stod(r6[1]) > std::stod(r6[3]));  // crossover reached at N = 6
  std::remove(out.c_str());
}

TEST_CASE("boundary curves") {
  const std::string out = "/tmp/qmom_cli_bd.csv";
  CHECK(run("boundary --family bell_diagonal --samples 50 --out " + out) == 0);
  auto csv = slurp(out);
  CHECK(find_row(csv, "marker_full_coverage_r2").find("0.037037037037037") !=
        std::string::npos);
  const auto corner = split(find_row(csv, "marker_bell_corner"));
  CHECK(std::abs(std::stod(corner[1]) - 1.0 / 3.0) < 1e-12);
  CHECK(std::abs(std::stod(corner[2]) - 1.0 / 5.0) < 1e-12);

  CHECK(run("boundary --family three_qubit_bisep --samples 50 --out " + out) == 0);
  csv = slurp(out);
  const auto mk = split(find_row(csv, "marker_qubit_bell"));
  // the conjectured parabola passes through (1/9, 1/25)
  const double r2 = std::stod(mk[1]);
  CHECK(std::abs((972.0 * r2 * r2 + 90.0 * r2 - 5.0) / 425.0 - std::stod(mk[2])) < 1e-10);

  CHECK(run("boundary --family nope --out " + out) == 2);
  std::remove(out.c_str());
}

TEST_CASE("json format") {
  const std::string out = "/tmp/qmom_cli_js.json";
  CHECK(run("thresholds --nmax 4 --format json --out " + out) == 0);
  const auto js = slurp(out);
  CHECK(js.rfind("[", 0) == 0);
  CHECK(js.find("\"p_star\":") != std::string::npos);
  std::remove(out.c_str());
}
