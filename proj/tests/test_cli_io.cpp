// End-to-end checks of the command-line tool: output contracts, format
// round trips, and exit codes.  The binary path is injected at build time.
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {
constexpr double kPi = std::numbers::pi;

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SRL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
  return out;
}

double num(const std::string& cell) { return std::strtod(cell.c_str(), nullptr); }
}  // namespace

TEST_CASE("geodesic subcommand: CSV header and pinned rows") {
  const RunResult r =
      run_cli("geodesic --phi0 0 --beta 0 --tmax 1.7 --samples 2");
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "t,m11,m12,m13,m21,m22,m23,m31,m32,m33,px,py,pz,u,v");

  const auto first = fields(rows[1]);
  REQUIRE(first.size() == 15);
  CHECK(num(first[0]) == 0.0);
  CHECK(num(first[1]) == 1.0);   // m11
  CHECK(num(first[10]) == 1.0);  // px
  CHECK(num(first[13]) == 0.0);  // u

  const auto last = fields(rows[2]);
  CHECK(num(last[0]) == doctest::Approx(1.7).epsilon(1e-15));
  CHECK(num(last[1]) == doctest::Approx(std::cosh(1.7)).epsilon(1e-14));
  CHECK(num(last[2]) == doctest::Approx(std::sinh(1.7)).epsilon(1e-14));
  CHECK(num(last[13]) == doctest::Approx(1.7).epsilon(1e-12));  // u
  CHECK(std::fabs(num(last[14])) < 1e-12);                      // v
}

TEST_CASE("geodesic subcommand: CSV and JSON carry identical numbers") {
  const std::string args = "geodesic --phi0 0.7 --beta 1.2 --tmax 3 --samples 5";
  const RunResult csv = run_cli(args);
  const RunResult js = run_cli("--format json " + args);
  REQUIRE(csv.code == 0);
  REQUIRE(js.code == 0);

  const auto rows = lines(csv.out);
  REQUIRE(rows.size() == 6);
  const nlohmann::json parsed = nlohmann::json::parse(js.out);
  REQUIRE(parsed.size() == 5);

  for (std::size_t i = 0; i < 5; ++i) {
    const auto cells = fields(rows[i + 1]);
    REQUIRE(cells.size() == 15);
    const nlohmann::json& row = parsed[i];
    // both formats print shortest-round-trip doubles: bit-exact agreement
    CHECK(num(cells[0]) == row["t"].get<double>());
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        CHECK(num(cells[1 + 3 * a + b]) == row["m"][a][b].get<double>());
    CHECK(num(cells[10]) == row["px"].get<double>());
    CHECK(num(cells[11]) == row["py"].get<double>());
    CHECK(num(cells[12]) == row["pz"].get<double>());
    CHECK(num(cells[13]) == row["u"].get<double>());
    CHECK(num(cells[14]) == row["v"].get<double>());
  }
}

TEST_CASE("cuttable subcommand") {
  const RunResult r = run_cli("cuttable --beta-min 1.9 --beta-max 2.1 --steps 3");
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() >= 5);
  CHECK(rows[0] == "beta,regime,t1,psi,area_residual");

  const auto mid = fields(rows[2]);
  REQUIRE(mid.size() == 5);
  CHECK(num(mid[0]) == 2.0);
  CHECK(mid[1] == "IVa");
  CHECK(num(mid[2]) == doctest::Approx(2 * kPi / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(num(mid[4]) == 0.0);
  CHECK(rows[4].rfind("# monotonicity", 0) == 0);

  const RunResult js =
      run_cli("--format json cuttable --beta-min 1.9 --beta-max 2.1 --steps 3");
  REQUIRE(js.code == 0);
  const nlohmann::json parsed = nlohmann::json::parse(js.out);
  CHECK(parsed["rows"].size() == 3);
  CHECK(parsed["rows"][1]["regime"] == "IVa");
  CHECK(parsed["monotonicity_violations"].empty());
}

TEST_CASE("dist subcommand") {
  const RunResult id = run_cli("dist 1 0 0 0 1 0 0 0 1");
  REQUIRE(id.code == 0);
  CHECK(num(fields(lines(id.out)[0])[1]) == 0.0);

  // exp(a): boosts along the horizontal subgroup have distance 1
  std::ostringstream boost;
  boost.precision(17);
  boost << "dist " << std::cosh(1.0) << ' ' << std::sinh(1.0) << " 0 "
        << std::sinh(1.0) << ' ' << std::cosh(1.0) << " 0 0 0 1";
  const RunResult ha = run_cli(boost.str());
  REQUIRE(ha.code == 0);
  CHECK(num(fields(lines(ha.out)[0])[1]) == doctest::Approx(1.0).epsilon(1e-8));

  // rotation by pi: distance pi sqrt(5) reached by two minimizers
  const RunResult rot =
      run_cli("--format json dist 1 0 0 0 -1 0 0 0 -1");
  REQUIRE(rot.code == 0);
  const nlohmann::json parsed = nlohmann::json::parse(rot.out);
  CHECK(parsed["distance"].get<double>() ==
        doctest::Approx(kPi * std::sqrt(5.0)).epsilon(1e-10));
  CHECK(parsed["minimizers"].size() == 2);

  // the matrix can also arrive on stdin
  const RunResult piped = run_cli("dist --matrix \"1,0,0,0,1,0,0,0,1\"");
  REQUIRE(piped.code == 0);
  CHECK(num(fields(lines(piped.out)[0])[1]) == 0.0);
}

TEST_CASE("cutpoint and expmap subcommands") {
  const RunResult cp = run_cli("--format json cutpoint --beta 2");
  REQUIRE(cp.code == 0);
  const nlohmann::json parsed = nlohmann::json::parse(cp.out);
  CHECK(parsed["regime"] == "IVa");
  CHECK(parsed["in_so2"].get<bool>());
  CHECK(parsed["t1"].get<double>() ==
        doctest::Approx(2 * kPi / std::sqrt(3.0)).epsilon(1e-12));

  const RunResult em = run_cli("expmap --ca 1 --cb 0 --cc 0");
  REQUIRE(em.code == 0);
  const auto rows = lines(em.out);
  REQUIRE(rows.size() == 2);
  CHECK(num(fields(rows[1])[0]) == doctest::Approx(std::cosh(1.0)).epsilon(1e-14));
}

TEST_CASE("exit codes") {
  // scaled matrix fails group membership
  CHECK(run_cli("dist 2 0 0 0 2 0 0 0 2").code == 2);
  // malformed argument set
  CHECK(run_cli("geodesic --beta 1").code == 2);
  CHECK(run_cli("geodesic --tmax -1").code == 2);
  CHECK(run_cli("dist 1 2 3").code == 2);

  // valid group element whose minimizer lies outside the default beta span
  const RunResult hard = run_cli(
      "dist --matrix \"1.0121550457380855 -0.11981080249645762 "
      "-0.10051471642610747 -0.11061252659436321 1.0027951925756218 "
      "-0.081467372529195003 -0.11055634569520315 0.093575798912256702 "
      "1.0017316384298793\"");
  CHECK(hard.code == 3);
}
