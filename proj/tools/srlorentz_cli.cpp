// Command-line surface: trajectory sampling, cut-time tables, distance
// queries, and raw exponentials, in CSV or JSON for plotting tools.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "srlorentz/boundary_solver.hpp"
#include "srlorentz/cut_locus.hpp"
#include "srlorentz/geodesics.hpp"
#include "srlorentz/hyperbolic_plane.hpp"
#include "srlorentz/lie_core.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace srlorentz;

constexpr int kExitInvalidInput = 2;
constexpr int kExitSolverFailure = 3;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Output {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open output path: " + path);
    f << text;
  }
};

json matrix_json(const Mat3& m) {
  json j = json::array();
  for (int i = 0; i < 3; ++i)
    j.push_back({m(i, 0), m(i, 1), m(i, 2)});
  return j;
}

// Accept 9 reals row-major, whitespace- or comma-separated.
Mat3 parse_matrix(const std::string& text) {
  std::string cleaned = text;
  for (char& ch : cleaned)
    if (ch == ',') ch = ' ';
  std::istringstream in(cleaned);
  Mat3 m;
  for (int k = 0; k < 9; ++k)
    if (!(in >> m.a[static_cast<std::size_t>(k)]))
      throw std::invalid_argument("matrix input needs 9 reals, row-major");
  double extra;
  if (in >> extra) throw std::invalid_argument("matrix input has trailing values");
  return m;
}

int cmd_geodesic(double phi0, double beta, double t_max, int samples,
                 const std::string& format, const Output& out) {
  if (samples < 2) throw std::invalid_argument("need at least 2 samples");
  if (!(t_max > 0)) throw std::invalid_argument("t_max must be positive");
  const GeodesicParams params(phi0, beta);
  std::ostringstream csv;
  json rows = json::array();
  csv << "t,m11,m12,m13,m21,m22,m23,m31,m32,m33,px,py,pz,u,v\n";
  for (int i = 0; i < samples; ++i) {
    const double t = t_max * i / (samples - 1);
    const SO21Element g = geodesic_matrix(params, t);
    const HyperboloidPoint p = project_to_L2(g);
    const SemigeodesicCoords uv = to_semigeodesic(p);
    if (format == "json") {
      json r;
      r["t"] = t;
      r["m"] = matrix_json(g.m);
      r["px"] = p.t;
      r["py"] = p.x;
      r["pz"] = p.y;
      r["u"] = uv.u;
      r["v"] = uv.v;
      rows.push_back(r);
    } else {
      csv << fmt(t);
      for (double e : g.m.a) csv << ',' << fmt(e);
      csv << ',' << fmt(p.t) << ',' << fmt(p.x) << ',' << fmt(p.y) << ','
          << fmt(uv.u) << ',' << fmt(uv.v) << '\n';
    }
  }
  out.write(format == "json" ? rows.dump(2) + "\n" : csv.str());
  return 0;
}

int cmd_cuttable(double beta_min, double beta_max, int steps,
                 const std::string& format, const Output& out) {
  const CutProfile profile = cut_time_profile(beta_min, beta_max, steps);
  if (format == "json") {
    json j;
    j["rows"] = json::array();
    for (const CutTimeResult& r : profile.rows) {
      json row;
      row["beta"] = r.beta;
      row["regime"] = regime_name(r.regime);
      row["t1"] = r.t1;
      if (r.psi) row["psi"] = *r.psi; else row["psi"] = nullptr;
      row["area_residual"] = r.area_residual;
      j["rows"].push_back(row);
    }
    j["monotonicity_violations"] = json::array();
    for (auto [lo, hi] : profile.violations)
      j["monotonicity_violations"].push_back({lo, hi});
    out.write(j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream csv;
  csv << "beta,regime,t1,psi,area_residual\n";
  for (const CutTimeResult& r : profile.rows) {
    csv << fmt(r.beta) << ',' << regime_name(r.regime) << ',' << fmt(r.t1) << ','
        << (r.psi ? fmt(*r.psi) : std::string("nan")) << ','
        << fmt(r.area_residual) << '\n';
  }
  if (profile.violations.empty()) {
    csv << "# monotonicity: strictly decreasing over the grid\n";
  } else {
    csv << "# monotonicity violations (beta_lo, beta_hi):\n";
    for (auto [lo, hi] : profile.violations)
      csv << "# " << fmt(lo) << ", " << fmt(hi) << '\n';
  }
  out.write(csv.str());
  return 0;
}

json solution_json(const PathSolution& s) {
  json j;
  j["phi0"] = s.phi0;
  j["beta"] = s.beta;
  j["t"] = s.t;
  j["endpoint_error"] = s.endpoint_error;
  j["multiplicity_hint"] = s.multiplicity_hint;
  return j;
}

int cmd_dist(const Mat3& m, double tol_group, const std::string& format,
             const Output& out, const SolverConfig& cfg, bool all_solutions) {
  const SO21Element g = make_so21(m, tol_group);
  const SrLogResult r = sr_log(g, cfg);
  if (!r.ok()) {
    std::cerr << "solver failure: no candidate within gate, best residual "
              << fmt(r.best_residual) << "\n";
    return kExitSolverFailure;
  }
  const auto& sols = r.solutions;
  const std::size_t count =
      all_solutions ? sols.size()
                    : static_cast<std::size_t>(sols.front().multiplicity_hint);
  if (format == "json") {
    json j;
    j["distance"] = sols.front().t;
    j["minimizers"] = json::array();
    for (std::size_t i = 0; i < count; ++i)
      j["minimizers"].push_back(solution_json(sols[i]));
    out.write(j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream csv;
  csv << "distance," << fmt(sols.front().t) << "\n";
  csv << "phi0,beta,t,endpoint_error,multiplicity_hint\n";
  for (std::size_t i = 0; i < count; ++i)
    csv << fmt(sols[i].phi0) << ',' << fmt(sols[i].beta) << ',' << fmt(sols[i].t)
        << ',' << fmt(sols[i].endpoint_error) << ',' << sols[i].multiplicity_hint
        << '\n';
  out.write(csv.str());
  return 0;
}

int cmd_cutpoint(double beta, const std::string& format, const Output& out) {
  const CutTimeResult ct = cut_time(beta);
  const SO21Element g = cut_point(beta);
  const So2Check chk = is_in_so2(g);
  if (format == "json") {
    json j;
    j["beta"] = beta;
    j["regime"] = regime_name(ct.regime);
    j["t1"] = ct.t1;
    j["matrix"] = matrix_json(g.m);
    j["in_so2"] = chk.member;
    if (chk.member) j["angle"] = chk.angle;
    out.write(j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream csv;
  csv << "beta," << fmt(beta) << "\nregime," << regime_name(ct.regime)
      << "\nt1," << fmt(ct.t1) << "\nin_so2," << (chk.member ? 1 : 0) << "\n";
  if (chk.member) csv << "angle," << fmt(chk.angle) << "\n";
  csv << "m11,m12,m13,m21,m22,m23,m31,m32,m33\n";
  for (std::size_t k = 0; k < 9; ++k)
    csv << fmt(g.m.a[k]) << (k + 1 < 9 ? ',' : '\n');
  out.write(csv.str());
  return 0;
}

int cmd_expmap(double ca, double cb, double cc, const std::string& format,
               const Output& out) {
  const SO21Element g = exp_so21({ca, cb, cc});
  if (format == "json") {
    json j;
    j["matrix"] = matrix_json(g.m);
    out.write(j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream csv;
  csv << "m11,m12,m13,m21,m22,m23,m31,m32,m33\n";
  for (std::size_t k = 0; k < 9; ++k)
    csv << fmt(g.m.a[k]) << (k + 1 < 9 ? ',' : '\n');
  out.write(csv.str());
  return 0;
}

Mat3 matrix_from_inputs(const std::vector<double>& entries,
                        const std::string& matrix_text) {
  if (!entries.empty()) {
    if (entries.size() != 9)
      throw std::invalid_argument("matrix input needs 9 reals, row-major");
    Mat3 m;
    for (std::size_t k = 0; k < 9; ++k) m.a[k] = entries[k];
    return m;
  }
  if (!matrix_text.empty()) return parse_matrix(matrix_text);
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return parse_matrix(buf.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geodesics, cut times, and distances of the left-invariant "
               "sub-Riemannian metric on SO0(2,1)"};
  app.require_subcommand(1);

  std::string format = "csv";
  std::string out_path;
  double tol_group = kGroupTol;
  SolverConfig cfg;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out_path, "output path (default stdout)");
  app.add_option("--tol-group", tol_group, "group membership tolerance");
  app.add_option("--gate", cfg.gate, "solver endpoint gate");

  double phi0 = 0.0, beta = 0.0, t_max = 1.0;
  int samples = 100;
  auto* geo = app.add_subcommand("geodesic", "sample a geodesic trajectory");
  geo->add_option("--phi0", phi0, "initial horizontal direction (rad)");
  geo->add_option("--beta", beta, "vertical parameter");
  geo->add_option("--tmax", t_max, "arclength range")->required();
  geo->add_option("--samples", samples, "number of rows");

  double beta_min = 0.1, beta_max = 2.0;
  int steps = 50;
  auto* cut = app.add_subcommand("cuttable", "tabulate cut times over a beta grid");
  cut->add_option("--beta-min", beta_min, "grid start (> 0)")->required();
  cut->add_option("--beta-max", beta_max, "grid end")->required();
  cut->add_option("--steps", steps, "grid size");

  std::vector<double> entries;
  std::string matrix_text;
  auto* dist = app.add_subcommand("dist", "sub-Riemannian distance to a group element");
  dist->add_option("entries", entries, "9 matrix entries, row-major");
  dist->add_option("--matrix", matrix_text, "matrix as one string (also read from stdin)");

  std::vector<double> log_entries;
  std::string log_matrix_text;
  auto* logc = app.add_subcommand("log", "all recovered geodesic parameters for a target");
  logc->add_option("entries", log_entries, "9 matrix entries, row-major");
  logc->add_option("--matrix", log_matrix_text, "matrix as one string (also read from stdin)");

  double cp_beta = 1.0;
  auto* cpt = app.add_subcommand("cutpoint", "endpoint of the noncontinuable shortest arc");
  cpt->add_option("--beta", cp_beta, "vertical parameter (nonzero)")->required();

  double ca = 0.0, cb = 0.0, cc = 0.0;
  auto* expc = app.add_subcommand("expmap", "closed-form exponential of an algebra element");
  expc->add_option("--ca", ca, "coordinate along a");
  expc->add_option("--cb", cb, "coordinate along b");
  expc->add_option("--cc", cc, "coordinate along c");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalidInput;
  }

  const Output out{out_path};
  try {
    if (geo->parsed()) return cmd_geodesic(phi0, beta, t_max, samples, format, out);
    if (cut->parsed()) return cmd_cuttable(beta_min, beta_max, steps, format, out);
    if (dist->parsed())
      return cmd_dist(matrix_from_inputs(entries, matrix_text), tol_group, format,
                      out, cfg, false);
    if (logc->parsed())
      return cmd_dist(matrix_from_inputs(log_entries, log_matrix_text), tol_group,
                      format, out, cfg, true);
    if (cpt->parsed()) return cmd_cutpoint(cp_beta, format, out);
    if (expc->parsed()) return cmd_expmap(ca, cb, cc, format, out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::runtime_error& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kExitSolverFailure;
  }
  return 0;
}
