#include "srlorentz/boundary_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace srlorentz {

namespace {

constexpr double kPi = std::numbers::pi;

// Arclength candidate pinned by n(beta, t) = n_target.  Branch 0 is the
// principal solution; branch 1 exists only in the trigonometric regime
// (second preimage of n before the projection closes up).
std::optional<double> pinned_t(double beta, double n_target, int branch) {
  const double w = beta * beta - 1.0;
  if (std::fabs(w) < 1e-12) {
    if (branch != 0) return std::nullopt;
    return std::sqrt(2.0 * n_target);
  }
  if (w < 0.0) {
    if (branch != 0) return std::nullopt;
    return std::acosh(1.0 + n_target * (-w)) / std::sqrt(-w);
  }
  const double arg = 1.0 - n_target * w;
  if (arg < -1.0) return std::nullopt;
  const double tau = std::acos(std::min(arg, 1.0));
  const double root_w = std::sqrt(w);
  return branch == 0 ? tau / root_w : (2.0 * kPi - tau) / root_w;
}

struct Candidate {
  GeodesicParams params;
  double t = 0.0;
  double err = 0.0;
};

// Residual rotation of gamma^{-1} g, reported as (sin, cos) of its angle;
// the angle is zero iff the pinned candidate hits the target.  The first
// column matches by construction, so the mismatch is a pure SO(2) factor
// and both components are continuous in beta (unlike the wrapped angle,
// which jumps by 2 pi near the roots).
struct Residual {
  double sin_d = 0.0;
  double cos_d = 0.0;
};

std::optional<Residual> residual_rotation(const SO21Element& g, double ang_col,
                                          double n_target, double beta, int branch,
                                          Candidate* out = nullptr) {
  const auto t = pinned_t(beta, n_target, branch);
  if (!t) return std::nullopt;
  const MNCoefficients mn = mn_coefficients(beta, *t);
  const double phi0 = ang_col - std::atan2(-beta * mn.n, mn.m);
  const GeodesicParams params(phi0, beta);
  const Mat3 d = (inverse(geodesic_matrix(params, *t)) * g).m;
  if (out) {
    out->params = params;
    out->t = *t;
    out->err = max_abs_diff(geodesic_matrix(params, *t).m, g.m);
  }
  return Residual{d(2, 1), d(1, 1)};
}

// Conjugate-set angle equation: rotation by theta is reached first at
// t = 2 pi sqrt(k^2 - 1) with |beta| = k / sqrt(k^2 - 1), k = A / 2 pi.
Candidate so2_candidate(const SO21Element& g, double full_angle, double sign) {
  const double k = full_angle / (2.0 * kPi);
  Candidate c;
  c.params = GeodesicParams(0.0, sign * k / std::sqrt(k * k - 1.0));
  c.t = 2.0 * kPi * std::sqrt(k * k - 1.0);
  c.err = max_abs_diff(geodesic_matrix(c.params, c.t).m, g.m);
  return c;
}

}  // namespace

SrLogResult sr_log(const SO21Element& g, const SolverConfig& cfg) {
  make_so21(g.m, 1e-8);
  SrLogResult res;
  res.best_residual = max_abs_diff(g.m, Mat3::identity());

  if (res.best_residual <= cfg.gate) {
    res.solutions.push_back({0.0, 0.0, 0.0, res.best_residual, 1});
    return res;
  }

  std::vector<Candidate> cands;

  const So2Check near_rot = is_in_so2(g, cfg.so2_tol);
  if (near_rot.member) {
    // theta in (0, pi] is reached by positive beta, [pi, 2 pi) by negative;
    // at theta = pi both arrive together (the IVa boundary).
    const double theta = near_rot.angle;
    cands.push_back(so2_candidate(g, 2.0 * kPi + theta, +1.0));
    cands.push_back(so2_candidate(g, 4.0 * kPi - theta, -1.0));
  } else {
    const double n_target = std::max(0.0, g.m(0, 0) - 1.0);
    const double ang_col = std::atan2(g.m(2, 0), g.m(1, 0));

    // Grid with refinement clusters around the regime boundaries.
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(cfg.beta_samples) + 200);
    for (int i = 0; i < cfg.beta_samples; ++i)
      grid.push_back(-cfg.beta_span +
                     2.0 * cfg.beta_span * i / (cfg.beta_samples - 1));
    for (double b0 : {1.0, 2.0 / std::sqrt(3.0), kCutBoundaryBeta})
      for (int s : {-1, 1})
        for (int i = 0; i <= 24; ++i)
          grid.push_back(s * (b0 - 0.024 + 0.002 * i));
    // The trigonometric branches exist only while n_target (beta^2 - 1) <= 2;
    // roots often sit just inside that feasibility edge, where a uniform
    // grid has no valid bracketing points, so refine geometrically into it.
    if (n_target > 0.0) {
      const double beta_edge = std::sqrt(1.0 + 2.0 / n_target);
      for (int s : {-1, 1})
        for (int j = 0; j <= 48; ++j) {
          const double p = s * (beta_edge - 0.05 * std::pow(2.0, -j));
          if (std::fabs(p) <= cfg.beta_span) grid.push_back(p);
        }
    }
    std::sort(grid.begin(), grid.end());

    for (int branch : {0, 1}) {
      std::optional<Residual> prev;
      double prev_beta = 0.0;
      for (double b : grid) {
        Candidate probe;
        const auto r = residual_rotation(g, ang_col, n_target, b, branch, &probe);
        if (r) {
          res.best_residual = std::min(res.best_residual, probe.err);
          if (std::fabs(r->sin_d) < 1e-13 && r->cos_d > 0.0)
            cands.push_back(probe);
        }
        // Bracket every zero of sin(delta); roots at delta = pi are
        // constructed too but fail the endpoint gate later.
        if (r && prev && r->sin_d * prev->sin_d < 0.0) {
          double lo = prev_beta, hi = b, flo = prev->sin_d;
          for (int it = 0; it < 80 && hi - lo > 1e-15 * (1.0 + std::fabs(hi));
               ++it) {
            const double mid = 0.5 * (lo + hi);
            const auto fm = residual_rotation(g, ang_col, n_target, mid, branch);
            if (!fm) break;
            if (fm->sin_d * flo <= 0.0) {
              hi = mid;
            } else {
              lo = mid;
              flo = fm->sin_d;
            }
          }
          Candidate c;
          residual_rotation(g, ang_col, n_target, 0.5 * (lo + hi), branch, &c);
          cands.push_back(c);
        }
        prev = r;
        prev_beta = b;
      }
    }
  }

  // Keep candidates at or below the cut time that pass the gate; dedupe.
  std::vector<PathSolution> sols;
  for (const Candidate& c : cands) {
    res.best_residual = std::min(res.best_residual, c.err);
    if (c.err > cfg.gate) continue;
    if (c.t > cut_time(c.params.beta).t1 + 1e-9) continue;
    bool dup = false;
    for (const PathSolution& s : sols)
      if (std::fabs(s.beta - c.params.beta) < 1e-7 &&
          std::fabs(s.t - c.t) < 1e-7 &&
          std::fabs(wrap_angle(s.phi0 - c.params.phi0 + kPi) - kPi) < 1e-7)
        dup = true;
    if (!dup)
      sols.push_back({c.params.phi0, c.params.beta, c.t, c.err, 1});
  }
  std::sort(sols.begin(), sols.end(),
            [](const PathSolution& a, const PathSolution& b) { return a.t < b.t; });
  if (!sols.empty()) {
    int mult = 0;
    for (const PathSolution& s : sols)
      if (s.t <= sols.front().t + 1e-9) ++mult;
    for (PathSolution& s : sols) s.multiplicity_hint = mult;
  }
  res.solutions = std::move(sols);
  return res;
}

double sr_distance(const SO21Element& g, const SolverConfig& cfg) {
  const SrLogResult r = sr_log(g, cfg);
  if (!r.ok())
    throw std::runtime_error("no geodesic candidate within gate; best residual " +
                             std::to_string(r.best_residual));
  return r.solutions.front().t;
}

}  // namespace srlorentz
