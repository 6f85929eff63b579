#include "srlorentz/cut_locus.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "srlorentz/hyperbolic_plane.hpp"

namespace srlorentz {

const char* regime_name(CutRegime r) {
  switch (r) {
    case CutRegime::I: return "I";
    case CutRegime::II: return "II";
    case CutRegime::III: return "III";
    case CutRegime::IVa: return "IVa";
    case CutRegime::IVb: return "IVb";
    case CutRegime::IVc: return "IVc";
  }
  return "?";
}

namespace {

constexpr double kPi = std::numbers::pi;

CutRegime classify(double b) {
  if (b < 1e-12) return CutRegime::I;
  if (std::fabs(b - 1.0) < 1e-9) return CutRegime::III;
  if (b < 1.0) return CutRegime::II;
  if (b >= kCutBoundaryBeta) return CutRegime::IVa;
  return b <= 2.0 / std::sqrt(3.0) ? CutRegime::IVb : CutRegime::IVc;
}

// Digon area as a function of t1 at fixed |beta|; strictly increasing on
// the non-self-intersecting range.
double digon_area(double b, double t) { return digon_data(b, t).area; }

}  // namespace

CutTimeResult cut_time(double beta) {
  const double b = std::fabs(beta);
  CutTimeResult res;
  res.beta = beta;
  res.regime = classify(b);

  if (res.regime == CutRegime::I) {
    res.t1 = std::numeric_limits<double>::infinity();
    return res;
  }
  if (res.regime == CutRegime::IVa) {
    res.t1 = 2.0 * kPi / std::sqrt(b * b - 1.0);
    res.psi = kPi;  // limiting digon angle at circle closure
    return res;
  }

  // Solve S(t1) = pi by bisection.  S(0+) = 0, S is strictly increasing,
  // and S exceeds pi before the upper end of the bracket in every regime
  // handled here.
  double lo = kPi / b;  // S = pi - 2 psi < pi there
  double hi;
  if (b > 1.0) {
    hi = 2.0 * kPi / std::sqrt(b * b - 1.0) * (1.0 - 1e-14);
  } else {
    hi = 2.0 * kPi / b;
    while (digon_area(b, hi) < kPi) hi *= 1.5;
  }
  if (digon_area(b, lo) > kPi) lo = 1e-12;
  for (int i = 0; i < 200 && (hi - lo) > 1e-14 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (digon_area(b, mid) < kPi ? lo : hi) = mid;
  }
  res.t1 = 0.5 * (lo + hi);
  const DigonData d = digon_data(b, res.t1);
  res.psi = d.psi;
  res.area_residual = std::fabs(d.area - kPi);
  return res;
}

SO21Element cut_point(double beta) {
  if (beta == 0.0)
    throw std::invalid_argument("beta = 0: geodesic is minimizing forever, no cut point");
  return geodesic_matrix(GeodesicParams(0.0, beta), cut_time(beta).t1);
}

std::vector<CutSample> sample_cut_locus(std::span<const double> betas) {
  std::vector<CutSample> out;
  out.reserve(betas.size());
  for (double b : betas) {
    CutSample s;
    s.beta = b;
    s.t1 = cut_time(b).t1;
    s.g = cut_point(b);
    const So2Check chk = is_in_so2(s.g);
    s.conjugate = chk.member;
    s.angle = chk.angle;
    out.push_back(s);
  }
  return out;
}

CutProfile cut_time_profile(double beta_min, double beta_max, int steps) {
  if (!(0.0 < beta_min && beta_min < beta_max))
    throw std::invalid_argument("need 0 < beta_min < beta_max");
  if (steps < 2) throw std::invalid_argument("need at least 2 steps");
  CutProfile p;
  p.rows.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double b = beta_min + (beta_max - beta_min) * i / (steps - 1);
    p.rows.push_back(cut_time(b));
  }
  for (std::size_t i = 0; i + 1 < p.rows.size(); ++i)
    if (!(p.rows[i + 1].t1 < p.rows[i].t1))
      p.violations.emplace_back(p.rows[i].beta, p.rows[i + 1].beta);
  return p;
}

}  // namespace srlorentz
