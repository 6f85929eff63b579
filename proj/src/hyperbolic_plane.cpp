#include "srlorentz/hyperbolic_plane.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "srlorentz/geodesics.hpp"

namespace srlorentz {

namespace {

// arccosh with the argument clamped up to 1 within the stated slack.
double safe_acosh(double z, double slack = 1e-12) {
  if (z < 1.0) {
    if (z < 1.0 - 1e-9)
      throw std::invalid_argument("arccosh argument " + std::to_string(z) +
                                  " below 1: invalid inputs");
    if (z < 1.0 - slack) z = 1.0;  // absorb rounding only
    z = std::max(z, 1.0);
  }
  return std::acosh(z);
}

double sgn(double x) { return x > 0 ? 1.0 : x < 0 ? -1.0 : 0.0; }

}  // namespace

double hyperboloid_residual(const HyperboloidPoint& p) {
  const double quad = std::fabs(pseudo_product(p.mink(), p.mink()) + 1.0);
  const double sheet = std::max(0.0, 1.0 - p.t);
  return std::max(quad, sheet);
}

HyperboloidPoint make_hyperboloid_point(double t, double x, double y, double tol) {
  HyperboloidPoint p{t, x, y};
  if (hyperboloid_residual(p) > tol)
    throw std::invalid_argument("point off the upper hyperboloid sheet, residual " +
                                std::to_string(hyperboloid_residual(p)));
  return p;
}

double hyp_distance(const HyperboloidPoint& p, const HyperboloidPoint& q) {
  return safe_acosh(-pseudo_product(p.mink(), q.mink()));
}

SemigeodesicCoords to_semigeodesic(const HyperboloidPoint& p) {
  const double w = std::sqrt(p.t * p.t - p.y * p.y);
  return {sgn(p.x) * safe_acosh(w), sgn(p.y) * safe_acosh(p.t / w)};
}

HyperboloidPoint from_semigeodesic(const SemigeodesicCoords& c) {
  return {std::cosh(c.u) * std::cosh(c.v), std::sinh(c.u),
          std::cosh(c.u) * std::sinh(c.v)};
}

namespace {

void check_arc_args(double r, double alpha) {
  if (r < 0) throw std::invalid_argument("radius must be nonnegative");
  if (alpha < 0 || alpha > 2.0 * std::numbers::pi)
    throw std::invalid_argument("central angle must lie in [0, 2pi]");
}

}  // namespace

double circle_arc_length(double r, double alpha) {
  check_arc_args(r, alpha);
  return alpha * std::sinh(r);
}

double sector_area(double r, double alpha) {
  check_arc_args(r, alpha);
  return alpha * (std::cosh(r) - 1.0);
}

DigonData digon_data(double beta, double t1) {
  if (beta == 0.0) throw std::invalid_argument("beta = 0: degenerate digon");
  if (t1 <= 0.0) throw std::invalid_argument("t1 must be positive");
  const double b2 = beta * beta;
  if (b2 > 1.0) {
    const double t_full = 2.0 * std::numbers::pi / std::sqrt(b2 - 1.0);
    if (t1 >= t_full)
      throw std::invalid_argument("projection self-intersects: t1 >= 2pi/sqrt(beta^2-1)");
  }
  const MNCoefficients mn = mn_coefficients(beta, t1);
  DigonData d;
  d.beta = beta;
  d.t1 = t1;
  d.r = safe_acosh(1.0 + mn.n);
  const double c = std::clamp(mn.m / std::sqrt(mn.n * (mn.n + 2.0)), -1.0, 1.0);
  d.psi = std::acos(c);
  d.area = std::fabs(beta) * t1 - 2.0 * d.psi;
  return d;
}

DigonRates digon_rates(double beta, double t1) {
  const DigonData d = digon_data(beta, t1);  // shares the validation
  const double n = mn_coefficients(beta, t1).n;
  (void)d;
  return {std::fabs(beta) * n / (n + 2.0), std::fabs(beta) / (n + 2.0)};
}

namespace {

// Unit tangent at p pointing toward q.
MinkVector log_direction(const HyperboloidPoint& p, const HyperboloidPoint& q) {
  const double c = -pseudo_product(p.mink(), q.mink());
  MinkVector d{q.t - c * p.t, q.x - c * p.x, q.y - c * p.y};
  const double nrm = std::sqrt(pseudo_product(d, d));
  return {d.t / nrm, d.x / nrm, d.y / nrm};
}

double triple(const MinkVector& a, const MinkVector& b, const MinkVector& c) {
  return a.t * (b.x * c.y - b.y * c.x) - a.x * (b.t * c.y - b.y * c.t) +
         a.y * (b.t * c.x - b.x * c.t);
}

}  // namespace

double numeric_geodesic_curvature(std::span<const HyperboloidPoint> curve,
                                  std::size_t index) {
  if (curve.size() < 3 || index == 0 || index + 1 >= curve.size())
    throw std::invalid_argument("need an interior sample of at least 3 points");
  const HyperboloidPoint& p0 = curve[index - 1];
  const HyperboloidPoint& p1 = curve[index];
  const HyperboloidPoint& p2 = curve[index + 1];
  // incoming chord direction continued through p1, outgoing chord direction
  const MinkVector back = log_direction(p1, p0);
  const MinkVector win{-back.t, -back.x, -back.y};
  const MinkVector u = log_direction(p1, p2);
  const double c = pseudo_product(win, u);
  const double s = -triple(p1.mink(), win, u);
  const double h = 0.5 * (hyp_distance(p0, p1) + hyp_distance(p1, p2));
  return std::atan2(s, c) / h;
}

ProjectionKind classify_projection(double beta) {
  const double b2 = beta * beta;
  if (b2 == 0.0) return ProjectionKind::Geodesic;
  if (b2 < 1.0) return ProjectionKind::Equidistant;
  if (b2 == 1.0) return ProjectionKind::Horocycle;
  return ProjectionKind::Circle;
}

const char* projection_kind_name(ProjectionKind k) {
  switch (k) {
    case ProjectionKind::Geodesic: return "geodesic";
    case ProjectionKind::Equidistant: return "equidistant";
    case ProjectionKind::Horocycle: return "horocycle";
    case ProjectionKind::Circle: return "circle";
  }
  return "?";
}

}  // namespace srlorentz
