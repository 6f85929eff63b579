#ifndef SRLORENTZ_GEODESICS_HPP
#define SRLORENTZ_GEODESICS_HPP

#include "srlorentz/hyperbolic_plane.hpp"
#include "srlorentz/lie_core.hpp"

namespace srlorentz {

// Unit-speed geodesic from the identity, selected by the initial
// horizontal direction phi0 and the vertical covector component beta.
struct GeodesicParams {
  double phi0 = 0.0;  // normalized to [0, 2pi) on construction
  double beta = 0.0;

  GeodesicParams() = default;
  GeodesicParams(double phi0_, double beta_)
      : phi0(wrap_angle(phi0_)), beta(beta_) {}
};

enum class MNRegime { Parabolic, Trigonometric, Hyperbolic };  // beta^2 =1, >1, <1

struct MNCoefficients {
  double m = 0.0;
  double n = 0.0;
  MNRegime regime = MNRegime::Parabolic;
};

// m, n of the explicit geodesic matrix: m = t sinhc_sq((1-beta^2) t^2),
// n = t^2 coshm1_sq((1-beta^2) t^2); one analytic function across the
// three regimes.
MNCoefficients mn_coefficients(double beta, double t);

// gamma(t) = exp(t(cos(phi0) a + sin(phi0) b - beta c)) exp(t beta c).
SO21Element geodesic_product(const GeodesicParams& params, double t);

// The same geodesic via the explicit entrywise matrix
// B(phi0) M0(beta, t) R(beta t - phi0) built from m, n; no exp calls.
SO21Element geodesic_matrix(const GeodesicParams& params, double t);

// Horizontal and vertical controls u(t), v(t) with phi(t) = phi0 - beta t;
// <u,u> = (u,u)/2 = 1.
struct GeodesicControl {
  So21Vector u;
  So21Vector v;
};

GeodesicControl control(const GeodesicParams& params, double t);

// Parameters of the tail geodesic gamma(t0)^{-1} gamma(t0 + s): same beta,
// initial angle phi(t0) = phi0 - beta t0.
GeodesicParams shifted_params(const GeodesicParams& params, double t0);

// gamma(t0)^{-1} gamma(t), evaluated as the geodesic with shifted_params
// at t - t0.
SO21Element shifted_tail(const GeodesicParams& params, double t0, double t);

// The sign flip of the Remark on beta: evaluating the returned parameters
// at -t reproduces the (phi0, -beta) geodesic at t.  Never applied
// silently anywhere.
GeodesicParams flipped_beta(const GeodesicParams& params);

// p(g) = g w0: first column of the matrix; validates group membership.
HyperboloidPoint project_to_L2(const SO21Element& g, double tol = kGroupTol);

// f(gamma(t)) = gamma(t) v0: second column; a parallel vector field along
// the projected curve, tangent to the hyperboloid at p(gamma(t)).
MinkVector parallel_frame(const GeodesicParams& params, double t);

}  // namespace srlorentz

#endif  // SRLORENTZ_GEODESICS_HPP
