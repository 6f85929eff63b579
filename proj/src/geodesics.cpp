#include "srlorentz/geodesics.hpp"

#include <cmath>
#include <numbers>

namespace srlorentz {

MNCoefficients mn_coefficients(double beta, double t) {
  const double w = 1.0 - beta * beta;  // q of exp(t(a - beta c)) per unit t^2
  MNCoefficients r;
  r.m = t * sinhc_sq(w * t * t);
  r.n = t * t * coshm1_sq(w * t * t);
  r.regime = w == 0.0 ? MNRegime::Parabolic
             : w < 0.0 ? MNRegime::Trigonometric
                       : MNRegime::Hyperbolic;
  return r;
}

SO21Element geodesic_product(const GeodesicParams& params, double t) {
  const So21Vector left{std::cos(params.phi0), std::sin(params.phi0), -params.beta};
  return exp_so21(t * left) * exp_so21(So21Vector{0.0, 0.0, t * params.beta});
}

namespace {

// exp(t(a - beta c)) in closed form via m, n.
Mat3 base_block(double beta, const MNCoefficients& mn) {
  const double m = mn.m, n = mn.n, b = beta;
  Mat3 g;
  g(0, 0) = 1.0 + n;
  g(0, 1) = m;
  g(0, 2) = n * b;
  g(1, 0) = m;
  g(1, 1) = 1.0 + n * (1.0 - b * b);
  g(1, 2) = m * b;
  g(2, 0) = -n * b;
  g(2, 1) = -m * b;
  g(2, 2) = 1.0 - n * b * b;
  return g;
}

}  // namespace

SO21Element geodesic_matrix(const GeodesicParams& params, double t) {
  const MNCoefficients mn = mn_coefficients(params.beta, t);
  const Mat3 mid = base_block(params.beta, mn);
  const Mat3 left = so2_rotation(params.phi0).m;
  const Mat3 right = so2_rotation(params.beta * t - params.phi0).m;
  return {left * mid * right};
}

GeodesicControl control(const GeodesicParams& params, double t) {
  const double phi = params.phi0 - params.beta * t;
  return {{std::cos(phi), std::sin(phi), 0.0}, {0.0, 0.0, params.beta}};
}

GeodesicParams shifted_params(const GeodesicParams& params, double t0) {
  return {params.phi0 - params.beta * t0, params.beta};
}

SO21Element shifted_tail(const GeodesicParams& params, double t0, double t) {
  return geodesic_product(shifted_params(params, t0), t - t0);
}

GeodesicParams flipped_beta(const GeodesicParams& params) {
  return {params.phi0 + std::numbers::pi, -params.beta};
}

HyperboloidPoint project_to_L2(const SO21Element& g, double tol) {
  make_so21(g.m, tol);  // reject malformed input
  return make_hyperboloid_point(g.m(0, 0), g.m(1, 0), g.m(2, 0));
}

MinkVector parallel_frame(const GeodesicParams& params, double t) {
  const Mat3 g = geodesic_matrix(params, t).m;
  return {g(0, 1), g(1, 1), g(2, 1)};
}

}  // namespace srlorentz
