// Test-only oracles, independent of the closed-form production paths.
#ifndef SRLORENTZ_TESTS_ORACLES_HPP
#define SRLORENTZ_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <span>

#include "srlorentz/hyperbolic_plane.hpp"
#include "srlorentz/mat.hpp"

namespace srlorentz::oracles {

// Matrix exponential by scaling-and-squaring over a plain Taylor series.
inline Mat3 series_exp(const Mat3& x) {
  int squarings = 0;
  Mat3 y = x;
  while (norm_inf(y) > 0.5) {
    y = 0.5 * y;
    ++squarings;
  }
  Mat3 sum = Mat3::identity();
  Mat3 term = Mat3::identity();
  for (int k = 1; k <= 30; ++k) {
    term = (1.0 / k) * (term * y);
    sum = sum + term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

inline Mat2 series_exp(const Mat2& x) {
  int squarings = 0;
  Mat2 y = x;
  while (norm_inf(y) > 0.5) {
    y = 0.5 * y;
    ++squarings;
  }
  Mat2 sum = Mat2::identity();
  Mat2 term = Mat2::identity();
  for (int k = 1; k <= 30; ++k) {
    term = (1.0 / k) * (term * y);
    sum = sum + term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

// Digon area for a circle-regime projection (beta^2 > 1) by an independent
// decomposition: circular sector of the swept central angle plus or minus
// the isoceles center triangle, with angles from the hyperbolic law of
// cosines.  Production code computes the same area from the Gauss-Bonnet
// identity |beta| t1 - 2 psi instead.
inline double digon_area_circle(double beta, double t1) {
  const double b = std::fabs(beta);
  const double rho = std::atanh(1.0 / b);  // arccoth(b): circle radius
  const double t_full = 2.0 * std::numbers::pi / std::sqrt(b * b - 1.0);
  const double theta = 2.0 * std::numbers::pi * t1 / t_full;  // swept angle
  const double sector = theta * (std::cosh(rho) - 1.0);
  const double apex = theta <= std::numbers::pi ? theta : 2.0 * std::numbers::pi - theta;
  // chord and base angles of the center triangle
  const double cosh_r =
      std::cosh(rho) * std::cosh(rho) - std::sinh(rho) * std::sinh(rho) * std::cos(apex);
  const double r = std::acosh(std::max(1.0, cosh_r));
  double triangle = 0.0;
  if (r > 1e-12) {
    const double cos_base = std::cosh(rho) * (std::cosh(r) - 1.0) /
                            (std::sinh(r) * std::sinh(rho));
    const double base = std::acos(std::clamp(cos_base, -1.0, 1.0));
    triangle = std::numbers::pi - apex - 2.0 * base;
  }
  return theta <= std::numbers::pi ? sector - triangle : sector + triangle;
}

// Polyline length of a sampled curve on the hyperboloid.
inline double polyline_length(std::span<const HyperboloidPoint> pts) {
  double len = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    len += hyp_distance(pts[i], pts[i + 1]);
  return len;
}

inline std::mt19937& rng() {
  static std::mt19937 gen(20240817u);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

}  // namespace srlorentz::oracles

#endif
