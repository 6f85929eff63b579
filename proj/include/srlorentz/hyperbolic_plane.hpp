#ifndef SRLORENTZ_HYPERBOLIC_PLANE_HPP
#define SRLORENTZ_HYPERBOLIC_PLANE_HPP

#include <span>

#include "srlorentz/mat.hpp"

namespace srlorentz {

// Point on the upper sheet of -t^2 + x^2 + y^2 = -1, t > 0 (the
// hyperboloid model of the hyperbolic plane L^2).
struct HyperboloidPoint {
  double t = 1.0;
  double x = 0.0;
  double y = 0.0;

  MinkVector mink() const { return {t, x, y}; }
};

inline constexpr double kHyperboloidTol = 1e-10;

// |{p,p} + 1| plus the sheet condition deficit.
double hyperboloid_residual(const HyperboloidPoint& p);

// Validating factory; throws std::invalid_argument off the sheet.
HyperboloidPoint make_hyperboloid_point(double t, double x, double y,
                                        double tol = kHyperboloidTol);

// rho(p, q) = arccosh(-{p, q}); the argument is clamped up to 1 within a
// 1e-12 slack, larger deficits throw.
double hyp_distance(const HyperboloidPoint& p, const HyperboloidPoint& q);

// Semigeodesic chart (u, v) with length element ds^2 = du^2 + cosh^2(u) dv^2.
struct SemigeodesicCoords {
  double u = 0.0;
  double v = 0.0;
};

SemigeodesicCoords to_semigeodesic(const HyperboloidPoint& p);
HyperboloidPoint from_semigeodesic(const SemigeodesicCoords& c);

// Length of a circle arc of radius r and central angle alpha: alpha sinh r.
double circle_arc_length(double r, double alpha);

// Area of the corresponding sector: alpha (cosh r - 1).
double sector_area(double r, double alpha);

// Digon bounded by a projected-geodesic arc of parameter length t1 and the
// hyperbolic chord of its endpoints.
struct DigonData {
  double beta = 0.0;
  double t1 = 0.0;
  double r = 0.0;     // chord length arccosh(1 + n(t1))
  double psi = 0.0;   // digon angle in (0, pi), arccos(m / sqrt(n(n+2)))
  double area = 0.0;  // |beta| t1 - 2 psi
};

DigonData digon_data(double beta, double t1);

struct DigonRates {
  double dS = 0.0;    // |beta| n / (n + 2)
  double dpsi = 0.0;  // |beta| / (n + 2)
};

DigonRates digon_rates(double beta, double t1);

// Discrete signed geodesic curvature at an interior sample of a curve
// given by points equally spaced in arclength: turning angle between
// successive chord directions per unit arclength.
double numeric_geodesic_curvature(std::span<const HyperboloidPoint> curve,
                                  std::size_t index);

// Constant-curvature classification of the projected geodesics.
enum class ProjectionKind { Geodesic, Equidistant, Horocycle, Circle };

ProjectionKind classify_projection(double beta);
const char* projection_kind_name(ProjectionKind k);

}  // namespace srlorentz

#endif  // SRLORENTZ_HYPERBOLIC_PLANE_HPP
