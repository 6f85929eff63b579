#ifndef SRLORENTZ_BOUNDARY_SOLVER_HPP
#define SRLORENTZ_BOUNDARY_SOLVER_HPP

#include <vector>

#include "srlorentz/cut_locus.hpp"

namespace srlorentz {

// One recovered shortest-arc candidate for a target group element.
struct PathSolution {
  double phi0 = 0.0;
  double beta = 0.0;
  double t = 0.0;               // arclength
  double endpoint_error = 0.0;  // max-entry deviation of the forward matrix
  int multiplicity_hint = 1;    // distinct minimizers found at this length
};

struct SolverConfig {
  double gate = 1e-8;      // endpoint acceptance threshold
  int beta_samples = 400;  // uniform grid size over [-beta_span, beta_span]
  double beta_span = 4.0;
  double so2_tol = 1e-7;   // targets this close to SO(2) use the closed form
};

struct SrLogResult {
  std::vector<PathSolution> solutions;  // sorted by arclength, shortest first
  double best_residual = 0.0;           // best endpoint error seen, even on failure

  bool ok() const { return !solutions.empty(); }
};

// Inverse of the geodesic exponential: all (phi0, beta, t) with
// geodesic_matrix((phi0, beta), t) = g within the gate and t not past the
// cut time.  The search pins t and phi0 from the first column of g for
// each trial beta and solves the residual rotation angle by bisection;
// targets near SO(2) are inverted through the conjugate-set angle
// equation instead.
SrLogResult sr_log(const SO21Element& g, const SolverConfig& cfg = {});

// Sub-Riemannian distance from the identity: minimal arclength over
// sr_log solutions.  Throws std::runtime_error if no candidate passes the
// gate.
double sr_distance(const SO21Element& g, const SolverConfig& cfg = {});

}  // namespace srlorentz

#endif  // SRLORENTZ_BOUNDARY_SOLVER_HPP
