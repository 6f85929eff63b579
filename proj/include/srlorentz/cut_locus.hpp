#ifndef SRLORENTZ_CUT_LOCUS_HPP
#define SRLORENTZ_CUT_LOCUS_HPP

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "srlorentz/geodesics.hpp"

namespace srlorentz {

// Case split of the cut-time computation: I beta = 0; II 0 < beta^2 < 1;
// III beta^2 = 1; IVa |beta| >= 3/sqrt(5) (closed form);
// IVb 1 < |beta| <= 2/sqrt(3); IVc 2/sqrt(3) < |beta| < 3/sqrt(5).
enum class CutRegime { I, II, III, IVa, IVb, IVc };

const char* regime_name(CutRegime r);

inline const double kCutBoundaryBeta = 3.0 / std::sqrt(5.0);

struct CutTimeResult {
  double beta = 0.0;
  CutRegime regime = CutRegime::I;
  double t1 = 0.0;  // +infinity in regime I
  std::optional<double> psi;
  double area_residual = 0.0;
};

// Cut time t1(beta): infinite for beta = 0, the closed form
// 2pi/sqrt(beta^2-1) for |beta| >= 3/sqrt(5), otherwise the unique root of
// the digon-area condition S(t1) = pi found by bisection (S is strictly
// increasing).  Symmetric in the sign of beta.
CutTimeResult cut_time(double beta);

// Endpoint of the noncontinuable shortest arc with phi0 = 0; throws for
// beta = 0 (no cut point).
SO21Element cut_point(double beta);

struct CutSample {
  double beta = 0.0;
  double t1 = 0.0;
  SO21Element g;
  bool conjugate = false;  // membership in SO(2), i.e. in the conjugate set
  double angle = 0.0;      // rotation angle when conjugate
};

std::vector<CutSample> sample_cut_locus(std::span<const double> betas);

// Tabulates t1 over a uniform beta grid and lists every adjacent pair
// violating strict decrease.  Descriptive: no monotonicity is asserted.
struct CutProfile {
  std::vector<CutTimeResult> rows;
  std::vector<std::pair<double, double>> violations;  // (beta_lo, beta_hi)
};

CutProfile cut_time_profile(double beta_min, double beta_max, int steps);

}  // namespace srlorentz

#endif  // SRLORENTZ_CUT_LOCUS_HPP
