#ifndef SRLORENTZ_LIE_CORE_HPP
#define SRLORENTZ_LIE_CORE_HPP

#include <utility>

#include "srlorentz/mat.hpp"

namespace srlorentz {

// Default tolerance for the group membership checks.
inline constexpr double kGroupTol = 1e-10;

// Time reversing operator I = diag(-1, 1, 1); I^2 = E.
Mat3 time_reversal();

// Group inverse via g^{-1} = I g^T I; valid for pseudo-orthogonal g.
struct SO21Element;
SO21Element inverse(const SO21Element& g);

// Element of SO_0(2,1), acting on column vectors of Minkowski 3-space.
struct SO21Element {
  Mat3 m;

  MinkVector apply(const MinkVector& v) const {
    return {m(0, 0) * v.t + m(0, 1) * v.x + m(0, 2) * v.y,
            m(1, 0) * v.t + m(1, 1) * v.x + m(1, 2) * v.y,
            m(2, 0) * v.t + m(2, 1) * v.x + m(2, 2) * v.y};
  }
};

inline SO21Element operator*(const SO21Element& g, const SO21Element& h) {
  return {g.m * h.m};
}

// Residuals of the three membership conditions: pseudo-orthogonality
// |m I m^T I - E|, orientation |det - 1|, and time direction 1 - m11.
// The first two are scale-normalized (divided by max(1, |m|)^2 and ^3) so
// that large boosts, whose rounded entries inherently violate the raw
// identities at ~|m|^2 eps, still register as members.
struct GroupResiduals {
  double ortho = 0.0;
  double det = 0.0;
  double time = 0.0;
  double max() const;
};

GroupResiduals so21_residuals(const Mat3& m);
bool is_so21(const Mat3& m, double tol = kGroupTol);

// Validating factory; throws std::invalid_argument naming the failing
// invariant.
SO21Element make_so21(const Mat3& m, double tol = kGroupTol);

// Lie algebra element in coordinates over the basis a = e12+e21,
// b = e13+e31, c = e32-e23.  The matrix form is antisymmetric under
// x -> I x^T I by construction.
struct So21Vector {
  double ca = 0.0;
  double cb = 0.0;
  double cc = 0.0;

  Mat3 matrix() const;
};

inline So21Vector operator+(const So21Vector& u, const So21Vector& v) {
  return {u.ca + v.ca, u.cb + v.cb, u.cc + v.cc};
}
inline So21Vector operator*(double s, const So21Vector& v) {
  return {s * v.ca, s * v.cb, s * v.cc};
}

// Commutator uv - vu expressed again in basis coordinates; uses the
// structure constants [a,b]=-c, [b,c]=a, [c,a]=b.
So21Vector bracket(const So21Vector& u, const So21Vector& v);

// Characteristic invariant q = x21^2 + x31^2 - x32^2 = ca^2+cb^2-cc^2 and
// alpha = sqrt(|q|); the sign of q selects the closed-form exponential
// branch.
struct CharInvariant {
  double q = 0.0;
  double alpha = 0.0;
};
CharInvariant char_invariant(const So21Vector& x);

// Analytic coefficient functions of the closed-form exponential,
// continued through q = 0:
//   sinhc_sq(q)  = sinh(sqrt(q))/sqrt(q)   (q > 0),  sin/sqrt for q < 0
//   coshm1_sq(q) = (cosh(sqrt(q))-1)/q     (q > 0),  (1-cos)/|q| for q < 0
// Near q = 0 both are evaluated by their power series to avoid
// cancellation.
double sinhc_sq(double q);
double coshm1_sq(double q);

// Closed-form exponential E + sinhc_sq(q) x + coshm1_sq(q) x^2.
SO21Element exp_so21(const So21Vector& x);

// Element of sl(2) in coordinates over a' = (e12+e21)/2,
// b' = (e11-e22)/2, c' = (e12-e21)/2.
struct Sl2Vector {
  double pa = 0.0;
  double pb = 0.0;
  double pc = 0.0;

  Mat2 matrix() const;
};

Sl2Vector bracket(const Sl2Vector& u, const Sl2Vector& v);

// Closed-form 2x2 exponential via Cayley-Hamilton (w^2 = -det(w) E for
// trace-zero w); result has determinant 1.
Mat2 exp_sl2(const Sl2Vector& w);

// Lie algebra isomorphism l: sl(2) -> so(2,1), identity on basis
// coordinates.
So21Vector algebra_iso(const Sl2Vector& w);

// The double cover L: Sl(2) -> SO_0(2,1) evaluated on exponentials per
// its defining relation L(exp w) = exp(l(w)); kernel {+-E_2}.
std::pair<Mat2, SO21Element> covering_on_exponentials(const Sl2Vector& w);

// Rotation subgroup SO(2) = exp(R c), fixing w0 = (1,0,0)^T.
SO21Element so2_rotation(double phi);

struct So2Check {
  bool member = false;
  double angle = 0.0;  // in [0, 2pi), meaningful only when member
};
So2Check is_in_so2(const SO21Element& g, double tol = kGroupTol);

// Reduce an angle to [0, 2pi).
double wrap_angle(double phi);

}  // namespace srlorentz

#endif  // SRLORENTZ_LIE_CORE_HPP
