#include "srlorentz/lie_core.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace srlorentz {

Mat3 time_reversal() {
  Mat3 m = Mat3::identity();
  m(0, 0) = -1.0;
  return m;
}

double GroupResiduals::max() const { return std::max({ortho, det, time}); }

GroupResiduals so21_residuals(const Mat3& m) {
  const Mat3 i = time_reversal();
  // Normalize by the matrix scale: for a boost of rapidity s the entries
  // reach cosh(s) and mere entry rounding perturbs the quadratic form by
  // ~cosh(s)^2 eps (and the determinant by ~cosh(s)^3 eps), so the raw
  // residuals of an exactly-rounded group element grow without bound.
  const double scale = std::max(1.0, norm_inf(m));
  GroupResiduals r;
  r.ortho = max_abs_diff(m * i * transpose(m) * i, Mat3::identity()) /
            (scale * scale);
  r.det = std::fabs(srlorentz::det(m) - 1.0) / (scale * scale * scale);
  r.time = std::max(0.0, 1.0 - m(0, 0));
  return r;
}

bool is_so21(const Mat3& m, double tol) { return so21_residuals(m).max() <= tol; }

SO21Element make_so21(const Mat3& m, double tol) {
  const GroupResiduals r = so21_residuals(m);
  if (r.ortho > tol)
    throw std::invalid_argument("not pseudo-orthogonal: |mIm^TI - E| = " +
                                std::to_string(r.ortho));
  if (r.det > tol)
    throw std::invalid_argument("orientation not preserved: |det - 1| = " +
                                std::to_string(r.det));
  if (r.time > tol)
    throw std::invalid_argument("time direction not preserved: m11 = " +
                                std::to_string(m(0, 0)));
  return {m};
}

SO21Element inverse(const SO21Element& g) {
  const Mat3 i = time_reversal();
  return {i * transpose(g.m) * i};
}

Mat3 So21Vector::matrix() const {
  Mat3 x;
  x(0, 1) = ca;
  x(1, 0) = ca;
  x(0, 2) = cb;
  x(2, 0) = cb;
  x(1, 2) = -cc;
  x(2, 1) = cc;
  return x;
}

So21Vector bracket(const So21Vector& u, const So21Vector& v) {
  return {u.cb * v.cc - u.cc * v.cb,
          u.cc * v.ca - u.ca * v.cc,
          -(u.ca * v.cb - u.cb * v.ca)};
}

CharInvariant char_invariant(const So21Vector& x) {
  const double q = x.ca * x.ca + x.cb * x.cb - x.cc * x.cc;
  return {q, std::sqrt(std::fabs(q))};
}

namespace {

// Series switch threshold: for |q| below this the closed forms lose
// digits to cancellation while a short Taylor tail is exact to rounding.
constexpr double kSeriesCut = 1e-8;

double series_sum(double q, double first_factorial_recip, int denom_start) {
  // sum_{k>=0} q^k / (denom_start + 2k)! starting from the given term
  double term = first_factorial_recip;
  double sum = term;
  for (int k = 1; k <= 8; ++k) {
    term *= q / ((denom_start + 2 * k - 1) * (denom_start + 2 * k));
    sum += term;
  }
  return sum;
}

}  // namespace

double sinhc_sq(double q) {
  if (std::fabs(q) < kSeriesCut) return series_sum(q, 1.0, 1);  // 1/1! + q/3! + ...
  const double s = std::sqrt(std::fabs(q));
  return q > 0 ? std::sinh(s) / s : std::sin(s) / s;
}

double coshm1_sq(double q) {
  if (std::fabs(q) < kSeriesCut) return series_sum(q, 0.5, 2);  // 1/2! + q/4! + ...
  const double s = std::sqrt(std::fabs(q));
  return q > 0 ? (std::cosh(s) - 1.0) / q : (1.0 - std::cos(s)) / (-q);
}

SO21Element exp_so21(const So21Vector& x) {
  const double q = char_invariant(x).q;
  const Mat3 xm = x.matrix();
  return {Mat3::identity() + sinhc_sq(q) * xm + coshm1_sq(q) * (xm * xm)};
}

Mat2 Sl2Vector::matrix() const {
  Mat2 w;
  w(0, 0) = 0.5 * pb;
  w(1, 1) = -0.5 * pb;
  w(0, 1) = 0.5 * (pa + pc);
  w(1, 0) = 0.5 * (pa - pc);
  return w;
}

Sl2Vector bracket(const Sl2Vector& u, const Sl2Vector& v) {
  // same structure constants as so(2,1): [a',b']=-c', [b',c']=a', [c',a']=b'
  return {u.pb * v.pc - u.pc * v.pb,
          u.pc * v.pa - u.pa * v.pc,
          -(u.pa * v.pb - u.pb * v.pa)};
}

Mat2 exp_sl2(const Sl2Vector& w) {
  const Mat2 wm = w.matrix();
  // trace-zero Cayley-Hamilton: wm^2 = -det(wm) E, so with q = -det(wm)
  // exp(wm) = (1 + q coshm1_sq(q)) E + sinhc_sq(q) wm
  const double q = -det(wm);
  return (1.0 + q * coshm1_sq(q)) * Mat2::identity() + sinhc_sq(q) * wm;
}

So21Vector algebra_iso(const Sl2Vector& w) { return {w.pa, w.pb, w.pc}; }

std::pair<Mat2, SO21Element> covering_on_exponentials(const Sl2Vector& w) {
  return {exp_sl2(w), exp_so21(algebra_iso(w))};
}

SO21Element so2_rotation(double phi) {
  Mat3 m = Mat3::identity();
  m(1, 1) = std::cos(phi);
  m(1, 2) = -std::sin(phi);
  m(2, 1) = std::sin(phi);
  m(2, 2) = std::cos(phi);
  return {m};
}

So2Check is_in_so2(const SO21Element& g, double tol) {
  const Mat3& m = g.m;
  const double off = std::max({std::fabs(m(0, 0) - 1.0), std::fabs(m(0, 1)),
                               std::fabs(m(0, 2)), std::fabs(m(1, 0)),
                               std::fabs(m(2, 0))});
  if (off > tol) return {false, 0.0};
  return {true, wrap_angle(std::atan2(m(2, 1), m(1, 1)))};
}

double wrap_angle(double phi) {
  const double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(phi, two_pi);
  if (r < 0) r += two_pi;
  return r;
}

}  // namespace srlorentz
