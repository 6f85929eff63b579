#ifndef SRLORENTZ_MAT_HPP
#define SRLORENTZ_MAT_HPP

#include <array>
#include <cmath>
#include <cstddef>

namespace srlorentz {

// Dense 3x3 real matrix, row-major.  Small enough that value semantics
// beat any library dependency.
struct Mat3 {
  std::array<double, 9> a{};

  double& operator()(int i, int j) { return a[static_cast<std::size_t>(3 * i + j)]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(3 * i + j)]; }

  static Mat3 identity() {
    Mat3 m;
    m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
    return m;
  }
  static Mat3 zero() { return Mat3{}; }
};

inline Mat3 operator*(const Mat3& x, const Mat3& y) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j) + x(i, 2) * y(2, j);
  return r;
}

inline Mat3 operator+(const Mat3& x, const Mat3& y) {
  Mat3 r;
  for (std::size_t k = 0; k < 9; ++k) r.a[k] = x.a[k] + y.a[k];
  return r;
}

inline Mat3 operator-(const Mat3& x, const Mat3& y) {
  Mat3 r;
  for (std::size_t k = 0; k < 9; ++k) r.a[k] = x.a[k] - y.a[k];
  return r;
}

inline Mat3 operator*(double s, const Mat3& x) {
  Mat3 r;
  for (std::size_t k = 0; k < 9; ++k) r.a[k] = s * x.a[k];
  return r;
}

inline Mat3 transpose(const Mat3& x) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = x(j, i);
  return r;
}

inline double det(const Mat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

// Max absolute entry.
inline double norm_inf(const Mat3& m) {
  double r = 0.0;
  for (double v : m.a) r = std::max(r, std::fabs(v));
  return r;
}

inline double max_abs_diff(const Mat3& x, const Mat3& y) { return norm_inf(x - y); }

// Dense 2x2 real matrix, row-major.
struct Mat2 {
  std::array<double, 4> a{};

  double& operator()(int i, int j) { return a[static_cast<std::size_t>(2 * i + j)]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(2 * i + j)]; }

  static Mat2 identity() {
    Mat2 m;
    m(0, 0) = m(1, 1) = 1.0;
    return m;
  }
};

inline Mat2 operator*(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
  return r;
}

inline Mat2 operator+(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (std::size_t k = 0; k < 4; ++k) r.a[k] = x.a[k] + y.a[k];
  return r;
}

inline Mat2 operator-(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (std::size_t k = 0; k < 4; ++k) r.a[k] = x.a[k] - y.a[k];
  return r;
}

inline Mat2 operator*(double s, const Mat2& x) {
  Mat2 r;
  for (std::size_t k = 0; k < 4; ++k) r.a[k] = s * x.a[k];
  return r;
}

inline double det(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

inline double norm_inf(const Mat2& m) {
  double r = 0.0;
  for (double v : m.a) r = std::max(r, std::fabs(v));
  return r;
}

inline double max_abs_diff(const Mat2& x, const Mat2& y) { return norm_inf(x - y); }

// Element of Minkowski 3-space with one time and two space coordinates.
struct MinkVector {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
};

// Pseudoscalar product -t*s + (x, y).
inline double pseudo_product(const MinkVector& u, const MinkVector& v) {
  return -u.t * v.t + u.x * v.x + u.y * v.y;
}

}  // namespace srlorentz

#endif  // SRLORENTZ_MAT_HPP
