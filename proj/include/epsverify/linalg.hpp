//! \file linalg.hpp
//! \brief fixed-size vectors, matrices and small dense tensors over a
//! 3-dimensional chart, with the handful of linear-algebra helpers the
//! geometry pipeline needs.

#ifndef EPSVERIFY_LINALG_HPP_
#define EPSVERIFY_LINALG_HPP_

#include <array>
#include <cmath>
#include <cstddef>

namespace epsverify {

inline constexpr int kDim = 3;

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;
using Ten3 = std::array<Mat3, 3>;
using Ten4 = std::array<Ten3, 3>;
using Ten5 = std::array<Ten4, 3>;

inline Mat3 zero_mat3() { return Mat3{}; }

inline Mat3 identity3() {
  Mat3 m{};
  for (int i = 0; i < kDim; ++i) m[i][i] = 1.0;
  return m;
}

inline double det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
       - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
       + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Inverse by adjugate; caller is responsible for checking the determinant.
inline Mat3 inverse3(const Mat3& m, double det) {
  Mat3 inv;
  inv[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / det;
  inv[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det;
  inv[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det;
  inv[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / det;
  inv[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det;
  inv[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det;
  inv[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / det;
  inv[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det;
  inv[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det;
  return inv;
}

inline double max_abs(const Vec3& v) {
  double m = 0.0;
  for (int i = 0; i < kDim; ++i) m = std::max(m, std::fabs(v[i]));
  return m;
}

inline double max_abs(const Mat3& t) {
  double m = 0.0;
  for (const auto& row : t) m = std::max(m, max_abs(row));
  return m;
}

inline double max_abs(const Ten3& t) {
  double m = 0.0;
  for (const auto& s : t) m = std::max(m, max_abs(s));
  return m;
}

inline double max_abs(const Ten4& t) {
  double m = 0.0;
  for (const auto& s : t) m = std::max(m, max_abs(s));
  return m;
}

inline double max_abs(const Ten5& t) {
  double m = 0.0;
  for (const auto& s : t) m = std::max(m, max_abs(s));
  return m;
}

// Frobenius inner product of two symmetric (0,2) tensors.
inline double frobenius_dot(const Mat3& a, const Mat3& b) {
  double s = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) s += a[i][j] * b[i][j];
  return s;
}

// Eigenvalues of a symmetric 3x3 matrix, ascending (trigonometric method).
std::array<double, 3> symmetric_eigenvalues(const Mat3& m);

// Number of negative eigenvalues of a symmetric matrix (the metric index v).
// Eigenvalues within `tol` of zero count as degenerate and are ignored.
int metric_index(const Mat3& g, double tol = 1e-12);

}  // namespace epsverify

#endif  // EPSVERIFY_LINALG_HPP_
