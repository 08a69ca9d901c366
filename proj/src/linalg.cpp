//! \file linalg.cpp
//! \brief symmetric 3x3 eigenvalues and the metric index.

#include "epsverify/linalg.hpp"

#include <algorithm>

namespace epsverify {

std::array<double, 3> symmetric_eigenvalues(const Mat3& m) {
  const double p1 = m[0][1] * m[0][1] + m[0][2] * m[0][2] + m[1][2] * m[1][2];
  std::array<double, 3> eig;
  if (p1 == 0.0) {
    eig = {m[0][0], m[1][1], m[2][2]};
    std::sort(eig.begin(), eig.end());
    return eig;
  }
  const double q = (m[0][0] + m[1][1] + m[2][2]) / 3.0;
  const double p2 = (m[0][0] - q) * (m[0][0] - q) + (m[1][1] - q) * (m[1][1] - q) +
                    (m[2][2] - q) * (m[2][2] - q) + 2.0 * p1;
  const double p = std::sqrt(p2 / 6.0);
  Mat3 b;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      b[i][j] = (m[i][j] - (i == j ? q : 0.0)) / p;
  double r = det3(b) / 2.0;
  r = std::clamp(r, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double e1 = q + 2.0 * p * std::cos(phi);
  const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * M_PI / 3.0);
  const double e2 = 3.0 * q - e1 - e3;
  eig = {e3, e2, e1};
  std::sort(eig.begin(), eig.end());
  return eig;
}

int metric_index(const Mat3& g, double tol) {
  auto eig = symmetric_eigenvalues(g);
  int neg = 0;
  for (double e : eig)
    if (e < -tol) ++neg;
  return neg;
}

}  // namespace epsverify
