//! \file geometry.cpp
//! \brief Levi-Civita pipeline in jet arithmetic.

#include "epsverify/geometry.hpp"

#include <cmath>
#include <string>

#include "epsverify/errors.hpp"

namespace epsverify {

namespace {

using JetMat = std::array<std::array<Jet, 3>, 3>;

// Determinant of a jet-valued 3x3 matrix by cofactor expansion.
Jet jet_det3(const JetMat& m) {
  Jet d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
  d = d - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]);
  d = d + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return d;
}

JetMat jet_inverse3(const JetMat& m, const Jet& det, double div_threshold) {
  JetMat adj;
  adj[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  adj[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
  adj[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
  adj[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
  adj[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
  adj[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
  adj[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
  adj[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
  adj[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  JetMat inv;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) inv[i][j] = jet_div(adj[i][j], det, div_threshold);
  return inv;
}

}  // namespace

ChartGeometry evaluate_geometry(const MetricField& metric, const Vec3& point) {
  ChartGeometry geom;
  geom.point = point;

  // Metric as order-3 jets: carries g, dg, d2g, d3g.
  JetMat gj;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      gj[i][j] = metric.components[i][j].eval(metric.env, point, 3);

  Jet detj = jet_det3(gj);
  geom.det_g = detj.value;
  if (std::fabs(geom.det_g) < metric.det_threshold)
    throw EvalError("singular metric (det = " + std::to_string(geom.det_g) +
                        ") at point (" + std::to_string(point[0]) + ", " +
                        std::to_string(point[1]) + ", " + std::to_string(point[2]) + ")",
                    point);
  JetMat ginvj = jet_inverse3(gj, detj, metric.det_threshold);

  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      geom.g[i][j] = gj[i][j].value;
      geom.g_inv[i][j] = ginvj[i][j].value;
      for (int k = 0; k < kDim; ++k) geom.dg[k][i][j] = gj[i][j].grad[k];
    }

  // Christoffel symbols as order-2 jets:
  // Gamma^k_ij = 1/2 g^kl (d_i g_jl + d_j g_il - d_l g_ij).
  std::array<std::array<std::array<Jet, 3>, 3>, 3> gammaj;
  const Jet half = jet_constant(0.5, 2);
  for (int k = 0; k < kDim; ++k)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) {
        Jet sum = jet_constant(0.0, 2);
        for (int l = 0; l < kDim; ++l) {
          Jet term = jet_derivative(gj[j][l], i) + jet_derivative(gj[i][l], j)
                   - jet_derivative(gj[i][j], l);
          sum = sum + jet_truncate(ginvj[k][l], 2) * term;
        }
        gammaj[k][i][j] = half * sum;
      }

  for (int k = 0; k < kDim; ++k)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) {
        geom.Gamma[k][i][j] = gammaj[k][i][j].value;
        for (int l = 0; l < kDim; ++l)
          geom.dGamma[l][k][i][j] = gammaj[k][i][j].grad[l];
      }

  // Curvature as order-1 jets:
  // R^l_ijk = d_i Gamma^l_jk - d_j Gamma^l_ik
  //         + Gamma^l_im Gamma^m_jk - Gamma^l_jm Gamma^m_ik.
  std::array<std::array<std::array<std::array<Jet, 3>, 3>, 3>, 3> riemj;
  for (int l = 0; l < kDim; ++l)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j)
        for (int k = 0; k < kDim; ++k) {
          Jet sum = jet_derivative(gammaj[l][j][k], i) - jet_derivative(gammaj[l][i][k], j);
          for (int m = 0; m < kDim; ++m)
            sum = sum + jet_truncate(gammaj[l][i][m], 1) * jet_truncate(gammaj[m][j][k], 1)
                      - jet_truncate(gammaj[l][j][m], 1) * jet_truncate(gammaj[m][i][k], 1);
          riemj[l][i][j][k] = sum;
          geom.riemann_13[l][i][j][k] = sum.value;
        }

  // Lowered curvature, Ricci and scalar, still as order-1 jets.
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int m = 0; m < kDim; ++m) {
          Jet sum = jet_constant(0.0, 1);
          for (int l = 0; l < kDim; ++l)
            sum = sum + jet_truncate(gj[l][m], 1) * riemj[l][i][j][k];
          geom.riemann_04[i][j][k][m] = sum.value;
          for (int l = 0; l < kDim; ++l)
            geom.driemann_04[l][i][j][k][m] = sum.grad[l];
        }

  Jet scalarj = jet_constant(0.0, 1);
  for (int j = 0; j < kDim; ++j)
    for (int k = 0; k < kDim; ++k) {
      Jet ric = jet_constant(0.0, 1);
      for (int i = 0; i < kDim; ++i) ric = ric + riemj[i][i][j][k];
      geom.ricci[j][k] = ric.value;
      for (int l = 0; l < kDim; ++l) geom.dricci[l][j][k] = ric.grad[l];
      scalarj = scalarj + jet_truncate(ginvj[j][k], 1) * ric;
    }
  geom.scalar = scalarj.value;
  geom.dscalar = scalarj.grad;

  return geom;
}

Mat3 covariant_derivative(const Vec3& T, const Mat3& dT, const ChartGeometry& geom) {
  Mat3 out{};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      double v = dT[i][j];
      for (int l = 0; l < kDim; ++l) v -= geom.Gamma[l][i][j] * T[l];
      out[i][j] = v;
    }
  return out;
}

Ten3 covariant_derivative(const Mat3& T, const Ten3& dT, const ChartGeometry& geom) {
  Ten3 out{};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        double v = dT[i][j][k];
        for (int l = 0; l < kDim; ++l)
          v -= geom.Gamma[l][i][j] * T[l][k] + geom.Gamma[l][i][k] * T[j][l];
        out[i][j][k] = v;
      }
  return out;
}

Ten4 covariant_derivative(const Ten3& T, const Ten4& dT, const ChartGeometry& geom) {
  Ten4 out{};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int m = 0; m < kDim; ++m) {
          double v = dT[i][j][k][m];
          for (int l = 0; l < kDim; ++l)
            v -= geom.Gamma[l][i][j] * T[l][k][m] + geom.Gamma[l][i][k] * T[j][l][m] +
                 geom.Gamma[l][i][m] * T[j][k][l];
          out[i][j][k][m] = v;
        }
  return out;
}

Ten5 covariant_derivative(const Ten4& T, const Ten5& dT, const ChartGeometry& geom) {
  Ten5 out{};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int m = 0; m < kDim; ++m)
          for (int n = 0; n < kDim; ++n) {
            double v = dT[i][j][k][m][n];
            for (int l = 0; l < kDim; ++l)
              v -= geom.Gamma[l][i][j] * T[l][k][m][n] + geom.Gamma[l][i][k] * T[j][l][m][n] +
                   geom.Gamma[l][i][m] * T[j][k][l][n] + geom.Gamma[l][i][n] * T[j][k][m][l];
            out[i][j][k][m][n] = v;
          }
  return out;
}

namespace {

const Mat3& contraction_matrix(SlotDirection dir, const ChartGeometry& geom) {
  return dir == SlotDirection::up ? geom.g_inv : geom.g;
}

void check_slot(int slot, int rank) {
  if (slot < 0 || slot >= rank)
    throw ConfigError("tensor slot " + std::to_string(slot) + " out of range for rank " +
                      std::to_string(rank));
}

}  // namespace

Vec3 raise_lower(const Vec3& T, SlotDirection dir, const ChartGeometry& geom) {
  const Mat3& m = contraction_matrix(dir, geom);
  Vec3 out{};
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) out[a] += m[a][b] * T[b];
  return out;
}

Mat3 raise_lower(const Mat3& T, std::initializer_list<int> slots, SlotDirection dir,
                 const ChartGeometry& geom) {
  const Mat3& m = contraction_matrix(dir, geom);
  Mat3 cur = T;
  for (int slot : slots) {
    check_slot(slot, 2);
    Mat3 next{};
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j)
        for (int b = 0; b < kDim; ++b)
          next[i][j] += (slot == 0 ? m[i][b] * cur[b][j] : m[j][b] * cur[i][b]);
    cur = next;
  }
  return cur;
}

Ten3 raise_lower(const Ten3& T, std::initializer_list<int> slots, SlotDirection dir,
                 const ChartGeometry& geom) {
  const Mat3& m = contraction_matrix(dir, geom);
  Ten3 cur = T;
  for (int slot : slots) {
    check_slot(slot, 3);
    Ten3 next{};
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j)
        for (int k = 0; k < kDim; ++k)
          for (int b = 0; b < kDim; ++b) {
            double v = slot == 0 ? m[i][b] * cur[b][j][k]
                     : slot == 1 ? m[j][b] * cur[i][b][k]
                                 : m[k][b] * cur[i][j][b];
            next[i][j][k] += v;
          }
    cur = next;
  }
  return cur;
}

Ten4 raise_lower(const Ten4& T, std::initializer_list<int> slots, SlotDirection dir,
                 const ChartGeometry& geom) {
  const Mat3& m = contraction_matrix(dir, geom);
  Ten4 cur = T;
  for (int slot : slots) {
    check_slot(slot, 4);
    Ten4 next{};
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j)
        for (int k = 0; k < kDim; ++k)
          for (int n = 0; n < kDim; ++n)
            for (int b = 0; b < kDim; ++b) {
              double v = slot == 0 ? m[i][b] * cur[b][j][k][n]
                       : slot == 1 ? m[j][b] * cur[i][b][k][n]
                       : slot == 2 ? m[k][b] * cur[i][j][b][n]
                                   : m[n][b] * cur[i][j][k][b];
              next[i][j][k][n] += v;
            }
    cur = next;
  }
  return cur;
}

Ten4 curvature_unit_tensor(const Mat3& g) {
  Ten4 G{};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int m = 0; m < kDim; ++m)
          G[i][j][k][m] = g[j][k] * g[i][m] - g[i][k] * g[j][m];
  return G;
}

CheckReport check_geometry_invariants(const ChartGeometry& geom, double tol_identity,
                                      double tol_axiom) {
  const Ten4& R = geom.riemann_04;
  double bianchi = 0.0, pair_sym = 0.0, skew = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int m = 0; m < kDim; ++m) {
          bianchi = std::max(bianchi,
                             std::fabs(R[i][j][k][m] + R[j][k][i][m] + R[k][i][j][m]));
          pair_sym = std::max(pair_sym, std::fabs(R[i][j][k][m] - R[k][m][i][j]));
          skew = std::max(skew, std::fabs(R[i][j][k][m] + R[i][j][m][k]));
        }

  const Ten3 nabla_g = covariant_derivative(geom.g, geom.dg, geom);
  const double compat = max_abs(nabla_g);

  CheckReport rep;
  rep.group = "geometry";
  rep.items = {
      make_check("first_bianchi", bianchi, tol_identity),
      make_check("pair_symmetry", pair_sym, tol_identity),
      make_check("skew_adjoint", skew, tol_identity),
      make_check("metric_compatibility", compat, tol_axiom),
  };
  return rep;
}

double constant_curvature_deviation(const ChartGeometry& geom) {
  const Ten4 G = curvature_unit_tensor(geom.g);
  const double f = geom.scalar / 6.0;
  double dev = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int m = 0; m < kDim; ++m)
          dev = std::max(dev, std::fabs(geom.riemann_04[i][j][k][m] - f * G[i][j][k][m]));
  return dev;
}

}  // namespace epsverify
