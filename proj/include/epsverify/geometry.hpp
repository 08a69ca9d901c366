//! \file geometry.hpp
//! \brief metric, Levi-Civita connection and curvature of a 3-dimensional
//! chart, evaluated per point from a matrix of expressions.
//!
//! The whole pipeline runs in jet arithmetic: the metric is evaluated as
//! order-3 jets, so Christoffel symbols come out as order-2 jets, curvature
//! and Ricci as order-1 jets, and one chart derivative of every curvature
//! quantity is available analytically.

#ifndef EPSVERIFY_GEOMETRY_HPP_
#define EPSVERIFY_GEOMETRY_HPP_

#include <initializer_list>

#include "epsverify/check_report.hpp"
#include "epsverify/expr.hpp"
#include "epsverify/linalg.hpp"

namespace epsverify {

// Symmetric matrix of component expressions over a chart.
struct MetricField {
  std::array<std::array<Expr, 3>, 3> components;  // [i][j] same expression as [j][i]
  Env env;
  double det_threshold = 1e-12;
};

// Everything the curvature formulas produce at one chart point.
// Index conventions:
//   dg[k][i][j]        = d_k g_ij
//   Gamma[k][i][j]     = Gamma^k_ij
//   dGamma[l][k][i][j] = d_l Gamma^k_ij
//   riemann_13[l][i][j][k]: R(e_i, e_j) e_k = R^l_ijk e_l
//   riemann_04[i][j][k][m] = g(R(e_i, e_j) e_k, e_m)
//   ricci[j][k]        = R^i_ijk,  scalar = g^jk ricci_jk
struct ChartGeometry {
  Vec3 point{};
  double det_g = 0.0;
  Mat3 g{}, g_inv{};
  Ten3 dg{};
  Ten3 Gamma{};
  Ten4 dGamma{};
  Ten4 riemann_13{};
  Ten4 riemann_04{};
  Mat3 ricci{};
  double scalar = 0.0;
  // one chart derivative of the curvature data, for nabla-of-curvature checks
  Ten3 dricci{};           // dricci[l][j][k] = d_l S_jk
  Vec3 dscalar{};
  Ten5 driemann_04{};      // [l][i][j][k][m] = d_l riemann_04[i][j][k][m]
};

// Throws EvalError when the metric is singular at the point (|det| below
// the field's threshold) or an expression hits a domain violation.
ChartGeometry evaluate_geometry(const MetricField& metric, const Vec3& point);

// Covariant derivative of a (0,k) tensor supplied with its chart partials
// (dT[i][...] = d_i T_...). Result has the derivative slot first:
// (nabla T)_{i j1..jk} = d_i T_{j1..jk} - sum_a Gamma^l_{i ja} T_{j1..l..jk}.
Mat3 covariant_derivative(const Vec3& T, const Mat3& dT, const ChartGeometry& geom);
Ten3 covariant_derivative(const Mat3& T, const Ten3& dT, const ChartGeometry& geom);
Ten4 covariant_derivative(const Ten3& T, const Ten4& dT, const ChartGeometry& geom);
Ten5 covariant_derivative(const Ten4& T, const Ten5& dT, const ChartGeometry& geom);

enum class SlotDirection { up, down };

// Contracts each named slot with g_inv (up) or g (down), keeping slot order.
Vec3 raise_lower(const Vec3& T, SlotDirection dir, const ChartGeometry& geom);
Mat3 raise_lower(const Mat3& T, std::initializer_list<int> slots, SlotDirection dir,
                 const ChartGeometry& geom);
Ten3 raise_lower(const Ten3& T, std::initializer_list<int> slots, SlotDirection dir,
                 const ChartGeometry& geom);
Ten4 raise_lower(const Ten4& T, std::initializer_list<int> slots, SlotDirection dir,
                 const ChartGeometry& geom);

// Max-norm of riemann_04 - (r/6) G where G_ijkm = g_jk g_im - g_ik g_jm;
// zero exactly on a space of constant curvature r/6.
double constant_curvature_deviation(const ChartGeometry& geom);

// The (0,4) tensor G itself, for reuse by the z-symmetry module.
Ten4 curvature_unit_tensor(const Mat3& g);

// Residuals that hold for any Levi-Civita geometry, independent of the
// para-contact structure: first Bianchi identity, pair symmetry of the
// lowered curvature, skew-adjointness in the last pair, and metric
// compatibility nabla g = 0.
CheckReport check_geometry_invariants(const ChartGeometry& geom, double tol_identity,
                                      double tol_axiom);

}  // namespace epsverify

#endif  // EPSVERIFY_GEOMETRY_HPP_
