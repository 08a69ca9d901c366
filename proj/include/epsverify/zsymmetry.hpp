//! \file zsymmetry.hpp
//! \brief the Z tensor, projective tensor, derivation operators and the
//! condition predicates certified by the engine.
//!
//! Derivation conventions (all with leading minus signs):
//!   (R.T)(X1..Xk; X,Y)   = -sum_a T(X1,.., R(X,Y)Xa, .., Xk)
//!   Q(A,T)(X1..Xk; X,Y)  = -sum_a T(X1,.., (X ^_A Y)Xa, .., Xk)
//!   (X ^_A Y)Z           = A(Y,Z)X - A(X,Z)Y
//! Every vanishing condition is invariant under the overall sign, and the
//! fitted pseudosymmetry function is invariant because both sides flip
//! together.

#ifndef EPSVERIFY_ZSYMMETRY_HPP_
#define EPSVERIFY_ZSYMMETRY_HPP_

#include <array>
#include <optional>
#include <span>

#include "epsverify/check_report.hpp"
#include "epsverify/paracontact.hpp"

namespace epsverify {

// Z = S + psi g together with its trace.
struct ZData {
  Mat3 z{};
  double z_scalar = 0.0;  // g^ij Z_ij = r + 3 psi
  double psi = 0.0;
  std::optional<Ten3> nabla_z;  // (nabla Z)_{i jk}, when a chart is available
};

ZData z_tensor(const Mat3& S, const Mat3& g, double psi);

// Projective curvature tensor P(X,Y)U = R(X,Y)U - 1/2 [S(Y,U)X - S(X,U)Y],
// plus the precontracted family P(xi, e_i) e_j used by the reeb-slot checks.
struct ProjectiveTensor {
  Ten4 p13{};     // [l][i][j][k], same layout as riemann13
  Ten3 p_reeb{};  // p_reeb[l][i][j] = component l of P(xi, e_i) e_j
};

ProjectiveTensor projective_tensor(const PointContext& ctx);

// (X ^_A Y)Z = A(Y,Z)X - A(X,Z)Y.
Vec3 wedge(const Mat3& A, const Vec3& X, const Vec3& Y, const Vec3& Z);

// Endomorphism W^l_a of R(X,Y) resp. X ^_A Y acting on basis vectors.
Mat3 curvature_endomorphism(const Ten4& r13, const Vec3& X, const Vec3& Y);
Mat3 wedge_endomorphism(const Mat3& A, const Vec3& X, const Vec3& Y);

// (R.T)(...; X, Y) for a (0,k) tensor T, k = 2, 3, 4.
Mat3 curvature_derivation(const Mat3& T, const Ten4& r13, const Vec3& X, const Vec3& Y);
Ten3 curvature_derivation(const Ten3& T, const Ten4& r13, const Vec3& X, const Vec3& Y);
Ten4 curvature_derivation(const Ten4& T, const Ten4& r13, const Vec3& X, const Vec3& Y);

// Q(A,T)(...; X, Y) for a (0,k) tensor T, k = 2, 3, 4.
Mat3 q_operator(const Mat3& A, const Mat3& T, const Vec3& X, const Vec3& Y);
Ten3 q_operator(const Mat3& A, const Ten3& T, const Vec3& X, const Vec3& Y);
Ten4 q_operator(const Mat3& A, const Ten4& T, const Vec3& X, const Vec3& Y);

// All components of (R.T) resp. Q(g,T) for a (0,2) tensor over basis slots,
// flattened as ((a*3+b)*3+c)*3+d with (a,b) the tensor slots and (c,d) the
// derivation pair. Input to the pseudosymmetry fit.
std::array<double, 81> derivation_values(const Mat3& T, const Ten4& r13);
std::array<double, 81> q_values(const Mat3& A, const Mat3& T);

// Least-squares scalar L with R.T ~ L Q and the relative fit residual
// ||R.T - L Q||_2 / ||R.T||_2. Undefined when ||Q||_inf < degenerate_tol.
struct PseudosymmetryFit {
  bool defined = false;
  double L = 0.0;
  double residual = 0.0;
};

PseudosymmetryFit estimate_pseudosymmetry_function(std::span<const double> t_deriv,
                                                   std::span<const double> q_vals,
                                                   double degenerate_tol = 1e-10);

// Condition predicates. Chart-only predicates (nabla-based) return
// not-applicable on pointwise contexts.
ConditionVerdict check_einstein(const Mat3& S, const Mat3& g, double epsilon, double tol);
ConditionVerdict check_z_semisymmetric(const PointContext& ctx, double tol);
ConditionVerdict check_ricci_symmetric(const PointContext& ctx, double tol);
ConditionVerdict check_ricci_semisymmetric(const PointContext& ctx, double tol);
ConditionVerdict check_z_symmetric(const PointContext& ctx, double tol);
ConditionVerdict check_z_pseudosymmetric(const PointContext& ctx, double tol);
ConditionVerdict check_projectively_z_semisymmetric(const PointContext& ctx, double tol);

// The four equivalent conditions run together; `agreement` means every
// applicable verdict is the same (all pass or all fail).
struct EquivalenceResult {
  ConditionVerdict einstein;
  ConditionVerdict ricci_symmetric;
  ConditionVerdict ricci_semisymmetric;
  ConditionVerdict z_semisymmetric;
  bool agreement = false;
  ConditionVerdict combined;  // name "equivalence"
};

EquivalenceResult equivalence_suite(const PointContext& ctx, double tol);

}  // namespace epsverify

#endif  // EPSVERIFY_ZSYMMETRY_HPP_
