//! \file paracontact.hpp
//! \brief the (phi, xi, eta, g, eps) structure: axiom checks, the defining
//! nabla-conditions, dimension-3 curvature identities, and the built-in and
//! synthetic models.

#ifndef EPSVERIFY_PARACONTACT_HPP_
#define EPSVERIFY_PARACONTACT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "epsverify/check_report.hpp"
#include "epsverify/expr.hpp"
#include "epsverify/geometry.hpp"

namespace epsverify {

// Structure tensors as chart expressions. phi is stored mixed (phi^i_j);
// eta and xi are kept separately even though eta = eps*g(xi,.) -- the
// consistency is checked, not assumed.
struct StructureField {
  std::array<std::array<Expr, 3>, 3> phi;  // phi[i][j] = phi^i_j
  std::array<Expr, 3> xi;                  // xi^i
  std::array<Expr, 3> eta;                 // eta_i
  Expr psi;                                // scalar of the Z tensor, default "0"
  double epsilon = 1.0;                    // +1 or -1
};

// Structure tensors and their chart partials at one point.
struct StructureEval {
  Vec3 point{};
  Mat3 phi{};
  Vec3 xi{};
  Vec3 eta{};
  Ten3 dphi{};  // dphi[k][i][j] = d_k phi^i_j
  Mat3 dxi{};   // dxi[k][i]    = d_k xi^i
  Mat3 deta{};  // deta[k][i]   = d_k eta_i
  double psi = 0.0;
  Vec3 dpsi{};
  double epsilon = 1.0;
};

StructureEval evaluate_structure(const StructureField& field, const Env& env,
                                 const Vec3& point);

// Unified per-point algebra package consumed by the condition predicates.
// Chart models fill everything; the synthetic frame model has no chart and
// leaves the nabla data unset (has_chart = false).
struct PointContext {
  Mat3 g{}, g_inv{};
  Ten4 riemann13{};  // [l][i][j][k], same convention as ChartGeometry
  Mat3 ricci{};
  double scalar = 0.0;
  Mat3 phi{};
  Vec3 xi{};
  Vec3 eta{};
  double epsilon = 1.0;
  double psi = 0.0;

  bool has_chart = false;
  Vec3 dpsi{};
  Ten3 nabla_ricci{};  // (nabla S)_{i jk}
  Ten3 nabla_z{};      // (nabla Z)_{i jk} = (nabla S) + dpsi (x) g + psi (nabla g)
  Ten3 nabla_g{};      // metric compatibility diagnostic, ~0
};

PointContext make_point_context(const ChartGeometry& geom, const StructureEval& se);

// Pointwise frame model: g = diag(1,1,eps), xi = e3, eta = (0,0,1),
// phi = diag(1,1,0), curvature and Ricci assembled from the dimension-3
// forms for the given scalar curvature r. No chart, no derivatives.
PointContext synthetic_point_model(double r, double psi, double epsilon);

// Residuals of the defining algebraic axioms of an (eps)-almost para-contact
// metric structure.
CheckReport check_structure_axioms(const StructureEval& se, const Mat3& g, double tol);

// Residuals of the two nabla-conditions that make the structure
// (eps)-para-Sasakian: the (nabla phi) equation and nabla xi = eps phi.
CheckReport check_para_sasakian(const StructureEval& se, const ChartGeometry& geom,
                                double tol);

// Residuals of the curvature identities that hold on an (eps)-para-Sasakian
// 3-manifold. When `applicable` is false (the structure checks failed) the
// residuals are still computed but every verdict is not-applicable.
CheckReport check_curvature_identities(const PointContext& ctx, double tol,
                                       bool applicable);

// What a built-in model is expected to satisfy; asserted by tests and
// surfaced in reports.
struct ModelExpectations {
  bool para_sasakian = false;
  bool einstein = false;
  std::optional<double> scalar_curvature;
};

struct ModelSpec {
  std::string name;
  MetricField metric;  // carries the Env (coordinates + eps binding)
  StructureField structure;
  std::array<std::array<double, 2>, 3> box{{{-1.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}}};
  ModelExpectations expect;
};

// Built-in models: "warped" (a verified (eps)-para-Sasakian example),
// "flat-control" and "perturbed-control" (negative controls that keep the
// algebraic structure but break the nabla-conditions).
// Throws ConfigError for an unknown name or invalid epsilon.
ModelSpec builtin_model(const std::string& name, double epsilon);

const std::vector<std::string>& builtin_model_names();

}  // namespace epsverify

#endif  // EPSVERIFY_PARACONTACT_HPP_
