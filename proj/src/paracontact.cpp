//! \file paracontact.cpp

#include "epsverify/paracontact.hpp"

#include <cmath>

#include "epsverify/errors.hpp"

namespace epsverify {

StructureEval evaluate_structure(const StructureField& field, const Env& env,
                                 const Vec3& point) {
  StructureEval se;
  se.point = point;
  se.epsilon = field.epsilon;
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      Jet pj = field.phi[i][j].eval(env, point, 1);
      se.phi[i][j] = pj.value;
      for (int k = 0; k < kDim; ++k) se.dphi[k][i][j] = pj.grad[k];
    }
    Jet xj = field.xi[i].eval(env, point, 1);
    se.xi[i] = xj.value;
    for (int k = 0; k < kDim; ++k) se.dxi[k][i] = xj.grad[k];
    Jet ej = field.eta[i].eval(env, point, 1);
    se.eta[i] = ej.value;
    for (int k = 0; k < kDim; ++k) se.deta[k][i] = ej.grad[k];
  }
  Jet pj = field.psi.eval(env, point, 1);
  se.psi = pj.value;
  se.dpsi = pj.grad;
  return se;
}

PointContext make_point_context(const ChartGeometry& geom, const StructureEval& se) {
  PointContext ctx;
  ctx.g = geom.g;
  ctx.g_inv = geom.g_inv;
  ctx.riemann13 = geom.riemann_13;
  ctx.ricci = geom.ricci;
  ctx.scalar = geom.scalar;
  ctx.phi = se.phi;
  ctx.xi = se.xi;
  ctx.eta = se.eta;
  ctx.epsilon = se.epsilon;
  ctx.psi = se.psi;

  ctx.has_chart = true;
  ctx.dpsi = se.dpsi;
  ctx.nabla_g = covariant_derivative(geom.g, geom.dg, geom);
  ctx.nabla_ricci = covariant_derivative(geom.ricci, geom.dricci, geom);
  // nabla Z = nabla S + dpsi (x) g + psi * nabla g
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        ctx.nabla_z[i][j][k] = ctx.nabla_ricci[i][j][k] + se.dpsi[i] * geom.g[j][k] +
                               se.psi * ctx.nabla_g[i][j][k];
  return ctx;
}

PointContext synthetic_point_model(double r, double psi, double epsilon) {
  if (epsilon != 1.0 && epsilon != -1.0)
    throw ConfigError("epsilon must be +1 or -1");
  PointContext ctx;
  ctx.epsilon = epsilon;
  ctx.psi = psi;
  ctx.scalar = r;
  ctx.g = {{{1, 0, 0}, {0, 1, 0}, {0, 0, epsilon}}};
  ctx.g_inv = ctx.g;  // 1/eps == eps
  ctx.xi = {0, 0, 1};
  ctx.eta = {0, 0, 1};
  ctx.phi = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}};

  const double alpha = r / 2.0 + 2.0 * epsilon;
  const double beta = r / 2.0 + 3.0 * epsilon;
  auto kron = [](int a, int b) { return a == b ? 1.0 : 0.0; };
  for (int l = 0; l < kDim; ++l)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j)
        for (int k = 0; k < kDim; ++k)
          ctx.riemann13[l][i][j][k] =
              alpha * (ctx.g[j][k] * kron(l, i) - ctx.g[i][k] * kron(l, j)) -
              beta * (ctx.g[j][k] * ctx.eta[i] * ctx.xi[l] -
                      ctx.g[i][k] * ctx.eta[j] * ctx.xi[l] +
                      epsilon * ctx.eta[j] * ctx.eta[k] * kron(l, i) -
                      epsilon * ctx.eta[i] * ctx.eta[k] * kron(l, j));
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      ctx.ricci[i][j] = (r / 2.0 + epsilon) * ctx.g[i][j] -
                        epsilon * beta * ctx.eta[i] * ctx.eta[j];
  return ctx;
}

CheckReport check_structure_axioms(const StructureEval& se, const Mat3& g, double tol) {
  const double eps = se.epsilon;
  auto kron = [](int a, int b) { return a == b ? 1.0 : 0.0; };

  double phi_square = 0.0, phi_xi = 0.0, eta_after_phi = 0.0;
  double phi_metric = 0.0, phi_self_adjoint = 0.0, xi_dual = 0.0;
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      double p2 = 0.0;
      for (int k = 0; k < kDim; ++k) p2 += se.phi[i][k] * se.phi[k][j];
      phi_square = std::max(phi_square,
                            std::fabs(p2 - (kron(i, j) - se.eta[j] * se.xi[i])));

      double gphiphi = 0.0;
      for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b) gphiphi += g[a][b] * se.phi[a][i] * se.phi[b][j];
      phi_metric = std::max(phi_metric,
                            std::fabs(gphiphi - g[i][j] + eps * se.eta[i] * se.eta[j]));

      double gx_phiy = 0.0, gphix_y = 0.0;
      for (int k = 0; k < kDim; ++k) {
        gx_phiy += g[i][k] * se.phi[k][j];
        gphix_y += g[j][k] * se.phi[k][i];
      }
      phi_self_adjoint = std::max(phi_self_adjoint, std::fabs(gx_phiy - gphix_y));
    }
    double pxi = 0.0, gxi = 0.0, ephi = 0.0;
    for (int j = 0; j < kDim; ++j) {
      pxi += se.phi[i][j] * se.xi[j];
      gxi += g[i][j] * se.xi[j];
      ephi += se.eta[j] * se.phi[j][i];
    }
    phi_xi = std::max(phi_xi, std::fabs(pxi));
    eta_after_phi = std::max(eta_after_phi, std::fabs(ephi));
    xi_dual = std::max(xi_dual, std::fabs(gxi - eps * se.eta[i]));
  }

  double eta_of_xi = 0.0, xi_norm = 0.0;
  {
    double e = 0.0, n = 0.0;
    for (int i = 0; i < kDim; ++i) {
      e += se.eta[i] * se.xi[i];
      for (int j = 0; j < kDim; ++j) n += g[i][j] * se.xi[i] * se.xi[j];
    }
    eta_of_xi = std::fabs(e - 1.0);
    xi_norm = std::fabs(n - eps);
  }

  CheckReport rep;
  rep.group = "structure-axioms";
  rep.items = {
      make_check("phi_square", phi_square, tol),
      make_check("eta_of_xi", eta_of_xi, tol),
      make_check("phi_xi", phi_xi, tol),
      make_check("eta_after_phi", eta_after_phi, tol),
      make_check("phi_metric_compat", phi_metric, tol),
      make_check("phi_self_adjoint", phi_self_adjoint, tol),
      make_check("xi_metric_dual", xi_dual, tol),
      make_check("xi_norm", xi_norm, tol),
  };
  return rep;
}

CheckReport check_para_sasakian(const StructureEval& se, const ChartGeometry& geom,
                                double tol) {
  const double eps = se.epsilon;

  // (nabla_i phi)^k_j = d_i phi^k_j + Gamma^k_im phi^m_j - Gamma^m_ij phi^k_m
  Ten3 nabla_phi{};
  for (int i = 0; i < kDim; ++i)
    for (int k = 0; k < kDim; ++k)
      for (int j = 0; j < kDim; ++j) {
        double v = se.dphi[i][k][j];
        for (int m = 0; m < kDim; ++m)
          v += geom.Gamma[k][i][m] * se.phi[m][j] - geom.Gamma[m][i][j] * se.phi[k][m];
        nabla_phi[i][k][j] = v;
      }

  // defining condition: (nabla_X phi)Y + g(phi X, phi Y) xi + eps eta(Y) phi^2 X = 0
  double res_phi = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      double gphiphi = 0.0;
      for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b)
          gphiphi += geom.g[a][b] * se.phi[a][i] * se.phi[b][j];
      for (int k = 0; k < kDim; ++k) {
        double phi2 = 0.0;
        for (int m = 0; m < kDim; ++m) phi2 += se.phi[k][m] * se.phi[m][i];
        double v = nabla_phi[i][k][j] + gphiphi * se.xi[k] + eps * se.eta[j] * phi2;
        res_phi = std::max(res_phi, std::fabs(v));
      }
    }

  // nabla_i xi = eps phi e_i
  double res_xi = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int k = 0; k < kDim; ++k) {
      double v = se.dxi[i][k];
      for (int m = 0; m < kDim; ++m) v += geom.Gamma[k][i][m] * se.xi[m];
      res_xi = std::max(res_xi, std::fabs(v - eps * se.phi[k][i]));
    }

  CheckReport rep;
  rep.group = "para-sasakian";
  rep.items = {
      make_check("nabla_phi_defining", res_phi, tol),
      make_check("nabla_xi", res_xi, tol),
  };
  return rep;
}

CheckReport check_curvature_identities(const PointContext& ctx, double tol,
                                       bool applicable) {
  const double eps = ctx.epsilon;
  const double r = ctx.scalar;
  auto kron = [](int a, int b) { return a == b ? 1.0 : 0.0; };

  // R(X,Y)xi = eta(X)Y - eta(Y)X
  double curv_on_reeb = 0.0;
  for (int l = 0; l < kDim; ++l)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) {
        double lhs = 0.0;
        for (int k = 0; k < kDim; ++k) lhs += ctx.riemann13[l][i][j][k] * ctx.xi[k];
        double rhs = ctx.eta[i] * kron(l, j) - ctx.eta[j] * kron(l, i);
        curv_on_reeb = std::max(curv_on_reeb, std::fabs(lhs - rhs));
      }

  // R(xi,X)Y = eta(Y)X - eps g(X,Y)xi
  double curv_from_reeb = 0.0;
  for (int l = 0; l < kDim; ++l)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) {
        double lhs = 0.0;
        for (int c = 0; c < kDim; ++c) lhs += ctx.riemann13[l][c][i][j] * ctx.xi[c];
        double rhs = ctx.eta[j] * kron(l, i) - eps * ctx.g[i][j] * ctx.xi[l];
        curv_from_reeb = std::max(curv_from_reeb, std::fabs(lhs - rhs));
      }

  // R(xi,X)xi = X - eta(X)xi
  double curv_reeb_reeb = 0.0;
  for (int l = 0; l < kDim; ++l)
    for (int i = 0; i < kDim; ++i) {
      double lhs = 0.0;
      for (int c = 0; c < kDim; ++c)
        for (int k = 0; k < kDim; ++k)
          lhs += ctx.riemann13[l][c][i][k] * ctx.xi[c] * ctx.xi[k];
      double rhs = kron(l, i) - ctx.eta[i] * ctx.xi[l];
      curv_reeb_reeb = std::max(curv_reeb_reeb, std::fabs(lhs - rhs));
    }

  // S(X,xi) = -(n-1) eta(X), n = 3
  double ricci_on_reeb = 0.0;
  for (int i = 0; i < kDim; ++i) {
    double lhs = 0.0;
    for (int k = 0; k < kDim; ++k) lhs += ctx.ricci[i][k] * ctx.xi[k];
    ricci_on_reeb = std::max(ricci_on_reeb, std::fabs(lhs + 2.0 * ctx.eta[i]));
  }

  // dimension-3 curvature form and Ricci form
  const double alpha = r / 2.0 + 2.0 * eps;
  const double beta = r / 2.0 + 3.0 * eps;
  double curv_form = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int m = 0; m < kDim; ++m) {
          double lhs = 0.0;
          for (int l = 0; l < kDim; ++l) lhs += ctx.g[l][m] * ctx.riemann13[l][i][j][k];
          double rhs =
              alpha * (ctx.g[j][k] * ctx.g[i][m] - ctx.g[i][k] * ctx.g[j][m]) -
              beta * (ctx.g[j][k] * ctx.eta[i] * eps * ctx.eta[m] -
                      ctx.g[i][k] * ctx.eta[j] * eps * ctx.eta[m] +
                      eps * ctx.eta[j] * ctx.eta[k] * ctx.g[i][m] -
                      eps * ctx.eta[i] * ctx.eta[k] * ctx.g[j][m]);
          curv_form = std::max(curv_form, std::fabs(lhs - rhs));
        }

  double ricci_form = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      double rhs = (r / 2.0 + eps) * ctx.g[i][j] - eps * beta * ctx.eta[i] * ctx.eta[j];
      ricci_form = std::max(ricci_form, std::fabs(ctx.ricci[i][j] - rhs));
    }

  // Z(X,xi) = (eps psi - 2) eta(X), with Z = S + psi g
  double z_on_reeb = 0.0;
  for (int i = 0; i < kDim; ++i) {
    double lhs = 0.0;
    for (int k = 0; k < kDim; ++k)
      lhs += (ctx.ricci[i][k] + ctx.psi * ctx.g[i][k]) * ctx.xi[k];
    z_on_reeb = std::max(z_on_reeb,
                         std::fabs(lhs - (eps * ctx.psi - 2.0) * ctx.eta[i]));
  }

  CheckReport rep;
  rep.group = "curvature-identities";
  rep.items = {
      make_check("curvature_on_reeb", curv_on_reeb, tol, applicable),
      make_check("curvature_from_reeb", curv_from_reeb, tol, applicable),
      make_check("curvature_reeb_reeb", curv_reeb_reeb, tol, applicable),
      make_check("ricci_on_reeb", ricci_on_reeb, tol, applicable),
      make_check("curvature_3d_form", curv_form, tol, applicable),
      make_check("ricci_3d_form", ricci_form, tol, applicable),
      make_check("z_on_reeb", z_on_reeb, tol, applicable),
  };
  return rep;
}

namespace {

Expr expr_of(const char* text) { return Expr::parse(text); }

std::array<std::array<Expr, 3>, 3> diag_exprs(const char* a, const char* b,
                                              const char* c) {
  auto zero = expr_of("0");
  std::array<std::array<Expr, 3>, 3> m{{{zero, zero, zero},
                                        {zero, zero, zero},
                                        {zero, zero, zero}}};
  m[0][0] = expr_of(a);
  m[1][1] = expr_of(b);
  m[2][2] = expr_of(c);
  return m;
}

StructureField standard_structure(double epsilon) {
  StructureField s;
  s.phi = diag_exprs("1", "1", "0");
  s.xi = {expr_of("0"), expr_of("0"), expr_of("1")};
  s.eta = {expr_of("0"), expr_of("0"), expr_of("1")};
  s.psi = expr_of("0");
  s.epsilon = epsilon;
  return s;
}

}  // namespace

ModelSpec builtin_model(const std::string& name, double epsilon) {
  if (epsilon != 1.0 && epsilon != -1.0)
    throw ConfigError("epsilon must be +1 or -1");

  ModelSpec spec;
  spec.name = name;
  spec.metric.env.coordinates = {"x", "y", "z"};
  spec.metric.env.params["eps"] = epsilon;
  spec.structure = standard_structure(epsilon);

  if (name == "warped") {
    spec.metric.components = diag_exprs("exp(2*eps*z)", "exp(2*eps*z)", "eps");
    spec.expect.para_sasakian = true;
    spec.expect.einstein = true;
    spec.expect.scalar_curvature = -6.0 * epsilon;
  } else if (name == "flat-control") {
    spec.metric.components = diag_exprs("1", "1", "eps");
    spec.expect.para_sasakian = false;
  } else if (name == "perturbed-control") {
    spec.metric.components =
        diag_exprs("exp(2*eps*z)*(1+0.1*x^2)", "exp(2*eps*z)", "eps");
    spec.expect.para_sasakian = false;
  } else {
    throw ConfigError("unknown built-in model '" + name +
                      "' (expected warped, flat-control or perturbed-control)");
  }
  return spec;
}

const std::vector<std::string>& builtin_model_names() {
  static const std::vector<std::string> names = {"warped", "flat-control",
                                                 "perturbed-control"};
  return names;
}

}  // namespace epsverify
