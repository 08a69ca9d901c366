//! \file jet.cpp
//! \brief truncated Taylor arithmetic: Leibniz, quotient and Faa di Bruno
//! rules through third order.

#include "epsverify/jet.hpp"

#include <cmath>
#include <string>

#include "epsverify/errors.hpp"

namespace epsverify {

namespace {

void require_same_order(const Jet& a, const Jet& b) {
  if (a.order != b.order)
    throw ConfigError("jet arithmetic requires operands of equal order (got " +
                      std::to_string(a.order) + " and " + std::to_string(b.order) + ")");
}

bool is_integral(double c) {
  return std::fabs(c - std::nearbyint(c)) == 0.0 && std::fabs(c) < 1e9;
}

// c * u^p with the convention that a vanishing coefficient kills the power
// term entirely (avoids 0 * inf for exponents that terminate early).
double coeff_pow(double c, double u, double p) {
  if (c == 0.0) return 0.0;
  return c * std::pow(u, p);
}

// Chain rule through third order for f composed with the inner jet a,
// given f and its first three derivatives at a.value.
Jet compose_series(const Jet& a, double f0, double f1, double f2, double f3) {
  Jet r;
  r.order = a.order;
  r.value = f0;
  if (r.order >= 1)
    for (int i = 0; i < kDim; ++i) r.grad[i] = f1 * a.grad[i];
  if (r.order >= 2)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j)
        r.hess[i][j] = f2 * a.grad[i] * a.grad[j] + f1 * a.hess[i][j];
  if (r.order >= 3)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j)
        for (int k = 0; k < kDim; ++k)
          r.third[i][j][k] = f3 * a.grad[i] * a.grad[j] * a.grad[k]
                           + f2 * (a.hess[i][j] * a.grad[k] + a.hess[i][k] * a.grad[j]
                                   + a.hess[j][k] * a.grad[i])
                           + f1 * a.third[i][j][k];
  return r;
}

}  // namespace

Jet jet_constant(double value, int order) {
  if (order < 0 || order > 3)
    throw ConfigError("jet order must be in 0..3, got " + std::to_string(order));
  Jet j;
  j.order = order;
  j.value = value;
  return j;
}

Jet seed_coordinate(int index, const Vec3& point, int order) {
  if (index < 0 || index >= kDim)
    throw ConfigError("coordinate index must be in 0..2, got " + std::to_string(index));
  Jet j = jet_constant(point[index], order);
  if (order >= 1) j.grad[index] = 1.0;
  return j;
}

Jet jet_add(const Jet& a, const Jet& b) {
  require_same_order(a, b);
  Jet r = a;
  r.value += b.value;
  if (r.order >= 1)
    for (int i = 0; i < kDim; ++i) r.grad[i] += b.grad[i];
  if (r.order >= 2)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) r.hess[i][j] += b.hess[i][j];
  if (r.order >= 3)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j)
        for (int k = 0; k < kDim; ++k) r.third[i][j][k] += b.third[i][j][k];
  return r;
}

Jet jet_sub(const Jet& a, const Jet& b) {
  return jet_add(a, jet_unary(JetFn::neg, b));
}

Jet jet_mul(const Jet& a, const Jet& b) {
  require_same_order(a, b);
  Jet r;
  r.order = a.order;
  r.value = a.value * b.value;
  if (r.order >= 1)
    for (int i = 0; i < kDim; ++i)
      r.grad[i] = a.grad[i] * b.value + a.value * b.grad[i];
  if (r.order >= 2)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j)
        r.hess[i][j] = a.hess[i][j] * b.value + a.grad[i] * b.grad[j]
                     + a.grad[j] * b.grad[i] + a.value * b.hess[i][j];
  if (r.order >= 3)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j)
        for (int k = 0; k < kDim; ++k)
          r.third[i][j][k] = a.third[i][j][k] * b.value
                           + a.hess[i][j] * b.grad[k] + a.hess[i][k] * b.grad[j]
                           + a.hess[j][k] * b.grad[i]
                           + a.grad[i] * b.hess[j][k] + a.grad[j] * b.hess[i][k]
                           + a.grad[k] * b.hess[i][j]
                           + a.value * b.third[i][j][k];
  return r;
}

Jet jet_div(const Jet& a, const Jet& b, double div_threshold) {
  require_same_order(a, b);
  if (std::fabs(b.value) < div_threshold)
    throw JetDomainError("division by a value below the singularity threshold", b.value);
  // a / b = a * (1/b); reciprocal derivatives: -1/u^2, 2/u^3, -6/u^4
  const double u = b.value;
  Jet recip = compose_series(b, 1.0 / u, -1.0 / (u * u), 2.0 / (u * u * u),
                             -6.0 / (u * u * u * u));
  return jet_mul(a, recip);
}

Jet jet_arith(JetOp op, const Jet& a, const Jet& b, double div_threshold) {
  switch (op) {
    case JetOp::add: return jet_add(a, b);
    case JetOp::sub: return jet_sub(a, b);
    case JetOp::mul: return jet_mul(a, b);
    case JetOp::div: return jet_div(a, b, div_threshold);
  }
  throw ConfigError("unknown jet operation");
}

Jet jet_unary(JetFn fn, const Jet& a, std::optional<double> exponent,
              double div_threshold) {
  const double u = a.value;
  switch (fn) {
    case JetFn::neg:
      return compose_series(a, -u, -1.0, 0.0, 0.0);
    case JetFn::exp: {
      const double e = std::exp(u);
      return compose_series(a, e, e, e, e);
    }
    case JetFn::log:
      if (u <= 0.0) throw JetDomainError("log of a non-positive value", u);
      return compose_series(a, std::log(u), 1.0 / u, -1.0 / (u * u), 2.0 / (u * u * u));
    case JetFn::sin:
      return compose_series(a, std::sin(u), std::cos(u), -std::sin(u), -std::cos(u));
    case JetFn::cos:
      return compose_series(a, std::cos(u), -std::sin(u), -std::cos(u), std::sin(u));
    case JetFn::tan: {
      if (std::fabs(std::cos(u)) < div_threshold)
        throw JetDomainError("tan evaluated at a pole", u);
      const double t = std::tan(u);
      const double s = 1.0 + t * t;  // sec^2
      return compose_series(a, t, s, 2.0 * t * s, s * (2.0 + 6.0 * t * t));
    }
    case JetFn::sinh:
      return compose_series(a, std::sinh(u), std::cosh(u), std::sinh(u), std::cosh(u));
    case JetFn::cosh:
      return compose_series(a, std::cosh(u), std::sinh(u), std::cosh(u), std::sinh(u));
    case JetFn::tanh: {
      const double t = std::tanh(u);
      const double s = 1.0 - t * t;
      return compose_series(a, t, s, -2.0 * t * s, s * (6.0 * t * t - 2.0));
    }
    case JetFn::sqrt: {
      if (u <= 0.0) throw JetDomainError("sqrt of a non-positive value", u);
      const double s = std::sqrt(u);
      return compose_series(a, s, 0.5 / s, -0.25 / (s * u), 0.375 / (s * u * u));
    }
    case JetFn::pow_const: {
      if (!exponent) throw ConfigError("pow_const needs an exponent");
      const double c = *exponent;
      if (is_integral(c)) {
        if (c < 0.0 && std::fabs(u) < div_threshold)
          throw JetDomainError("negative integer power of a (near) zero base", u);
        return compose_series(a, coeff_pow(1.0, u, c), coeff_pow(c, u, c - 1.0),
                              coeff_pow(c * (c - 1.0), u, c - 2.0),
                              coeff_pow(c * (c - 1.0) * (c - 2.0), u, c - 3.0));
      }
      if (u <= 0.0)
        throw JetDomainError("non-integer power of a non-positive base", u);
      return compose_series(a, std::pow(u, c), c * std::pow(u, c - 1.0),
                            c * (c - 1.0) * std::pow(u, c - 2.0),
                            c * (c - 1.0) * (c - 2.0) * std::pow(u, c - 3.0));
    }
  }
  throw ConfigError("unknown jet function");
}

Jet jet_derivative(const Jet& a, int axis) {
  if (axis < 0 || axis >= kDim)
    throw ConfigError("derivative axis must be in 0..2, got " + std::to_string(axis));
  if (a.order < 1)
    throw ConfigError("cannot take the derivative of an order-0 jet");
  Jet r;
  r.order = a.order - 1;
  r.value = a.grad[axis];
  if (r.order >= 1)
    for (int i = 0; i < kDim; ++i) r.grad[i] = a.hess[axis][i];
  if (r.order >= 2)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) r.hess[i][j] = a.third[axis][i][j];
  return r;
}

Jet jet_truncate(const Jet& a, int order) {
  if (order < 0 || order > a.order)
    throw ConfigError("truncation order must be in 0..order");
  Jet r;
  r.order = order;
  r.value = a.value;
  if (order >= 1) r.grad = a.grad;
  if (order >= 2) r.hess = a.hess;
  if (order >= 3) r.third = a.third;
  return r;
}

}  // namespace epsverify
