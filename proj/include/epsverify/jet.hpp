//! \file jet.hpp
//! \brief truncated Taylor arithmetic (order <= 3) in three chart variables.
//!
//! A Jet carries the value of a scalar field at a point together with its
//! gradient, Hessian and third derivatives up to the jet's order. Evaluating
//! the metric and structure expressions once through jets yields every chart
//! derivative the curvature and nabla-of-curvature formulas need, without
//! finite-difference noise.

#ifndef EPSVERIFY_JET_HPP_
#define EPSVERIFY_JET_HPP_

#include <optional>

#include "epsverify/linalg.hpp"

namespace epsverify {

struct Jet {
  int order = 0;     // 0..3; arithmetic never reads components above it
  double value = 0.0;
  Vec3 grad{};       // d_i f
  Mat3 hess{};       // d_i d_j f, symmetric
  Ten3 third{};      // d_i d_j d_k f, fully symmetric
};

enum class JetOp { add, sub, mul, div };

enum class JetFn {
  neg,
  exp,
  log,
  sin,
  cos,
  tan,
  sinh,
  cosh,
  tanh,
  sqrt,
  pow_const,  // needs the exponent argument
};

// Constant field: all derivatives zero.
Jet jet_constant(double value, int order);

// The coordinate function x_index as a jet at `point`.
// Throws ConfigError if index or order is out of range.
Jet seed_coordinate(int index, const Vec3& point, int order);

Jet jet_add(const Jet& a, const Jet& b);
Jet jet_sub(const Jet& a, const Jet& b);
Jet jet_mul(const Jet& a, const Jet& b);
// Throws JetDomainError when |b.value| < div_threshold.
Jet jet_div(const Jet& a, const Jet& b, double div_threshold = 1e-12);

// Dispatch form used by the expression evaluator.
Jet jet_arith(JetOp op, const Jet& a, const Jet& b, double div_threshold = 1e-12);

// Composition f(a) truncated at a.order (Faa di Bruno through third order).
// pow_const requires `exponent`; domain violations raise JetDomainError.
Jet jet_unary(JetFn fn, const Jet& a, std::optional<double> exponent = std::nullopt,
              double div_threshold = 1e-12);

// Partial derivative along `axis` as a jet one order lower.
Jet jet_derivative(const Jet& a, int axis);

// Copy truncated to a lower order (components above it zeroed).
Jet jet_truncate(const Jet& a, int order);

inline Jet operator+(const Jet& a, const Jet& b) { return jet_add(a, b); }
inline Jet operator-(const Jet& a, const Jet& b) { return jet_sub(a, b); }
inline Jet operator*(const Jet& a, const Jet& b) { return jet_mul(a, b); }
inline Jet operator-(const Jet& a) { return jet_unary(JetFn::neg, a); }
inline Jet operator*(double s, const Jet& a) { return jet_mul(jet_constant(s, a.order), a); }

}  // namespace epsverify

#endif  // EPSVERIFY_JET_HPP_
