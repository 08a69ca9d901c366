//! \file errors.hpp
//! \brief error types shared by the expression layer, the geometry pipeline
//! and the CLI.

#ifndef EPSVERIFY_ERRORS_HPP_
#define EPSVERIFY_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

#include "epsverify/linalg.hpp"

namespace epsverify {

// Bad configuration: unknown model name, unbound symbol, invalid option.
// The CLI maps these to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Lexical or syntax error in an expression string.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::string expected)
      : std::runtime_error(what), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;  // expected-token summary, e.g. "number, identifier or '('"
};

// Numerical failure at a concrete chart point: singular metric, log of a
// non-positive value, division by (near) zero. The run records these per
// point and continues.
class EvalError : public std::runtime_error {
 public:
  EvalError(const std::string& what, const Vec3& point)
      : std::runtime_error(what), point_(point) {}

  const Vec3& point() const { return point_; }

 private:
  Vec3 point_;
};

// Raised by jet arithmetic, which does not know the chart point; the
// expression evaluator catches it and rethrows an EvalError with location.
class JetDomainError : public std::runtime_error {
 public:
  JetDomainError(const std::string& what, double offending_value)
      : std::runtime_error(what), value_(offending_value) {}

  double offending_value() const { return value_; }

 private:
  double value_;
};

}  // namespace epsverify

#endif  // EPSVERIFY_ERRORS_HPP_
