//! \file expr.hpp
//! \brief closed-form scalar fields over chart coordinates: parsing,
//! pretty-printing and evaluation over reals or jets.
//!
//! Grammar:
//!   expr    := term (('+'|'-') term)*
//!   term    := factor (('*'|'/') factor)*
//!   factor  := '-' factor | power
//!   power   := primary ('^' factor)?
//!   primary := number | ident | ident '(' expr ')' | '(' expr ')'
//! so '^' is right-associative and unary minus binds looser than '^'
//! (-x^2 parses as -(x^2), 2^-3 is valid).
//! Functions: exp log sin cos tan sinh cosh tanh sqrt. Constant: pi.

#ifndef EPSVERIFY_EXPR_HPP_
#define EPSVERIFY_EXPR_HPP_

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "epsverify/jet.hpp"
#include "epsverify/linalg.hpp"

namespace epsverify {

// Evaluation environment: the three coordinate names plus parameter bindings.
// "eps" is always bound and must be exactly +1 or -1.
struct Env {
  std::array<std::string, 3> coordinates{"x", "y", "z"};
  std::map<std::string, double> params{{"eps", 1.0}};
  double div_threshold = 1e-12;

  // Index of a coordinate name, or -1 when the name is not a coordinate.
  int coordinate_index(std::string_view name) const;

  // Checks the Env invariants (distinct coordinates, eps in {+1,-1}).
  // Throws ConfigError on violation.
  void validate() const;
};

class Expr {
 public:
  Expr() = default;  // empty; any use before assignment is a ConfigError

  // Throws ParseError with byte offset and expected-token set.
  static Expr parse(std::string_view text);

  // Evaluates with coordinates seeded as jets of the given order and
  // parameters as constants. Throws ConfigError for unbound symbols and
  // EvalError (with the point) for domain violations.
  Jet eval(const Env& env, const Vec3& point, int order) const;

  // Order-0 convenience.
  double value(const Env& env, const Vec3& point) const;

  // Verifies every symbol is a declared coordinate or parameter.
  // Throws ConfigError naming the symbol and its byte offset.
  void bind_check(const Env& env) const;

  // True when some symbol of the expression is a coordinate of `env`.
  bool depends_on_coordinates(const Env& env) const;

  // Parenthesized form that re-parses to a structurally identical tree.
  std::string str() const;

  bool same_structure(const Expr& other) const;

  bool empty() const { return root_ == nullptr; }

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

  std::shared_ptr<const Node> root_;  // immutable after parse
};

}  // namespace epsverify

#endif  // EPSVERIFY_EXPR_HPP_
