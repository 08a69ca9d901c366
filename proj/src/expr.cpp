//! \file expr.cpp
//! \brief recursive-descent parser and jet evaluator for scalar field
//! expressions.

#include "epsverify/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "epsverify/errors.hpp"

namespace epsverify {

int Env::coordinate_index(std::string_view name) const {
  for (int i = 0; i < kDim; ++i)
    if (coordinates[i] == name) return i;
  return -1;
}

void Env::validate() const {
  for (int i = 0; i < kDim; ++i) {
    if (coordinates[i].empty()) throw ConfigError("coordinate names must be nonempty");
    for (int j = i + 1; j < kDim; ++j)
      if (coordinates[i] == coordinates[j])
        throw ConfigError("coordinate names must be pairwise distinct; '" +
                          coordinates[i] + "' repeats");
  }
  auto it = params.find("eps");
  if (it == params.end()) throw ConfigError("environment must bind 'eps'");
  if (it->second != 1.0 && it->second != -1.0)
    throw ConfigError("'eps' must be exactly +1 or -1");
}

struct Expr::Node {
  enum class Kind { number, symbol, unary, binary };
  Kind kind;
  double number = 0.0;
  std::string name;        // symbol, or function name for unary
  JetFn fn = JetFn::neg;   // unary only
  char op = 0;             // binary only: + - * / ^
  std::shared_ptr<const Node> a, b;
  std::size_t offset = 0;  // byte offset in the source text
};

namespace {

using Node = Expr::Node;
using NodePtr = std::shared_ptr<const Node>;

struct FnEntry {
  const char* name;
  JetFn fn;
};

constexpr FnEntry kFunctions[] = {
    {"exp", JetFn::exp},   {"log", JetFn::log},   {"sin", JetFn::sin},
    {"cos", JetFn::cos},   {"tan", JetFn::tan},   {"sinh", JetFn::sinh},
    {"cosh", JetFn::cosh}, {"tanh", JetFn::tanh}, {"sqrt", JetFn::sqrt},
};

const char* fn_name(JetFn fn) {
  for (const auto& e : kFunctions)
    if (e.fn == fn) return e.name;
  return "?";
}

struct Token {
  enum class Kind { number, ident, op, end };
  Kind kind;
  std::string text;
  double number = 0.0;
  std::size_t offset = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    tok_.offset = pos_;
    if (pos_ >= text_.size()) {
      tok_.kind = Token::Kind::end;
      tok_.text = "<end of input>";
      return;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      lex_number();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      tok_.kind = Token::Kind::ident;
      tok_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      tok_.kind = Token::Kind::op;
      tok_.text = std::string(1, c);
      ++pos_;
      return;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " +
                         std::to_string(pos_),
                     pos_, "number, identifier, operator or parenthesis");
  }

  void lex_number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t mark = pos_;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          ++pos_;
      } else {
        pos_ = mark;  // 'e' belongs to a following identifier, not this literal
      }
    }
    tok_.kind = Token::Kind::number;
    tok_.text = std::string(text_.substr(start, pos_ - start));
    tok_.number = std::strtod(tok_.text.c_str(), nullptr);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  NodePtr parse() {
    NodePtr e = parse_expr();
    const Token& t = lex_.peek();
    if (t.kind != Token::Kind::end)
      throw ParseError("unexpected trailing input '" + t.text + "' at offset " +
                           std::to_string(t.offset),
                       t.offset, "'+', '-', '*', '/', '^' or end of input");
    return e;
  }

 private:
  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    while (peek_op("+") || peek_op("-")) {
      Token t = lex_.take();
      lhs = make_binary(t.text[0], lhs, parse_term(), t.offset);
    }
    return lhs;
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    while (peek_op("*") || peek_op("/")) {
      Token t = lex_.take();
      lhs = make_binary(t.text[0], lhs, parse_factor(), t.offset);
    }
    return lhs;
  }

  NodePtr parse_factor() {
    if (peek_op("-")) {
      Token t = lex_.take();
      return make_unary(JetFn::neg, "-", parse_factor(), t.offset);
    }
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_primary();
    if (peek_op("^")) {
      Token t = lex_.take();
      return make_binary('^', base, parse_factor(), t.offset);
    }
    return base;
  }

  NodePtr parse_primary() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::number) {
      Token n = lex_.take();
      return make_number(n.number, n.offset);
    }
    if (t.kind == Token::Kind::ident) {
      Token id = lex_.take();
      if (peek_op("(")) {
        Token open = lex_.take();
        JetFn fn{};
        bool known = false;
        for (const auto& e : kFunctions)
          if (id.text == e.name) { fn = e.fn; known = true; break; }
        if (!known)
          throw ParseError("unknown function '" + id.text + "' at offset " +
                               std::to_string(id.offset),
                           id.offset,
                           "exp, log, sin, cos, tan, sinh, cosh, tanh or sqrt");
        NodePtr arg = parse_expr();
        expect_op(")", open.offset);
        return make_unary(fn, id.text, arg, id.offset);
      }
      if (id.text == "pi") return make_number(M_PI, id.offset);
      return make_symbol(id.text, id.offset);
    }
    if (peek_op("(")) {
      Token open = lex_.take();
      NodePtr inner = parse_expr();
      expect_op(")", open.offset);
      return inner;
    }
    throw ParseError("syntax error at offset " + std::to_string(t.offset) +
                         ": found '" + t.text + "'",
                     t.offset, "number, identifier, '-' or '('");
  }

  bool peek_op(const char* s) const {
    const Token& t = lex_.peek();
    return t.kind == Token::Kind::op && t.text == s;
  }

  void expect_op(const char* s, std::size_t open_offset) {
    if (!peek_op(s)) {
      const Token& t = lex_.peek();
      throw ParseError("expected '" + std::string(s) + "' to close group opened at offset " +
                           std::to_string(open_offset) + ", found '" + t.text + "'",
                       t.offset, std::string("'") + s + "'");
    }
    lex_.take();
  }

  static NodePtr make_number(double v, std::size_t off) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::number;
    n->number = v;
    n->offset = off;
    return n;
  }

  static NodePtr make_symbol(std::string name, std::size_t off) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::symbol;
    n->name = std::move(name);
    n->offset = off;
    return n;
  }

  static NodePtr make_unary(JetFn fn, std::string name, NodePtr a, std::size_t off) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::unary;
    n->fn = fn;
    n->name = std::move(name);
    n->a = std::move(a);
    n->offset = off;
    return n;
  }

  static NodePtr make_binary(char op, NodePtr a, NodePtr b, std::size_t off) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::binary;
    n->op = op;
    n->a = std::move(a);
    n->b = std::move(b);
    n->offset = off;
    return n;
  }

  Lexer lex_;
};

bool node_depends_on_coordinates(const Node& n, const Env& env) {
  switch (n.kind) {
    case Node::Kind::number: return false;
    case Node::Kind::symbol: return env.coordinate_index(n.name) >= 0;
    case Node::Kind::unary: return node_depends_on_coordinates(*n.a, env);
    case Node::Kind::binary:
      return node_depends_on_coordinates(*n.a, env) ||
             node_depends_on_coordinates(*n.b, env);
  }
  return false;
}

Jet eval_node(const Node& n, const Env& env, const Vec3& point, int order) {
  switch (n.kind) {
    case Node::Kind::number:
      return jet_constant(n.number, order);
    case Node::Kind::symbol: {
      int ci = env.coordinate_index(n.name);
      if (ci >= 0) return seed_coordinate(ci, point, order);
      auto it = env.params.find(n.name);
      if (it == env.params.end())
        throw ConfigError("unbound symbol '" + n.name + "' at offset " +
                          std::to_string(n.offset));
      return jet_constant(it->second, order);
    }
    case Node::Kind::unary:
      return jet_unary(n.fn, eval_node(*n.a, env, point, order), std::nullopt,
                       env.div_threshold);
    case Node::Kind::binary: {
      if (n.op == '^') {
        Jet base = eval_node(*n.a, env, point, order);
        if (node_depends_on_coordinates(*n.b, env)) {
          // a^b with varying exponent: rewrite as exp(b*log(a)).
          Jet expo = eval_node(*n.b, env, point, order);
          return jet_unary(JetFn::exp,
                           jet_mul(expo, jet_unary(JetFn::log, base, std::nullopt,
                                                   env.div_threshold)),
                           std::nullopt, env.div_threshold);
        }
        double c = eval_node(*n.b, env, point, 0).value;
        return jet_unary(JetFn::pow_const, base, c, env.div_threshold);
      }
      Jet a = eval_node(*n.a, env, point, order);
      Jet b = eval_node(*n.b, env, point, order);
      switch (n.op) {
        case '+': return jet_add(a, b);
        case '-': return jet_sub(a, b);
        case '*': return jet_mul(a, b);
        case '/': return jet_div(a, b, env.div_threshold);
        default: break;
      }
      throw ConfigError("corrupt expression tree: unknown operator");
    }
  }
  throw ConfigError("corrupt expression tree: unknown node kind");
}

void bind_check_node(const Node& n, const Env& env) {
  switch (n.kind) {
    case Node::Kind::number: return;
    case Node::Kind::symbol:
      if (env.coordinate_index(n.name) < 0 && !env.params.count(n.name))
        throw ConfigError("undeclared identifier '" + n.name + "' at offset " +
                          std::to_string(n.offset));
      return;
    case Node::Kind::unary: bind_check_node(*n.a, env); return;
    case Node::Kind::binary:
      bind_check_node(*n.a, env);
      bind_check_node(*n.b, env);
      return;
  }
}

std::string number_repr(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

void print_node(const Node& n, std::string& out) {
  switch (n.kind) {
    case Node::Kind::number:
      out += number_repr(n.number);
      return;
    case Node::Kind::symbol:
      out += n.name;
      return;
    case Node::Kind::unary:
      if (n.fn == JetFn::neg) {
        out += "(-";
        print_node(*n.a, out);
        out += ")";
      } else {
        out += fn_name(n.fn);
        out += "(";
        print_node(*n.a, out);
        out += ")";
      }
      return;
    case Node::Kind::binary:
      out += "(";
      print_node(*n.a, out);
      out += n.op;
      print_node(*n.b, out);
      out += ")";
      return;
  }
}

bool same_node(const Node& x, const Node& y) {
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case Node::Kind::number: return x.number == y.number;
    case Node::Kind::symbol: return x.name == y.name;
    case Node::Kind::unary: return x.fn == y.fn && same_node(*x.a, *y.a);
    case Node::Kind::binary:
      return x.op == y.op && same_node(*x.a, *y.a) && same_node(*x.b, *y.b);
  }
  return false;
}

}  // namespace

Expr Expr::parse(std::string_view text) {
  if (text.empty())
    throw ParseError("empty expression", 0, "number, identifier, '-' or '('");
  Parser p(text);
  return Expr(p.parse());
}

Jet Expr::eval(const Env& env, const Vec3& point, int order) const {
  if (!root_) throw ConfigError("evaluation of an empty expression");
  try {
    return eval_node(*root_, env, point, order);
  } catch (const JetDomainError& e) {
    throw EvalError(std::string(e.what()) + " (value " + number_repr(e.offending_value()) +
                        ") at point (" + number_repr(point[0]) + ", " +
                        number_repr(point[1]) + ", " + number_repr(point[2]) + ")",
                    point);
  }
}

double Expr::value(const Env& env, const Vec3& point) const {
  return eval(env, point, 0).value;
}

void Expr::bind_check(const Env& env) const {
  if (!root_) throw ConfigError("bind check of an empty expression");
  bind_check_node(*root_, env);
}

bool Expr::depends_on_coordinates(const Env& env) const {
  return root_ && node_depends_on_coordinates(*root_, env);
}

std::string Expr::str() const {
  std::string out;
  if (root_) print_node(*root_, out);
  return out;
}

bool Expr::same_structure(const Expr& other) const {
  if (!root_ || !other.root_) return root_ == other.root_;
  return same_node(*root_, *other.root_);
}

}  // namespace epsverify
