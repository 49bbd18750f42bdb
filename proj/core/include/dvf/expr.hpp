#pragma once

// Arithmetic expressions over rational literals and single-letter variables:
//
//   expr    := unary (op unary)*       + - * / ^ with the usual precedence,
//   unary   := '-' unary | primary      ^ binds tighter than unary minus and
//   primary := integer | identifier | '(' expr ')'    is right-associative.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dvf/arith.hpp"

namespace dvf::expr {

/// Malformed input or an unsupported construct, located by byte offset.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t offset, const std::string& message, std::vector<std::string> expected = {});

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

struct Node {
  enum class Kind { Number, Variable, Neg, Add, Sub, Mul, Div, Pow };

  Kind kind;
  std::size_t offset = 0;
  Integer number;
  std::string name;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

class Expr {
 public:
  explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

  const Node& root() const noexcept { return *root_; }

  /// Prefix form such as `Div(1, Add(1, X))`.
  std::string to_sexpr() const;

 private:
  std::shared_ptr<const Node> root_;
};

/// Throws SyntaxError.
Expr parse(std::string_view text);

/// Value of a variable-free subexpression; throws SyntaxError on variables
/// and DivisionByZero on a zero divisor.
Rational constant_value(const Node& node);

/// What evaluate() needs from a target algebra.
template <class A>
concept Algebra = requires(const A& alg, const typename A::value_type& v, const Integer& n, std::string_view name,
                           std::size_t offset, std::int64_t k) {
  { alg.number(n) } -> std::convertible_to<typename A::value_type>;
  { alg.variable(name, offset) } -> std::convertible_to<typename A::value_type>;
  { alg.add(v, v) } -> std::convertible_to<typename A::value_type>;
  { alg.sub(v, v) } -> std::convertible_to<typename A::value_type>;
  { alg.mul(v, v) } -> std::convertible_to<typename A::value_type>;
  { alg.div(v, v) } -> std::convertible_to<typename A::value_type>;
  { alg.neg(v) } -> std::convertible_to<typename A::value_type>;
  { alg.pow(v, k) } -> std::convertible_to<typename A::value_type>;
};

/// Integer exponent of a power node.
std::int64_t exponent_of(const Node& pow_node);

template <Algebra A>
typename A::value_type evaluate(const Node& node, const A& alg) {
  using Kind = Node::Kind;
  switch (node.kind) {
    case Kind::Number: return alg.number(node.number);
    case Kind::Variable: return alg.variable(node.name, node.offset);
    case Kind::Neg: return alg.neg(evaluate(*node.lhs, alg));
    case Kind::Add: return alg.add(evaluate(*node.lhs, alg), evaluate(*node.rhs, alg));
    case Kind::Sub: return alg.sub(evaluate(*node.lhs, alg), evaluate(*node.rhs, alg));
    case Kind::Mul: return alg.mul(evaluate(*node.lhs, alg), evaluate(*node.rhs, alg));
    case Kind::Div: return alg.div(evaluate(*node.lhs, alg), evaluate(*node.rhs, alg));
    case Kind::Pow: return alg.pow(evaluate(*node.lhs, alg), exponent_of(node));
  }
  throw std::logic_error("unreachable expression kind");
}

template <Algebra A>
typename A::value_type evaluate(const Expr& e, const A& alg) {
  return evaluate(e.root(), alg);
}

}  // namespace dvf::expr
