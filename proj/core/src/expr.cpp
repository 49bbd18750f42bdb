#include "dvf/expr.hpp"

#include <cctype>

#include "dvf/errors.hpp"

namespace dvf::expr {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out;
}

const std::vector<std::string> kOperandStart{"number", "identifier", "'('", "'-'"};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::shared_ptr<const Node> parse_all() {
    auto root = parse_binary(0);
    skip_space();
    if (pos_ < text_.size()) {
      throw SyntaxError(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'",
                        {"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"});
    }
    return root;
  }

 private:
  static int precedence(char op) {
    switch (op) {
      case '+':
      case '-': return 1;
      case '*':
      case '/': return 2;
      case '^': return 4;
      default: return -1;
    }
  }

  // Unary minus sits between * and ^: -X^2 is -(X^2).
  static constexpr int kUnaryPrecedence = 3;

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::shared_ptr<const Node> parse_binary(int min_prec) {
    auto lhs = parse_unary();
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) break;
      const char op = text_[pos_];
      const int prec = precedence(op);
      if (prec < 0 || prec < min_prec) break;
      const std::size_t at = pos_++;
      // ^ is right-associative, the rest left-associative.
      auto rhs = parse_binary(op == '^' ? prec : prec + 1);
      lhs = make_binary(op, at, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  static std::shared_ptr<const Node> make_binary(char op, std::size_t at, std::shared_ptr<const Node> lhs,
                                                 std::shared_ptr<const Node> rhs) {
    Node n;
    switch (op) {
      case '+': n.kind = Node::Kind::Add; break;
      case '-': n.kind = Node::Kind::Sub; break;
      case '*': n.kind = Node::Kind::Mul; break;
      case '/': n.kind = Node::Kind::Div; break;
      default: n.kind = Node::Kind::Pow; break;
    }
    n.offset = at;
    n.lhs = std::move(lhs);
    n.rhs = std::move(rhs);
    return std::make_shared<const Node>(std::move(n));
  }

  std::shared_ptr<const Node> parse_unary() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '-') {
      Node n;
      n.kind = Node::Kind::Neg;
      n.offset = pos_++;
      n.lhs = parse_binary(kUnaryPrecedence);
      return std::make_shared<const Node>(std::move(n));
    }
    return parse_primary();
  }

  std::shared_ptr<const Node> parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "unexpected end of input", kOperandStart);
    const char c = text_[pos_];
    Node n;
    n.offset = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      n.kind = Node::Kind::Number;
      n.number = Integer(std::string(text_.substr(start, pos_ - start)));
      return std::make_shared<const Node>(std::move(n));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      n.kind = Node::Kind::Variable;
      n.name = std::string(text_.substr(start, pos_ - start));
      return std::make_shared<const Node>(std::move(n));
    }
    if (c == '(') {
      ++pos_;
      auto inner = parse_binary(0);
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        throw SyntaxError(pos_, pos_ >= text_.size() ? "unexpected end of input" : "expected ')'",
                          {"')'", "operator"});
      }
      ++pos_;
      return inner;
    }
    throw SyntaxError(pos_, "unexpected '" + std::string(1, c) + "'", kOperandStart);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render(const Node& n, std::string& out) {
  auto binary = [&](const char* name) {
    out += name;
    out += "(";
    render(*n.lhs, out);
    out += ", ";
    render(*n.rhs, out);
    out += ")";
  };
  switch (n.kind) {
    case Node::Kind::Number: out += n.number.get_str(); return;
    case Node::Kind::Variable: out += n.name; return;
    case Node::Kind::Neg:
      out += "Neg(";
      render(*n.lhs, out);
      out += ")";
      return;
    case Node::Kind::Add: binary("Add"); return;
    case Node::Kind::Sub: binary("Sub"); return;
    case Node::Kind::Mul: binary("Mul"); return;
    case Node::Kind::Div: binary("Div"); return;
    case Node::Kind::Pow: binary("Pow"); return;
  }
}

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, const std::string& message, std::vector<std::string> expected)
    : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + message +
                         (expected.empty() ? std::string() : " (expected " + join(expected) + ")")),
      offset_(offset),
      expected_(std::move(expected)) {}

std::string Expr::to_sexpr() const {
  std::string out;
  render(*root_, out);
  return out;
}

Expr parse(std::string_view text) { return Expr(Parser(text).parse_all()); }

Rational constant_value(const Node& node) {
  using Kind = Node::Kind;
  switch (node.kind) {
    case Kind::Number: return Rational(node.number);
    case Kind::Variable:
      throw SyntaxError(node.offset, "variable '" + node.name + "' in a constant expression");
    case Kind::Neg: return -constant_value(*node.lhs);
    case Kind::Add: return constant_value(*node.lhs) + constant_value(*node.rhs);
    case Kind::Sub: return constant_value(*node.lhs) - constant_value(*node.rhs);
    case Kind::Mul: return constant_value(*node.lhs) * constant_value(*node.rhs);
    case Kind::Div: {
      const Rational d = constant_value(*node.rhs);
      if (d == 0) throw MathError(ErrorKind::DivisionByZero, "in constant expression");
      return constant_value(*node.lhs) / d;
    }
    case Kind::Pow: return ipow(constant_value(*node.lhs), exponent_of(node));
  }
  throw std::logic_error("unreachable expression kind");
}

std::int64_t exponent_of(const Node& pow_node) {
  const Rational e = constant_value(*pow_node.rhs);
  if (e.get_den() != 1 || !e.get_num().fits_slong_p()) {
    throw SyntaxError(pow_node.rhs->offset, "exponent must be an integer, got " + e.get_str());
  }
  return e.get_num().get_si();
}

}  // namespace dvf::expr
