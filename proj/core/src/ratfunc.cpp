#include "dvf/ratfunc.hpp"

#include "dvf/errors.hpp"

namespace dvf {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (!(num_.field() == den_.field())) {
    throw MathError(ErrorKind::ContextMismatch, "numerator and denominator over different fields");
  }
  if (den_.is_zero()) throw MathError(ErrorKind::DivisionByZero, "rational function with zero denominator");
  canonicalize();
}

RatFunc::RatFunc(Poly num) : RatFunc(num, Poly::constant(num.field(), 1)) {}

RatFunc RatFunc::constant(CoefField field, const Rational& c) { return RatFunc(Poly::constant(field, c)); }

RatFunc RatFunc::x(CoefField field) { return RatFunc(Poly::x(field)); }

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.field(), 1);
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  const Rational lead_inv = den_.field().inv(den_.leading());
  num_ = num_.scale(lead_inv);
  den_ = den_.scale(lead_inv);
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw MathError(ErrorKind::ZeroInversion, "rational function 0");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(std::int64_t n) const {
  if (n < 0) return inv().pow(-n);
  RatFunc result = constant(field(), 1);
  RatFunc base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

static void check_same_field(const RatFunc& a, const RatFunc& b) {
  if (!(a.field() == b.field())) {
    throw MathError(ErrorKind::ContextMismatch, "rational functions over " + a.field().name() + " and " +
                                                    b.field().name());
  }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  check_same_field(a, b);
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  check_same_field(a, b);
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  check_same_field(a, b);
  return a * b.inv();
}

static bool single_term(const Poly& p) {
  std::size_t terms = 0;
  for (const auto& c : p.coeffs()) terms += c != 0;
  return terms <= 1;
}

std::string RatFunc::to_string(char var) const {
  std::string num = num_.to_string(var);
  if (is_polynomial()) return num;
  if (!single_term(num_)) num = "(" + num + ")";
  std::string den = den_.to_string(var);
  if (!single_term(den_)) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace dvf
