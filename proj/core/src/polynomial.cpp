#include "dvf/polynomial.hpp"

#include <algorithm>
#include <cassert>

#include "dvf/errors.hpp"

namespace dvf {

Poly::Poly(CoefField field, std::vector<Rational> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c = field_.reduce(c);
  trim();
}

Poly Poly::constant(CoefField field, const Rational& c) { return Poly(field, {c}); }

Poly Poly::monomial(CoefField field, const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return Poly(field, std::move(coeffs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& Poly::leading() const {
  if (is_zero()) throw std::logic_error("Poly::leading on zero polynomial");
  return coeffs_.back();
}

std::size_t Poly::low_order() const {
  if (is_zero()) throw std::logic_error("Poly::low_order on zero polynomial");
  std::size_t i = 0;
  while (coeffs_[i] == 0) ++i;
  return i;
}

Poly Poly::shift_down(std::size_t k) const {
  if (is_zero()) return *this;
  assert(k <= low_order());
  Poly out(field_);
  out.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end());
  return out;
}

Poly Poly::shift_up(std::size_t k) const {
  if (is_zero()) return *this;
  Poly out(field_);
  out.coeffs_.assign(k, Rational(0));
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scale(field_.inv(leading()));
}

Poly Poly::scale(const Rational& c) const {
  Poly out(field_);
  out.coeffs_.reserve(coeffs_.size());
  for (const auto& a : coeffs_) out.coeffs_.push_back(field_.mul(a, c));
  out.trim();
  return out;
}

Rational Poly::eval(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, at), *it);
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  assert(a.field_ == b.field_);
  Poly out(a.field_);
  out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = a.field_.add(a.coeff(i), b.coeff(i));
  out.trim();
  return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
  Poly out(field_);
  out.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.coeffs_.push_back(field_.neg(c));
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  assert(a.field_ == b.field_);
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  Poly out(a.field_);
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  for (auto& c : out.coeffs_) c = a.field_.reduce(c);
  out.trim();
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw MathError(ErrorKind::DivisionByZero, "polynomial division by zero");
  const CoefField& f = a.field();
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  const auto db = static_cast<std::size_t>(b.degree());
  if (rem.size() <= db) return {Poly(f), a};
  std::vector<Rational> quo(rem.size() - db);
  const Rational lead_inv = f.inv(b.leading());
  for (std::size_t k = rem.size(); k-- > db;) {
    Rational c = f.mul(rem[k], lead_inv);
    quo[k - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = f.sub(rem[k - db + j], f.mul(c, b.coeffs()[j]));
  }
  rem.resize(db);
  return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace detail {

void append_term(std::string& out, const Rational& c, std::int64_t k, char var) {
  const bool first = out.empty();
  const bool negative = c < 0;
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  const Rational mag = negative ? Rational(-c) : c;
  if (k == 0) {
    out += mag.get_str();
    return;
  }
  if (mag != 1) {
    out += mag.get_str();
    out += "*";
  }
  out += var;
  if (k != 1) {
    out += "^";
    out += std::to_string(k);
  }
}

}  // namespace detail

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) detail::append_term(out, coeffs_[i], static_cast<std::int64_t>(i), var);
  }
  return out;
}

}  // namespace dvf
