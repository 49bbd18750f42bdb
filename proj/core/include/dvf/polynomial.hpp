#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dvf/coef_field.hpp"

namespace dvf {

/// Dense univariate polynomial over a CoefField, ascending coefficients,
/// trailing zeros trimmed.
class Poly {
 public:
  explicit Poly(CoefField field = {}) : field_(field) {}
  Poly(CoefField field, std::vector<Rational> coeffs);

  static Poly constant(CoefField field, const Rational& c);
  static Poly monomial(CoefField field, const Rational& c, std::size_t degree);
  static Poly x(CoefField field) { return monomial(field, 1, 1); }

  const CoefField& field() const noexcept { return field_; }
  /// -1 for the zero polynomial.
  std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of X^i, zero past the degree.
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;

  /// Exponent of the lowest nonzero term. Requires a nonzero polynomial.
  std::size_t low_order() const;
  /// Exact division by X^k; requires k <= low_order().
  Poly shift_down(std::size_t k) const;
  Poly shift_up(std::size_t k) const;

  Poly monic() const;
  Poly scale(const Rational& c) const;
  Rational eval(const Rational& at) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Ascending powers, e.g. `1 + 2*X + X^3`.
  std::string to_string(char var = 'X') const;

 private:
  void trim();

  CoefField field_;
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic gcd (zero when both are zero).
Poly gcd(const Poly& a, const Poly& b);

namespace detail {

/// Appends `c*V^k` in the shared sign-aware polynomial style.
void append_term(std::string& out, const Rational& c, std::int64_t k, char var);

}  // namespace detail

}  // namespace dvf
