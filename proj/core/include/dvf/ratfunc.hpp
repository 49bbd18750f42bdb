#pragma once

#include <cstdint>
#include <string>

#include "dvf/polynomial.hpp"

namespace dvf {

/// Element of K(X) for K = F_p or Q, kept in canonical form: monic
/// denominator, coprime numerator and denominator, zero as 0/1.
class RatFunc {
 public:
  explicit RatFunc(CoefField field = {}) : num_(field), den_(Poly::constant(field, 1)) {}
  /// Throws DivisionByZero when den is zero.
  RatFunc(Poly num, Poly den);
  explicit RatFunc(Poly num);

  static RatFunc constant(CoefField field, const Rational& c);
  static RatFunc x(CoefField field);

  const CoefField& field() const noexcept { return num_.field(); }
  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  /// True when the denominator is 1.
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc inv() const;
  RatFunc pow(std::int64_t n) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const { return RatFunc(-num_, den_); }

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  /// `num` or `(num)/(den)`, parentheses only around multi-term parts.
  std::string to_string(char var = 'X') const;

 private:
  void canonicalize();

  Poly num_;
  Poly den_;
};

}  // namespace dvf
