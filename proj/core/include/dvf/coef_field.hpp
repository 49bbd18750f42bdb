#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "dvf/arith.hpp"

namespace dvf {

/// Coefficient field descriptor: the prime field F_p or the rationals.
/// Elements of either are carried as Rational; in F_p they are always the
/// canonical integer representative in [0, p).
class CoefField {
 public:
  /// Q.
  CoefField() = default;

  static CoefField rationals() { return CoefField(); }
  /// F_p; throws std::invalid_argument when p is not prime.
  static CoefField prime(std::uint64_t p);
  /// Parses `Q` or `F<p>`.
  static CoefField parse(std::string_view name);

  bool is_prime_field() const noexcept { return p_ != 0; }
  /// p for F_p, 0 for Q.
  std::uint64_t characteristic() const noexcept { return p_; }

  /// Canonical representative of q; in F_p the denominator must be a unit.
  Rational reduce(const Rational& q) const;

  Rational add(const Rational& a, const Rational& b) const { return reduce(a + b); }
  Rational sub(const Rational& a, const Rational& b) const { return reduce(a - b); }
  Rational mul(const Rational& a, const Rational& b) const { return reduce(a * b); }
  Rational neg(const Rational& a) const { return reduce(-a); }
  Rational inv(const Rational& a) const;
  Rational div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }

  friend bool operator==(const CoefField&, const CoefField&) = default;

  /// `Q` or `F<p>`.
  std::string name() const;

 private:
  std::uint64_t p_ = 0;
};

}  // namespace dvf
