#pragma once

// F_p and F_p[t]/(g): the residue fields of local fields.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dvf/arith.hpp"

namespace dvf {

/// F_p with p < 2^64.
class PrimeField {
 public:
  /// Throws std::invalid_argument when p is not prime.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t characteristic() const noexcept { return p_; }

  std::uint64_t reduce(std::int64_t a) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mul_mod(a, b, p_); }
  /// Throws MathError(ZeroInversion) for 0.
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const { return pow_mod(a, e, p_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

/// Dense polynomial over F_p, ascending coefficients, no leading zeros.
class FpPoly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr std::int64_t kZeroDegree = -1;

  explicit FpPoly(std::uint64_t p) : field_(p) {}
  explicit FpPoly(const PrimeField& field) : field_(field) {}
  FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : FpPoly(PrimeField(p), std::move(coeffs)) {}
  FpPoly(const PrimeField& field, std::vector<std::uint64_t> coeffs);
  /// Coefficients given as signed integers, reduced mod p.
  static FpPoly from_signed(std::uint64_t p, std::span<const std::int64_t> coeffs);
  static FpPoly x(std::uint64_t p) { return FpPoly(p, {0, 1}); }
  static FpPoly constant(std::uint64_t p, std::uint64_t c) { return FpPoly(p, {c}); }

  std::uint64_t prime() const noexcept { return field_.characteristic(); }
  const PrimeField& base() const noexcept { return field_; }
  std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const std::uint64_t> coeffs() const noexcept { return coeffs_; }
  std::uint64_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  std::uint64_t leading() const;

  FpPoly monic() const;
  FpPoly scale(std::uint64_t c) const;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  FpPoly operator-() const;

  friend bool operator==(const FpPoly& a, const FpPoly& b) {
    return a.prime() == b.prime() && a.coeffs_ == b.coeffs_;
  }

  /// Ascending powers in variable `var`, e.g. `2 + t^2`.
  std::string to_string(char var = 'x') const;

 private:
  void trim();

  PrimeField field_;
  std::vector<std::uint64_t> coeffs_;
};

/// Quotient and remainder; throws MathError(DivisionByZero) on a zero divisor.
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
/// Monic gcd.
FpPoly gcd(const FpPoly& a, const FpPoly& b);
/// base^e mod modulus.
FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& modulus);
/// Rabin's test. Requires degree >= 1.
bool is_irreducible(const FpPoly& f);

class FFElem;

/// F_p[t]/(g) for a monic irreducible g, checked at construction.
class FiniteField {
 public:
  /// Normalizes g to monic; throws std::invalid_argument if g is reducible
  /// or constant.
  explicit FiniteField(const FpPoly& modulus);

  const FpPoly& modulus() const noexcept { return impl_->modulus; }
  std::uint64_t characteristic() const noexcept { return impl_->modulus.prime(); }
  std::size_t degree() const noexcept { return static_cast<std::size_t>(impl_->modulus.degree()); }
  /// p^degree.
  Integer order() const;

  FFElem element(const FpPoly& rep) const;
  FFElem from_int(std::int64_t c) const;
  FFElem zero() const;
  FFElem one() const;
  /// The class of t.
  FFElem generator() const;
  /// Every element, in base-p counting order of the coefficient vector.
  std::vector<FFElem> elements() const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) { return a.modulus() == b.modulus(); }

  /// `F5[t]/(t^2 + 3)`.
  std::string to_string() const;

 private:
  struct Impl {
    FpPoly modulus;
  };
  std::shared_ptr<const Impl> impl_;
};

class FFElem {
 public:
  const FiniteField& field() const noexcept { return field_; }
  const FpPoly& rep() const noexcept { return rep_; }
  bool is_zero() const noexcept { return rep_.is_zero(); }

  /// Throws MathError(ZeroInversion) for zero.
  FFElem inv() const;
  FFElem pow(const Integer& e) const;

  friend FFElem operator+(const FFElem& a, const FFElem& b);
  friend FFElem operator-(const FFElem& a, const FFElem& b);
  friend FFElem operator*(const FFElem& a, const FFElem& b);
  friend FFElem operator/(const FFElem& a, const FFElem& b);
  FFElem operator-() const;

  friend bool operator==(const FFElem& a, const FFElem& b) { return a.field_ == b.field_ && a.rep_ == b.rep_; }

  /// Representative as a polynomial in t.
  std::string to_string() const { return rep_.to_string('t'); }

 private:
  friend class FiniteField;
  FFElem(FiniteField field, FpPoly rep) : field_(std::move(field)), rep_(std::move(rep)) {}

  FiniteField field_;
  FpPoly rep_;
};

}  // namespace dvf
