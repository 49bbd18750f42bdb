#pragma once

// The value group Z^m0 = WithZero(Multiplicative Z) and its additive view.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "dvf/arith.hpp"

namespace dvf {

/// An element of Z^m0: either zero, or of_add(e) for an integer e.
/// The valuation of a nonzero x with additive valuation a is of_add(-a).
class MultZ0 {
 public:
  /// Defaults to the unit of_add(0).
  MultZ0() : exp_(Integer(0)) {}

  static MultZ0 zero() { return MultZ0(std::nullopt); }
  static MultZ0 of_add(Integer e) { return MultZ0(std::move(e)); }
  static MultZ0 one() { return of_add(Integer(0)); }

  bool is_zero() const noexcept { return !exp_.has_value(); }

  /// Exponent e of of_add(e). Throws std::logic_error on zero.
  const Integer& exponent() const;

  /// x^n. Zero^n is only defined for n > 0.
  MultZ0 pow(const Integer& n) const;
  MultZ0 inv() const;

  friend MultZ0 operator*(const MultZ0& x, const MultZ0& y);
  friend bool operator==(const MultZ0& x, const MultZ0& y);
  friend std::strong_ordering operator<=>(const MultZ0& x, const MultZ0& y);

  /// `0` or `of_add(e)`.
  std::string to_string() const;

 private:
  explicit MultZ0(std::optional<Integer> e) : exp_(std::move(e)) {}

  std::optional<Integer> exp_;
};

const MultZ0& max(const MultZ0& x, const MultZ0& y);

/// Additive valuation view Z u {inf}.
class AddVal {
 public:
  static AddVal infinity() { return AddVal(std::nullopt); }
  static AddVal fin(Integer a) { return AddVal(std::move(a)); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  const Integer& value() const;

  friend bool operator==(const AddVal& x, const AddVal& y) = default;

  std::string to_string() const;

 private:
  explicit AddVal(std::optional<Integer> a) : value_(std::move(a)) {}

  std::optional<Integer> value_;
};

/// fin(a) -> of_add(-a), infinity -> 0.
MultZ0 of_addval(const AddVal& a);
AddVal to_addval(const MultZ0& x);

/// Base n of the embedding Z^m0 -> R>=0 sending of_add(e) to n^e.
class NormBase {
 public:
  NormBase() : base_(6) {}
  explicit NormBase(Rational base);

  /// p^k, the standard choice for a residue field of order p^k.
  static NormBase residue_field(std::uint64_t p, std::uint64_t k);

  const Rational& value() const noexcept { return base_; }
  bool is_monotone() const { return base_ > 1; }

  friend bool operator==(const NormBase&, const NormBase&) = default;

 private:
  Rational base_;
};

/// Zero -> 0, of_add(e) -> base^e, as an exact rational.
Rational to_real(const MultZ0& x, const NormBase& base);

/// Additive valuation of a finite-precision element: exactly known, bounded
/// below because every known digit cancelled, or exactly infinite (exact 0).
class ValBound {
 public:
  enum class Kind { Exact, AtLeast, Infinite };

  static ValBound exact(std::int64_t a) { return ValBound(Kind::Exact, a); }
  static ValBound at_least(std::int64_t k) { return ValBound(Kind::AtLeast, k); }
  static ValBound infinite() { return ValBound(Kind::Infinite, 0); }

  Kind kind() const noexcept { return kind_; }
  bool is_exact() const noexcept { return kind_ == Kind::Exact; }
  bool is_at_least() const noexcept { return kind_ == Kind::AtLeast; }
  bool is_infinite() const noexcept { return kind_ == Kind::Infinite; }

  /// The exact value or the lower bound. Throws std::logic_error on Infinite.
  std::int64_t value() const;

  /// Multiplicative form; only for Exact and Infinite.
  MultZ0 to_multz0() const;

  friend bool operator==(const ValBound&, const ValBound&) = default;

  /// `2`, `>= 5` or `inf`.
  std::string to_string() const;

 private:
  ValBound(Kind kind, std::int64_t v) : kind_(kind), value_(v) {}

  Kind kind_;
  std::int64_t value_;
};

}  // namespace dvf
