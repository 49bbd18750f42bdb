#pragma once

// Truncated Laurent series over F_p or Q, the concrete model of K((X)).
//
// A known series is X^d * (c_0 + c_1 X + ... + c_{r-1} X^{r-1} + O(X^r))
// with c_0 != 0; its absolute precision is d + r. Precision rules mirror
// the p-adic ones: sums keep the least absolute precision, products and
// inverses the least relative precision.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dvf/ratfunc.hpp"
#include "dvf/value_group.hpp"

namespace dvf {

/// Coefficient field plus default relative precision, used when series act
/// as the base field of an extension.
class LaurentCtx {
 public:
  explicit LaurentCtx(CoefField field, std::int64_t default_rel_prec = 20);

  const CoefField& field() const noexcept { return field_; }
  std::int64_t precision() const noexcept { return prec_; }

  friend bool operator==(const LaurentCtx&, const LaurentCtx&) = default;

 private:
  CoefField field_;
  std::int64_t prec_;
};

class LaurentSeries {
 public:
  enum class Kind { ExactZero, ZeroApprox, Known };

  static LaurentSeries exact_zero(CoefField field);
  static LaurentSeries zero_approx(CoefField field, std::int64_t abs_prec);
  /// X^order * window, normalized so the leading coefficient is nonzero.
  static LaurentSeries from_coeffs(CoefField field, std::int64_t order, std::vector<Rational> window);
  /// c * X^k with rel_prec known coefficients.
  static LaurentSeries monomial(CoefField field, const Rational& c, std::int64_t k, std::int64_t rel_prec);

  const CoefField& field() const noexcept { return field_; }
  Kind kind() const noexcept { return kind_; }
  bool is_known() const noexcept { return kind_ == Kind::Known; }
  bool is_exact_zero() const noexcept { return kind_ == Kind::ExactZero; }
  bool is_zero_approx() const noexcept { return kind_ != Kind::Known; }

  std::int64_t order() const;
  std::span<const Rational> window() const noexcept { return window_; }
  std::int64_t relative_precision() const;
  std::optional<std::int64_t> absolute_precision() const;

  ValBound valuation() const;

  /// Coefficient of X^n; n must be below the absolute precision.
  Rational coeff(std::int64_t n) const;

  /// Whether the valuation is at most of_add(-bound) in Z^m0, i.e. the
  /// additive valuation is at least bound. Equivalent to every coefficient
  /// below X^bound vanishing.
  bool valuation_le_of_add_neg(std::int64_t bound) const;

  /// Laurent polynomial sum of coeff(n) X^n over n < n_max.
  RatFunc approximate_by_ratfunc(std::int64_t n_max) const;

  /// Membership in the unit ball K[[X]].
  bool is_power_series() const;

  LaurentSeries operator-() const;
  LaurentSeries inv() const;
  LaurentSeries pow(std::int64_t n) const;

  friend LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g);
  friend LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g);
  friend LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g);
  friend LaurentSeries operator/(const LaurentSeries& f, const LaurentSeries& g);

  friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

  /// `c_d*X^d + ... + O(X^A)`; `O(X^k)` for a zero approximation.
  std::string to_string() const;

 private:
  LaurentSeries(CoefField field, Kind kind) : field_(field), kind_(kind) {}

  CoefField field_;
  Kind kind_;
  std::int64_t order_ = 0;  // d for Known, kappa for ZeroApprox
  std::vector<Rational> window_;
};

/// Expansion of a rational function at X = 0, correct below X^abs_prec.
LaurentSeries from_ratfunc(const RatFunc& rf, std::int64_t abs_prec);

}  // namespace dvf
