#pragma once

// Finite-precision arithmetic in Q_p.
//
// A nonzero known element is stored as p^nu * u with u a unit known modulo
// p^r (r is the relative precision); its absolute precision is nu + r.
// Sums are correct modulo p^A where A is the least absolute precision of the
// operands; products and inverses keep the least relative precision.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dvf/arith.hpp"
#include "dvf/value_group.hpp"

namespace dvf {

class PAdicCtx {
 public:
  /// Throws std::invalid_argument when p is not prime or precision < 1.
  explicit PAdicCtx(std::uint64_t p, std::int64_t default_rel_prec = 20);

  std::uint64_t prime() const noexcept { return p_; }
  std::int64_t precision() const noexcept { return prec_; }

  friend bool operator==(const PAdicCtx&, const PAdicCtx&) = default;

 private:
  std::uint64_t p_;
  std::int64_t prec_;
};

class PAdicNum {
 public:
  enum class Kind { ExactZero, ZeroApprox, Known };

  static PAdicNum exact_zero(const PAdicCtx& ctx);
  /// An element known only to be divisible by p^abs_prec.
  static PAdicNum zero_approx(const PAdicCtx& ctx, std::int64_t abs_prec);
  /// Embedding of Q, truncated to the context's relative precision.
  static PAdicNum from_rat(const PAdicCtx& ctx, const Rational& q);
  static PAdicNum from_rat(const PAdicCtx& ctx, const Rational& q, std::int64_t rel_prec);
  /// p^nu * u known modulo p^(nu + r). Factors of p in u move into the order;
  /// u divisible by p^r gives zero_approx(nu + r).
  static PAdicNum from_digits(const PAdicCtx& ctx, std::int64_t nu, const Integer& u, std::int64_t r);

  const PAdicCtx& context() const noexcept { return ctx_; }
  std::uint64_t prime() const noexcept { return ctx_.prime(); }
  Kind kind() const noexcept { return kind_; }
  bool is_known() const noexcept { return kind_ == Kind::Known; }
  bool is_exact_zero() const noexcept { return kind_ == Kind::ExactZero; }
  /// True for exact zero as well.
  bool is_zero_approx() const noexcept { return kind_ != Kind::Known; }

  /// nu of a known element.
  std::int64_t order() const;
  /// Unit part u of a known element, 0 < u < p^r.
  const Integer& unit() const;
  std::int64_t relative_precision() const;
  /// nu + r, kappa for a zero approximation, nullopt for exact zero.
  std::optional<std::int64_t> absolute_precision() const;

  ValBound valuation() const;

  /// Base-p digits of the unit part, least significant first.
  std::vector<std::uint64_t> digits() const;

  PAdicNum operator-() const;
  /// Requires an exactly known valuation.
  PAdicNum inv() const;
  PAdicNum pow(std::int64_t n) const;

  /// Rational q with valuation(x - q) >= n; requires absolute precision >= n.
  Rational approximate(std::int64_t n) const;

  /// Image in F_p of an integral element.
  std::uint64_t residue() const;

  friend PAdicNum operator+(const PAdicNum& x, const PAdicNum& y);
  friend PAdicNum operator-(const PAdicNum& x, const PAdicNum& y);
  friend PAdicNum operator*(const PAdicNum& x, const PAdicNum& y);
  friend PAdicNum operator/(const PAdicNum& x, const PAdicNum& y);

  /// Structural equality: same representation and precision.
  friend bool operator==(const PAdicNum&, const PAdicNum&) = default;

  /// `d0 + d1*p + d2*p^2 + ... + O(p^A)`; `O(p^k)` for a zero approximation.
  std::string to_string() const;

 private:
  PAdicNum(PAdicCtx ctx, Kind kind) : ctx_(ctx), kind_(kind) {}

  PAdicCtx ctx_;
  Kind kind_;
  std::int64_t order_ = 0;  // nu for Known, kappa for ZeroApprox
  std::int64_t rel_prec_ = 0;
  Integer unit_;
};

}  // namespace dvf
