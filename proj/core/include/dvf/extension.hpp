#pragma once

// Finite extensions L = K[x]/(f) of K = Q_p or F_p((X)).
//
// Elements are coordinate vectors in the power basis 1, a, ..., a^(n-1) where
// a is the class of x. The valuation of K extends to L through the norm:
// w(y) = v_K(N(y)) / n, with N(y) the determinant of multiplication by y.
// Ramification data comes from a certificate found at construction: an
// Eisenstein modulus gives e = n, a modulus with irreducible reduction gives
// e = 1. Without a certificate, arithmetic works but normalization is refused.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dvf/errors.hpp"
#include "dvf/finite_field.hpp"
#include "dvf/laurent.hpp"
#include "dvf/padic.hpp"
#include "dvf/value_group.hpp"

namespace dvf {

/// How a base field plugs into ExtField.
template <class Base>
struct BaseTraits;

template <>
struct BaseTraits<PAdicNum> {
  using Context = PAdicCtx;

  static PAdicNum from_rat(const Context& ctx, const Rational& q) { return PAdicNum::from_rat(ctx, q); }
  static PAdicNum exact_zero(const Context& ctx) { return PAdicNum::exact_zero(ctx); }
  static PAdicNum uniformizer(const Context& ctx) { return from_rat(ctx, Rational(Integer(std::to_string(ctx.prime())))); }
  static std::string uniformizer_symbol(const Context& ctx) { return std::to_string(ctx.prime()); }
  static std::uint64_t residue_characteristic(const Context& ctx) { return ctx.prime(); }
  static std::uint64_t residue(const PAdicNum& x) { return x.residue(); }
  static bool belongs(const Context& ctx, const PAdicNum& x) { return x.prime() == ctx.prime(); }
  static std::string name(const Context& ctx) { return "Q" + std::to_string(ctx.prime()); }
};

template <>
struct BaseTraits<LaurentSeries> {
  using Context = LaurentCtx;

  static LaurentSeries from_rat(const Context& ctx, const Rational& q) {
    return LaurentSeries::monomial(ctx.field(), q, 0, ctx.precision());
  }
  static LaurentSeries exact_zero(const Context& ctx) { return LaurentSeries::exact_zero(ctx.field()); }
  static LaurentSeries uniformizer(const Context& ctx) {
    return LaurentSeries::monomial(ctx.field(), 1, 1, ctx.precision());
  }
  static std::string uniformizer_symbol(const Context&) { return "X"; }
  /// Throws std::invalid_argument over Q: its residue field is not finite.
  static std::uint64_t residue_characteristic(const Context& ctx);
  static std::uint64_t residue(const LaurentSeries& x);
  static bool belongs(const Context& ctx, const LaurentSeries& x) { return x.field() == ctx.field(); }
  static std::string name(const Context& ctx) { return ctx.field().name() + "((X))"; }
};

enum class Certificate { Eisenstein, Unramified, None };

/// `eisenstein`, `unramified` or `none`.
std::string_view to_string(Certificate cert);

/// Value of the extended additive valuation: infinity or a rational whose
/// denominator divides the degree.
class QVal {
 public:
  static QVal infinity() { return QVal(std::nullopt); }
  /// Throws std::logic_error when the denominator of q does not divide n.
  static QVal fin(Rational q, std::size_t n);

  bool is_infinite() const noexcept { return !value_.has_value(); }
  const Rational& value() const;

  friend bool operator==(const QVal&, const QVal&) = default;

  std::string to_string() const { return value_ ? value_->get_str() : "inf"; }

 private:
  explicit QVal(std::optional<Rational> q) : value_(std::move(q)) {}

  std::optional<Rational> value_;
};

/// The spectral norm base^(-w) of an element.
struct NormValue {
  enum class Kind { Zero, Value };
  NormBase base;
  Kind kind = Kind::Zero;
  Rational exponent;  // meaningful for Kind::Value

  /// `0` or `6^(-1/2)`.
  std::string to_string() const;
};

struct LocalFieldData {
  bool discrete = true;
  bool complete = true;
  Certificate certificate = Certificate::None;
  std::size_t degree = 0;
  std::size_t ramification_index = 0;
  std::size_t residue_degree = 0;
  Integer residue_field_order;
  std::string uniformizer;
};

template <class Base>
class ExtElem;

template <class Base>
class ExtField {
 public:
  using Traits = BaseTraits<Base>;
  using Context = typename Traits::Context;
  using Element = ExtElem<Base>;

  static constexpr std::size_t kDefaultMaxDegree = 8;

  /// `modulus` lists a_0, ..., a_n ascending and must be monic.
  /// Throws NonMonic, DegreeTooLarge, ContextMismatch, or
  /// InsufficientPrecision when coefficient valuations cannot be decided.
  static ExtField make(const Context& ctx, std::vector<Base> modulus,
                       std::size_t max_degree = kDefaultMaxDegree);
  /// Rational coefficients embedded at the context precision.
  static ExtField make(const Context& ctx, std::span<const Rational> modulus,
                       std::size_t max_degree = kDefaultMaxDegree);

  const Context& context() const noexcept { return impl_->ctx; }
  std::size_t degree() const noexcept { return impl_->modulus.size() - 1; }
  /// a_0, ..., a_n.
  std::span<const Base> modulus() const noexcept { return impl_->modulus; }
  Certificate certificate() const noexcept { return impl_->cert; }
  /// Reduction of the modulus for an Unramified certificate.
  const std::optional<FpPoly>& residual() const noexcept { return impl_->residual; }

  /// e; requires a certificate.
  std::size_t ramification_index() const;
  /// f; requires a certificate.
  std::size_t residue_degree() const;
  /// F_p[t]/(residual) when unramified, F_p[t]/(t) when Eisenstein.
  const FiniteField& residue_field() const;

  Element zero() const;
  Element one() const;
  /// The class a of x.
  Element generator() const;
  Element embed_base(const Base& c) const;
  Element embed_rat(const Rational& q) const;
  /// Coordinates in the power basis; exactly `degree()` of them.
  Element element(std::vector<Base> coords) const;

  /// a for Eisenstein, the base uniformizer for Unramified.
  Element uniformizer() const;
  LocalFieldData local_field_data() const;

  friend bool operator==(const ExtField& a, const ExtField& b) { return a.impl_ == b.impl_; }

  std::string to_string() const;

 private:
  struct Impl {
    Context ctx;
    std::vector<Base> modulus;
    Certificate cert = Certificate::None;
    std::optional<FpPoly> residual;
    std::optional<FiniteField> residue_field;
  };

  explicit ExtField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  void require_certificate(const char* what) const;

  std::shared_ptr<const Impl> impl_;
};

template <class Base>
class ExtElem {
 public:
  const ExtField<Base>& parent() const noexcept { return parent_; }
  std::span<const Base> coords() const noexcept { return coords_; }
  bool is_exact_zero() const;

  /// Multiplication by the generator a.
  ExtElem times_generator() const;
  /// Adjugate over norm; requires a norm with exactly known valuation.
  ExtElem inv() const;
  ExtElem pow(std::int64_t n) const;

  template <class B>
  friend ExtElem<B> operator+(const ExtElem<B>& x, const ExtElem<B>& y);
  template <class B>
  friend ExtElem<B> operator-(const ExtElem<B>& x, const ExtElem<B>& y);
  template <class B>
  friend ExtElem<B> operator*(const ExtElem<B>& x, const ExtElem<B>& y);
  template <class B>
  friend ExtElem<B> operator/(const ExtElem<B>& x, const ExtElem<B>& y);
  ExtElem operator-() const;

  /// `(c0) + (c1)*a + (c2)*a^2`, exact-zero coordinates omitted.
  std::string to_string() const;

 private:
  friend class ExtField<Base>;
  ExtElem(ExtField<Base> parent, std::vector<Base> coords) : parent_(std::move(parent)), coords_(std::move(coords)) {}

  ExtField<Base> parent_;
  std::vector<Base> coords_;
};

/// Determinant by cofactor expansion, memoized over row subsets. Division
/// free, so it loses no precision beyond that of the entries.
template <class Base>
Base determinant(const std::vector<std::vector<Base>>& m, const Base& one);

/// Matrix of multiplication by x: column j holds the coordinates of x * a^j.
template <class Base>
std::vector<std::vector<Base>> multiplication_matrix(const ExtElem<Base>& x);

/// N_{L/K}(x).
template <class Base>
Base norm(const ExtElem<Base>& x);

/// w(x) = v_K(N(x)) / n.
template <class Base>
QVal add_val_ext(const ExtElem<Base>& x);

/// e * w(x), an integer; requires a certificate.
template <class Base>
ValBound normalized_val(const ExtElem<Base>& x);

/// Whether w(x) >= 0, i.e. x lies in the integral closure of the base unit ball.
template <class Base>
bool is_integral(const ExtElem<Base>& x);

/// Image of an integral element in the residue field.
template <class Base>
FFElem residue_map(const ExtElem<Base>& x);

/// base^(-w(x)).
template <class Base>
NormValue spectral_norm(const ExtElem<Base>& x, const NormBase& base = NormBase());

/// n / gcd of the observed values n*w(s) and of n*w(base uniformizer); always
/// divides the ramification index.
template <class Base>
std::size_t value_group_generator(const ExtField<Base>& ext, std::span<const ExtElem<Base>> samples);

}  // namespace dvf

#include "dvf/extension_impl.hpp"
