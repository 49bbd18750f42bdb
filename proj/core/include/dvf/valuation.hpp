#pragma once

// Discrete valuations on Q (p-adic) and K(X) (X-adic), uniformizers and the
// pi-power/unit factorization of unit-ball elements.

#include <concepts>
#include <cstdint>
#include <string>
#include <variant>

#include "dvf/errors.hpp"
#include "dvf/ratfunc.hpp"
#include "dvf/value_group.hpp"

namespace dvf {

/// v_p on Q.
class PAdicValuation {
 public:
  using element_type = Rational;
  using residue_type = std::uint64_t;

  /// Throws std::invalid_argument when p is not prime.
  explicit PAdicValuation(std::uint64_t p);

  std::uint64_t prime() const noexcept { return p_; }

  MultZ0 operator()(const Rational& x) const;
  /// Class of x in F_p; x must lie in the unit ball.
  std::uint64_t residue(const Rational& x) const;
  Rational uniformizer_element() const { return Rational(Integer(std::to_string(p_))); }
  std::string name() const { return "PAdic " + std::to_string(p_); }

  friend bool operator==(const PAdicValuation&, const PAdicValuation&) = default;

 private:
  std::uint64_t p_;
};

/// The (X)-adic valuation on K(X), i.e. order of vanishing at 0.
class XAdicValuation {
 public:
  using element_type = RatFunc;
  using residue_type = Rational;

  explicit XAdicValuation(CoefField field) : field_(field) {}

  const CoefField& coef_field() const noexcept { return field_; }

  MultZ0 operator()(const RatFunc& x) const;
  /// Value at X = 0; x must lie in the unit ball.
  Rational residue(const RatFunc& x) const;
  RatFunc uniformizer_element() const { return RatFunc::x(field_); }
  std::string name() const { return "XAdic " + field_.name(); }

  friend bool operator==(const XAdicValuation&, const XAdicValuation&) = default;

 private:
  CoefField field_;
};

using ValuationDescriptor = std::variant<PAdicValuation, XAdicValuation>;

namespace detail {

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const RatFunc& x) { return x.is_zero(); }
inline Rational power(const Rational& x, std::int64_t n) { return ipow(x, n); }
inline RatFunc power(const RatFunc& x, std::int64_t n) { return x.pow(n); }

}  // namespace detail

template <class V>
concept DiscreteValuation = requires(const V& v, const typename V::element_type& x) {
  { v(x) } -> std::same_as<MultZ0>;
  { v.residue(x) } -> std::same_as<typename V::residue_type>;
  { v.uniformizer_element() } -> std::same_as<typename V::element_type>;
};

template <DiscreteValuation V>
MultZ0 val(const V& v, const typename V::element_type& x) {
  return v(x);
}

template <DiscreteValuation V>
bool is_in_unit_ball(const V& v, const typename V::element_type& x) {
  return v(x) <= MultZ0::one();
}

template <DiscreteValuation V>
bool is_uniformizer(const V& v, const typename V::element_type& x) {
  return v(x) == MultZ0::of_add(Integer(-1));
}

class NotAUniformizerError : public MathError {
 public:
  NotAUniformizerError(const std::string& element, MultZ0 actual)
      : MathError(ErrorKind::NotAUniformizer, element + " has valuation " + actual.to_string()),
        actual_(std::move(actual)) {}

  const MultZ0& actual() const noexcept { return actual_; }

 private:
  MultZ0 actual_;
};

/// An element certified to have valuation of_add(-1) for a given valuation.
template <DiscreteValuation V>
class Uniformizer {
 public:
  using element_type = typename V::element_type;

  /// Throws NotAUniformizerError.
  static Uniformizer make(const V& v, element_type x) {
    MultZ0 value = v(x);
    if (value != MultZ0::of_add(Integer(-1))) {
      throw NotAUniformizerError(element_string(x), std::move(value));
    }
    return Uniformizer(v, std::move(x));
  }

  const element_type& element() const noexcept { return element_; }
  const V& valuation() const noexcept { return valuation_; }

 private:
  Uniformizer(V v, element_type x) : valuation_(std::move(v)), element_(std::move(x)) {}

  static std::string element_string(const Rational& x) { return x.get_str(); }
  static std::string element_string(const RatFunc& x) { return x.to_string(); }

  V valuation_;
  element_type element_;
};

template <DiscreteValuation V>
Uniformizer<V> make_uniformizer(const V& v, typename V::element_type x) {
  return Uniformizer<V>::make(v, std::move(x));
}

/// p for v_p and X for the X-adic valuation. Its existence is what makes the
/// valuation surjective onto Z^m0, i.e. discrete.
template <DiscreteValuation V>
Uniformizer<V> canonical_uniformizer(const V& v) {
  return Uniformizer<V>::make(v, v.uniformizer_element());
}

template <class E>
struct UniformizerPower {
  std::int64_t n;
  E unit;
};

/// Writes a nonzero unit-ball element r as pi^n * u with u a unit.
template <DiscreteValuation V>
UniformizerPower<typename V::element_type> pow_uniformizer(const V& v, const typename V::element_type& r,
                                                           const Uniformizer<V>& pi) {
  if (detail::is_zero(r)) throw MathError(ErrorKind::DivisionByZero, "pow_uniformizer of 0");
  const MultZ0 value = v(r);
  if (value > MultZ0::one()) throw MathError(ErrorKind::NotInUnitBall, "valuation " + value.to_string());
  const std::int64_t n = to_int64(Integer(-value.exponent()));
  return {n, r / detail::power(pi.element(), n)};
}

/// y in the unit ball with x = pi * y, for x in the maximal ideal.
template <DiscreteValuation V>
typename V::element_type maximal_ideal_witness(const V& v, const typename V::element_type& x,
                                               const Uniformizer<V>& pi) {
  const MultZ0 value = v(x);
  if (!(value < MultZ0::one())) {
    throw MathError(ErrorKind::NotInMaximalIdeal, "valuation " + value.to_string());
  }
  return x / pi.element();
}

template <DiscreteValuation V>
typename V::residue_type residue(const V& v, const typename V::element_type& x) {
  return v.residue(x);
}

}  // namespace dvf
