#include "dvf/value_group.hpp"

#include <stdexcept>

#include "dvf/errors.hpp"

namespace dvf {

const Integer& MultZ0::exponent() const {
  if (!exp_) throw std::logic_error("MultZ0::exponent called on zero");
  return *exp_;
}

MultZ0 MultZ0::pow(const Integer& n) const {
  if (is_zero()) {
    if (n <= 0) throw MathError(ErrorKind::UndefinedPower, "0^" + n.get_str());
    return zero();
  }
  return of_add(*exp_ * n);
}

MultZ0 MultZ0::inv() const {
  if (is_zero()) throw MathError(ErrorKind::ZeroInversion, "0 has no inverse in Z^m0");
  return of_add(-*exp_);
}

MultZ0 operator*(const MultZ0& x, const MultZ0& y) {
  if (x.is_zero() || y.is_zero()) return MultZ0::zero();
  return MultZ0::of_add(*x.exp_ + *y.exp_);
}

bool operator==(const MultZ0& x, const MultZ0& y) {
  if (x.is_zero() || y.is_zero()) return x.is_zero() == y.is_zero();
  return *x.exp_ == *y.exp_;
}

std::strong_ordering operator<=>(const MultZ0& x, const MultZ0& y) {
  if (x.is_zero() || y.is_zero()) {
    return static_cast<int>(!x.is_zero()) <=> static_cast<int>(!y.is_zero());
  }
  return cmp(*x.exp_, *y.exp_) <=> 0;
}

std::string MultZ0::to_string() const {
  if (is_zero()) return "0";
  return "of_add(" + exp_->get_str() + ")";
}

const MultZ0& max(const MultZ0& x, const MultZ0& y) { return x < y ? y : x; }

const Integer& AddVal::value() const {
  if (!value_) throw std::logic_error("AddVal::value called on infinity");
  return *value_;
}

std::string AddVal::to_string() const { return value_ ? value_->get_str() : "inf"; }

MultZ0 of_addval(const AddVal& a) {
  if (a.is_infinite()) return MultZ0::zero();
  return MultZ0::of_add(-a.value());
}

AddVal to_addval(const MultZ0& x) {
  if (x.is_zero()) return AddVal::infinity();
  return AddVal::fin(-x.exponent());
}

NormBase::NormBase(Rational base) : base_(std::move(base)) {
  if (base_ <= 0) throw std::invalid_argument("NormBase: base must be positive");
}

NormBase NormBase::residue_field(std::uint64_t p, std::uint64_t k) {
  if (!is_prime(p)) throw std::invalid_argument("NormBase: p must be prime");
  if (k == 0) throw std::invalid_argument("NormBase: k must be positive");
  return NormBase(Rational(ipow(p, static_cast<std::int64_t>(k))));
}

Rational to_real(const MultZ0& x, const NormBase& base) {
  if (x.is_zero()) return Rational(0);
  return ipow(base.value(), to_int64(x.exponent()));
}

std::int64_t ValBound::value() const {
  if (kind_ == Kind::Infinite) throw std::logic_error("ValBound::value called on infinity");
  return value_;
}

MultZ0 ValBound::to_multz0() const {
  switch (kind_) {
    case Kind::Exact: return MultZ0::of_add(Integer(-value_));
    case Kind::Infinite: return MultZ0::zero();
    case Kind::AtLeast: break;
  }
  throw MathError(ErrorKind::Undecidable,
                  "valuation only bounded below by " + std::to_string(value_));
}

std::string ValBound::to_string() const {
  switch (kind_) {
    case Kind::Exact: return std::to_string(value_);
    case Kind::AtLeast: return ">= " + std::to_string(value_);
    case Kind::Infinite: return "inf";
  }
  return {};
}

}  // namespace dvf
