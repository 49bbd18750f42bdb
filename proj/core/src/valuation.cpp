#include "dvf/valuation.hpp"

#include <stdexcept>

namespace dvf {

PAdicValuation::PAdicValuation(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("p-adic valuation requires a prime, got " + std::to_string(p));
}

MultZ0 PAdicValuation::operator()(const Rational& x) const {
  if (x == 0) return MultZ0::zero();
  return MultZ0::of_add(Integer(-padic_order(x, p_)));
}

std::uint64_t PAdicValuation::residue(const Rational& x) const {
  if (x == 0) return 0;
  if (padic_order(x, p_) < 0) throw MathError(ErrorKind::NotInUnitBall, x.get_str() + " under " + name());
  Integer p(std::to_string(p_));
  Integer den_inv;
  Integer den = mod_floor(x.get_den(), p);
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  return mod_floor(x.get_num() * den_inv, p).get_ui();
}

static void check_field(const CoefField& expected, const RatFunc& x) {
  if (!(x.field() == expected)) {
    throw MathError(ErrorKind::ContextMismatch, "element over " + x.field().name() + ", valuation over " +
                                                    expected.name());
  }
}

MultZ0 XAdicValuation::operator()(const RatFunc& x) const {
  check_field(field_, x);
  if (x.is_zero()) return MultZ0::zero();
  const auto a = static_cast<std::int64_t>(x.num().low_order()) - static_cast<std::int64_t>(x.den().low_order());
  return MultZ0::of_add(Integer(-a));
}

Rational XAdicValuation::residue(const RatFunc& x) const {
  check_field(field_, x);
  if (x.is_zero()) return Rational(0);
  if (x.den().low_order() > x.num().low_order()) {
    throw MathError(ErrorKind::NotInUnitBall, x.to_string() + " under " + name());
  }
  return field_.div(x.num().coeff(0), x.den().coeff(0));
}

}  // namespace dvf
