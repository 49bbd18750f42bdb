#include "dvf/coef_field.hpp"

#include <charconv>
#include <stdexcept>

#include "dvf/errors.hpp"

namespace dvf {

CoefField CoefField::prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("F_p requires a prime p, got " + std::to_string(p));
  CoefField f;
  f.p_ = p;
  return f;
}

CoefField CoefField::parse(std::string_view name) {
  if (name == "Q" || name == "QQ") return rationals();
  if (name.size() >= 2 && name.front() == 'F') {
    std::uint64_t p = 0;
    auto digits = name.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime(p);
  }
  throw std::invalid_argument("unknown coefficient field '" + std::string(name) +
                              "' (expected Q or F<p>)");
}

Rational CoefField::reduce(const Rational& q) const {
  if (p_ == 0) return q;
  Integer p(std::to_string(p_));
  Integer den = mod_floor(q.get_den(), p);
  if (den == 0) {
    throw MathError(ErrorKind::DivisionByZero, q.get_str() + " has no image in " + name());
  }
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  return Rational(mod_floor(q.get_num() * inv, p));
}

Rational CoefField::inv(const Rational& a) const {
  Rational r = reduce(a);
  if (r == 0) throw MathError(ErrorKind::ZeroInversion, "0 in " + name());
  return reduce(1 / r);
}

std::string CoefField::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

}  // namespace dvf
