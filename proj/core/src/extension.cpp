#include "dvf/extension.hpp"

namespace dvf {

std::string_view to_string(Certificate cert) {
  switch (cert) {
    case Certificate::Eisenstein: return "eisenstein";
    case Certificate::Unramified: return "unramified";
    case Certificate::None: return "none";
  }
  return "none";
}

std::uint64_t BaseTraits<LaurentSeries>::residue_characteristic(const Context& ctx) {
  if (!ctx.field().is_prime_field()) {
    throw std::invalid_argument("extensions need a finite residue field; use F_p((X)), not Q((X))");
  }
  return ctx.field().characteristic();
}

std::uint64_t BaseTraits<LaurentSeries>::residue(const LaurentSeries& x) {
  if (!x.is_power_series()) throw MathError(ErrorKind::NotIntegral, "residue of " + x.to_string());
  if (x.is_zero_approx()) {
    if (x.is_exact_zero() || *x.absolute_precision() >= 1) return 0;
    throw MathError(ErrorKind::Undecidable, "residue of " + x.to_string());
  }
  return x.coeff(0).get_num().get_ui();
}

QVal QVal::fin(Rational q, std::size_t n) {
  q.canonicalize();
  if (n == 0 || Integer(static_cast<unsigned long>(n)) % q.get_den() != 0) {
    throw std::logic_error("extended valuation " + q.get_str() + " not in (1/" + std::to_string(n) + ")Z");
  }
  return QVal(std::move(q));
}

const Rational& QVal::value() const {
  if (!value_) throw std::logic_error("QVal::value on infinity");
  return *value_;
}

std::string NormValue::to_string() const {
  if (kind == Kind::Zero) return "0";
  return base.value().get_str() + "^(" + exponent.get_str() + ")";
}

template class ExtField<PAdicNum>;
template class ExtElem<PAdicNum>;
template class ExtField<LaurentSeries>;
template class ExtElem<LaurentSeries>;

}  // namespace dvf
