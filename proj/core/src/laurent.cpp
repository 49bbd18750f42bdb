#include "dvf/laurent.hpp"

#include <algorithm>
#include <stdexcept>

#include "dvf/errors.hpp"

namespace dvf {

LaurentCtx::LaurentCtx(CoefField field, std::int64_t default_rel_prec) : field_(field), prec_(default_rel_prec) {
  if (default_rel_prec < 1) throw std::invalid_argument("series precision must be at least 1");
}

LaurentSeries LaurentSeries::exact_zero(CoefField field) { return LaurentSeries(field, Kind::ExactZero); }

LaurentSeries LaurentSeries::zero_approx(CoefField field, std::int64_t abs_prec) {
  LaurentSeries out(field, Kind::ZeroApprox);
  out.order_ = abs_prec;
  return out;
}

LaurentSeries LaurentSeries::from_coeffs(CoefField field, std::int64_t order, std::vector<Rational> window) {
  const auto abs = order + static_cast<std::int64_t>(window.size());
  std::size_t lead = 0;
  while (lead < window.size() && field.reduce(window[lead]) == 0) ++lead;
  if (lead == window.size()) return zero_approx(field, abs);
  LaurentSeries out(field, Kind::Known);
  out.order_ = order + static_cast<std::int64_t>(lead);
  out.window_.reserve(window.size() - lead);
  for (std::size_t i = lead; i < window.size(); ++i) out.window_.push_back(field.reduce(window[i]));
  return out;
}

LaurentSeries LaurentSeries::monomial(CoefField field, const Rational& c, std::int64_t k, std::int64_t rel_prec) {
  if (field.reduce(c) == 0) return exact_zero(field);
  if (rel_prec < 1) throw std::invalid_argument("series precision must be at least 1");
  std::vector<Rational> window(static_cast<std::size_t>(rel_prec));
  window[0] = c;
  return from_coeffs(field, k, std::move(window));
}

std::int64_t LaurentSeries::order() const {
  if (!is_known()) throw std::logic_error("LaurentSeries::order on a zero approximation");
  return order_;
}

std::int64_t LaurentSeries::relative_precision() const {
  if (!is_known()) throw std::logic_error("LaurentSeries::relative_precision on a zero approximation");
  return static_cast<std::int64_t>(window_.size());
}

std::optional<std::int64_t> LaurentSeries::absolute_precision() const {
  switch (kind_) {
    case Kind::ExactZero: return std::nullopt;
    case Kind::ZeroApprox: return order_;
    case Kind::Known: return order_ + static_cast<std::int64_t>(window_.size());
  }
  return std::nullopt;
}

ValBound LaurentSeries::valuation() const {
  switch (kind_) {
    case Kind::ExactZero: return ValBound::infinite();
    case Kind::ZeroApprox: return ValBound::at_least(order_);
    case Kind::Known: return ValBound::exact(order_);
  }
  return ValBound::infinite();
}

Rational LaurentSeries::coeff(std::int64_t n) const {
  const auto abs = absolute_precision();
  if (abs && n >= *abs) {
    throw MathError(ErrorKind::InsufficientPrecision,
                    "coefficient of X^" + std::to_string(n) + " beyond O(X^" + std::to_string(*abs) + ")");
  }
  if (!is_known() || n < order_) return Rational(0);
  return window_[static_cast<std::size_t>(n - order_)];
}

bool LaurentSeries::valuation_le_of_add_neg(std::int64_t bound) const {
  switch (kind_) {
    case Kind::ExactZero: return true;
    case Kind::Known: return order_ >= bound;
    case Kind::ZeroApprox:
      if (bound <= order_) return true;
      break;
  }
  throw MathError(ErrorKind::Undecidable,
                  "compare " + to_string() + " against of_add(" + std::to_string(-bound) + ")");
}

RatFunc LaurentSeries::approximate_by_ratfunc(std::int64_t n_max) const {
  const auto abs = absolute_precision();
  if (abs && *abs < n_max) {
    throw MathError(ErrorKind::InsufficientPrecision,
                    "truncation at X^" + std::to_string(n_max) + " beyond O(X^" + std::to_string(*abs) + ")");
  }
  if (!is_known() || n_max <= order_) return RatFunc(field_);
  const std::int64_t shift = std::min<std::int64_t>(order_, 0);
  std::vector<Rational> num(static_cast<std::size_t>(n_max - shift));
  for (std::int64_t n = order_; n < n_max; ++n) num[static_cast<std::size_t>(n - shift)] = coeff(n);
  return RatFunc(Poly(field_, std::move(num)), Poly::monomial(field_, 1, static_cast<std::size_t>(-shift)));
}

bool LaurentSeries::is_power_series() const {
  switch (kind_) {
    case Kind::ExactZero: return true;
    case Kind::Known: return order_ >= 0;
    case Kind::ZeroApprox:
      if (order_ >= 0) return true;
      break;
  }
  throw MathError(ErrorKind::Undecidable, "unit-ball membership of " + to_string());
}

static void check_field(const LaurentSeries& f, const LaurentSeries& g) {
  if (!(f.field() == g.field())) {
    throw MathError(ErrorKind::ContextMismatch, "series over " + f.field().name() + " and " + g.field().name());
  }
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries out = *this;
  for (auto& c : out.window_) c = field_.neg(c);
  return out;
}

LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g) {
  check_field(f, g);
  if (f.is_exact_zero()) return g;
  if (g.is_exact_zero()) return f;
  const std::int64_t abs = std::min(*f.absolute_precision(), *g.absolute_precision());
  std::int64_t low = abs;
  for (const LaurentSeries* t : {&f, &g}) {
    if (t->is_known()) low = std::min(low, t->order_);
  }
  if (abs <= low) return LaurentSeries::zero_approx(f.field_, abs);
  std::vector<Rational> window(static_cast<std::size_t>(abs - low));
  for (const LaurentSeries* t : {&f, &g}) {
    if (!t->is_known()) continue;
    for (std::size_t i = 0; i < t->window_.size(); ++i) {
      const std::int64_t n = t->order_ + static_cast<std::int64_t>(i);
      if (n >= abs) break;
      window[static_cast<std::size_t>(n - low)] += t->window_[i];
    }
  }
  return LaurentSeries::from_coeffs(f.field_, low, std::move(window));
}

LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g) { return f + (-g); }

LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) {
  check_field(f, g);
  if (f.is_exact_zero() || g.is_exact_zero()) return LaurentSeries::exact_zero(f.field_);
  if (!f.is_known() || !g.is_known()) return LaurentSeries::zero_approx(f.field_, f.order_ + g.order_);
  const std::size_t r = std::min(f.window_.size(), g.window_.size());
  std::vector<Rational> window(r);
  for (std::size_t k = 0; k < r; ++k) {
    Rational acc = 0;
    for (std::size_t i = 0; i <= k; ++i) acc += f.window_[i] * g.window_[k - i];
    window[k] = acc;
  }
  return LaurentSeries::from_coeffs(f.field_, f.order_ + g.order_, std::move(window));
}

LaurentSeries LaurentSeries::inv() const {
  if (is_exact_zero()) throw MathError(ErrorKind::ZeroInversion, "series 0");
  if (!is_known()) throw MathError(ErrorKind::ZeroIndistinguishable, "cannot invert " + to_string());
  const std::size_t r = window_.size();
  const Rational lead_inv = field_.inv(window_[0]);
  std::vector<Rational> out(r);
  out[0] = lead_inv;
  for (std::size_t k = 1; k < r; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += window_[i] * out[k - i];
    out[k] = field_.neg(field_.mul(field_.reduce(acc), lead_inv));
  }
  return from_coeffs(field_, -order_, std::move(out));
}

LaurentSeries operator/(const LaurentSeries& f, const LaurentSeries& g) {
  check_field(f, g);
  return f * g.inv();
}

LaurentSeries LaurentSeries::pow(std::int64_t n) const {
  if (n < 0) return inv().pow(-n);
  const std::int64_t prec = is_known() ? relative_precision() : 1;
  LaurentSeries result = monomial(field_, 1, 0, prec);
  LaurentSeries base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

std::string LaurentSeries::to_string() const {
  if (is_exact_zero()) return "0";
  if (!is_known()) return "O(X^" + std::to_string(order_) + ")";
  std::string out;
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (window_[i] != 0) detail::append_term(out, window_[i], order_ + static_cast<std::int64_t>(i), 'X');
  }
  out += " + O(X^" + std::to_string(*absolute_precision()) + ")";
  return out;
}

LaurentSeries from_ratfunc(const RatFunc& rf, std::int64_t abs_prec) {
  const CoefField& field = rf.field();
  if (rf.is_zero()) return LaurentSeries::exact_zero(field);
  const std::size_t a = rf.num().low_order();
  const std::size_t b = rf.den().low_order();
  const std::int64_t order = static_cast<std::int64_t>(a) - static_cast<std::int64_t>(b);
  const std::int64_t r = abs_prec - order;
  if (r <= 0) return LaurentSeries::zero_approx(field, abs_prec);
  const Poly num = rf.num().shift_down(a);
  const Poly den = rf.den().shift_down(b);
  const Rational den0_inv = field.inv(den.coeff(0));
  std::vector<Rational> window(static_cast<std::size_t>(r));
  // Power-series division: den * window = num, solved term by term.
  const auto den_deg = static_cast<std::size_t>(den.degree());
  for (std::size_t k = 0; k < window.size(); ++k) {
    Rational acc = num.coeff(k);
    for (std::size_t j = 1; j <= std::min(k, den_deg); ++j) acc -= den.coeffs()[j] * window[k - j];
    window[k] = field.mul(field.reduce(acc), den0_inv);
  }
  return LaurentSeries::from_coeffs(field, order, std::move(window));
}

}  // namespace dvf
