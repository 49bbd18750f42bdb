#include "dvf/padic.hpp"

#include <algorithm>
#include <stdexcept>

#include "dvf/errors.hpp"

namespace dvf {

PAdicCtx::PAdicCtx(std::uint64_t p, std::int64_t default_rel_prec) : p_(p), prec_(default_rel_prec) {
  if (!is_prime(p)) throw std::invalid_argument("Q_p requires a prime p, got " + std::to_string(p));
  if (default_rel_prec < 1) throw std::invalid_argument("p-adic precision must be at least 1");
}

PAdicNum PAdicNum::exact_zero(const PAdicCtx& ctx) { return PAdicNum(ctx, Kind::ExactZero); }

PAdicNum PAdicNum::zero_approx(const PAdicCtx& ctx, std::int64_t abs_prec) {
  PAdicNum out(ctx, Kind::ZeroApprox);
  out.order_ = abs_prec;
  return out;
}

PAdicNum PAdicNum::from_rat(const PAdicCtx& ctx, const Rational& q) {
  return from_rat(ctx, q, ctx.precision());
}

PAdicNum PAdicNum::from_rat(const PAdicCtx& ctx, const Rational& q, std::int64_t rel_prec) {
  if (q == 0) return exact_zero(ctx);
  if (rel_prec < 1) throw std::invalid_argument("p-adic precision must be at least 1");
  Integer num = q.get_num();
  Integer den = q.get_den();
  const std::int64_t nu = remove_factor(num, ctx.prime()) - remove_factor(den, ctx.prime());
  const Integer modulus = ipow(ctx.prime(), rel_prec);
  Integer den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  PAdicNum out(ctx, Kind::Known);
  out.order_ = nu;
  out.rel_prec_ = rel_prec;
  out.unit_ = mod_floor(num * den_inv, modulus);
  return out;
}

PAdicNum PAdicNum::from_digits(const PAdicCtx& ctx, std::int64_t nu, const Integer& u, std::int64_t r) {
  if (r < 1) return zero_approx(ctx, nu + r);
  Integer unit = mod_floor(u, ipow(ctx.prime(), r));
  if (unit == 0) return zero_approx(ctx, nu + r);
  const std::int64_t k = remove_factor(unit, ctx.prime());
  PAdicNum out(ctx, Kind::Known);
  out.order_ = nu + k;
  out.rel_prec_ = r - k;
  out.unit_ = std::move(unit);
  return out;
}

std::int64_t PAdicNum::order() const {
  if (!is_known()) throw std::logic_error("PAdicNum::order on a zero approximation");
  return order_;
}

const Integer& PAdicNum::unit() const {
  if (!is_known()) throw std::logic_error("PAdicNum::unit on a zero approximation");
  return unit_;
}

std::int64_t PAdicNum::relative_precision() const {
  if (!is_known()) throw std::logic_error("PAdicNum::relative_precision on a zero approximation");
  return rel_prec_;
}

std::optional<std::int64_t> PAdicNum::absolute_precision() const {
  switch (kind_) {
    case Kind::ExactZero: return std::nullopt;
    case Kind::ZeroApprox: return order_;
    case Kind::Known: return order_ + rel_prec_;
  }
  return std::nullopt;
}

ValBound PAdicNum::valuation() const {
  switch (kind_) {
    case Kind::ExactZero: return ValBound::infinite();
    case Kind::ZeroApprox: return ValBound::at_least(order_);
    case Kind::Known: return ValBound::exact(order_);
  }
  return ValBound::infinite();
}

std::vector<std::uint64_t> PAdicNum::digits() const {
  std::vector<std::uint64_t> out;
  if (!is_known()) return out;
  Integer rest = unit_;
  const Integer p(std::to_string(prime()));
  out.reserve(static_cast<std::size_t>(rel_prec_));
  for (std::int64_t i = 0; i < rel_prec_; ++i) {
    Integer d;
    mpz_fdiv_qr(rest.get_mpz_t(), d.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    out.push_back(d.get_ui());
  }
  return out;
}

static void check_context(const PAdicNum& x, const PAdicNum& y) {
  if (x.prime() != y.prime()) {
    throw MathError(ErrorKind::ContextMismatch,
                    "Q_" + std::to_string(x.prime()) + " and Q_" + std::to_string(y.prime()));
  }
}

PAdicNum PAdicNum::operator-() const {
  if (!is_known()) return *this;
  return from_digits(ctx_, order_, -unit_, rel_prec_);
}

PAdicNum operator+(const PAdicNum& x, const PAdicNum& y) {
  check_context(x, y);
  if (x.is_exact_zero()) return y;
  if (y.is_exact_zero()) return x;
  const std::int64_t abs = std::min(*x.absolute_precision(), *y.absolute_precision());
  if (!x.is_known() && !y.is_known()) return PAdicNum::zero_approx(x.ctx_, abs);

  std::int64_t low = abs;
  for (const PAdicNum* t : {&x, &y}) {
    if (t->is_known()) low = std::min(low, t->order_);
  }
  if (abs <= low) return PAdicNum::zero_approx(x.ctx_, abs);

  Integer sum = 0;
  for (const PAdicNum* t : {&x, &y}) {
    if (!t->is_known() || t->order_ >= abs) continue;
    sum += t->unit_ * ipow(x.prime(), t->order_ - low);
  }
  return PAdicNum::from_digits(x.ctx_, low, sum, abs - low);
}

PAdicNum operator-(const PAdicNum& x, const PAdicNum& y) { return x + (-y); }

PAdicNum operator*(const PAdicNum& x, const PAdicNum& y) {
  check_context(x, y);
  if (x.is_exact_zero() || y.is_exact_zero()) return PAdicNum::exact_zero(x.ctx_);
  if (!x.is_known() || !y.is_known()) {
    // Both orders are lower bounds on the valuation of their factor.
    return PAdicNum::zero_approx(x.ctx_, x.order_ + y.order_);
  }
  const std::int64_t r = std::min(x.rel_prec_, y.rel_prec_);
  PAdicNum out(x.ctx_, PAdicNum::Kind::Known);
  out.order_ = x.order_ + y.order_;
  out.rel_prec_ = r;
  out.unit_ = mod_floor(x.unit_ * y.unit_, ipow(x.prime(), r));
  return out;
}

PAdicNum PAdicNum::inv() const {
  if (is_exact_zero()) throw MathError(ErrorKind::ZeroInversion, "p-adic 0");
  if (!is_known()) throw MathError(ErrorKind::ZeroIndistinguishable, "cannot invert " + to_string());
  const Integer modulus = ipow(prime(), rel_prec_);
  PAdicNum out(ctx_, Kind::Known);
  out.order_ = -order_;
  out.rel_prec_ = rel_prec_;
  mpz_invert(out.unit_.get_mpz_t(), unit_.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

PAdicNum operator/(const PAdicNum& x, const PAdicNum& y) {
  check_context(x, y);
  return x * y.inv();
}

PAdicNum PAdicNum::pow(std::int64_t n) const {
  if (n < 0) return inv().pow(-n);
  PAdicNum result = from_rat(ctx_, 1);
  PAdicNum base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Rational PAdicNum::approximate(std::int64_t n) const {
  const auto abs = absolute_precision();
  if (abs && *abs < n) {
    throw MathError(ErrorKind::InsufficientPrecision,
                    "requested " + std::to_string(n) + " digits, known to " + std::to_string(*abs));
  }
  if (!is_known() || n <= order_) return Rational(0);
  const Integer truncated = mod_floor(unit_, ipow(prime(), n - order_));
  if (order_ >= 0) return Rational(truncated * ipow(prime(), order_));
  Rational out(truncated, ipow(prime(), -order_));
  out.canonicalize();
  return out;
}

std::uint64_t PAdicNum::residue() const {
  switch (kind_) {
    case Kind::ExactZero: return 0;
    case Kind::ZeroApprox:
      if (order_ >= 1) return 0;
      throw MathError(ErrorKind::Undecidable, "residue of " + to_string());
    case Kind::Known:
      if (order_ < 0) throw MathError(ErrorKind::NotIntegral, "residue of " + to_string());
      if (order_ > 0) return 0;
      return mod_floor(unit_, Integer(std::to_string(prime()))).get_ui();
  }
  return 0;
}

std::string PAdicNum::to_string() const {
  const std::string p = std::to_string(prime());
  if (is_exact_zero()) return "0";
  if (!is_known()) return "O(" + p + "^" + std::to_string(order_) + ")";
  std::string out;
  const auto ds = digits();
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds[i] == 0) continue;
    const std::int64_t k = order_ + static_cast<std::int64_t>(i);
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += std::to_string(ds[i]);
      continue;
    }
    if (ds[i] != 1) out += std::to_string(ds[i]) + "*";
    out += p;
    if (k != 1) out += "^" + std::to_string(k);
  }
  out += " + O(" + p + "^" + std::to_string(*absolute_precision()) + ")";
  return out;
}

}  // namespace dvf
