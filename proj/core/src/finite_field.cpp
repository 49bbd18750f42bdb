#include "dvf/finite_field.hpp"

#include <algorithm>
#include <stdexcept>

#include "dvf/errors.hpp"

namespace dvf {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("F_p requires a prime p, got " + std::to_string(p));
}

std::uint64_t PrimeField::reduce(std::int64_t a) const {
  const auto p = static_cast<__int128>(p_);
  __int128 r = static_cast<__int128>(a) % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t PrimeField::add(std::uint64_t a, std::uint64_t b) const {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % p_);
}

std::uint64_t PrimeField::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw MathError(ErrorKind::ZeroInversion, "0 in F" + std::to_string(p_));
  return inv_mod(a, p_);
}

FpPoly::FpPoly(const PrimeField& field, std::vector<std::uint64_t> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= field_.characteristic();
  trim();
}

FpPoly FpPoly::from_signed(std::uint64_t p, std::span<const std::int64_t> coeffs) {
  FpPoly out(p);
  out.coeffs_.reserve(coeffs.size());
  for (auto c : coeffs) out.coeffs_.push_back(out.field_.reduce(c));
  out.trim();
  return out;
}

void FpPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::uint64_t FpPoly::leading() const {
  if (is_zero()) throw std::logic_error("FpPoly::leading on zero polynomial");
  return coeffs_.back();
}

FpPoly FpPoly::scale(std::uint64_t c) const {
  FpPoly out(field_);
  out.coeffs_.reserve(coeffs_.size());
  for (auto a : coeffs_) out.coeffs_.push_back(field_.mul(a, c % prime()));
  out.trim();
  return out;
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scale(field_.inv(leading()));
}

static void check_prime(const FpPoly& a, const FpPoly& b) {
  if (a.prime() != b.prime()) {
    throw MathError(ErrorKind::ContextMismatch,
                    "polynomials over F" + std::to_string(a.prime()) + " and F" + std::to_string(b.prime()));
  }
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  check_prime(a, b);
  FpPoly out(a.base());
  out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = a.field_.add(a.coeff(i), b.coeff(i));
  out.trim();
  return out;
}

FpPoly FpPoly::operator-() const {
  FpPoly out = *this;
  for (auto& c : out.coeffs_) c = field_.neg(c);
  return out;
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) { return a + (-b); }

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  check_prime(a, b);
  FpPoly out(a.base());
  if (a.is_zero() || b.is_zero()) return out;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out.coeffs_[i + j] = a.field_.add(out.coeffs_[i + j], a.field_.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  out.trim();
  return out;
}

std::string FpPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const std::uint64_t c = coeffs_[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
  check_prime(a, b);
  if (b.is_zero()) throw MathError(ErrorKind::DivisionByZero, "polynomial division by zero over F_p");
  const PrimeField& f = a.base();
  const PrimeField& p = a.base();
  std::vector<std::uint64_t> rem(a.coeffs().begin(), a.coeffs().end());
  const auto db = static_cast<std::size_t>(b.degree());
  if (rem.size() <= db) return {FpPoly(p), a};
  std::vector<std::uint64_t> quo(rem.size() - db, 0);
  const std::uint64_t lead_inv = f.inv(b.leading());
  for (std::size_t k = rem.size(); k-- > db;) {
    const std::uint64_t c = f.mul(rem[k], lead_inv);
    quo[k - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = f.sub(rem[k - db + j], f.mul(c, b.coeffs()[j]));
  }
  rem.resize(db);
  return {FpPoly(p, std::move(quo)), FpPoly(p, std::move(rem))};
}

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& modulus) {
  if (e < 0) throw std::domain_error("powmod: negative exponent");
  FpPoly result = divmod(FpPoly(base.base(), {1}), modulus).second;
  const FpPoly b = divmod(base, modulus).second;
  const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(result * result, modulus).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = divmod(result * b, modulus).second;
  }
  return result;
}

static std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_irreducible(const FpPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("is_irreducible: degree must be at least 1");
  const FpPoly g = f.monic();
  const auto n = static_cast<std::uint64_t>(g.degree());
  const Integer p(std::to_string(g.prime()));
  const FpPoly x = FpPoly::x(g.prime());
  const FpPoly x_mod = divmod(x, g).second;

  // frob[k] = x^(p^k) mod g.
  std::vector<FpPoly> frob{x_mod};
  for (std::uint64_t k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), p, g));

  if (!(frob[n] == x_mod)) return false;
  for (std::uint64_t q : prime_divisors(n)) {
    if (gcd(frob[n / q] - x_mod, g).degree() != 0) return false;
  }
  return true;
}

FiniteField::FiniteField(const FpPoly& modulus) {
  if (modulus.degree() < 1) throw std::invalid_argument("finite field modulus must have degree >= 1");
  FpPoly g = modulus.monic();
  if (!is_irreducible(g)) throw std::invalid_argument("modulus " + g.to_string('t') + " is reducible");
  impl_ = std::make_shared<const Impl>(Impl{std::move(g)});
}

Integer FiniteField::order() const { return ipow(characteristic(), static_cast<std::int64_t>(degree())); }

FFElem FiniteField::element(const FpPoly& rep) const {
  if (rep.prime() != characteristic()) {
    throw MathError(ErrorKind::ContextMismatch, "element over F" + std::to_string(rep.prime()) + " in " +
                                                    to_string());
  }
  return FFElem(*this, divmod(rep, modulus()).second);
}

FFElem FiniteField::from_int(std::int64_t c) const {
  const std::int64_t coeffs[] = {c};
  return element(FpPoly::from_signed(characteristic(), coeffs));
}

FFElem FiniteField::zero() const { return from_int(0); }
FFElem FiniteField::one() const { return from_int(1); }
FFElem FiniteField::generator() const { return element(FpPoly::x(characteristic())); }

std::vector<FFElem> FiniteField::elements() const {
  const std::uint64_t p = characteristic();
  const std::size_t k = degree();
  std::vector<FFElem> out;
  std::vector<std::uint64_t> digits(k, 0);
  while (true) {
    out.push_back(element(FpPoly(p, digits)));
    std::size_t i = 0;
    while (i < k && ++digits[i] == p) digits[i++] = 0;
    if (i == k) break;
  }
  return out;
}

std::string FiniteField::to_string() const {
  return "F" + std::to_string(characteristic()) + "[t]/(" + modulus().to_string('t') + ")";
}

static void check_field(const FFElem& a, const FFElem& b) {
  if (!(a.field() == b.field())) {
    throw MathError(ErrorKind::ContextMismatch, a.field().to_string() + " and " + b.field().to_string());
  }
}

FFElem operator+(const FFElem& a, const FFElem& b) {
  check_field(a, b);
  return FFElem(a.field_, a.rep_ + b.rep_);
}

FFElem operator-(const FFElem& a, const FFElem& b) {
  check_field(a, b);
  return FFElem(a.field_, a.rep_ - b.rep_);
}

FFElem FFElem::operator-() const { return FFElem(field_, -rep_); }

FFElem operator*(const FFElem& a, const FFElem& b) {
  check_field(a, b);
  return FFElem(a.field_, divmod(a.rep_ * b.rep_, a.field_.modulus()).second);
}

FFElem FFElem::inv() const {
  if (is_zero()) throw MathError(ErrorKind::ZeroInversion, "0 in " + field_.to_string());
  // Extended Euclid on (rep, g): track s with s * rep == r (mod g).
  const PrimeField& p = rep_.base();
  FpPoly r0 = field_.modulus(), r1 = rep_;
  FpPoly s0(p), s1(p, {1});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    FpPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant because the modulus is irreducible.
  return FFElem(field_, divmod(s0.scale(r0.base().inv(r0.leading())), field_.modulus()).second);
}

FFElem operator/(const FFElem& a, const FFElem& b) { return a * b.inv(); }

FFElem FFElem::pow(const Integer& e) const {
  if (e < 0) return inv().pow(-e);
  return FFElem(field_, powmod(rep_, e, field_.modulus()));
}

}  // namespace dvf
