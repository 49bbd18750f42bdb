#include "dvf/arith.hpp"

#include <array>
#include <stdexcept>

namespace dvf {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  // Signed 128-bit arithmetic keeps the Bezout coefficients in range.
  __int128 old_r = a % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::domain_error("inv_mod: argument not invertible");
  __int128 res = old_s % static_cast<__int128>(m);
  if (res < 0) res += m;
  return static_cast<std::uint64_t>(res);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < (1u << 16)) {
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  }
  if (n % 2 == 0) return false;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are deterministic for every n < 2^64.
  constexpr std::array<std::uint64_t, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t a : witnesses) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::int64_t remove_factor(Integer& n, std::uint64_t p) {
  if (n == 0) throw std::domain_error("remove_factor: zero has infinite valuation");
  Integer prime(std::to_string(p));
  return static_cast<std::int64_t>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

Integer ipow(std::uint64_t p, std::int64_t k) {
  if (k < 0) throw std::domain_error("ipow: negative exponent");
  Integer base(std::to_string(p));
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

Rational ipow(const Rational& q, std::int64_t k) {
  if (k < 0 && q == 0) throw std::domain_error("ipow: zero to a negative power");
  auto e = static_cast<unsigned long>(k < 0 ? -k : k);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), e);
  Rational out = k < 0 ? Rational(den, num) : Rational(num, den);
  out.canonicalize();
  return out;
}

std::int64_t padic_order(const Rational& q, std::uint64_t p) {
  if (q == 0) throw std::domain_error("padic_order: zero has infinite valuation");
  Integer num = q.get_num();
  Integer den = q.get_den();
  return remove_factor(num, p) - remove_factor(den, p);
}

Integer mod_floor(const Integer& n, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::int64_t to_int64(const Integer& n) {
  if (!n.fits_slong_p()) throw std::out_of_range("integer does not fit into 64 bits");
  return n.get_si();
}

std::int64_t to_int64(const Rational& q) {
  if (q.get_den() != 1) throw std::out_of_range("rational is not an integer");
  return to_int64(q.get_num());
}

}  // namespace dvf
