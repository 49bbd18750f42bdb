#pragma once

// Integer and rational helpers shared by every module.

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace dvf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Deterministic primality test for 64-bit integers.
/// Trial division below 2^16, Miller-Rabin with a fixed witness set above.
bool is_prime(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Inverse of a modulo m via extended Euclid; a must be coprime to m.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

/// Strips every factor p from n (n != 0) by repeated exact division and
/// returns how many were removed.
std::int64_t remove_factor(Integer& n, std::uint64_t p);

/// p^k for k >= 0.
Integer ipow(std::uint64_t p, std::int64_t k);

/// q^k for any integer k; q must be nonzero when k < 0.
Rational ipow(const Rational& q, std::int64_t k);

/// Additive p-adic valuation of a nonzero rational.
std::int64_t padic_order(const Rational& q, std::uint64_t p);

/// Least nonnegative residue of n modulo m.
Integer mod_floor(const Integer& n, const Integer& m);

/// Rational rendered as "a" or "a/b".
std::string to_string(const Rational& q);

/// Narrowing helper; throws std::out_of_range when q is not an integer that
/// fits into std::int64_t.
std::int64_t to_int64(const Rational& q);
std::int64_t to_int64(const Integer& n);

}  // namespace dvf
