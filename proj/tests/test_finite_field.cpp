#include <gtest/gtest.h>

#include <set>

#include "dvf/errors.hpp"
#include "dvf/finite_field.hpp"
#include "support/oracle.hpp"

using dvf::FFElem;
using dvf::FiniteField;
using dvf::FpPoly;
using dvf::Integer;
using dvf::PrimeField;

namespace {

FpPoly poly(std::uint64_t p, std::vector<std::int64_t> c) { return FpPoly::from_signed(p, c); }

TEST(PrimeField, Examples) {
  EXPECT_EQ(PrimeField(5).inv(3), 2u);
  EXPECT_EQ(PrimeField(3).inv(2), 2u);
  EXPECT_EQ(PrimeField(5).add(4, 3), 2u);
  EXPECT_EQ(PrimeField(7).reduce(-1), 6u);
  EXPECT_THROW(PrimeField(9), std::invalid_argument);
  EXPECT_THROW(PrimeField(5).inv(0), dvf::MathError);
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 101u}) {
    for (std::uint64_t a = 1; a < p; ++a) EXPECT_EQ(PrimeField(p).inv(a), oracle::inv_mod_scan(a, p));
  }
}

TEST(FpPoly, Examples) {
  EXPECT_EQ(dvf::gcd(poly(5, {-1, 0, 1}), poly(5, {-1, 1})), poly(5, {4, 1}));
  const auto [q, r] = dvf::divmod(poly(3, {0, 0, 0, 1}), poly(3, {1, 0, 1}));
  EXPECT_EQ(q, poly(3, {0, 1}));
  EXPECT_EQ(r, poly(3, {0, 2}));
  EXPECT_EQ(dvf::powmod(FpPoly::x(3), 9, poly(3, {1, 0, 1})), FpPoly::x(3));
  EXPECT_EQ(poly(5, {2, 0, 1}).to_string('t'), "2 + t^2");
  EXPECT_THROW(dvf::divmod(FpPoly::x(3), FpPoly(3)), dvf::MathError);
}

TEST(FpPoly, Irreducibility) {
  EXPECT_TRUE(dvf::is_irreducible(poly(3, {1, 0, 1})));
  EXPECT_FALSE(dvf::is_irreducible(poly(3, {-1, 0, 1})));
  EXPECT_TRUE(dvf::is_irreducible(poly(2, {1, 1, 1})));
}

TEST(FpPoly, IrreducibilityMatchesExhaustiveSearch) {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    for (std::size_t d = 1; d <= 4; ++d) {
      for (const auto& f : oracle::monic_polys(p, d)) {
        EXPECT_EQ(dvf::is_irreducible(FpPoly(p, f)), oracle::irreducible_by_search(f, p));
      }
    }
  }
}

TEST(FpPoly, MultiplicationAgainstSchoolbook) {
  oracle::Sampler rng(21);
  for (int i = 0; i < 200; ++i) {
    oracle::PolyP a, b;
    for (int j = 0; j < rng.integer(0, 6); ++j) a.push_back(rng.integer(0, 6));
    for (int j = 0; j < rng.integer(0, 6); ++j) b.push_back(rng.integer(0, 6));
    oracle::PolyP want = oracle::mul(a, b, 7);
    EXPECT_EQ(FpPoly(7, a) * FpPoly(7, b), FpPoly(7, want));
    if (!FpPoly(7, b).is_zero()) {
      const auto [q, r] = dvf::divmod(FpPoly(7, a), FpPoly(7, b));
      EXPECT_EQ(q * FpPoly(7, b) + r, FpPoly(7, a));
      EXPECT_LT(r.degree(), FpPoly(7, b).degree());
    }
  }
}

TEST(FiniteField, F9Examples) {
  const FiniteField f9(poly(3, {1, 0, 1}));
  const FFElem t = f9.generator();
  EXPECT_EQ(t * t, f9.from_int(2));
  EXPECT_EQ((t + f9.one()).pow(2), t * f9.from_int(2));
  EXPECT_EQ(t.inv(), t * f9.from_int(2));
  EXPECT_EQ(f9.order(), 9);
  EXPECT_EQ(f9.to_string(), "F3[t]/(1 + t^2)");
  EXPECT_THROW(FiniteField(poly(3, {-1, 0, 1})), std::invalid_argument);
  EXPECT_THROW(f9.zero().inv(), dvf::MathError);
}

void check_field_axioms(const FiniteField& k) {
  const auto all = k.elements();
  ASSERT_EQ(Integer(static_cast<unsigned long>(all.size())), k.order());
  std::set<std::vector<std::uint64_t>> distinct;
  for (const auto& x : all) distinct.insert({x.rep().coeffs().begin(), x.rep().coeffs().end()});
  EXPECT_EQ(distinct.size(), all.size());
  for (const auto& x : all) {
    if (!x.is_zero()) EXPECT_EQ(x * x.inv(), k.one());
    EXPECT_EQ(x + k.zero(), x);
    EXPECT_EQ(x * k.one(), x);
    EXPECT_EQ(x + (-x), k.zero());
    for (const auto& y : all) {
      EXPECT_EQ(x + y, y + x);
      EXPECT_EQ(x * y, y * x);
      for (std::size_t i = 0; i < all.size(); i += 3) {
        const auto& z = all[i];
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
      }
    }
  }
}

TEST(FiniteField, AxiomsByExhaustion) {
  check_field_axioms(FiniteField(poly(3, {1, 0, 1})));
  check_field_axioms(FiniteField(poly(5, {-2, 0, 1})));
  check_field_axioms(FiniteField(poly(2, {1, 1, 0, 1})));
}

TEST(FiniteField, FrobeniusFixesPrimeField) {
  for (const auto& g : {poly(2, {1, 1, 1}), poly(3, {1, 0, 1}), poly(2, {1, 1, 0, 1}), poly(3, {-1, 1, 0, 0, 1}),
                        poly(5, {2, 0, 1}), poly(7, {1, 0, 1}), poly(3, {1, 2, 0, 1})}) {
    const FiniteField k(g);
    ASSERT_LE(k.order(), 81);
    const std::uint64_t p = k.characteristic();
    const auto all = k.elements();
    std::set<std::vector<std::uint64_t>> image;
    std::size_t fixed = 0;
    for (const auto& x : all) {
      const FFElem fx = x.pow(p);
      image.insert({fx.rep().coeffs().begin(), fx.rep().coeffs().end()});
      if (fx == x) {
        ++fixed;
        EXPECT_LE(x.rep().degree(), 0);
      }
      for (std::size_t i = 0; i < all.size(); i += 5) {
        EXPECT_EQ((x * all[i]).pow(p), fx * all[i].pow(p));
        EXPECT_EQ((x + all[i]).pow(p), fx + all[i].pow(p));
      }
    }
    EXPECT_EQ(image.size(), all.size());
    EXPECT_EQ(fixed, p);
  }
}

TEST(FiniteField, OrderIsPToTheDegree) {
  for (const auto& g : {poly(2, {1, 1}), poly(2, {1, 1, 1}), poly(3, {1, 0, 1}), poly(5, {2, 0, 1}),
                        poly(2, {1, 1, 0, 0, 1})}) {
    const FiniteField k(g);
    EXPECT_EQ(Integer(static_cast<unsigned long>(k.elements().size())), oracle::power(g.prime(), g.degree()));
  }
}

}  // namespace
