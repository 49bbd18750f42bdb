#include <gtest/gtest.h>

#include "dvf/errors.hpp"
#include "dvf/laurent.hpp"
#include "dvf/valuation.hpp"
#include "support/oracle.hpp"

using dvf::CoefField;
using dvf::LaurentSeries;
using dvf::Poly;
using dvf::RatFunc;
using dvf::Rational;
using dvf::ValBound;
using oracle::rat;

namespace {

RatFunc rf(CoefField k, std::vector<Rational> num, std::vector<Rational> den = {1}) {
  return RatFunc(Poly(k, std::move(num)), Poly(k, std::move(den)));
}

std::vector<Rational> coeffs(const Poly& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

// Coefficient-by-coefficient comparison with schoolbook long division over
// the whole known range of s.
::testing::AssertionResult matches_long_division(const LaurentSeries& s, const RatFunc& f) {
  const std::uint64_t p = f.field().characteristic();
  const std::int64_t top = *s.absolute_precision();
  const auto den = coeffs(f.den());
  auto num = coeffs(f.num());
  if (num.empty()) num.push_back(0);
  std::int64_t start = 0;
  for (std::size_t i = 0; den[i] == 0; ++i) --start;
  if (top <= start) return ::testing::AssertionSuccess();
  const auto ex = oracle::long_divide(num, den, oracle::Scalars{p}, static_cast<std::size_t>(top - start));
  for (std::int64_t n = ex.start; n < top; ++n) {
    const Rational want = ex.coeffs[static_cast<std::size_t>(n - ex.start)];
    if (s.coeff(n) != want) {
      return ::testing::AssertionFailure() << "coefficient " << n << " of " << s.to_string() << " should be "
                                           << want.get_str();
    }
  }
  return ::testing::AssertionSuccess();
}

TEST(Laurent, FromRatfunc) {
  const CoefField f2 = CoefField::prime(2), q;
  const LaurentSeries g = dvf::from_ratfunc(rf(f2, {1}, {1, 1}), 10);
  for (int n = 0; n < 10; ++n) EXPECT_EQ(g.coeff(n), 1);
  EXPECT_EQ(g.coeff(7), 1);
  EXPECT_EQ(dvf::from_ratfunc(rf(q, {1, 1}, {0, 1}), 3).to_string(), "X^-1 + 1 + O(X^3)");
  const LaurentSeries h = dvf::from_ratfunc(rf(q, {1}, {1, -1}), 6);
  EXPECT_EQ(h.to_string(), "1 + X + X^2 + X^3 + X^4 + X^5 + O(X^6)");
}

TEST(Laurent, Arithmetic) {
  const CoefField q;
  const LaurentSeries geo = dvf::from_ratfunc(rf(q, {1}, {1, -1}), 20);
  const LaurentSeries one_minus_x = LaurentSeries::from_coeffs(q, 0, {1, -1});
  const LaurentSeries prod = one_minus_x * geo;
  EXPECT_EQ(prod.valuation(), ValBound::exact(0));
  EXPECT_EQ(prod.coeff(0), 1);
  for (int n = 1; n < *prod.absolute_precision(); ++n) EXPECT_EQ(prod.coeff(n), 0);

  const LaurentSeries inv = dvf::from_ratfunc(rf(q, {0, 0, 1, 1}), 10).inv();
  EXPECT_EQ(inv.order(), -2);
  const std::vector<Rational> want{1, -1, 1, -1};
  for (int i = 0; i < 4; ++i) EXPECT_EQ(inv.coeff(i - 2), want[i]);
  EXPECT_TRUE(inv.to_string().starts_with("X^-2 - X^-1 + 1 - X + X^2"));

  const LaurentSeries neg = dvf::from_ratfunc(rf(q, {-1}, {1, -1}), 20);
  EXPECT_EQ((geo + neg).kind(), LaurentSeries::Kind::ZeroApprox);
}

TEST(Laurent, Valuation) {
  const CoefField q;
  EXPECT_EQ(dvf::from_ratfunc(rf(q, {0, 0, 0, 1, 0, 1}), 10).valuation(), ValBound::exact(3));
  EXPECT_EQ(dvf::from_ratfunc(rf(q, {1}, {0, 0, 1}), 10).valuation(), ValBound::exact(-2));
  const LaurentSeries f = dvf::from_ratfunc(rf(q, {1, 2}, {3, 1}), 8);
  EXPECT_EQ((f - f).valuation(), ValBound::at_least(8));
  EXPECT_EQ(LaurentSeries::exact_zero(q).valuation(), ValBound::infinite());
}

TEST(Laurent, Coefficients) {
  const CoefField q;
  EXPECT_EQ(dvf::from_ratfunc(rf(q, {1, 1}, {0, 1}), 5).coeff(-1), 1);
  EXPECT_EQ(dvf::from_ratfunc(rf(q, {0, 0, 0, 1}), 10).coeff(0), 0);
  const LaurentSeries f = LaurentSeries::from_coeffs(q, 0, {1, 2, 3});
  try {
    (void)f.coeff(3);
    FAIL();
  } catch (const dvf::MathError& e) {
    EXPECT_EQ(e.kind(), dvf::ErrorKind::InsufficientPrecision);
  }
}

TEST(Laurent, ApproximateByRatfunc) {
  const CoefField q;
  const LaurentSeries ones = LaurentSeries::from_coeffs(q, -1, std::vector<Rational>(10, 1));
  EXPECT_EQ(ones.approximate_by_ratfunc(3), rf(q, {1, 1, 1, 1}, {0, 1}));
  const LaurentSeries x3 = dvf::from_ratfunc(rf(q, {0, 0, 0, 1}), 20);
  EXPECT_EQ(x3.approximate_by_ratfunc(10), rf(q, {0, 0, 0, 1}));
  const RatFunc geo = rf(q, {1}, {1, -1});
  const RatFunc head = dvf::from_ratfunc(geo, 20).approximate_by_ratfunc(2);
  EXPECT_EQ(head, rf(q, {1, 1}));
  EXPECT_TRUE(dvf::val(dvf::XAdicValuation(q), geo - head) <= dvf::MultZ0::of_add(-2));
}

TEST(Laurent, PowerSeries) {
  const CoefField q;
  EXPECT_TRUE(LaurentSeries::from_coeffs(q, 0, {1, 1}).is_power_series());
  EXPECT_FALSE(LaurentSeries::from_coeffs(q, -1, {1}).is_power_series());
  EXPECT_TRUE(dvf::from_ratfunc(rf(q, {0, 0, 1}, {1, 1}), 10).is_power_series());
}

TEST(Laurent, Errors) {
  const CoefField q;
  EXPECT_THROW(LaurentSeries::zero_approx(q, 5).inv(), dvf::MathError);
  EXPECT_THROW(LaurentSeries::exact_zero(q).inv(), dvf::MathError);
  EXPECT_THROW(LaurentSeries::from_coeffs(q, 0, {1}) + LaurentSeries::from_coeffs(CoefField::prime(3), 0, {1}),
               dvf::MathError);
}

TEST(Laurent, HomomorphismAgainstLongDivision) {
  oracle::Sampler rng(12);
  for (std::uint64_t p : {2u, 5u, 0u}) {
    const CoefField k = p ? CoefField::prime(p) : CoefField::rationals();
    auto sample = [&] {
      RatFunc f(k);
      while (f.is_zero()) f = rf(k, rng.poly(p, rng.integer(0, 3)), rng.poly(p, rng.integer(0, 3)));
      return f * RatFunc::x(k).pow(rng.integer(-2, 2));
    };
    for (int i = 0; i < 60; ++i) {
      const RatFunc f = sample(), g = sample();
      const LaurentSeries sf = dvf::from_ratfunc(f, 25), sg = dvf::from_ratfunc(g, 25);
      EXPECT_TRUE(matches_long_division(sf, f));
      EXPECT_TRUE(matches_long_division(sf + sg, f + g));
      EXPECT_TRUE(matches_long_division(sf * sg, f * g));
      EXPECT_TRUE(matches_long_division(sf / sg, f / g));
      const long order = -dvf::val(dvf::XAdicValuation(k), f).exponent().get_si();
      EXPECT_EQ(sf.valuation(), ValBound::exact(order));
    }
  }
}

TEST(Laurent, CoefficientVanishing) {
  oracle::Sampler rng(13);
  const CoefField k = CoefField::prime(3);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> w;
    for (int j = 0; j < 12; ++j) w.push_back(rng.scalar(3));
    const LaurentSeries f = LaurentSeries::from_coeffs(k, rng.integer(-4, 4), w);
    if (!f.is_known()) continue;
    for (std::int64_t d = -6; d <= *f.absolute_precision(); ++d) {
      bool vanish = true;
      for (std::int64_t n = -6; n < d; ++n) vanish = vanish && f.coeff(n) == 0;
      EXPECT_EQ(f.valuation_le_of_add_neg(d), vanish);
    }
  }
}

TEST(Laurent, XIsUniformizer) {
  const CoefField q;
  EXPECT_EQ(LaurentSeries::monomial(q, 1, 1, 5).valuation(), ValBound::exact(1));
  oracle::Sampler rng(14);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> w;
    for (int j = 0; j < 8; ++j) w.push_back(rng.scalar(0));
    w[0] = 1 + rng.integer(0, 3);
    const std::int64_t d = rng.integer(-3, 5);
    const LaurentSeries f = LaurentSeries::from_coeffs(q, d, w);
    const LaurentSeries unit = LaurentSeries::from_coeffs(q, 0, {f.window().begin(), f.window().end()});
    EXPECT_EQ(unit.valuation(), ValBound::exact(0));
    EXPECT_EQ(LaurentSeries::monomial(q, 1, d, 8) * unit, f);
  }
}

TEST(Laurent, MultiplicationAgainstConvolution) {
  oracle::Sampler rng(15);
  const CoefField k = CoefField::prime(7);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> a, b;
    for (int j = 0; j < 10; ++j) a.push_back(rng.scalar(7));
    for (int j = 0; j < 6; ++j) b.push_back(rng.scalar(7));
    a[0] = 1 + rng.integer(0, 5);
    b[0] = 1 + rng.integer(0, 5);
    const LaurentSeries prod = LaurentSeries::from_coeffs(k, 1, a) * LaurentSeries::from_coeffs(k, -2, b);
    ASSERT_EQ(*prod.absolute_precision(), -1 + 6);
    for (int n = 0; n < 6; ++n) {
      long c = 0;
      for (int j = 0; j <= n; ++j) c += a[j].get_num().get_si() * b[n - j].get_num().get_si();
      EXPECT_EQ(prod.coeff(n - 1), c % 7);
    }
  }
}

}  // namespace
