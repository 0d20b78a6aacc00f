#include "pavstat/cfrac.hpp"

#include <gtest/gtest.h>

#include "pavstat/closed_forms.hpp"
#include "pavstat/statpoly.hpp"

namespace pavstat {
namespace {

const BivarPoly q = BivarPoly::q();
const BivarPoly t = BivarPoly::t();

TEST(ZPolynomialTest, Arithmetic) {
  const ZPolynomial z = ZPolynomial::term(BivarPoly(1), 1);
  EXPECT_EQ((ZPolynomial(1) + z) * (ZPolynomial(1) - z),
            ZPolynomial(1) - ZPolynomial::term(BivarPoly(1), 2));
  EXPECT_EQ(ZPolynomial::term(q * t, 2).z_valuation(), 2);
  EXPECT_EQ(ZPolynomial::term(q, 1).substituted(-1, 1), ZPolynomial::term(BivarPoly(-1), 1));
  EXPECT_EQ(ZPolynomial::term(t, 1).to_string(), "(t)*z");
}

TEST(ExpandTest, CatalanContinuedFraction) {
  const QTSeries c = expand(catalan_cf(default_depth(9)), 9);
  for (int n = 0; n <= 9; ++n) EXPECT_EQ(c[n], BivarPoly(catalan(n))) << n;
  // C(z) = 1 + z C(z)^2
  const QTSeries rhs = QTSeries::constant(1, 9) + (c * c).shifted(1).truncated(9);
  EXPECT_EQ(c, rhs);
}

TEST(ExpandTest, DepthOne) {
  const QTSeries s = expand(catalan_cf(1), 4);
  EXPECT_EQ(s, QTSeries::constant(1, 4));
}

TEST(ExpandTest, InsufficientDepthIsDetected) {
  EXPECT_THROW(expand(catalan_cf(4), 6), InsufficientDepth);
  EXPECT_NO_THROW(expand(catalan_cf(8), 6));
}

TEST(ExpandTest, NonUnitDenominator) {
  CFSpec cf;
  cf.levels.push_back({Sign::plus, ZPolynomial(1), ZPolynomial(2)});
  EXPECT_THROW(expand(cf, 3), std::domain_error);
}

TEST(StiTest, Numerators) {
  const CFSpec cf = sti_cf(6);
  ASSERT_EQ(cf.depth(), 6);
  EXPECT_EQ(cf.levels[0].numerator, ZPolynomial(1));
  const std::vector<BivarPoly> expected{t, q, t * q, q * q, t * q * q};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(cf.levels[i + 1].numerator, ZPolynomial::term(expected[i], 1)) << i;
    EXPECT_EQ(cf.levels[i + 1].sign, Sign::minus);
    EXPECT_EQ(cf.levels[i + 1].denominator, ZPolynomial(1));
  }
}

TEST(StiTest, SignPatternAtMinusOneOne) {
  // After substitution and normalization the numerators read -z, +z, +z, -z, -z, +z, +z, ...
  const CFSpec cf = sti_cf(9).substituted(-1, 1).normalized();
  const std::vector<long> signs{-1, 1, 1, -1, -1, 1, 1, -1};
  for (std::size_t i = 0; i < signs.size(); ++i) {
    EXPECT_EQ(cf.levels[i + 1].numerator, ZPolynomial::term(BivarPoly(signs[i]), 1)) << i;
  }
}

TEST(StiTest, AtOneOneIsCatalan) {
  EXPECT_EQ(sti_cf(10).substituted(1, 1), catalan_cf(10));
}

TEST(StiTest, ExpansionMatchesInversionPolynomials) {
  const QTSeries s = expand(sti_cf(default_depth(8)), 8);
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(s[n], inv_poly(n)) << n;
}

TEST(StiTest, DepthStability) {
  for (int d = 4; d <= 12; ++d) {
    const QTSeries a = evaluate(sti_cf(d), d);
    const QTSeries b = evaluate(sti_cf(d + 1), d);
    EXPECT_TRUE(a.agrees_with(b, d - 2)) << d;
  }
}

TEST(ContractionTest, OddPartAtMinusOneOne) {
  const CFSpec odd = odd_part(sti_cf(30).substituted(-1, 1));
  // Simplifies to 1 + z/(1 - z^2/(1 - z^2/(1 - ...))).
  EXPECT_EQ(odd.lead, ZPolynomial(1));
  EXPECT_EQ(odd.levels[0].sign, Sign::minus);
  EXPECT_EQ(odd.levels[0].numerator, ZPolynomial::term(BivarPoly(-1), 1));
  for (std::size_t i = 0; i < odd.levels.size(); ++i) {
    EXPECT_EQ(odd.levels[i].denominator, ZPolynomial(1)) << i;
    if (i > 0) {
      EXPECT_EQ(odd.levels[i].numerator, ZPolynomial::term(BivarPoly(1), 2)) << i;
    }
  }
  const QTSeries s = expand(odd, 9);
  const std::vector<long> expected{1, 1, 0, 1, 0, 2, 0, 5, 0, 14};
  for (int n = 0; n <= 9; ++n) EXPECT_EQ(s[n], BivarPoly(expected[static_cast<std::size_t>(n)]));
}

TEST(ContractionTest, Preconditions) {
  CFSpec with_lead = catalan_cf(5);
  with_lead.lead = ZPolynomial(1);
  EXPECT_THROW(even_part(with_lead), std::invalid_argument);
  CFSpec odd_denominator = catalan_cf(5);
  odd_denominator.levels[2].denominator = ZPolynomial(2);
  EXPECT_THROW(odd_part(odd_denominator), std::invalid_argument);
  EXPECT_THROW(even_part(catalan_cf(1)), InsufficientDepth);
  EXPECT_THROW(odd_part(catalan_cf(2)), InsufficientDepth);
}

TEST(ContractionProperty, EvenAndOddPartsMatchDirectExpansion) {
  constexpr int kOrder = 10;
  for (int trial = 0; trial < 20; ++trial) {
    const CFSpec cf = random_monomial_cf(1729 + static_cast<std::uint64_t>(trial), 30);
    const QTSeries direct = expand(cf, kOrder);
    ASSERT_EQ(expand(even_part(cf), kOrder), direct) << "trial " << trial;
    ASSERT_EQ(expand(odd_part(cf), kOrder), direct) << "trial " << trial;
  }
}

TEST(RandomCfTest, DeterministicAndWellFormed) {
  EXPECT_EQ(random_monomial_cf(5, 8), random_monomial_cf(5, 8));
  const CFSpec cf = random_monomial_cf(5, 8);
  for (int i = 1; i < cf.depth(); ++i) {
    EXPECT_GE(cf.levels[static_cast<std::size_t>(i)].numerator.z_valuation(), 1);
  }
}

TEST(NormalizeTest, PreservesValue) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const CFSpec cf = random_monomial_cf(seed, 14);
    EXPECT_EQ(evaluate(cf, 8), evaluate(cf.normalized(), 8));
  }
}

}  // namespace
}  // namespace pavstat
