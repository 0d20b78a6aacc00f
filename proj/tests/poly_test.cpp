#include "pavstat/poly.hpp"

#include <gtest/gtest.h>

#include <random>

#include "pavstat/statpoly.hpp"

namespace pavstat {
namespace {

const BivarPoly q = BivarPoly::q();
const BivarPoly t = BivarPoly::t();

UnivarPoly qpoly(std::vector<long> dense) {
  std::vector<BigInt> c(dense.begin(), dense.end());
  return UnivarPoly(Var::q, c);
}

TEST(BivarPolyTest, RingExamples) {
  EXPECT_EQ((1 + q * t) + q * t, 1 + BivarPoly(2) * q * t);
  EXPECT_EQ((t * t + q * t) * 1, t * t + q * t);
  EXPECT_EQ(maj_poly(2) * maj_poly(1), 1 + q * t);
  EXPECT_TRUE((q - q).is_zero());
  EXPECT_EQ(pow(1 + q, 3), 1 + 3 * q + 3 * q * q + q * q * q);
}

TEST(BivarPolyTest, StoresNoZerosAndRejectsNegativeExponents) {
  BivarPoly p;
  p.add_term(1, 1, 3);
  p.add_term(1, 1, -3);
  EXPECT_TRUE(p.is_zero());
  EXPECT_TRUE(p.terms().empty());
  EXPECT_THROW(p.add_term(-1, 0, 1), std::invalid_argument);
}

TEST(BivarPolyTest, Evaluation) {
  EXPECT_EQ((1 + q * t).eval(1, 1), 2);
  const BivarPoly i3 = inv_poly(3);
  EXPECT_EQ(i3.eval(1, 1), 5);
  EXPECT_EQ(i3.eval(-1, 1), 1);
  EXPECT_EQ(BivarPoly().eval(7, 7), 0);
}

TEST(BivarPolyTest, CoefficientExtraction) {
  const UnivarPoly c = (1 + q * t).coeff_t(1);
  EXPECT_EQ(c, UnivarPoly::monomial(Var::q, 1, 1));
  EXPECT_EQ(c.var(), Var::q);
  EXPECT_TRUE((1 + q * t).coeff_t(5).is_zero());
  EXPECT_EQ((1 + q * t).coeff_of(1, 1), 1);
  EXPECT_EQ((2 * q * q * t + t).coeff_q(2), UnivarPoly::monomial(Var::t, 2, 1));
  EXPECT_EQ(maj_poly(6).coeff_t(2), a_poly(6, 2));
}

TEST(BivarPolyTest, CanonicalRendering) {
  EXPECT_EQ((t * t + q * t).to_string(), "t^2 + q*t");
  EXPECT_EQ(BivarPoly(1).to_string(), "1");
  EXPECT_EQ(BivarPoly().to_string(), "0");
  EXPECT_EQ((1 - 2 * q * q * q * t).to_string(), "1 - 2*q^3*t");
  EXPECT_EQ((-q).to_string(), "-q");
}

TEST(UnivarPolyTest, RenderingAndEval) {
  const UnivarPoly p = signed_inv_poly(2);
  EXPECT_EQ(p.to_string(), "-t + t^2");
  EXPECT_EQ(p.eval(1), 0);
  EXPECT_EQ(p.eval(2), 2);
  EXPECT_THROW(UnivarPoly::monomial(Var::q, 1, 1) + UnivarPoly::monomial(Var::t, 1, 1),
               std::invalid_argument);
  // constants combine with either variable
  EXPECT_EQ((UnivarPoly(Var::q, 3) + UnivarPoly::monomial(Var::t, 1, 1)).var(), Var::t);
}

TEST(ShapeTest, Symmetric) {
  EXPECT_TRUE(is_symmetric(UnivarPoly::monomial(Var::q, 1, 4) +
                           UnivarPoly::monomial(Var::q, 2, 5) +
                           UnivarPoly::monomial(Var::q, 1, 6)));
  EXPECT_FALSE(is_symmetric(qpoly({1, 2})));
  EXPECT_TRUE(is_symmetric(UnivarPoly(Var::q)));
  EXPECT_TRUE(is_symmetric(qpoly({0, 0, 5})));
}

TEST(ShapeTest, UnimodalAndLogConcave) {
  const UnivarPoly binom = qpoly({1, 3, 3, 1});
  EXPECT_TRUE(is_unimodal(binom));
  EXPECT_TRUE(is_log_concave(binom));
  EXPECT_FALSE(is_unimodal(qpoly({2, 1, 2})));
  EXPECT_TRUE(is_unimodal(qpoly({1, 1, 1})));
  // internal zero counts as an entry of the support window
  EXPECT_FALSE(is_unimodal(qpoly({1, 0, 1})));
  EXPECT_FALSE(is_log_concave(qpoly({1, 0, 1})));
  // leading zeros below the support are ignored
  EXPECT_TRUE(is_log_concave(qpoly({0, 0, 0, 1, 2, 1})));
  EXPECT_TRUE(is_unimodal(UnivarPoly(Var::q)));

  const UnivarPoly a62 = a_poly(6, 2);
  EXPECT_EQ(a62, qpoly({0, 0, 0, 0, 9, 14, 23, 14, 9}));
  EXPECT_TRUE(is_unimodal(a62));
  EXPECT_FALSE(is_log_concave(a62));  // 14^2 < 9 * 23
}

// Random dense polynomials with small coefficients.
BivarPoly random_poly(std::mt19937& rng) {
  BivarPoly p;
  const int terms = static_cast<int>(rng() % 5);
  for (int i = 0; i < terms; ++i) {
    p.add_term(static_cast<int>(rng() % 3), static_cast<int>(rng() % 3),
               static_cast<long>(rng() % 7) - 3);
  }
  return p;
}

TEST(BivarPolyProperty, RingAxioms) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const BivarPoly a = random_poly(rng);
    const BivarPoly b = random_poly(rng);
    const BivarPoly c = random_poly(rng);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a + b - b, a);
    ASSERT_EQ((a * b).eval(2, -3), a.eval(2, -3) * b.eval(2, -3));
  }
}

TEST(ShapeProperty, LogConcaveImpliesUnimodalOnPositiveSequences) {
  std::mt19937 rng(11);
  int log_concave_seen = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<BigInt> seq;
    const int len = 1 + static_cast<int>(rng() % 7);
    for (int i = 0; i < len; ++i) seq.emplace_back(static_cast<unsigned long>(1 + rng() % 6));
    if (is_log_concave(seq)) {
      ++log_concave_seen;
      ASSERT_TRUE(is_unimodal(seq));
    }
  }
  EXPECT_GT(log_concave_seen, 100);
}

TEST(RatPolyTest, IntegralityAndUnits) {
  const RatPoly half_t(std::vector<Rational>{0, Rational(1, 2)});
  EXPECT_FALSE(half_t.is_integral());
  EXPECT_THROW(half_t.to_integral(), std::domain_error);
  EXPECT_EQ((half_t * Rational(2)).to_integral(), UnivarPoly::monomial(Var::t, 1, 1));
  EXPECT_EQ(*unit_inverse(RatPoly(4)), RatPoly(Rational(1, 4)));
  EXPECT_FALSE(unit_inverse(RatPoly::t()).has_value());
  EXPECT_FALSE(unit_inverse(RatPoly()).has_value());
  EXPECT_EQ(*unit_inverse(BivarPoly(-1)), BivarPoly(-1));
  EXPECT_FALSE(unit_inverse(BivarPoly(2)).has_value());
  EXPECT_EQ(half_t.to_string(), "1/2*t");
}

}  // namespace
}  // namespace pavstat
