#include "pavstat/series.hpp"

#include <gtest/gtest.h>

#include <random>

namespace pavstat {
namespace {

ZSeries series(std::vector<long> dense, int order) {
  std::vector<RatPoly> c;
  for (long x : dense) c.emplace_back(x);
  return ZSeries(std::move(c), order);
}

TEST(SeriesTest, RingOperations) {
  const ZSeries a = series({1, 1}, 4);
  const ZSeries b = series({1, -1}, 4);
  EXPECT_EQ(a * b, series({1, 0, -1}, 4));
  EXPECT_EQ((a + b).order(), 4);
  EXPECT_EQ((a * series({1}, 2)).order(), 2);
}

TEST(SeriesTest, GeometricReciprocal) {
  const ZSeries inv = reciprocal(series({1, -1}, 6));
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(inv[n], RatPoly(1));
  EXPECT_THROW(reciprocal(series({0, 1}, 3)), std::domain_error);

  std::vector<RatPoly> c{RatPoly::t(), RatPoly(1)};
  EXPECT_THROW(reciprocal(ZSeries(c, 3)), std::domain_error);  // t is not a unit
  const ZSeries half = reciprocal(series({2}, 2));
  EXPECT_EQ(half[0], RatPoly(Rational(1, 2)));
}

TEST(SeriesTest, SqrtExamples) {
  EXPECT_EQ(sqrt(series({1}, 5)), series({1}, 5));
  EXPECT_EQ(sqrt(series({1, -2, 1}, 6)), series({1, -1}, 6));
  EXPECT_THROW(sqrt(series({4}, 3)), std::domain_error);
  // sqrt(1 - 4z) = 1 - 2z - 2z^2 - 4z^3 - 10z^4
  EXPECT_EQ(sqrt(series({1, -4}, 4)), series({1, -2, -2, -4, -10}, 4));
}

TEST(SeriesTest, DerivativeNegateAndParts) {
  const ZSeries s = series({5, 1, 2, 3, 4}, 4);
  EXPECT_EQ(derivative(s), series({1, 4, 9, 16}, 3));
  EXPECT_EQ(negate_z(s), series({5, -1, 2, -3, 4}, 4));
  EXPECT_EQ(odd_part(series({0, 1, 0, 1}, 3)), series({1, 1}, 1));
  EXPECT_EQ(even_part(s), series({5, 2, 4}, 2));
  EXPECT_EQ(odd_part(s), series({1, 3}, 1));
}

TEST(SeriesTest, PartsReassemble) {
  const ZSeries s = series({3, 1, 4, 1, 5, 9, 2, 6, 5}, 8);
  const ZSeries rebuilt = substitute_z_squared(even_part(s)) +
                          substitute_z_squared(odd_part(s)).truncated(7).shifted(1);
  EXPECT_TRUE(rebuilt.agrees_with(s, 8));
}

TEST(SeriesTest, ShiftAndDivideByZ) {
  const ZSeries s = series({1, 2}, 3);
  EXPECT_EQ(s.shifted(2), series({0, 0, 1, 2}, 5));
  EXPECT_EQ(s.shifted(1).divided_by_z(), s);
  EXPECT_THROW(s.divided_by_z(), std::domain_error);
}

TEST(SeriesTest, IntegralityAssertion) {
  std::vector<RatPoly> c{RatPoly(1), RatPoly(Rational(1, 3))};
  EXPECT_THROW(integral_coefficients(ZSeries(c, 1)), std::domain_error);
  const auto ok = integral_coefficients(series({1, -2}, 1));
  EXPECT_EQ(ok[1], UnivarPoly(Var::t, BigInt(-2)));
}

RatPoly random_ratpoly(std::mt19937& rng, int max_degree) {
  std::vector<Rational> c;
  const int deg = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
  for (int i = 0; i <= deg; ++i) {
    c.emplace_back(static_cast<long>(rng() % 9) - 4, static_cast<unsigned long>(1 + rng() % 3));
  }
  return RatPoly(std::move(c));
}

ZSeries random_series(std::mt19937& rng, int order, bool unit_constant) {
  ZSeries s(order);
  for (int n = 0; n <= order; ++n) s[n] = random_ratpoly(rng, 3);
  if (unit_constant) s[0] = RatPoly(1);
  return s;
}

TEST(SeriesProperty, SqrtSquares) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const ZSeries a = random_series(rng, 8, true);
    const ZSeries s = sqrt(a);
    ASSERT_EQ(s * s, a);
  }
}

TEST(SeriesProperty, LeibnizRule) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const ZSeries a = random_series(rng, 8, false);
    const ZSeries b = random_series(rng, 8, false);
    ASSERT_EQ(derivative(a * b), derivative(a) * b.truncated(7) + a.truncated(7) * derivative(b));
  }
}

TEST(SeriesProperty, DivisionRoundTrips) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 25; ++trial) {
    const ZSeries a = random_series(rng, 8, false);
    ZSeries b = random_series(rng, 8, false);
    b[0] = RatPoly(Rational(static_cast<long>(1 + rng() % 5), 2));
    ASSERT_EQ((a / b) * b, a);
  }
}

TEST(SeriesTest, BivariateCoefficientDivision) {
  // 1 / (1 - qz) = sum q^n z^n
  std::vector<BivarPoly> c{BivarPoly(1), -BivarPoly::q()};
  const QTSeries inv = reciprocal(QTSeries(c, 5));
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(inv[n], pow(BivarPoly::q(), n));
  std::vector<BivarPoly> bad{BivarPoly(2)};
  EXPECT_THROW(reciprocal(QTSeries(bad, 2)), std::domain_error);
}

}  // namespace
}  // namespace pavstat
