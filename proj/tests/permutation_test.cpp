#include "pavstat/permutation.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "pavstat/closed_forms.hpp"

namespace pavstat {
namespace {

const Permutation k321{3, 2, 1};

TEST(PermutationTest, RejectsNonBijections) {
  EXPECT_THROW(Permutation({1, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({1, 3}), std::invalid_argument);
  EXPECT_NO_THROW(Permutation(std::vector<int>{}));
}

TEST(PermutationTest, ParseAndPrint) {
  EXPECT_EQ(Permutation::parse("216534"), (Permutation{2, 1, 6, 5, 3, 4}));
  EXPECT_EQ(Permutation::parse("2,1,3"), (Permutation{2, 1, 3}));
  EXPECT_EQ(Permutation::parse("").size(), 0);
  EXPECT_EQ(Permutation::parse("10 1 2 3 4 5 6 7 8 9").to_string(), "10,1,2,3,4,5,6,7,8,9");
  EXPECT_THROW(Permutation::parse("2a1"), std::invalid_argument);
}

TEST(ContainsPatternTest, Examples) {
  EXPECT_TRUE(contains_pattern(k321, k321));
  EXPECT_TRUE(contains_pattern(Permutation::parse("216534"), k321));  // 6,5,3
  EXPECT_FALSE(contains_pattern(Permutation::parse("1234"), Permutation{2, 1}));
  EXPECT_TRUE(contains_pattern(Permutation::parse("1234"), Permutation::identity(0)));
  EXPECT_FALSE(contains_pattern(Permutation{1, 2}, Permutation{1, 2, 3}));
  EXPECT_TRUE(contains_pattern(Permutation::parse("31524"), Permutation::parse("2413")));
  EXPECT_FALSE(contains_pattern(Permutation::parse("2413"), Permutation::parse("3142")));
}

// Independent oracle: enumerate all 321-free triples directly.
bool has_decreasing_triple(std::span<const int> w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      for (std::size_t k = j + 1; k < w.size(); ++k)
        if (w[i] > w[j] && w[j] > w[k]) return true;
  return false;
}

TEST(ContainsPatternTest, AgreesWithTripleScanOnAllOfS6) {
  for (const auto& sigma : all_permutations(6)) {
    EXPECT_EQ(contains_pattern(sigma, k321), has_decreasing_triple(sigma.word()))
        << sigma.to_string();
  }
}

TEST(EnumerateAvoidersTest, SmallCases) {
  const auto empty = avoiders_321(0);
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_TRUE(empty[0].empty());

  const std::vector<Permutation> expected{
      Permutation::parse("123"), Permutation::parse("132"), Permutation::parse("213"),
      Permutation::parse("231"), Permutation::parse("312")};
  EXPECT_EQ(avoiders_321(3), expected);
}

TEST(EnumerateAvoidersTest, MatchesFilteredSymmetricGroupInLexOrder) {
  for (int n = 0; n <= 8; ++n) {
    std::vector<Permutation> filtered;
    for (const auto& sigma : all_permutations(n)) {
      if (avoids(sigma, k321)) filtered.push_back(sigma);
    }
    EXPECT_EQ(avoiders_321(n), filtered) << "n=" << n;
  }
}

TEST(EnumerateAvoidersTest, CountsAreCatalan) {
  for (int n = 0; n <= 12; ++n) {
    EXPECT_EQ(BigInt(static_cast<unsigned long>(count_avoiders_321(n))), catalan(n)) << n;
  }
  EXPECT_EQ(count_avoiders_321(10), 16796u);
}

TEST(EnumerateAvoidersTest, IncrementalStatsMatchDefinitions) {
  for (int n = 0; n <= 8; ++n) {
    for_each_avoider(n, [&](std::span<const int> w, const WordStats& s) {
      const Permutation sigma(std::vector<int>(w.begin(), w.end()));
      ASSERT_EQ(s.des, des(sigma)) << sigma.to_string();
      ASSERT_EQ(s.maj, maj(sigma)) << sigma.to_string();
      ASSERT_EQ(s.inv, inv(sigma)) << sigma.to_string();
      ASSERT_EQ(s.lrm, lrm(sigma)) << sigma.to_string();
    });
  }
}

TEST(EnumerateAvoidersTest, RejectsOutOfRange) {
  EXPECT_THROW(count_avoiders_321(-1), std::out_of_range);
  EXPECT_THROW(count_avoiders_321(kMaxEnumerationLength + 1), std::out_of_range);
}

TEST(StatisticsTest, Identity) {
  for (int n = 0; n <= 6; ++n) {
    const auto id = Permutation::identity(n);
    EXPECT_EQ(des(id), 0);
    EXPECT_EQ(maj(id), 0);
    EXPECT_EQ(inv(id), 0);
    EXPECT_EQ(lrm(id), n);
  }
}

TEST(StatisticsTest, InflationExampleWord) {
  const auto sigma = Permutation::parse("216534");
  EXPECT_EQ(descent_set(sigma), (std::vector<int>{1, 3, 4}));
  EXPECT_EQ(des(sigma), 3);
  EXPECT_EQ(maj(sigma), 8);
  EXPECT_EQ(inv(sigma), 6);
  EXPECT_EQ(lrm(sigma), 2);
}

TEST(StatisticsTest, NoConsecutiveDescentsAndMajBounds) {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& sigma : avoiders_321(n)) {
      const auto d = descent_set(sigma);
      for (std::size_t i = 1; i < d.size(); ++i) ASSERT_GT(d[i], d[i - 1] + 1);
      const int k = des(sigma);
      ASSERT_GE(maj(sigma), k * k);
      ASSERT_LE(maj(sigma), n * k - k * k);
    }
  }
}

TEST(Rotate180Test, Examples) {
  EXPECT_EQ(rotate180(Permutation::identity(5)), Permutation::identity(5));
  EXPECT_EQ(rotate180(Permutation::parse("132")), Permutation::parse("213"));
  EXPECT_EQ(descent_set(Permutation::parse("213")), (std::vector<int>{1}));
}

TEST(Rotate180Test, InvolutionReflectingDescentsOnAvoiders) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& sigma : avoiders_321(n)) {
      const auto r = rotate180(sigma);
      ASSERT_EQ(rotate180(r), sigma);
      ASSERT_TRUE(avoids(r, k321));
      std::vector<int> reflected;
      for (int d : descent_set(sigma)) reflected.push_back(n - d);
      std::sort(reflected.begin(), reflected.end());
      ASSERT_EQ(descent_set(r), reflected);
      const int k = des(sigma);
      ASSERT_EQ(maj(r), n * k - maj(sigma));
    }
  }
}

TEST(InflateTest, Examples) {
  const std::vector<Permutation> parts{Permutation::parse("21"), Permutation::parse("1"),
                                       Permutation::parse("312")};
  EXPECT_EQ(inflate(Permutation::parse("132"), parts), Permutation::parse("216534"));

  const auto sigma = Permutation::parse("2413");
  EXPECT_EQ(inflate(Permutation{1}, std::vector<Permutation>{sigma}), sigma);

  const auto tau = Permutation::parse("12");
  const std::vector<Permutation> framed{tau, Permutation{1}, rotate180(tau)};
  const auto out = inflate(Permutation::parse("123"), framed);
  EXPECT_EQ(out, Permutation::parse("12345"));
  EXPECT_EQ(out(3), 3);
}

TEST(InflateTest, Errors) {
  const std::vector<Permutation> one{Permutation{1}};
  EXPECT_THROW(inflate(Permutation{1, 2}, one), std::invalid_argument);
  const std::vector<Permutation> with_empty{Permutation{1}, Permutation()};
  EXPECT_THROW(inflate(Permutation{1, 2}, with_empty), std::invalid_argument);
}

TEST(InflateTest, SizeAndPatternProperty) {
  // The inflation contains pi as a pattern and every part as a block.
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 4);
    std::vector<int> w(static_cast<std::size_t>(m));
    std::iota(w.begin(), w.end(), 1);
    std::shuffle(w.begin(), w.end(), rng);
    const Permutation pi(w);
    std::vector<Permutation> parts;
    int total = 0;
    for (int i = 0; i < m; ++i) {
      const int len = 1 + static_cast<int>(rng() % 3);
      std::vector<int> p(static_cast<std::size_t>(len));
      std::iota(p.begin(), p.end(), 1);
      std::shuffle(p.begin(), p.end(), rng);
      parts.emplace_back(p);
      total += len;
    }
    const auto out = inflate(pi, parts);
    ASSERT_EQ(out.size(), total);
    ASSERT_TRUE(contains_pattern(out, pi));
    for (const auto& part : parts) ASSERT_TRUE(contains_pattern(out, part));
  }
}

}  // namespace
}  // namespace pavstat
