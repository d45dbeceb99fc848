#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <thread>

#include "oracles.hpp"
#include "starclt/algebra.hpp"
#include "starclt/errors.hpp"

using namespace starclt;

namespace {

const std::vector<std::string> kWeights{"1/2,1/2", "2/3,1/3", "1/2,1/3,1/6", "1/3,1/3,1/3",
                                        "2/5,7/20,1/4"};

}  // namespace

TEST(ExactScalar, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("2/4")), "1/2");
  EXPECT_EQ(to_string(parse_rational(" -3 ")), "-3");
  EXPECT_THROW(parse_rational("6/-4"), InputError);
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("x"), InputError);
  EXPECT_THROW(parse_rational(""), InputError);
}

TEST(ExactScalar, JsonRoundTrip) {
  const auto x = parse_rational("-22/7");
  const auto j = to_json(x);
  EXPECT_EQ(j.at("num"), "-22");
  EXPECT_EQ(j.at("den"), "7");
  EXPECT_EQ(rational_from_json(j), x);
}

TEST(WeightVector, ValidatesAndSorts) {
  const auto w = WeightVector::parse("1/6,1/2,1/3");
  EXPECT_EQ(w.to_string(), "1/2,1/3,1/6");
  EXPECT_EQ(w[1], ExactScalar(1, 2));
  EXPECT_THROW(WeightVector::parse("1/2,1/4"), InputError);
  EXPECT_THROW(WeightVector::parse("1"), InputError);
  EXPECT_THROW(WeightVector::parse("3/2,-1/2"), InputError);
  EXPECT_THROW(WeightVector::parse("1,0"), InputError);
  EXPECT_TRUE(WeightVector::uniform(4).is_uniform());
  EXPECT_FALSE(WeightVector::parse("2/3,1/3").is_uniform());
}

TEST(WeightVector, PowerSums) {
  for (const auto& text : kWeights) EXPECT_EQ(power_sum(WeightVector::parse(text), 1), 1);
  EXPECT_EQ(power_sum(WeightVector::parse("1/2,1/2"), 3), ExactScalar(1, 4));
  EXPECT_EQ(power_sum(WeightVector::parse("2/3,1/3"), 2), ExactScalar(5, 9));
  EXPECT_THROW(power_sum(WeightVector::parse("2/3,1/3"), 0), InputError);
  EXPECT_EQ(power_sum_or_dimension(WeightVector::parse("1/2,1/3,1/6"), 0), 3);
}

TEST(WeightVector, PowerSumsDecrease) {
  for (const auto& text : kWeights) {
    const auto w = WeightVector::parse(text);
    for (int n = 1; n < 16; ++n) {
      EXPECT_GT(w.power_sum(n), w.power_sum(n + 1));
      EXPECT_EQ(w.power_sum(n), oracle::p(w, n));
    }
    EXPECT_GT(w.power_sum(16), 0);
  }
}

TEST(WeightVector, CacheDoesNotAffectEquality) {
  const auto a = WeightVector::parse("1/2,1/3,1/6");
  const auto b = WeightVector::parse("1/3,1/6,1/2");
  a.power_sum(7);
  EXPECT_EQ(a, b);
  const auto copy = a;
  EXPECT_EQ(copy.power_sum(7), b.power_sum(7));
}

TEST(WeightVector, ConcurrentFills) {
  const auto w = WeightVector::parse("2/5,7/20,1/4");
  std::vector<std::thread> threads;
  std::vector<std::vector<ExactScalar>> seen(4);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (int n = 1; n <= 30; ++n) seen[t].push_back(w.power_sum(n));
    });
  }
  for (auto& th : threads) th.join();
  for (int t = 1; t < 4; ++t) EXPECT_EQ(seen[t], seen[0]);
  EXPECT_EQ(seen[0][29], oracle::p(w, 30));
}

TEST(Character, Examples) {
  const auto w = WeightVector::parse("1/2,1/3,1/6");
  EXPECT_EQ(character(w, Permutation::parse("(1,3,2)(5,6)")), w.power_sum(2) * w.power_sum(3));
  EXPECT_EQ(character(w, Permutation()), 1);
  EXPECT_EQ(character(WeightVector::parse("1/2,1/2"), Permutation::parse("(1,2,3)")),
            ExactScalar(1, 4));
}

TEST(Character, ClassFunctionAndRange) {
  std::mt19937 rng(9);
  for (const auto& text : kWeights) {
    const auto w = WeightVector::parse(text);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> a(8), b(8);
      std::iota(a.begin(), a.end(), 1);
      std::iota(b.begin(), b.end(), 1);
      std::shuffle(a.begin(), a.end(), rng);
      std::shuffle(b.begin(), b.end(), rng);
      const Permutation p(a), q(b);
      EXPECT_EQ(character(w, p * q), character(w, q * p));
      const auto c = character(w, p);
      EXPECT_GT(c, 0);
      EXPECT_LE(c, 1);
      EXPECT_EQ(c == 1, p.is_identity());
    }
  }
}
