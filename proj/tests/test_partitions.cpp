#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "starclt/errors.hpp"
#include "starclt/partitions.hpp"
#include "starclt/verification.hpp"

using namespace starclt;

namespace {

const SetPartition kFigure = SetPartition::parse("{3,8}{4,7}{1,6}{2,5}");
const SetPartition kFiveThree = SetPartition::parse("{1,6}{2,5}{3}{4,7}");

template <typename T>
std::set<std::string> distinct(const std::vector<T>& items) {
  std::set<std::string> out;
  for (const auto& x : items) out.insert(x.to_string());
  return out;
}

}  // namespace

TEST(SetPartition, CanonicalForm) {
  EXPECT_EQ(kFigure.to_string(), "{1,6}{2,5}{3,8}{4,7}");
  EXPECT_EQ(SetPartition::parse("{4,7}{3}{2,5}{6,1}"), kFiveThree);
  EXPECT_EQ(kFiveThree.block_count(), 4);
  EXPECT_THROW(SetPartition::parse("{1,2}{2,3}"), InputError);
  EXPECT_THROW(SetPartition::parse("{1,3}"), InputError);
  EXPECT_THROW(SetPartition::from_blocks(3, {{1, 2}, {}}), InputError);
}

TEST(SetPartition, Predicates) {
  EXPECT_TRUE(kFigure.is_pairing());
  EXPECT_FALSE(kFigure.is_noncrossing());
  EXPECT_TRUE(SetPartition::parse("{1,4}{2,3}{5,6}").is_noncrossing());
  EXPECT_TRUE(kFiveThree.is_at_most_pair());
  EXPECT_TRUE(kFiveThree.has_singleton());
  EXPECT_FALSE(SetPartition::one_block(3).is_at_most_pair());
}

TEST(Enumeration, PartitionCounts) {
  EXPECT_EQ(enumerate_partitions(1).size(), 1u);
  EXPECT_EQ(enumerate_partitions(3).size(), 5u);
  EXPECT_EQ(enumerate_partitions(8).size(), 4140u);
  for (int k = 1; k <= 10; ++k) {
    long long count = 0;
    for_each_partition(k, [&](const SetPartition&) { ++count; });
    EXPECT_EQ(count, oracle::bell(k)) << "k=" << k;
  }
  const auto seven = enumerate_partitions(7);
  EXPECT_EQ(distinct(seven).size(), seven.size());
  EXPECT_THROW(enumerate_partitions(0), InputError);
  EXPECT_THROW(enumerate_partitions(15), InfeasibleError);
}

TEST(Enumeration, PairingCounts) {
  EXPECT_TRUE(enumerate_pairings(3).empty());
  EXPECT_EQ(enumerate_pairings(4).size(), 3u);
  EXPECT_EQ(enumerate_pairings(8).size(), 105u);
  for (int k = 2; k <= 10; k += 2) {
    const auto all = enumerate_pairings(k);
    EXPECT_EQ(static_cast<long long>(all.size()), oracle::odd_double_factorial(k));
    EXPECT_EQ(distinct(all).size(), all.size());
    for (const auto& p : all) EXPECT_TRUE(p.is_pairing());
  }
}

TEST(Enumeration, AtMostPairCounts) {
  const auto two = enumerate_le2(2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(distinct(two), (std::set<std::string>{"{1,2}", "{1}{2}"}));
  EXPECT_EQ(enumerate_le2(4).size(), 10u);
  for (int k = 1; k <= 10; ++k) {
    const auto all = enumerate_le2(k);
    EXPECT_EQ(static_cast<long long>(all.size()), oracle::involutions(k));
    EXPECT_EQ(distinct(all).size(), all.size());
    for (const auto& p : all) {
      EXPECT_EQ(p.singleton_count() + 2 * p.pair_count(), k);
      EXPECT_EQ(p.singleton_count() % 2, k % 2);
    }
  }
  EXPECT_TRUE(distinct(enumerate_le2(7)).count(kFiveThree.to_string()));
}

TEST(Enumeration, BicolouredCounts) {
  EXPECT_EQ(enumerate_bicoloured(2).size(), 2u);
  EXPECT_EQ(enumerate_bicoloured(4).size(), 12u);
  EXPECT_TRUE(enumerate_bicoloured(5).empty());
  for (int k = 2; k <= 8; k += 2) {
    const auto all = enumerate_bicoloured(k);
    EXPECT_EQ(static_cast<long long>(all.size()),
              oracle::odd_double_factorial(k) * (1LL << (k / 2)));
    EXPECT_EQ(distinct(all).size(), all.size());
  }
}

TEST(Enumeration, RedBreakFibres) {
  for (int k = 2; k <= 8; k += 2) {
    std::map<std::string, long long> fibre;
    for_each_bicoloured(k, [&](const BicolouredPairPartition& rho) {
      ++fibre[red_break(rho).to_string()];
    });
    long long covered = 0;
    for_each_le2(k, [&](const AtMostPairPartition& p) {
      ++covered;
      EXPECT_EQ(fibre[p.to_string()], oracle::odd_double_factorial(p.singleton_count()))
          << p.to_string();
    });
    EXPECT_EQ(static_cast<long long>(fibre.size()), covered);
  }
}

TEST(Bicoloured, TextAndPermutations) {
  const auto rho = BicolouredPairPartition::parse("{2,4}r{1,3}b");
  EXPECT_EQ(rho.to_string(), "{1,3}b{2,4}r");
  EXPECT_EQ(sigma_blue(rho).to_string(), "(1,3)");
  EXPECT_EQ(red_break(rho).to_string(), "{1,3}{2}{4}");
  EXPECT_TRUE(sigma_blue(BicolouredPairPartition::parse("{1,2}r{3,4}r")).is_identity());
  EXPECT_EQ(red_break(BicolouredPairPartition::parse("{1,2}r{3,4}r")).to_string(),
            "{1}{2}{3}{4}");
  const auto blue = BicolouredPairPartition::parse("{1,6}b{2,5}b{3,8}b{4,7}b");
  EXPECT_EQ(sigma_blue(blue), sigma_pi(AtMostPairPartition(kFigure)));
  EXPECT_EQ(red_break(blue).partition(), kFigure);
  EXPECT_THROW(BicolouredPairPartition::parse("{1,2}"), InputError);
  EXPECT_THROW(BicolouredPairPartition::parse("{1,2,3}b"), InputError);
}

TEST(Lattice, MeetExamples) {
  const auto p = SetPartition::parse("{1,3}{2,4,5}");
  EXPECT_EQ(meet(p, p), p);
  EXPECT_EQ(meet(p, SetPartition::discrete(5)), SetPartition::discrete(5));
  EXPECT_EQ(meet(SetPartition::parse("{1,2,3}"), SetPartition::parse("{1,2}{3}")),
            SetPartition::parse("{1,2}{3}"));
  EXPECT_THROW(meet(p, SetPartition::one_block(4)), InputError);
}

TEST(Lattice, MeetLaws) {
  const auto all = enumerate_partitions(5);
  std::mt19937 rng(2);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    const auto& a = all[pick(rng)];
    const auto& b = all[pick(rng)];
    const auto& c = all[pick(rng)];
    const auto ab = meet(a, b);
    EXPECT_EQ(ab, meet(b, a));
    EXPECT_EQ(meet(ab, c), meet(a, meet(b, c)));
    EXPECT_EQ(meet(a, a), a);
    EXPECT_TRUE(ab.refines(a));
    EXPECT_TRUE(ab.refines(b));
    // Greatest lower bound: anything below both is below the meet.
    for (const auto& x : all) {
      if (x.refines(a) && x.refines(b)) EXPECT_TRUE(x.refines(ab));
    }
  }
}

TEST(Lattice, PiS) {
  EXPECT_EQ(pi_S(std::vector<int>{}, 4), SetPartition::one_block(4));
  EXPECT_EQ(pi_S(std::vector<int>{1, 2, 3, 4}, 4), SetPartition::discrete(4));
  EXPECT_EQ(pi_S(std::vector<int>{2}, 4).to_string(), "{1,3,4}{2}");
  EXPECT_THROW(pi_S(std::vector<int>{5}, 4), InputError);
  for (const auto& p : enumerate_partitions(5)) {
    for (std::uint32_t mask = 0; mask < 32; ++mask) {
      std::vector<int> s;
      for (int h = 0; h < 5; ++h)
        if ((mask >> h) & 1u) s.push_back(h + 1);
      EXPECT_EQ(meet_with_pi_S(p, mask), meet(p, pi_S(s, 5)));
      EXPECT_EQ(pi_S_mask(mask, 5), pi_S(s, 5));
    }
  }
}

TEST(Lattice, Kernel) {
  EXPECT_EQ(kernel(std::vector<int>{7, 7, 7}), SetPartition::one_block(3));
  EXPECT_EQ(kernel(std::vector<int>{1, 2, 1, 3}).to_string(), "{1,3}{2}{4}");
  EXPECT_EQ(kernel(std::vector<int>{9, 9}), kernel(std::vector<int>{2, 2}));
}

TEST(BlockOrder, DecreasingMaxima) {
  const auto order = block_order(AtMostPairPartition(kFiveThree));
  ASSERT_EQ(order.length(), 4);
  EXPECT_EQ(order.blocks[0].max, 7);
  EXPECT_EQ(order.blocks[1].max, 6);
  EXPECT_EQ(order.blocks[2].max, 5);
  EXPECT_EQ(order.blocks[3].max, 3);
  EXPECT_EQ(order.labels(), (std::vector<int>{2, 3, 4, 1, 3, 2, 1}));
  EXPECT_EQ(order.maxima_with_sentinel(), (std::vector<int>{3, 5, 6, 7, 8}));
  for (const auto& p : enumerate_le2(7)) {
    const auto o = block_order(p);
    EXPECT_EQ(o.blocks.front().max, 7);
    for (int i = 1; i < o.length(); ++i) EXPECT_GT(o.blocks[i - 1].max, o.blocks[i].max);
    EXPECT_EQ(static_cast<int>(o.maxima_with_sentinel().size()), o.length() + 1);
  }
}

TEST(TauSigma, WorkedExamples) {
  const AtMostPairPartition figure(kFigure);
  const AtMostPairPartition five_three(kFiveThree);
  EXPECT_EQ(tau_pi(figure).to_string(), "(1,5,3)");
  EXPECT_EQ(tau_pi(five_three).to_string(), "(1,5,4,2)");
  EXPECT_EQ(sigma_pi(figure), Permutation::parse("(3,8)(4,7)(1,6)(2,5)"));
  EXPECT_EQ(sigma_pi(five_three).to_string(), "(1,6)(2,5)(4,7)");
  EXPECT_TRUE(sigma_pi(AtMostPairPartition(SetPartition::discrete(5))).is_identity());
}

TEST(TauSigma, FigureOrbitsMeetB) {
  const AtMostPairPartition figure(kFigure);
  const auto b = block_order(figure).maxima_with_sentinel();
  EXPECT_EQ(b, (std::vector<int>{5, 6, 7, 8, 9}));
  std::vector<int> hits;
  for (const auto& orbit : orbits(forward_cycle(9) * sigma_pi(figure), 9).orbits) {
    int h = 0;
    for (int m : orbit) h += std::binary_search(b.begin(), b.end(), m);
    hits.push_back(h);
  }
  std::sort(hits.begin(), hits.end());
  EXPECT_EQ(hits, (std::vector<int>{1, 1, 3}));
}

TEST(TauSigma, StructuralProperties) {
  for (int k = 1; k <= 8; ++k) {
    for_each_le2(k, [&](const AtMostPairPartition& p) {
      const auto tau = tau_pi(p);
      EXPECT_LE(tau.support_bound(), block_order(p).length() + 1);
      EXPECT_TRUE((sigma_pi(p) * sigma_pi(p)).is_identity());
    });
  }
}

TEST(TauSigma, NonCrossingPairingsGiveIdentity) {
  for (int k = 2; k <= 10; k += 2) {
    for_each_pairing(k, [&](const SetPartition& rho) {
      if (rho.is_noncrossing()) EXPECT_TRUE(tau_pi(AtMostPairPartition(rho)).is_identity());
    });
  }
}

TEST(OrbitCorrespondence, ExhaustiveUpToEight) {
  const auto r = verify_orbit_correspondence(8);
  EXPECT_TRUE(r.passed) << r.detail;
  long long expected = 0;
  for (int k = 1; k <= 8; ++k) expected += oracle::involutions(k);
  EXPECT_EQ(r.cases, expected);
}

TEST(OrbitCorrespondence, NonCrossingUpToTen) {
  const auto r = verify_noncrossing_identity(10);
  EXPECT_TRUE(r.passed) << r.detail;
  EXPECT_EQ(r.cases, 1 + 2 + 5 + 14 + 42);  // Catalan numbers
}

TEST(OrbitCorrespondence, CorruptedTauIsCaught) {
  // Dropping the last letter of the star word changes the cycle type.
  const TauBuilder truncated = [](const AtMostPairPartition& p) {
    auto r = block_order(p).labels();
    r.pop_back();
    return star_word(r);
  };
  EXPECT_FALSE(verify_orbit_correspondence(4, truncated).passed);
  const TauBuilder shifted = [](const AtMostPairPartition& p) {
    return tau_pi(p) * star_transposition(1);
  };
  EXPECT_FALSE(verify_orbit_correspondence(4, shifted).passed);
  EXPECT_FALSE(verify_noncrossing_identity(4, shifted).passed);
}

TEST(OrbitCorrespondence, BlockRelabellingIsInvisible) {
  // The cycle type of a star word depends only on its kernel, so listing the
  // blocks in reverse order yields a conjugate of tau and the suite still passes.
  const TauBuilder reversed = [](const AtMostPairPartition& p) {
    auto r = block_order(p).labels();
    const int ell = block_order(p).length();
    for (int& x : r) x = ell + 1 - x;
    return star_word(r);
  };
  EXPECT_TRUE(verify_orbit_correspondence(6, reversed).passed);
  bool some_differ = false;
  for_each_le2(5, [&](const AtMostPairPartition& p) { some_differ |= reversed(p) != tau_pi(p); });
  EXPECT_TRUE(some_differ);
}

TEST(DoubleFactorial, Conventions) {
  EXPECT_EQ(double_factorial_of_predecessor(0), 1);  // (-1)!!
  EXPECT_EQ(double_factorial_of_predecessor(2), 1);  // 1!!
  EXPECT_EQ(double_factorial_of_predecessor(4), 3);
  EXPECT_EQ(double_factorial_of_predecessor(8), 105);
}
