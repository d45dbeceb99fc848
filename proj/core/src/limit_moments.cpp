#include "starclt/limit_moments.hpp"

#include <bit>

#include "star_tally.hpp"

namespace starclt {

using detail::CharacterTally;
using detail::ExponentBuilder;
using detail::star_word_key;

namespace {

void check_moment_order(int k) {
  if (k < 0) throw InputError("moment order must be >= 0");
  if (k > kMaxMomentOrder) {
    throw InfeasibleError("moment order " + std::to_string(k) + " exceeds the cap " +
                          std::to_string(kMaxMomentOrder));
  }
}

void check_partition_size(int k) {
  if (k > kMaxEnumerationOrder) {
    throw InfeasibleError("partition of size " + std::to_string(k) +
                          " exceeds the enumeration cap");
  }
}

// Adds scale * sum_S (-1)^{|S|} [cycle type of the star word for p meet pi_S].
// Positions in S get the fresh indices blocks+1+h, which realise the meet.
void add_incl_excl_terms(CharacterTally& tally, const SetPartition& p, long long scale) {
  const int k = p.size();
  const int blocks = p.block_count();
  std::array<int, 32> idx{};
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    for (int h = 0; h < k; ++h) {
      idx[h] = (mask >> h) & 1u ? blocks + 1 + h : p.labels()[h] + 1;
    }
    const long long sign = std::popcount(mask) % 2 ? -1 : 1;
    tally.add(star_word_key(idx.data(), k), sign * scale);
  }
}

detail::ExponentKey tau_key(const AtMostPairPartition& p) {
  const auto r = block_order(p).labels();
  return star_word_key(r.data(), static_cast<int>(r.size()));
}

}  // namespace

ExactScalar u_function(const WeightVector& w, const SetPartition& p) {
  std::vector<int> idx(p.labels());
  for (int& i : idx) ++i;
  return character_from_orbit_sizes(w, star_word_cycle_type(idx));
}

ExactScalar u_function(const WeightVector& w, const AtMostPairPartition& p) {
  return character(w, tau_pi(p));
}

ExactScalar t_incl_excl(const WeightVector& w, const SetPartition& p) {
  check_partition_size(p.size());
  CharacterTally tally;
  add_incl_excl_terms(tally, p, 1);
  return tally.evaluate(w);
}

ExactScalar t_pairing(const WeightVector& w, const SetPartition& rho) {
  if (!rho.is_pairing()) throw InputError("t_pairing needs a pair partition");
  check_partition_size(rho.size());
  const auto pairs = rho.blocks();
  const int half = static_cast<int>(pairs.size());
  CharacterTally tally;
  for (std::uint32_t broken = 0; broken < (1u << half); ++broken) {
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < half; ++i) {
      if ((broken >> i) & 1u) {
        blocks.push_back({pairs[i][0]});
        blocks.push_back({pairs[i][1]});
      } else {
        blocks.push_back(pairs[i]);
      }
    }
    const AtMostPairPartition pi(SetPartition::from_blocks(rho.size(), blocks));
    tally.add(tau_key(pi), std::popcount(broken) % 2 ? -1 : 1);
  }
  return tally.evaluate(w);
}

ExactScalar moment_routeA(const WeightVector& w, int k) {
  check_moment_order(k);
  if (k == 0) return 1;
  if (k % 2) return 0;
  CharacterTally tally;
  for_each_pairing(k, [&](const SetPartition& rho) { add_incl_excl_terms(tally, rho, 1); });
  return tally.evaluate(w);
}

ExactScalar moment_routeB(const WeightVector& w, int k) {
  check_moment_order(k);
  if (k == 0) return 1;
  if (k % 2) return 0;
  CharacterTally tally;
  for_each_le2(k, [&](const AtMostPairPartition& p) {
    const int s = p.singleton_count();
    const long long sign = (s / 2) % 2 ? -1 : 1;
    tally.add(tau_key(p), sign * double_factorial_of_predecessor(s));
  });
  return tally.evaluate(w);
}

ExactScalar moment_routeC(const WeightVector& w, int k) {
  check_moment_order(k);
  if (k == 0) return 1;
  if (k % 2) return 0;
  CharacterTally tally;
  for_each_bicoloured(k, [&](const BicolouredPairPartition& rho) {
    // weight[m] counts how many w-factors sit at position m:
    // position 1 always, the larger end of a blue pair, both ends of a red pair.
    std::array<int, 32> sigma{};
    std::array<int, 32> weight{};
    for (int m = 1; m <= k; ++m) sigma[m] = m;
    weight[1] = 1;
    for (const auto& pr : rho.pairs()) {
      if (pr.colour == Colour::kBlue) {
        sigma[pr.first] = pr.second;
        sigma[pr.second] = pr.first;
        ++weight[pr.second];
      } else {
        ++weight[pr.first];
        ++weight[pr.second];
      }
    }
    std::array<bool, 32> seen{};
    ExponentBuilder builder;
    for (int start = 1; start <= k; ++start) {
      if (seen[start]) continue;
      int exponent = 0;
      for (int m = start; !seen[m]; m = sigma[m] % k + 1) {
        seen[m] = true;
        exponent += weight[m];
      }
      builder.push(exponent);
    }
    tally.add(builder.finish(), rho.red_count() % 2 ? -1 : 1);
  });
  return tally.evaluate(w);
}

ExactScalar chi_tau_via_sigma(const WeightVector& w, const AtMostPairPartition& p,
                              SigmaVariant variant) {
  const int k = p.size();
  const auto order = block_order(p);
  const int n = variant == SigmaVariant::kPlusOne ? k + 1 : k;

  std::vector<int> weight(n + 1, 0);
  if (variant == SigmaVariant::kPlusOne) {
    for (int b : order.maxima_with_sentinel()) ++weight[b];
  } else {
    weight[1] = 1;
    for (const auto& block : order.blocks) ++weight[block.max];
  }

  const Permutation sigma = sigma_pi(p);
  std::vector<bool> seen(n + 1, false);
  ExactScalar value = 1;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    int exponent = 0;
    for (int m = start; !seen[m]; m = sigma(m) % n + 1) {
      seen[m] = true;
      exponent += weight[m];
    }
    value *= power_sum_or_dimension(w, exponent);
  }
  return value;
}

bool moment_bound_check(const WeightVector& w, int k) {
  if (k < 0 || k % 2) throw InputError("moment bound is stated for even k");
  ExactScalar bound = double_factorial_of_predecessor(k);
  bound *= ExactScalar(1LL << k);
  return abs(moment_routeA(w, k)) <= bound;
}

ExactScalar PartitionFunctionCache::u(const SetPartition& p) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = u_.find(p); it != u_.end()) return it->second;
  }
  ExactScalar value = u_function(w_, p);
  std::lock_guard lock(mutex_);
  return u_.try_emplace(p, std::move(value)).first->second;
}

ExactScalar PartitionFunctionCache::t(const SetPartition& p) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = t_.find(p); it != t_.end()) return it->second;
  }
  ExactScalar value = t_incl_excl(w_, p);
  std::lock_guard lock(mutex_);
  return t_.try_emplace(p, std::move(value)).first->second;
}

std::size_t PartitionFunctionCache::u_entries() const {
  std::lock_guard lock(mutex_);
  return u_.size();
}

std::size_t PartitionFunctionCache::t_entries() const {
  std::lock_guard lock(mutex_);
  return t_.size();
}

}  // namespace starclt
