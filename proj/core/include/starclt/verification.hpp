#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "starclt/algebra.hpp"
#include "starclt/partitions.hpp"

namespace starclt {

struct SuiteResult {
  std::string name;
  bool passed = true;
  long long cases = 0;
  std::string detail;  // first failure, or a short summary
};

struct VerifyProfile {
  std::string name;
  int max_order = 8;        // route agreement, moment bound
  int partition_order = 6;  // singleton vanishing
  int orbit_order = 8;      // orbit correspondence
  int noncrossing_order = 10;
  int word_length = 8;      // CCR words
  int fresh_trials = 200;
};

/// "quick", "default" or "deep".
VerifyProfile profile_by_name(const std::string& name);

using TauBuilder = std::function<Permutation(const AtMostPairPartition&)>;

SuiteResult verify_singleton_vanishing(const WeightVector& w, int max_k);

/// For every pi in P_{<=2}(k), k <= max_k: the orbits of eta_{k+1} sigma_pi
/// inside {1..k+1} are exactly those meeting B_pi, and their intersection
/// sizes with B_pi match the orbit sizes of tau on {1..l+1}.
SuiteResult verify_orbit_correspondence(int max_k, const TauBuilder& tau = tau_pi);

/// Non-crossing pairings have tau = identity and every orbit of
/// eta_{k+1} sigma_pi meets B_pi exactly once.
SuiteResult verify_noncrossing_identity(int max_k, const TauBuilder& tau = tau_pi);

/// Pairing sum against the normal-ordering rewriter on every word of length
/// <= max_length, for the parameter pairs (w_v, w_u), u < v, and (w_1, w_1).
SuiteResult verify_ccr_wick(const WeightVector& w, int max_length);

/// Routes A, B, C and D agree exactly for 0 <= k <= max_k.
SuiteResult verify_route_agreement(const WeightVector& w, int max_k);

SuiteResult verify_moment_bound(const WeightVector& w, int max_k);

/// Leading principal minors of [mu(X^{i+j})]_{0 <= i,j < size}.
std::vector<ExactScalar> hankel_minors(const WeightVector& w, int size);
SuiteResult verify_hankel(const WeightVector& w);

SuiteResult verify_convolution(int d, int max_k);

/// mixed_trace is unchanged when the A0 markers take random fresh values.
SuiteResult verify_fresh_index_invariance(const WeightVector& w, int trials,
                                          std::uint64_t seed);

/// Every suite for one weight vector. The convolution suite runs when `gue`
/// is set (the weights must then be uniform) or the weights are uniform.
std::vector<SuiteResult> run_verification(const WeightVector& w,
                                          const VerifyProfile& profile, bool gue,
                                          std::uint64_t seed);

/// Exact determinant by Gaussian elimination over the rationals.
ExactScalar determinant(std::vector<std::vector<ExactScalar>> m);

}  // namespace starclt
