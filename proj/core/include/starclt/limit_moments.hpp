#pragma once

#include <mutex>
#include <unordered_map>

#include "starclt/algebra.hpp"
#include "starclt/partitions.hpp"

namespace starclt {

/// Largest order the moment routes accept.
inline constexpr int kMaxMomentOrder = 12;

/// chi(gamma_{i(1)} ... gamma_{i(k)}) for a tuple i with kernel p. Any such
/// tuple gives the same value; this one uses the block labels 1, 2, ....
ExactScalar u_function(const WeightVector& w, const SetPartition& p);

/// chi(tau_pi), which coincides with u on at-most-pair partitions.
ExactScalar u_function(const WeightVector& w, const AtMostPairPartition& p);

/// Inclusion-exclusion over all S in {1..k}:
///   t(p) = sum_S (-1)^{|S|} u(p meet pi_S).
ExactScalar t_incl_excl(const WeightVector& w, const SetPartition& p);

/// Sum over the 2^{k/2} ways of breaking pairs of `rho` into singletons of
/// (-1)^{#broken} chi(tau). Throws unless `rho` is a pairing.
ExactScalar t_pairing(const WeightVector& w, const SetPartition& rho);

/// sum_{rho in P_2(k)} t(rho), with t computed by inclusion-exclusion.
ExactScalar moment_routeA(const WeightVector& w, int k);

/// sum_{pi in P_{<=2}(k)} (-1)^{|pi|_1/2} (|pi|_1 - 1)!! chi(tau_pi).
ExactScalar moment_routeB(const WeightVector& w, int k);

/// Bicoloured pairings rho, summed one colour per orbit of eta_k sigma_blue.
ExactScalar moment_routeC(const WeightVector& w, int k);

enum class SigmaVariant {
  kPlusOne,  // orbits of eta_{k+1} sigma_pi weighted by |R n B_pi|
  kOnly,     // orbits of eta_k sigma_pi weighted by [1 in R] + |R n {b_1..b_l}|
};

/// chi(tau_pi) recovered from sigma_pi, one power sum per orbit.
ExactScalar chi_tau_via_sigma(const WeightVector& w, const AtMostPairPartition& p,
                              SigmaVariant variant);

/// |mu(X^k)| <= 2^k (k-1)!! for even k.
bool moment_bound_check(const WeightVector& w, int k);

/// Memoized u and t for one weight vector. Safe for concurrent use.
class PartitionFunctionCache {
 public:
  explicit PartitionFunctionCache(WeightVector w) : w_(std::move(w)) {}

  const WeightVector& weights() const { return w_; }
  ExactScalar u(const SetPartition& p);
  ExactScalar t(const SetPartition& p);

  std::size_t u_entries() const;
  std::size_t t_entries() const;

 private:
  WeightVector w_;
  mutable std::mutex mutex_;
  std::unordered_map<SetPartition, ExactScalar, SetPartitionHash> u_;
  std::unordered_map<SetPartition, ExactScalar, SetPartitionHash> t_;
};

}  // namespace starclt
