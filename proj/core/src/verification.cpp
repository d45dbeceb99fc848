#include "starclt/verification.hpp"

#include <algorithm>
#include <random>

#include "starclt/ccr_gue.hpp"
#include "starclt/errors.hpp"
#include "starclt/finite_scale.hpp"
#include "starclt/limit_moments.hpp"

namespace starclt {

VerifyProfile profile_by_name(const std::string& name) {
  VerifyProfile p;
  p.name = name;
  if (name == "quick") {
    p.max_order = 4;
    p.partition_order = 4;
    p.orbit_order = 5;
    p.noncrossing_order = 6;
    p.word_length = 6;
    p.fresh_trials = 50;
  } else if (name == "deep") {
    p.max_order = 10;
    p.partition_order = 7;
    p.orbit_order = 10;
    p.noncrossing_order = 12;
    p.word_length = 10;
    p.fresh_trials = 1000;
  } else if (name != "default") {
    throw InputError("unknown depth profile '" + name + "' (quick, default, deep)");
  }
  return p;
}

namespace {

void fail(SuiteResult& r, const std::string& message) {
  if (r.passed) r.detail = message;
  r.passed = false;
}

void summarise(SuiteResult& r) {
  if (r.passed) r.detail = std::to_string(r.cases) + " cases";
}

// Orbits of eta_{k+1} sigma_pi on {1..k+2}; k+2 is a fixed point and stands
// for everything beyond k+1.
OrbitDecomposition eta_sigma_orbits(const AtMostPairPartition& p) {
  const int k = p.size();
  return orbits(forward_cycle(k + 1) * sigma_pi(p), k + 2);
}

}  // namespace

SuiteResult verify_singleton_vanishing(const WeightVector& w, int max_k) {
  SuiteResult r;
  r.name = "singleton vanishing";
  for (int k = 1; k <= max_k; ++k) {
    for_each_partition(k, [&](const SetPartition& p) {
      if (!p.has_singleton()) return;
      ++r.cases;
      const auto t = t_incl_excl(w, p);
      if (t != 0) fail(r, "t" + p.to_string() + " = " + to_string(t));
    });
  }
  summarise(r);
  return r;
}

SuiteResult verify_orbit_correspondence(int max_k, const TauBuilder& tau) {
  SuiteResult r;
  r.name = "orbit correspondence";
  for (int k = 1; k <= max_k; ++k) {
    for_each_le2(k, [&](const AtMostPairPartition& p) {
      ++r.cases;
      const auto order = block_order(p);
      const auto b = order.maxima_with_sentinel();
      const int ell = order.length();

      std::vector<int> from_sigma;
      for (const auto& orbit : eta_sigma_orbits(p).orbits) {
        const bool contained = std::all_of(orbit.begin(), orbit.end(),
                                           [&](int m) { return m <= k + 1; });
        const auto hits = std::count_if(orbit.begin(), orbit.end(), [&](int m) {
          return std::binary_search(b.begin(), b.end(), m);
        });
        if (contained != (hits > 0)) {
          fail(r, p.to_string() + ": an orbit inside {1..k+1} misses B, or one meets B "
                                  "without being contained");
        }
        if (hits > 0) from_sigma.push_back(static_cast<int>(hits));
      }

      const Permutation t = tau(p);
      if (t.support_bound() > ell + 1) {
        fail(r, p.to_string() + ": tau moves a point beyond l+1");
        return;
      }
      auto from_tau = orbits(t, ell + 1).sizes();
      std::sort(from_sigma.begin(), from_sigma.end());
      std::sort(from_tau.begin(), from_tau.end());
      if (from_sigma != from_tau) {
        fail(r, p.to_string() + ": orbit sizes of tau " + t.to_string() +
                    " differ from the B-intersection sizes");
      }
    });
  }
  summarise(r);
  return r;
}

SuiteResult verify_noncrossing_identity(int max_k, const TauBuilder& tau) {
  SuiteResult r;
  r.name = "non-crossing identity";
  for (int k = 2; k <= max_k; k += 2) {
    for_each_pairing(k, [&](const SetPartition& rho) {
      if (!rho.is_noncrossing()) return;
      ++r.cases;
      const AtMostPairPartition p(rho);
      if (!tau(p).is_identity()) fail(r, rho.to_string() + ": tau is not the identity");
      const auto b = block_order(p).maxima_with_sentinel();
      int inside = 0;
      for (const auto& orbit : eta_sigma_orbits(p).orbits) {
        if (orbit.front() == k + 2) continue;
        ++inside;
        const auto hits = std::count_if(orbit.begin(), orbit.end(), [&](int m) {
          return std::binary_search(b.begin(), b.end(), m);
        });
        if (hits != 1) fail(r, rho.to_string() + ": an orbit meets B more than once");
      }
      if (inside != k / 2 + 1) fail(r, rho.to_string() + ": wrong number of orbits");
    });
  }
  summarise(r);
  return r;
}

SuiteResult verify_ccr_wick(const WeightVector& w, int max_length) {
  SuiteResult r;
  r.name = "CCR-Wick vs normal ordering";
  std::vector<CcrParameters> params{CcrParameters(w[1], w[1])};
  for (int u = 1; u <= w.size(); ++u) {
    for (int v = u + 1; v <= w.size(); ++v) params.emplace_back(w[v], w[u]);
  }
  for (const auto& omega : params) {
    for (int len = 1; len <= max_length; ++len) {
      for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
        StarWord word(len);
        for (int h = 0; h < len; ++h) word[h] = (bits >> h) & 1u ? Star::kStar : Star::kOne;
        ++r.cases;
        if (ccr_wick(omega, word) != ccr_normal_order_oracle(omega, word)) {
          fail(r, "word " + to_string(word) + " with parameters (" +
                      to_string(omega.one_star) + ", " + to_string(omega.star_one) + ")");
        }
      }
    }
  }
  summarise(r);
  return r;
}

SuiteResult verify_route_agreement(const WeightVector& w, int max_k) {
  SuiteResult r;
  r.name = "route agreement";
  for (int k = 0; k <= max_k; ++k) {
    ++r.cases;
    const auto a = moment_routeA(w, k);
    const auto b = moment_routeB(w, k);
    const auto c = moment_routeC(w, k);
    const auto d = matrix_moment(w, k);
    if (a != b || a != c || a != d) {
      fail(r, "k=" + std::to_string(k) + ": A=" + to_string(a) + " B=" + to_string(b) +
                  " C=" + to_string(c) + " D=" + to_string(d));
    }
  }
  summarise(r);
  return r;
}

SuiteResult verify_moment_bound(const WeightVector& w, int max_k) {
  SuiteResult r;
  r.name = "moment bound";
  for (int k = 2; k <= max_k; k += 2) {
    ++r.cases;
    if (!moment_bound_check(w, k)) fail(r, "bound fails at k=" + std::to_string(k));
  }
  summarise(r);
  return r;
}

ExactScalar determinant(std::vector<std::vector<ExactScalar>> m) {
  const int n = static_cast<int>(m.size());
  ExactScalar det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      const ExactScalar factor = m[row][col] / m[col][col];
      for (int j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
    }
  }
  return det;
}

std::vector<ExactScalar> hankel_minors(const WeightVector& w, int size) {
  std::vector<ExactScalar> moments;
  for (int k = 0; k <= 2 * (size - 1); ++k) moments.push_back(moment_routeA(w, k));
  std::vector<ExactScalar> minors;
  for (int n = 1; n <= size; ++n) {
    std::vector<std::vector<ExactScalar>> h(n, std::vector<ExactScalar>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) h[i][j] = moments[i + j];
    minors.push_back(determinant(std::move(h)));
  }
  return minors;
}

SuiteResult verify_hankel(const WeightVector& w) {
  SuiteResult r;
  r.name = "Hankel positivity";
  const auto minors = hankel_minors(w, 4);
  for (std::size_t n = 0; n < minors.size(); ++n) {
    ++r.cases;
    if (minors[n] < 0) {
      fail(r, "minor of size " + std::to_string(n + 1) + " is " + to_string(minors[n]));
    }
  }
  summarise(r);
  return r;
}

SuiteResult verify_convolution(int d, int max_k) {
  SuiteResult r;
  r.name = "convolution identity d=" + std::to_string(d);
  for (int k = 0; k <= max_k; ++k) {
    ++r.cases;
    const auto lhs = gue_moment(d, k);
    const auto rhs = convolution_rhs(d, k);
    if (lhs != rhs) {
      fail(r, "k=" + std::to_string(k) + ": " + to_string(lhs) + " vs " + to_string(rhs));
    }
  }
  summarise(r);
  return r;
}

SuiteResult verify_fresh_index_invariance(const WeightVector& w, int trials,
                                          std::uint64_t seed) {
  SuiteResult r;
  r.name = "fresh-index invariance";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length(1, 7);
  std::uniform_int_distribution<int> letter(0, 4);  // 0 is A0
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<std::optional<int>> entries(length(rng));
    for (auto& e : entries) {
      const int x = letter(rng);
      if (x > 0) e = x;
    }
    const MixedTuple t(std::move(entries));
    // Fresh values drawn from 1..20 avoiding the finite entries.
    std::vector<int> pool;
    for (int x = 1; x <= 20; ++x) {
      if (std::none_of(t.entries().begin(), t.entries().end(),
                       [&](const auto& e) { return e == x; })) {
        pool.push_back(x);
      }
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(t.marker_count());
    ++r.cases;
    if (mixed_trace(w, t) != mixed_trace_with_fresh(w, t, pool)) {
      fail(r, "tuple " + t.to_string() + " depends on the fresh indices");
    }
  }
  summarise(r);
  return r;
}

std::vector<SuiteResult> run_verification(const WeightVector& w,
                                          const VerifyProfile& profile, bool gue,
                                          std::uint64_t seed) {
  if (gue && !w.is_uniform()) {
    throw InputError("the convolution identity needs uniform weights 1/d");
  }
  std::vector<SuiteResult> out;
  out.push_back(verify_singleton_vanishing(w, profile.partition_order));
  out.push_back(verify_orbit_correspondence(profile.orbit_order));
  out.push_back(verify_noncrossing_identity(profile.noncrossing_order));
  out.push_back(verify_ccr_wick(w, profile.word_length));
  out.push_back(verify_route_agreement(w, profile.max_order));
  out.push_back(verify_moment_bound(w, profile.max_order));
  out.push_back(verify_hankel(w));
  if (gue || w.is_uniform()) out.push_back(verify_convolution(w.size(), profile.max_order));
  out.push_back(verify_fresh_index_invariance(w, profile.fresh_trials, seed));
  return out;
}

}  // namespace starclt
