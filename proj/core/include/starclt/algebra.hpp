#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <nlohmann/json.hpp>

#include "starclt/permutation.hpp"

namespace starclt {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Expression templates are off so `auto` behaves like a value.
using ExactScalar =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

/// Parses "3", "-2", "1/6" (surrounding blanks allowed).
ExactScalar parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const ExactScalar& x);

/// Decimal rendering for display only.
double approx(const ExactScalar& x);

/// {"num": "<decimal>", "den": "<decimal>"}.
nlohmann::json to_json(const ExactScalar& x);
ExactScalar rational_from_json(const nlohmann::json& j);

/// Thoma parameters w_1 >= ... >= w_d > 0 with sum 1, d >= 2.
///
/// Power sums are memoized in a cache shared between copies; the cache is
/// safe for concurrent reads and fills and plays no part in equality.
class WeightVector {
 public:
  /// Sorts into non-increasing order. Rejects d < 2, non-positive entries and
  /// a sum different from 1.
  explicit WeightVector(std::vector<ExactScalar> weights);

  /// Comma-separated rationals, e.g. "1/2,1/3,1/6".
  static WeightVector parse(std::string_view text);

  /// (1/d, ..., 1/d).
  static WeightVector uniform(int d);

  int size() const { return static_cast<int>(weights_.size()); }
  /// 1-based access, matching w_1, ..., w_d.
  const ExactScalar& operator[](int i) const { return weights_.at(i - 1); }
  const std::vector<ExactScalar>& weights() const { return weights_; }

  /// p_n = w_1^n + ... + w_d^n for n >= 1.
  ExactScalar power_sum(int n) const;

  bool is_uniform() const;
  std::string to_string() const;

  friend bool operator==(const WeightVector& a, const WeightVector& b) {
    return a.weights_ == b.weights_;
  }

 private:
  struct PowerSumCache;

  std::vector<ExactScalar> weights_;
  std::shared_ptr<PowerSumCache> cache_;
};

ExactScalar power_sum(const WeightVector& w, int n);

/// Power sum extended by p_0 = d, for orbit products where a colour class
/// carries no weight factor.
ExactScalar power_sum_or_dimension(const WeightVector& w, int n);

/// Product of p_|V| over the orbits V of p with |V| >= 2 (1 on the identity).
ExactScalar character(const WeightVector& w, const Permutation& p);

/// The same product, from a list of orbit sizes (sizes < 2 are ignored).
ExactScalar character_from_orbit_sizes(const WeightVector& w,
                                       std::span<const int> sizes);

nlohmann::json to_json(const WeightVector& w);

}  // namespace starclt
