#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "starclt/algebra.hpp"
#include "starclt/partitions.hpp"

namespace starclt {

/// A word in the generators U(gamma_n), n >= 1, and the marker A0.
/// std::nullopt stands for A0.
class MixedTuple {
 public:
  explicit MixedTuple(std::vector<std::optional<int>> entries);

  /// Comma-separated entries, each a positive integer or "A0".
  static MixedTuple parse(std::string_view text);
  static MixedTuple all_a0(int k);

  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<std::optional<int>>& entries() const { return entries_; }
  int marker_count() const;
  int max_finite() const;  // 0 when there is none
  std::string to_string() const;

 private:
  std::vector<std::optional<int>> entries_;
};

/// Replaces the A0 markers, in order, by max + 1, max + 2, ... and evaluates
/// chi of the resulting product of star transpositions.
ExactScalar mixed_trace(const WeightVector& w, const MixedTuple& t);

/// As mixed_trace, but the markers take the values in `fresh`, which must be
/// distinct and avoid every finite entry.
ExactScalar mixed_trace_with_fresh(const WeightVector& w, const MixedTuple& t,
                                   std::span<const int> fresh);

/// tr of a product of centred generators U(gamma_n) - A0 whose index tuple
/// has kernel p.
ExactScalar centered_trace(const WeightVector& w, const SetPartition& p);

/// tr(s_n^k) = coefficient * n^{-k/2}. For even k this is rational; for odd
/// k it is kept in this symbolic form.
struct SnMoment {
  ExactScalar coefficient;
  long long n = 1;
  int k = 0;

  bool is_rational() const { return k % 2 == 0 || coefficient == 0; }
  /// Throws std::logic_error when the value is not rational.
  ExactScalar value() const;
  std::string to_string() const;
};

/// Kernel sum over partitions without singleton blocks (the others carry
/// t = 0), weighted by the falling factorial (n)_{#blocks}. 0 <= k <= 10.
SnMoment s_n_moment(const WeightVector& w, long long n, int k);

/// (1 - p_3) / n.
ExactScalar lln_variance(const WeightVector& w, long long n);

/// The same quantity assembled from mixed traces:
/// (1/n^2)(n tr(g_1 g_1) + (n^2 - n) tr(g_1 g_2)) - 2 tr(g_1 A0) + tr(A0 A0).
ExactScalar lln_variance_expansion(const WeightVector& w, long long n);

struct SpectralAtom {
  ExactScalar atom;
  ExactScalar mass;
};

/// Distinct weights as atoms, each carrying the total weight equal to it;
/// listed by decreasing atom.
std::vector<SpectralAtom> a0_spectral(const WeightVector& w);

/// sum mass * atom^k.
ExactScalar spectral_moment(std::span<const SpectralAtom> atoms, int k);

}  // namespace starclt
