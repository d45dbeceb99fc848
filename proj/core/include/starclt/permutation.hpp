#pragma once

#include <cstddef>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace starclt {

/// A finitely supported bijection of {1, 2, 3, ...}.
///
/// Stored as a dense image table over {1, ..., support_bound()} with trailing
/// fixed points trimmed, so permutations that agree as functions on all of N
/// compare equal regardless of how they were built.
class Permutation {
 public:
  /// The identity.
  Permutation() = default;

  /// `images[m - 1]` is the image of m. Must be a bijection of {1..size}.
  explicit Permutation(std::vector<int> images);

  /// Builds a permutation from (not necessarily disjoint) cycles, applied
  /// rightmost first, e.g. {{1,3,2},{5,6}}.
  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles);

  /// Parses cycle notation such as "(1,3,2)(5,6)" or "()".
  static Permutation parse(std::string_view text);

  int operator()(int m) const;

  /// Largest point moved, or 0 for the identity.
  int support_bound() const { return static_cast<int>(images_.size()); }
  bool is_identity() const { return images_.empty(); }

  /// Image table over {1..bound}; bound must be >= support_bound().
  std::vector<int> images(int bound) const;

  Permutation inverse() const;

  /// Non-trivial cycles, each starting at its minimum, sorted by minimum.
  std::vector<std::vector<int>> cycles() const;

  /// Cycle notation; the identity prints as "()".
  std::string to_string() const;

  /// Smallest n >= 1 with p^n = identity.
  long long order() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  void trim();

  std::vector<int> images_;
};

/// Group product under "rightmost factor acts first": (p*q)(m) = p(q(m)).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation operator*(const Permutation& p, const Permutation& q);

/// The transposition (1, n+1).
Permutation star_transposition(int n);

/// The cycle (1, 2, ..., n); the identity for n = 1.
Permutation forward_cycle(int n);

struct OrbitDecomposition {
  /// Each orbit is listed from its minimum along the permutation; orbits are
  /// sorted by minimum. Fixed points up to domain_bound appear as singletons.
  std::vector<std::vector<int>> orbits;
  int domain_bound = 0;

  std::vector<int> sizes() const;
};

/// Orbits of p on {1..domain_bound}; domain_bound must cover the support.
OrbitDecomposition orbits(const Permutation& p, int domain_bound);

/// The permutation induced on `subset`: each a in the subset goes to the
/// first element of p(a), p^2(a), ... lying in the subset again; everything
/// else is fixed.
Permutation induced(const Permutation& p, std::span<const int> subset);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

}  // namespace starclt

template <>
struct std::hash<starclt::Permutation> {
  std::size_t operator()(const starclt::Permutation& p) const noexcept;
};

namespace starclt {

/// Sizes of the non-trivial orbits of gamma_{i(1)} * ... * gamma_{i(k)}, where
/// gamma_n = (1, n+1). Runs in place without materializing a Permutation;
/// the hot path for character values of star-transposition words.
std::vector<int> star_word_cycle_type(std::span<const int> indices);

/// gamma_{i(1)} * ... * gamma_{i(k)} as a Permutation.
Permutation star_word(std::span<const int> indices);

}  // namespace starclt
