#pragma once

// Integer-coefficient sums of characters, grouped by exponent multiset.
//
// Most moment formulas are signed integer combinations of products of power
// sums. Accumulating the integer coefficients first and evaluating each
// distinct product once at the end keeps rational arithmetic out of the
// inner loops.

#include <algorithm>
#include <array>
#include <cstdint>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "starclt/algebra.hpp"
#include "starclt/errors.hpp"

namespace starclt::detail {

// Sorted exponents stored as value + 1 so that 0 marks unused slots.
using ExponentKey = std::array<std::uint8_t, 16>;

struct ExponentKeyHash {
  std::size_t operator()(const ExponentKey& key) const noexcept {
    return boost::hash_range(key.begin(), key.end());
  }
};

class ExponentBuilder {
 public:
  void push(int exponent) {
    if (count_ == static_cast<int>(key_.size()) || exponent < 0 || exponent > 250) {
      throw InfeasibleError("too many factors in a power-sum product");
    }
    key_[count_++] = static_cast<std::uint8_t>(exponent + 1);
  }

  ExponentKey finish() {
    std::sort(key_.begin(), key_.begin() + count_);
    return key_;
  }

 private:
  ExponentKey key_{};
  int count_ = 0;
};

class CharacterTally {
 public:
  void add(const ExponentKey& key, long long coefficient) {
    if (coefficient != 0) counts_[key] += coefficient;
  }

  void merge(const CharacterTally& other) {
    for (const auto& [key, c] : other.counts_) counts_[key] += c;
  }

  // Exponent 0 stands for the dimension d.
  ExactScalar evaluate(const WeightVector& w) const {
    ExactScalar total = 0;
    for (const auto& [key, c] : counts_) {
      if (c == 0) continue;
      ExactScalar term = c;
      for (std::uint8_t slot : key) {
        if (slot == 0) break;
        term *= power_sum_or_dimension(w, slot - 1);
      }
      total += term;
    }
    return total;
  }

  std::size_t distinct() const { return counts_.size(); }

 private:
  std::unordered_map<ExponentKey, long long, ExponentKeyHash> counts_;
};

// Cycle type (non-trivial cycles only) of gamma_{i(1)} ... gamma_{i(k)}.
// Indices must be >= 1 and at most 62.
inline ExponentKey star_word_key(const int* indices, int k) {
  std::array<int, 64> images;
  int bound = 1;
  for (int h = 0; h < k; ++h) bound = std::max(bound, indices[h] + 1);
  if (bound > 63) throw InfeasibleError("star word index too large");
  for (int m = 0; m < bound; ++m) images[m] = m;
  for (int h = 0; h < k; ++h) std::swap(images[0], images[indices[h]]);

  std::array<bool, 64> seen{};
  ExponentBuilder builder;
  for (int start = 0; start < bound; ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (int m = start; !seen[m]; m = images[m]) {
      seen[m] = true;
      ++len;
    }
    if (len >= 2) builder.push(len);
  }
  return builder.finish();
}

}  // namespace starclt::detail
