#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "starclt/permutation.hpp"

namespace starclt {

/// A partition of {1, ..., k}.
///
/// Canonical storage is the restricted growth string: labels()[h-1] is the
/// 0-based index of the block holding h, blocks numbered by their minimum.
/// Two partitions are equal iff their label strings are equal.
class SetPartition {
 public:
  SetPartition() = default;

  /// Blocks must be disjoint, non-empty and cover {1..k}.
  static SetPartition from_blocks(int k, const std::vector<std::vector<int>>& blocks);

  /// The level-set partition of an arbitrary labelling of positions.
  static SetPartition from_labels(std::span<const int> labels);

  /// Text form "{1,6}{2,5}{3}{4,7}".
  static SetPartition parse(std::string_view text);

  static SetPartition one_block(int k);
  static SetPartition discrete(int k);

  int size() const { return static_cast<int>(labels_.size()); }
  int block_count() const { return blocks_; }
  const std::vector<int>& labels() const { return labels_; }

  /// Blocks sorted by minimum, elements ascending.
  std::vector<std::vector<int>> blocks() const;
  std::vector<int> block_sizes() const;

  bool has_singleton() const;
  bool is_pairing() const;
  bool is_at_most_pair() const;
  bool is_noncrossing() const;

  /// Reverse-refinement order: true iff every block of *this lies inside a
  /// block of `coarser`.
  bool refines(const SetPartition& coarser) const;

  std::string to_string() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  explicit SetPartition(std::vector<int> rgs, int blocks)
      : labels_(std::move(rgs)), blocks_(blocks) {}

  std::vector<int> labels_;
  int blocks_ = 0;
};

struct SetPartitionHash {
  std::size_t operator()(const SetPartition& p) const noexcept;
};

/// A partition whose blocks all have one or two elements.
class AtMostPairPartition {
 public:
  explicit AtMostPairPartition(SetPartition p);

  const SetPartition& partition() const { return partition_; }
  int size() const { return partition_.size(); }
  int singleton_count() const { return singletons_; }
  int pair_count() const { return pairs_; }
  std::vector<std::vector<int>> blocks() const { return partition_.blocks(); }
  std::string to_string() const { return partition_.to_string(); }

  friend bool operator==(const AtMostPairPartition& a, const AtMostPairPartition& b) {
    return a.partition_ == b.partition_;
  }

 private:
  SetPartition partition_;
  int singletons_ = 0;
  int pairs_ = 0;
};

enum class Colour : std::uint8_t { kBlue, kRed };

struct ColouredPair {
  int first = 0;  // smaller element
  int second = 0;
  Colour colour = Colour::kBlue;

  friend bool operator==(const ColouredPair&, const ColouredPair&) = default;
};

/// A pairing of {1..k} with every pair painted blue or red.
class BicolouredPairPartition {
 public:
  BicolouredPairPartition(int k, std::vector<ColouredPair> pairs);

  /// Text form "{1,6}b{2,5}r..."; each pair carries a colour suffix.
  static BicolouredPairPartition parse(std::string_view text);

  int size() const { return k_; }
  /// Sorted by smaller element.
  const std::vector<ColouredPair>& pairs() const { return pairs_; }
  SetPartition underlying() const;
  int blue_count() const;
  int red_count() const;
  std::string to_string() const;

  friend bool operator==(const BicolouredPairPartition&,
                         const BicolouredPairPartition&) = default;

 private:
  int k_ = 0;
  std::vector<ColouredPair> pairs_;
};

/// Blocks of an at-most-pair partition listed by decreasing maximum:
/// k = b_1 > b_2 > ... > b_l, with a_i = min V_i and b_i = max V_i.
struct BlockOrder {
  struct Block {
    int min = 0;
    int max = 0;
  };

  int k = 0;
  std::vector<Block> blocks;  // blocks[i-1] is V_i

  int length() const { return static_cast<int>(blocks.size()); }

  /// The label tuple r with r(a_i) = r(b_i) = i, 1-based labels.
  std::vector<int> labels() const;

  /// B = {b_l, ..., b_1, b_0 = k+1}, ascending.
  std::vector<int> maxima_with_sentinel() const;
};

BlockOrder block_order(const AtMostPairPartition& p);

using PartitionVisitor = std::function<void(const SetPartition&)>;
using AtMostPairVisitor = std::function<void(const AtMostPairPartition&)>;
using BicolouredVisitor = std::function<void(const BicolouredPairPartition&)>;

/// All of P(k) in restricted-growth-string order. 1 <= k <= 14.
void for_each_partition(int k, const PartitionVisitor& visit);
std::vector<SetPartition> enumerate_partitions(int k);

/// All pair partitions of {1..k}; nothing for odd k. Lexicographic in the
/// partner chosen for the smallest open element.
void for_each_pairing(int k, const PartitionVisitor& visit);
std::vector<SetPartition> enumerate_pairings(int k);

/// All of P_{<=2}(k). 1 <= k <= 14.
void for_each_le2(int k, const AtMostPairVisitor& visit);
std::vector<AtMostPairPartition> enumerate_le2(int k);

/// All bicoloured pairings of {1..k}; nothing for odd k. k <= 14.
void for_each_bicoloured(int k, const BicolouredVisitor& visit);
std::vector<BicolouredPairPartition> enumerate_bicoloured(int k);

/// Block-intersection partition; the greatest common lower bound.
SetPartition meet(const SetPartition& a, const SetPartition& b);

/// Singletons at every h in `subset`, plus one block on the complement.
SetPartition pi_S(std::span<const int> subset, int k);

/// pi_S for a subset given as a bitmask over positions (bit h-1 <-> h).
SetPartition pi_S_mask(std::uint32_t mask, int k);

/// meet(p, pi_S_mask(mask, k)) without building the intermediate partition.
SetPartition meet_with_pi_S(const SetPartition& p, std::uint32_t mask);

/// Level sets of the positions of a non-empty tuple.
SetPartition kernel(std::span<const int> tuple);

/// gamma_{r(1)} * ... * gamma_{r(k)} for the block-order labels r.
Permutation tau_pi(const AtMostPairPartition& p);

/// Product of the transpositions (min V, max V) over the pair blocks.
Permutation sigma_pi(const AtMostPairPartition& p);

/// Product of the transpositions over the blue pairs only.
Permutation sigma_blue(const BicolouredPairPartition& rho);

/// Keeps blue pairs, splits each red pair into two singletons.
AtMostPairPartition red_break(const BicolouredPairPartition& rho);

/// (m - 1)!! with the convention (-1)!! = 1; m must be -1 or >= 0.
long long double_factorial_of_predecessor(int m);

}  // namespace starclt
