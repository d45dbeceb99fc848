#include "starclt/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include <boost/container_hash/hash.hpp>

#include "starclt/errors.hpp"

namespace starclt {

namespace {

void check_order(int k, const char* what) {
  if (k < 1) throw InputError(std::string(what) + ": k must be >= 1");
  if (k > kMaxEnumerationOrder) {
    throw InfeasibleError(std::string(what) + ": k = " + std::to_string(k) +
                          " exceeds the enumeration cap " +
                          std::to_string(kMaxEnumerationOrder));
  }
}

// Reads blocks "{a,b,...}" one at a time; `after_block` sees the position just
// past each closing brace and may consume a suffix.
template <typename AfterBlock>
std::vector<std::vector<int>> parse_braced(std::string_view text,
                                           AfterBlock after_block) {
  std::vector<std::vector<int>> blocks;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '{') {
      throw InputError("expected '{' in partition text: " + std::string(text));
    }
    ++pos;
    std::vector<int> block;
    while (true) {
      skip_ws();
      int value = 0;
      auto [ptr, ec] =
          std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc()) {
        throw InputError("bad block entry in: " + std::string(text));
      }
      pos = static_cast<std::size_t>(ptr - text.data());
      block.push_back(value);
      skip_ws();
      if (pos >= text.size()) throw InputError("unterminated block");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == '}') {
        ++pos;
        break;
      }
      throw InputError("unexpected character in partition text");
    }
    blocks.push_back(std::move(block));
    after_block(pos);
    skip_ws();
  }
  if (blocks.empty()) throw InputError("empty partition text");
  return blocks;
}

int max_entry(const std::vector<std::vector<int>>& blocks) {
  int k = 0;
  for (const auto& b : blocks) {
    for (int m : b) k = std::max(k, m);
  }
  return k;
}

}  // namespace

SetPartition SetPartition::from_blocks(int k,
                                       const std::vector<std::vector<int>>& blocks) {
  if (k < 1) throw InputError("partition ground set must be non-empty");
  std::vector<int> raw(k, -1);
  int label = 0;
  for (const auto& block : blocks) {
    if (block.empty()) throw InputError("partition blocks must be non-empty");
    for (int m : block) {
      if (m < 1 || m > k) {
        throw InputError("partition entry " + std::to_string(m) +
                         " outside {1.." + std::to_string(k) + "}");
      }
      if (raw[m - 1] != -1) {
        throw InputError("partition blocks overlap at " + std::to_string(m));
      }
      raw[m - 1] = label;
    }
    ++label;
  }
  if (std::find(raw.begin(), raw.end(), -1) != raw.end()) {
    throw InputError("partition blocks do not cover {1.." + std::to_string(k) + "}");
  }
  return from_labels(raw);
}

SetPartition SetPartition::from_labels(std::span<const int> labels) {
  if (labels.empty()) throw InputError("kernel of an empty tuple");
  std::map<int, int> relabel;
  std::vector<int> rgs;
  rgs.reserve(labels.size());
  for (int x : labels) {
    auto [it, inserted] = relabel.try_emplace(x, static_cast<int>(relabel.size()));
    rgs.push_back(it->second);
  }
  const int count = static_cast<int>(relabel.size());
  return SetPartition(std::move(rgs), count);
}

SetPartition SetPartition::parse(std::string_view text) {
  auto blocks = parse_braced(text, [](std::size_t) {});
  return from_blocks(max_entry(blocks), blocks);
}

SetPartition SetPartition::one_block(int k) {
  if (k < 1) throw InputError("partition ground set must be non-empty");
  return SetPartition(std::vector<int>(k, 0), 1);
}

SetPartition SetPartition::discrete(int k) {
  if (k < 1) throw InputError("partition ground set must be non-empty");
  std::vector<int> rgs(k);
  for (int i = 0; i < k; ++i) rgs[i] = i;
  return SetPartition(std::move(rgs), k);
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(blocks_);
  for (int h = 0; h < size(); ++h) out[labels_[h]].push_back(h + 1);
  return out;
}

std::vector<int> SetPartition::block_sizes() const {
  std::vector<int> out(blocks_, 0);
  for (int l : labels_) ++out[l];
  return out;
}

bool SetPartition::has_singleton() const {
  const auto sizes = block_sizes();
  return std::find(sizes.begin(), sizes.end(), 1) != sizes.end();
}

bool SetPartition::is_pairing() const {
  const auto sizes = block_sizes();
  return !sizes.empty() &&
         std::all_of(sizes.begin(), sizes.end(), [](int s) { return s == 2; });
}

bool SetPartition::is_at_most_pair() const {
  const auto sizes = block_sizes();
  return !sizes.empty() &&
         std::all_of(sizes.begin(), sizes.end(), [](int s) { return s <= 2; });
}

bool SetPartition::is_noncrossing() const {
  const int k = size();
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      if (labels_[b] == labels_[a]) continue;
      for (int c = b + 1; c < k; ++c) {
        if (labels_[c] != labels_[a]) continue;
        for (int d = c + 1; d < k; ++d) {
          if (labels_[d] == labels_[b]) return false;
        }
      }
    }
  return true;
}

bool SetPartition::refines(const SetPartition& coarser) const {
  if (coarser.size() != size()) throw InputError("partitions of different ground sets");
  std::vector<int> image(blocks_, -1);
  for (int h = 0; h < size(); ++h) {
    int& slot = image[labels_[h]];
    if (slot == -1) {
      slot = coarser.labels_[h];
    } else if (slot != coarser.labels_[h]) {
      return false;
    }
  }
  return true;
}

std::string SetPartition::to_string() const {
  std::string s;
  for (const auto& block : blocks()) {
    s += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(block[i]);
    }
    s += '}';
  }
  return s;
}

std::size_t SetPartitionHash::operator()(const SetPartition& p) const noexcept {
  return boost::hash_range(p.labels().begin(), p.labels().end());
}

AtMostPairPartition::AtMostPairPartition(SetPartition p) : partition_(std::move(p)) {
  for (int s : partition_.block_sizes()) {
    if (s == 1) {
      ++singletons_;
    } else if (s == 2) {
      ++pairs_;
    } else {
      throw InputError("block of size " + std::to_string(s) +
                       " in an at-most-pair partition");
    }
  }
}

BicolouredPairPartition::BicolouredPairPartition(int k, std::vector<ColouredPair> pairs)
    : k_(k), pairs_(std::move(pairs)) {
  if (k < 2 || k % 2 != 0) throw InputError("bicoloured pairings need even k >= 2");
  std::vector<std::vector<int>> blocks;
  for (auto& pr : pairs_) {
    if (pr.first > pr.second) std::swap(pr.first, pr.second);
    blocks.push_back({pr.first, pr.second});
  }
  if (!SetPartition::from_blocks(k, blocks).is_pairing()) {
    throw InputError("bicoloured partition blocks must all be pairs");
  }
  std::sort(pairs_.begin(), pairs_.end(),
            [](const ColouredPair& a, const ColouredPair& b) { return a.first < b.first; });
}

BicolouredPairPartition BicolouredPairPartition::parse(std::string_view text) {
  std::vector<Colour> colours;
  auto blocks = parse_braced(text, [&](std::size_t& pos) {
    if (pos >= text.size() || (text[pos] != 'b' && text[pos] != 'r')) {
      throw InputError("each pair needs a colour suffix 'b' or 'r'");
    }
    colours.push_back(text[pos] == 'b' ? Colour::kBlue : Colour::kRed);
    ++pos;
  });
  std::vector<ColouredPair> pairs;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].size() != 2) throw InputError("bicoloured blocks must be pairs");
    pairs.push_back({blocks[i][0], blocks[i][1], colours[i]});
  }
  return BicolouredPairPartition(max_entry(blocks), std::move(pairs));
}

SetPartition BicolouredPairPartition::underlying() const {
  std::vector<std::vector<int>> blocks;
  for (const auto& pr : pairs_) blocks.push_back({pr.first, pr.second});
  return SetPartition::from_blocks(k_, blocks);
}

int BicolouredPairPartition::blue_count() const {
  return static_cast<int>(std::count_if(pairs_.begin(), pairs_.end(), [](const auto& p) {
    return p.colour == Colour::kBlue;
  }));
}

int BicolouredPairPartition::red_count() const {
  return static_cast<int>(pairs_.size()) - blue_count();
}

std::string BicolouredPairPartition::to_string() const {
  std::string s;
  for (const auto& pr : pairs_) {
    s += '{' + std::to_string(pr.first) + ',' + std::to_string(pr.second) + '}';
    s += pr.colour == Colour::kBlue ? 'b' : 'r';
  }
  return s;
}

std::vector<int> BlockOrder::labels() const {
  std::vector<int> r(k, 0);
  for (int i = 0; i < length(); ++i) {
    r[blocks[i].min - 1] = i + 1;
    r[blocks[i].max - 1] = i + 1;
  }
  return r;
}

std::vector<int> BlockOrder::maxima_with_sentinel() const {
  std::vector<int> out;
  for (const auto& b : blocks) out.push_back(b.max);
  out.push_back(k + 1);
  std::sort(out.begin(), out.end());
  return out;
}

BlockOrder block_order(const AtMostPairPartition& p) {
  BlockOrder order;
  order.k = p.size();
  for (const auto& block : p.blocks()) {
    order.blocks.push_back({block.front(), block.back()});
  }
  std::sort(order.blocks.begin(), order.blocks.end(),
            [](const auto& a, const auto& b) { return a.max > b.max; });
  return order;
}

// ---- enumeration ---------------------------------------------------------

void for_each_partition(int k, const PartitionVisitor& visit) {
  check_order(k, "enumerate_partitions");
  std::vector<int> rgs(k, 0);
  // Iterative restricted-growth-string successor: rgs[i] <= 1 + max(rgs[0..i)).
  std::vector<int> prefix_max(k, 0);
  while (true) {
    visit(SetPartition::from_labels(rgs));
    int i = k - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (int j = i + 1; j < k; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

std::vector<SetPartition> enumerate_partitions(int k) {
  std::vector<SetPartition> out;
  for_each_partition(k, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

namespace {

// Pairs the smallest unassigned position with each later unassigned one, and
// (when singletons are allowed) also leaves it alone.
void match_rest(std::vector<int>& label, int next_label, bool allow_singletons,
                const std::function<void(const std::vector<int>&)>& emit) {
  const int k = static_cast<int>(label.size());
  int first = 0;
  while (first < k && label[first] != -1) ++first;
  if (first == k) {
    emit(label);
    return;
  }
  if (allow_singletons) {
    label[first] = next_label;
    match_rest(label, next_label + 1, allow_singletons, emit);
    label[first] = -1;
  }
  for (int second = first + 1; second < k; ++second) {
    if (label[second] != -1) continue;
    label[first] = label[second] = next_label;
    match_rest(label, next_label + 1, allow_singletons, emit);
    label[first] = label[second] = -1;
  }
}

}  // namespace

void for_each_pairing(int k, const PartitionVisitor& visit) {
  check_order(k, "enumerate_pairings");
  if (k % 2 != 0) return;
  std::vector<int> label(k, -1);
  match_rest(label, 0, false,
             [&](const std::vector<int>& l) { visit(SetPartition::from_labels(l)); });
}

std::vector<SetPartition> enumerate_pairings(int k) {
  std::vector<SetPartition> out;
  for_each_pairing(k, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

void for_each_le2(int k, const AtMostPairVisitor& visit) {
  check_order(k, "enumerate_le2");
  std::vector<int> label(k, -1);
  match_rest(label, 0, true, [&](const std::vector<int>& l) {
    visit(AtMostPairPartition(SetPartition::from_labels(l)));
  });
}

std::vector<AtMostPairPartition> enumerate_le2(int k) {
  std::vector<AtMostPairPartition> out;
  for_each_le2(k, [&](const AtMostPairPartition& p) { out.push_back(p); });
  return out;
}

void for_each_bicoloured(int k, const BicolouredVisitor& visit) {
  check_order(k, "enumerate_bicoloured");
  if (k % 2 != 0) return;
  const int half = k / 2;
  for_each_pairing(k, [&](const SetPartition& p) {
    const auto blocks = p.blocks();
    for (std::uint32_t mask = 0; mask < (1u << half); ++mask) {
      std::vector<ColouredPair> pairs;
      pairs.reserve(half);
      for (int i = 0; i < half; ++i) {
        pairs.push_back({blocks[i][0], blocks[i][1],
                         (mask >> i) & 1u ? Colour::kRed : Colour::kBlue});
      }
      visit(BicolouredPairPartition(k, std::move(pairs)));
    }
  });
}

std::vector<BicolouredPairPartition> enumerate_bicoloured(int k) {
  std::vector<BicolouredPairPartition> out;
  for_each_bicoloured(k, [&](const BicolouredPairPartition& p) { out.push_back(p); });
  return out;
}

// ---- lattice operations --------------------------------------------------

SetPartition meet(const SetPartition& a, const SetPartition& b) {
  if (a.size() != b.size()) throw InputError("meet of partitions of different ground sets");
  std::vector<int> combined(a.size());
  for (int h = 0; h < a.size(); ++h) {
    combined[h] = a.labels()[h] * b.size() + b.labels()[h];
  }
  return SetPartition::from_labels(combined);
}

SetPartition pi_S(std::span<const int> subset, int k) {
  if (k < 1 || k > 31) throw InputError("pi_S needs 1 <= k <= 31");
  std::uint32_t mask = 0;
  for (int h : subset) {
    if (h < 1 || h > k) {
      throw InputError("pi_S: element " + std::to_string(h) + " outside {1.." +
                       std::to_string(k) + "}");
    }
    mask |= 1u << (h - 1);
  }
  return pi_S_mask(mask, k);
}

SetPartition pi_S_mask(std::uint32_t mask, int k) {
  if (k < 1 || k > 31) throw InputError("pi_S needs 1 <= k <= 31");
  if (k < 32 && (mask >> k) != 0) throw InputError("pi_S mask exceeds the ground set");
  std::vector<int> raw(k);
  for (int h = 0; h < k; ++h) raw[h] = (mask >> h) & 1u ? h + 1 : 0;
  return SetPartition::from_labels(raw);
}

SetPartition meet_with_pi_S(const SetPartition& p, std::uint32_t mask) {
  const int k = p.size();
  std::vector<int> raw(k);
  // Positions in the mask get their own label; the rest keep their block.
  for (int h = 0; h < k; ++h) raw[h] = (mask >> h) & 1u ? -(h + 1) : p.labels()[h];
  return SetPartition::from_labels(raw);
}

SetPartition kernel(std::span<const int> tuple) { return SetPartition::from_labels(tuple); }

// ---- permutations attached to a partition --------------------------------

Permutation tau_pi(const AtMostPairPartition& p) {
  const auto r = block_order(p).labels();
  return star_word(r);
}

Permutation sigma_pi(const AtMostPairPartition& p) {
  std::vector<std::vector<int>> cycles;
  for (const auto& block : p.blocks()) {
    if (block.size() == 2) cycles.push_back(block);
  }
  return Permutation::from_cycles(cycles);
}

Permutation sigma_blue(const BicolouredPairPartition& rho) {
  std::vector<std::vector<int>> cycles;
  for (const auto& pr : rho.pairs()) {
    if (pr.colour == Colour::kBlue) cycles.push_back({pr.first, pr.second});
  }
  return Permutation::from_cycles(cycles);
}

AtMostPairPartition red_break(const BicolouredPairPartition& rho) {
  std::vector<std::vector<int>> blocks;
  for (const auto& pr : rho.pairs()) {
    if (pr.colour == Colour::kBlue) {
      blocks.push_back({pr.first, pr.second});
    } else {
      blocks.push_back({pr.first});
      blocks.push_back({pr.second});
    }
  }
  return AtMostPairPartition(SetPartition::from_blocks(rho.size(), blocks));
}

long long double_factorial_of_predecessor(int m) {
  if (m < -1) throw InputError("double factorial argument out of range");
  long long result = 1;
  for (int j = m - 1; j > 1; j -= 2) result *= j;
  return result;
}

}  // namespace starclt
