#include "starclt/finite_scale.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <set>
#include <stdexcept>

#include "starclt/errors.hpp"
#include "starclt/limit_moments.hpp"
#include "star_tally.hpp"

namespace starclt {

MixedTuple::MixedTuple(std::vector<std::optional<int>> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw InputError("mixed tuple must be non-empty");
  for (const auto& e : entries_) {
    if (e && *e < 1) throw InputError("mixed tuple indices must be >= 1");
  }
}

MixedTuple MixedTuple::parse(std::string_view text) {
  std::vector<std::optional<int>> entries;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                     : comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    if (piece == "A0") {
      entries.emplace_back(std::nullopt);
    } else {
      int value = 0;
      auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
      if (ec != std::errc() || ptr != piece.data() + piece.size()) {
        throw InputError("bad mixed tuple entry '" + std::string(piece) + "'");
      }
      entries.emplace_back(value);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return MixedTuple(std::move(entries));
}

MixedTuple MixedTuple::all_a0(int k) {
  if (k < 1) throw InputError("mixed tuple must be non-empty");
  return MixedTuple(std::vector<std::optional<int>>(k, std::nullopt));
}

int MixedTuple::marker_count() const {
  return static_cast<int>(std::count(entries_.begin(), entries_.end(), std::nullopt));
}

int MixedTuple::max_finite() const {
  int m = 0;
  for (const auto& e : entries_) {
    if (e) m = std::max(m, *e);
  }
  return m;
}

std::string MixedTuple::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += entries_[i] ? std::to_string(*entries_[i]) : "A0";
  }
  return s;
}

ExactScalar mixed_trace_with_fresh(const WeightVector& w, const MixedTuple& t,
                                   std::span<const int> fresh) {
  if (static_cast<int>(fresh.size()) != t.marker_count()) {
    throw InputError("need one fresh index per A0 marker");
  }
  std::set<int> finite;
  for (const auto& e : t.entries()) {
    if (e) finite.insert(*e);
  }
  std::set<int> chosen;
  for (int f : fresh) {
    if (f < 1 || finite.count(f) || !chosen.insert(f).second) {
      throw InputError("fresh indices must be distinct, positive and unused");
    }
  }
  std::vector<int> indices;
  indices.reserve(t.entries().size());
  std::size_t next = 0;
  for (const auto& e : t.entries()) indices.push_back(e ? *e : fresh[next++]);
  return character_from_orbit_sizes(w, star_word_cycle_type(indices));
}

ExactScalar mixed_trace(const WeightVector& w, const MixedTuple& t) {
  std::vector<int> fresh;
  for (int j = 1; j <= t.marker_count(); ++j) fresh.push_back(t.max_finite() + j);
  return mixed_trace_with_fresh(w, t, fresh);
}

ExactScalar centered_trace(const WeightVector& w, const SetPartition& p) {
  return t_incl_excl(w, p);
}

ExactScalar SnMoment::value() const {
  if (!is_rational()) {
    throw std::logic_error("odd moment of s_n with nonzero coefficient is not rational");
  }
  if (coefficient == 0) return 0;
  ExactScalar scale = 1;
  for (int j = 0; j < k / 2; ++j) scale *= n;
  return coefficient / scale;
}

std::string SnMoment::to_string() const {
  if (is_rational()) return starclt::to_string(value());
  return starclt::to_string(coefficient) + " * " + std::to_string(n) + "^(-" +
         std::to_string(k) + "/2)";
}

SnMoment s_n_moment(const WeightVector& w, long long n, int k) {
  if (n < 1) throw InputError("n must be >= 1");
  if (k < 0) throw InputError("moment order must be >= 0");
  if (k > 10) throw InfeasibleError("s_n moments are computed for k <= 10");
  SnMoment result{ExactScalar(1), n, k};
  if (k == 0) return result;

  // One tally per block count, so the falling factorial multiplies a single
  // evaluated value instead of every term.
  std::vector<detail::CharacterTally> by_blocks(k + 1);
  for_each_partition(k, [&](const SetPartition& p) {
    if (p.has_singleton()) return;
    const int blocks = p.block_count();
    std::array<int, 32> idx{};
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      for (int h = 0; h < k; ++h) {
        idx[h] = (mask >> h) & 1u ? blocks + 1 + h : p.labels()[h] + 1;
      }
      by_blocks[blocks].add(detail::star_word_key(idx.data(), k),
                            std::popcount(mask) % 2 ? -1 : 1);
    }
  });

  ExactScalar coefficient = 0;
  for (int b = 1; b <= k; ++b) {
    if (b > n) break;
    ExactScalar falling = 1;
    for (int j = 0; j < b; ++j) falling *= n - j;
    coefficient += falling * by_blocks[b].evaluate(w);
  }
  result.coefficient = coefficient;
  return result;
}

ExactScalar lln_variance(const WeightVector& w, long long n) {
  if (n < 1) throw InputError("n must be >= 1");
  return (1 - w.power_sum(3)) / ExactScalar(n);
}

ExactScalar lln_variance_expansion(const WeightVector& w, long long n) {
  if (n < 1) throw InputError("n must be >= 1");
  const ExactScalar same = mixed_trace(w, MixedTuple({1, 1}));
  const ExactScalar distinct = mixed_trace(w, MixedTuple({1, 2}));
  const ExactScalar cross = mixed_trace(w, MixedTuple({1, std::nullopt}));
  const ExactScalar a0_a0 = mixed_trace(w, MixedTuple::all_a0(2));
  const ExactScalar nn(n);
  return (nn * same + (nn * nn - nn) * distinct) / (nn * nn) - 2 * cross + a0_a0;
}

std::vector<SpectralAtom> a0_spectral(const WeightVector& w) {
  std::vector<SpectralAtom> atoms;
  for (const auto& wi : w.weights()) {
    if (!atoms.empty() && atoms.back().atom == wi) {
      atoms.back().mass += wi;
    } else {
      atoms.push_back({wi, wi});
    }
  }
  return atoms;
}

ExactScalar spectral_moment(std::span<const SpectralAtom> atoms, int k) {
  if (k < 0) throw InputError("moment order must be >= 0");
  ExactScalar total = 0;
  for (const auto& a : atoms) {
    ExactScalar term = a.mass;
    for (int j = 0; j < k; ++j) term *= a.atom;
    total += term;
  }
  return total;
}

}  // namespace starclt
