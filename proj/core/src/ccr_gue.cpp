#include "starclt/ccr_gue.hpp"

#include <map>

#include "starclt/errors.hpp"
#include "starclt/partitions.hpp"

namespace starclt {

CovarianceMatrix CovarianceMatrix::from_weights(const WeightVector& w) {
  CovarianceMatrix c;
  c.d_ = w.size();
  c.entries_.reserve(static_cast<std::size_t>(c.d_) * c.d_);
  for (int i = 1; i <= c.d_; ++i) {
    for (int j = 1; j <= c.d_; ++j) {
      c.entries_.push_back(i == j ? w[i] - w[i] * w[i] : -w[i] * w[j]);
    }
  }
  return c;
}

const ExactScalar& CovarianceMatrix::operator()(int i, int j) const {
  if (i < 1 || j < 1 || i > d_ || j > d_) {
    throw InputError("covariance index out of range");
  }
  return entries_[static_cast<std::size_t>(i - 1) * d_ + (j - 1)];
}

ExactScalar CovarianceMatrix::row_sum(int i) const {
  ExactScalar s = 0;
  for (int j = 1; j <= d_; ++j) s += (*this)(i, j);
  return s;
}

namespace {

// Sum over pairings of the positions not yet used, of the product of
// pair_value(p, q) over the pairs. `used` is a bitmask over positions.
template <typename PairValue>
ExactScalar pairing_sum(int k, std::uint32_t used, const PairValue& pair_value) {
  int first = 0;
  while (first < k && ((used >> first) & 1u)) ++first;
  if (first == k) return 1;
  ExactScalar total = 0;
  for (int second = first + 1; second < k; ++second) {
    if ((used >> second) & 1u) continue;
    ExactScalar factor = pair_value(first, second);
    if (factor == 0) continue;
    total += factor *
             pairing_sum(k, used | (1u << first) | (1u << second), pair_value);
  }
  return total;
}

void check_word_length(std::size_t k) {
  if (k > 30) throw InfeasibleError("word too long for pairing enumeration");
}

}  // namespace

ExactScalar gaussian_wick(const CovarianceMatrix& c, std::span<const int> idx) {
  for (int i : idx) {
    if (i < 1 || i > c.size()) throw InputError("Wick index out of range");
  }
  check_word_length(idx.size());
  if (idx.size() % 2) return 0;
  return pairing_sum(static_cast<int>(idx.size()), 0,
                     [&](int p, int q) { return c(idx[p], idx[q]); });
}

StarWord parse_star_word(std::string_view text) {
  StarWord word;
  for (char ch : text) {
    if (ch == '1') {
      word.push_back(Star::kOne);
    } else if (ch == '*') {
      word.push_back(Star::kStar);
    } else if (ch != ' ' && ch != ',') {
      throw InputError("star words use only '1' and '*'");
    }
  }
  if (word.empty()) throw InputError("empty star word");
  return word;
}

std::string to_string(const StarWord& word) {
  std::string s;
  for (Star e : word) s += e == Star::kOne ? '1' : '*';
  return s;
}

CcrParameters::CcrParameters(ExactScalar one_star_value, ExactScalar star_one_value)
    : one_star(std::move(one_star_value)), star_one(std::move(star_one_value)) {
  if (one_star <= 0 || star_one <= 0) {
    throw InputError("CCR parameters must be positive");
  }
}

ExactScalar ccr_wick(const CcrParameters& omega, const StarWord& word) {
  check_word_length(word.size());
  if (word.size() % 2) return 0;
  return pairing_sum(static_cast<int>(word.size()), 0, [&](int p, int q) -> ExactScalar {
    if (word[p] == word[q]) return 0;
    return word[p] == Star::kOne ? omega.one_star : omega.star_one;
  });
}

ExactScalar ccr_normal_order_oracle(const CcrParameters& omega, const StarWord& word) {
  const ExactScalar commutator = omega.star_one - omega.one_star;
  std::map<StarWord, ExactScalar> pending{{word, ExactScalar(1)}};
  ExactScalar total = 0;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const StarWord& current = node.key();
    const ExactScalar& coeff = node.mapped();
    std::size_t pos = 0;
    while (pos + 1 < current.size() &&
           !(current[pos] == Star::kStar && current[pos + 1] == Star::kOne)) {
      ++pos;
    }
    if (pos + 1 >= current.size()) {
      // Normal ordered: a^p a*^q.
      const auto p = std::count(current.begin(), current.end(), Star::kOne);
      const auto q = static_cast<long>(current.size()) - p;
      if (p == q) {
        ExactScalar value = coeff;
        for (long j = 1; j <= p; ++j) value *= omega.one_star * j;
        total += value;
      }
      continue;
    }
    StarWord swapped = current;
    std::swap(swapped[pos], swapped[pos + 1]);
    pending[swapped] += coeff;
    if (commutator != 0) {
      StarWord shorter = current;
      shorter.erase(shorter.begin() + static_cast<long>(pos),
                    shorter.begin() + static_cast<long>(pos) + 2);
      pending[shorter] += coeff * commutator;
    }
  }
  return total;
}

namespace {

void check_spec(const WeightVector& w, const EntryMomentSpec& spec) {
  if (spec.row.size() != spec.col.size()) {
    throw InputError("entry word needs equally long row and column tuples");
  }
  for (std::size_t p = 0; p < spec.row.size(); ++p) {
    if (spec.row[p] < 1 || spec.row[p] > w.size() || spec.col[p] < 1 ||
        spec.col[p] > w.size()) {
      throw InputError("matrix entry index out of range");
    }
  }
  check_word_length(spec.row.size());
}

ExactScalar bicoloured_sum(const WeightVector& w, const EntryMomentSpec& spec, int k,
                           std::uint32_t used) {
  int p = 0;
  while (p < k && ((used >> p) & 1u)) ++p;
  if (p == k) return 1;
  const auto& i = spec.row;
  const auto& j = spec.col;
  ExactScalar total = 0;
  for (int q = p + 1; q < k; ++q) {
    if ((used >> q) & 1u) continue;
    ExactScalar factor = 0;
    if (i[p] == j[q] && i[q] == j[p]) factor += w[i[q]];
    if (i[p] == j[p] && i[q] == j[q]) factor -= w[i[p]] * w[i[q]];
    if (factor == 0) continue;
    total += factor * bicoloured_sum(w, spec, k, used | (1u << p) | (1u << q));
  }
  return total;
}

EntryFactors factorize(const WeightVector& w, const CovarianceMatrix& cov,
                       const EntryMomentSpec& spec) {
  EntryFactors f;
  std::map<std::pair<int, int>, StarWord> classes;
  for (std::size_t p = 0; p < spec.row.size(); ++p) {
    const int r = spec.row[p];
    const int c = spec.col[p];
    if (r == c) {
      f.diagonal_indices.push_back(r);
    } else {
      classes[{std::min(r, c), std::max(r, c)}].push_back(r < c ? Star::kOne : Star::kStar);
    }
  }
  for (auto& [uv, word] : classes) {
    const auto ones = std::count(word.begin(), word.end(), Star::kOne);
    EntryFactors::OffDiagonal entry{uv.first, uv.second, std::move(word), 0};
    if (2 * ones == static_cast<long>(entry.word.size())) {
      // a_{u,v} with u < v carries omega_(1,*) = w_v and omega_(*,1) = w_u.
      entry.value = ccr_wick(CcrParameters(w[uv.second], w[uv.first]), entry.word);
    }
    f.off_diagonal.push_back(std::move(entry));
  }
  f.diagonal = gaussian_wick(cov, f.diagonal_indices);
  return f;
}

}  // namespace

ExactScalar entry_moment(const WeightVector& w, const EntryMomentSpec& spec) {
  check_spec(w, spec);
  const int k = static_cast<int>(spec.row.size());
  if (k % 2) return 0;
  return bicoloured_sum(w, spec, k, 0);
}

ExactScalar EntryFactors::product() const {
  ExactScalar value = diagonal;
  for (const auto& entry : off_diagonal) value *= entry.value;
  return value;
}

EntryFactors entry_factors(const WeightVector& w, const EntryMomentSpec& spec) {
  check_spec(w, spec);
  return factorize(w, CovarianceMatrix::from_weights(w), spec);
}

ExactScalar entry_moment_factored(const WeightVector& w, const EntryMomentSpec& spec) {
  return entry_factors(w, spec).product();
}

ExactScalar matrix_moment(const WeightVector& w, int k) {
  if (k < 0) throw InputError("moment order must be >= 0");
  if (k == 0) return 1;
  if (k % 2) return 0;
  const int d = w.size();
  long long tuples = 1;
  for (int h = 0; h < k; ++h) {
    tuples *= d;
    if (tuples > kMaxMatrixTuples) {
      throw InfeasibleError("matrix moment needs more than " +
                            std::to_string(kMaxMatrixTuples) + " index tuples");
    }
  }
  const auto cov = CovarianceMatrix::from_weights(w);
  EntryMomentSpec spec{std::vector<int>(k, 1), std::vector<int>(k, 1)};
  std::vector<int>& i = spec.row;
  ExactScalar total = 0;
  while (true) {
    for (int h = 0; h < k; ++h) spec.col[h] = i[(h + 1) % k];
    ExactScalar term = factorize(w, cov, spec).product();
    if (term != 0) total += w[i[0]] * term;
    int h = k - 1;
    while (h >= 0 && i[h] == d) i[h--] = 1;
    if (h < 0) break;
    ++i[h];
  }
  return total;
}

ExactScalar gue_moment(int d, int k) {
  if (d < 1) throw InputError("GUE dimension must be >= 1");
  if (k < 0) throw InputError("moment order must be >= 0");
  if (k > 10) throw InfeasibleError("GUE moments are enumerated for k <= 10");
  if (k == 0) return 1;
  if (k % 2) return 0;
  ExactScalar total = 0;
  for_each_pairing(k, [&](const SetPartition& rho) {
    std::vector<int> partner(k + 1);
    for (const auto& b : rho.blocks()) {
      partner[b[0]] = b[1];
      partner[b[1]] = b[0];
    }
    std::vector<bool> seen(k + 1, false);
    int cycles = 0;
    for (int start = 1; start <= k; ++start) {
      if (seen[start]) continue;
      ++cycles;
      for (int m = start; !seen[m]; m = partner[m] % k + 1) seen[m] = true;
    }
    const int exponent = cycles - 1 - k / 2;
    ExactScalar term = 1;
    for (int e = 0; e < std::abs(exponent); ++e) term *= d;
    total += exponent >= 0 ? term : ExactScalar(1) / term;
  });
  return total;
}

ExactScalar convolution_rhs(int d, int k) {
  if (d < 2) throw InputError("convolution identity needs d >= 2");
  if (k < 0) throw InputError("moment order must be >= 0");
  const auto w = WeightVector::uniform(d);
  const ExactScalar variance(1, d * d);
  ExactScalar total = 0;
  ExactScalar variance_power = 1;
  for (int j = 0; 2 * j <= k; ++j) {
    long long binom = 1;
    for (int t = 0; t < 2 * j; ++t) binom = binom * (k - t) / (t + 1);
    total += ExactScalar(binom) * ExactScalar(double_factorial_of_predecessor(2 * j)) *
             variance_power * matrix_moment(w, k - 2 * j);
    variance_power *= variance;
  }
  return total;
}

bool convolution_check(int d, int k) { return gue_moment(d, k) == convolution_rhs(d, k); }

}  // namespace starclt
