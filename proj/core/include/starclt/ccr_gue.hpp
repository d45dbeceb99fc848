#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "starclt/algebra.hpp"

namespace starclt {

/// c_ii = w_i - w_i^2, c_ij = -w_i w_j: the covariance of the diagonal of the
/// traceless matrix model. Indices are 1-based.
class CovarianceMatrix {
 public:
  static CovarianceMatrix from_weights(const WeightVector& w);

  int size() const { return d_; }
  const ExactScalar& operator()(int i, int j) const;
  ExactScalar row_sum(int i) const;

 private:
  int d_ = 0;
  std::vector<ExactScalar> entries_;
};

/// Pairing sum of covariance products over the positions of `idx`.
ExactScalar gaussian_wick(const CovarianceMatrix& c, std::span<const int> idx);

enum class Star : std::uint8_t { kOne, kStar };
using StarWord = std::vector<Star>;

/// "1*1*" style text; '1' is the plain letter, '*' the adjoint.
StarWord parse_star_word(std::string_view text);
std::string to_string(const StarWord& word);

/// omega_(1,*) and omega_(*,1) of one CCR-Gaussian variable; both > 0.
struct CcrParameters {
  ExactScalar one_star;
  ExactScalar star_one;

  CcrParameters(ExactScalar one_star_value, ExactScalar star_one_value);
};

/// Pairing sum where a pair p < q contributes omega_(eps(p), eps(q)) and
/// like letters contribute 0.
ExactScalar ccr_wick(const CcrParameters& omega, const StarWord& word);

/// Normal-orders the word with a* a = a a* + (omega_(*,1) - omega_(1,*)) and
/// reads off phi(a^p a*^q) = [p = q] p! omega_(1,*)^p.
ExactScalar ccr_normal_order_oracle(const CcrParameters& omega, const StarWord& word);

/// The word a_{row(1),col(1)} ... a_{row(k),col(k)} of matrix entries.
struct EntryMomentSpec {
  std::vector<int> row;
  std::vector<int> col;
};

/// Sum over bicoloured pairings: a blue pair p < q contributes
/// [row(p) = col(q)][row(q) = col(p)] w_{row(q)}, a red pair
/// [row(p) = col(p)][row(q) = col(q)] (-w_{row(p)} w_{row(q)}).
ExactScalar entry_moment(const WeightVector& w, const EntryMomentSpec& spec);

/// The same moment split over independent entries: the diagonal letters
/// together, and each unordered pair {u, v} of off-diagonal indices apart.
struct EntryFactors {
  struct OffDiagonal {
    int u = 0;  // u < v
    int v = 0;
    StarWord word;
    ExactScalar value;
  };

  std::vector<int> diagonal_indices;
  ExactScalar diagonal = 1;
  std::vector<OffDiagonal> off_diagonal;

  ExactScalar product() const;
};

EntryFactors entry_factors(const WeightVector& w, const EntryMomentSpec& spec);
ExactScalar entry_moment_factored(const WeightVector& w, const EntryMomentSpec& spec);

/// Largest number of index tuples matrix_moment will enumerate.
inline constexpr long long kMaxMatrixTuples = 10'000'000;

/// phi_w(M^k) = sum_i w_{i(1)} phi(a_{i(1),i(2)} ... a_{i(k),i(1)}).
ExactScalar matrix_moment(const WeightVector& w, int k);

/// E tr_d(G^k) for the GUE with E|g_ij|^2 = 1/d, as a sum over pairings of
/// d^{#orbits(eta_k sigma) - 1 - k/2}.
ExactScalar gue_moment(int d, int k);

/// sum_j C(k,2j) (2j-1)!! d^{-2j} matrix_moment(uniform(d), k-2j).
ExactScalar convolution_rhs(int d, int k);
bool convolution_check(int d, int k);

}  // namespace starclt
