#include "starclt/algebra.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "starclt/errors.hpp"

namespace starclt {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

ExactScalar parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = trim(s.substr(0, slash));
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-') {
    throw InputError("not a rational number: '" + std::string(text) + "'");
  }
  boost::multiprecision::mpz_int n(std::string(num.front() == '+' ? num.substr(1) : num));
  boost::multiprecision::mpz_int d(std::string(den.front() == '+' ? den.substr(1) : den));
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return ExactScalar(n, d);
}

std::string to_string(const ExactScalar& x) {
  return x.str();
}

double approx(const ExactScalar& x) {
  return x.convert_to<double>();
}

nlohmann::json to_json(const ExactScalar& x) {
  return {{"num", numerator(x).str()}, {"den", denominator(x).str()}};
}

ExactScalar rational_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw InputError("rational JSON needs 'num' and 'den'");
  }
  return parse_rational(j.at("num").get<std::string>() + "/" +
                        j.at("den").get<std::string>());
}

struct WeightVector::PowerSumCache {
  std::shared_mutex mutex;
  std::unordered_map<int, ExactScalar> values;
};

WeightVector::WeightVector(std::vector<ExactScalar> weights)
    : weights_(std::move(weights)), cache_(std::make_shared<PowerSumCache>()) {
  if (weights_.size() < 2) {
    throw InputError("need at least two weights (d >= 2)");
  }
  ExactScalar total = 0;
  for (const auto& x : weights_) {
    if (x <= 0) throw InputError("weights must be positive, got " + starclt::to_string(x));
    total += x;
  }
  if (total != 1) {
    throw InputError("weights do not sum to 1 (sum is " + starclt::to_string(total) + ")");
  }
  std::sort(weights_.begin(), weights_.end(), std::greater<>());
}

WeightVector WeightVector::parse(std::string_view text) {
  std::vector<ExactScalar> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos
                                              ? std::string_view::npos
                                              : comma - start);
    values.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return WeightVector(std::move(values));
}

WeightVector WeightVector::uniform(int d) {
  if (d < 2) throw InputError("uniform weights need d >= 2");
  return WeightVector(std::vector<ExactScalar>(d, ExactScalar(1, d)));
}

ExactScalar WeightVector::power_sum(int n) const {
  if (n < 1) throw InputError("power sum index must be >= 1");
  {
    std::shared_lock lock(cache_->mutex);
    if (auto it = cache_->values.find(n); it != cache_->values.end()) {
      return it->second;
    }
  }
  ExactScalar sum = 0;
  for (const auto& x : weights_) {
    ExactScalar term = 1;
    for (int j = 0; j < n; ++j) term *= x;
    sum += term;
  }
  std::unique_lock lock(cache_->mutex);
  cache_->values.emplace(n, sum);
  return sum;
}

bool WeightVector::is_uniform() const {
  return weights_.front() == weights_.back();
}

std::string WeightVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) s += ',';
    s += starclt::to_string(weights_[i]);
  }
  return s;
}

ExactScalar power_sum(const WeightVector& w, int n) {
  return w.power_sum(n);
}

ExactScalar power_sum_or_dimension(const WeightVector& w, int n) {
  return n == 0 ? ExactScalar(w.size()) : w.power_sum(n);
}

ExactScalar character_from_orbit_sizes(const WeightVector& w,
                                       std::span<const int> sizes) {
  ExactScalar result = 1;
  for (int s : sizes) {
    if (s >= 2) result *= w.power_sum(s);
  }
  return result;
}

ExactScalar character(const WeightVector& w, const Permutation& p) {
  if (p.is_identity()) return 1;
  const auto sizes = orbits(p, p.support_bound()).sizes();
  return character_from_orbit_sizes(w, sizes);
}

nlohmann::json to_json(const WeightVector& w) {
  auto arr = nlohmann::json::array();
  for (const auto& x : w.weights()) arr.push_back(to_json(x));
  return arr;
}

}  // namespace starclt
