#include "starclt/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include <boost/container_hash/hash.hpp>

#include "starclt/errors.hpp"

namespace starclt {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(n + 1, false);
  for (int img : images_) {
    if (img < 1 || img > n || seen[img]) {
      throw InputError("permutation images are not a bijection of {1.." +
                       std::to_string(n) + "}");
    }
    seen[img] = true;
  }
  trim();
}

void Permutation::trim() {
  while (!images_.empty() &&
         images_.back() == static_cast<int>(images_.size())) {
    images_.pop_back();
  }
}

Permutation Permutation::from_cycles(
    const std::vector<std::vector<int>>& cycles) {
  Permutation result;
  // Cycles are multiplied left to right, so the last one acts first.
  for (const auto& cycle : cycles) {
    if (cycle.empty()) continue;
    int bound = 0;
    for (int m : cycle) {
      if (m < 1) throw InputError("cycle entries must be positive integers");
      bound = std::max(bound, m);
    }
    std::vector<int> images(bound);
    std::iota(images.begin(), images.end(), 1);
    std::vector<bool> used(bound + 1, false);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (used[cycle[i]]) throw InputError("repeated entry inside a cycle");
      used[cycle[i]] = true;
      images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
    }
    result = result * Permutation(std::move(images));
  }
  return result;
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw InputError("empty permutation text");
  while (pos < text.size()) {
    if (text[pos] != '(') {
      throw InputError("expected '(' in cycle notation: " + std::string(text));
    }
    ++pos;
    std::vector<int> cycle;
    skip_ws();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      cycles.push_back(cycle);
      skip_ws();
      continue;
    }
    while (true) {
      skip_ws();
      int value = 0;
      auto [ptr, ec] =
          std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc() || value < 1) {
        throw InputError("bad cycle entry in: " + std::string(text));
      }
      pos = static_cast<std::size_t>(ptr - text.data());
      cycle.push_back(value);
      skip_ws();
      if (pos >= text.size()) throw InputError("unterminated cycle");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      throw InputError("unexpected character in cycle notation");
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return from_cycles(cycles);
}

int Permutation::operator()(int m) const {
  if (m >= 1 && m <= support_bound()) return images_[m - 1];
  return m;
}

std::vector<int> Permutation::images(int bound) const {
  if (bound < support_bound()) {
    throw InputError("image bound smaller than support");
  }
  std::vector<int> out(bound);
  for (int m = 1; m <= bound; ++m) out[m - 1] = (*this)(m);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i] - 1] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(inv));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  for (auto& orbit : orbits(*this, support_bound()).orbits) {
    if (orbit.size() >= 2) out.push_back(std::move(orbit));
  }
  return out;
}

std::string Permutation::to_string() const {
  if (is_identity()) return "()";
  std::string s;
  for (const auto& cycle : cycles()) {
    s += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(cycle[i]);
    }
    s += ')';
  }
  return s;
}

long long Permutation::order() const {
  long long result = 1;
  for (const auto& cycle : cycles()) {
    result = std::lcm(result, static_cast<long long>(cycle.size()));
  }
  return result;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  const int bound = std::max(p.support_bound(), q.support_bound());
  std::vector<int> images(bound);
  for (int m = 1; m <= bound; ++m) images[m - 1] = p(q(m));
  return Permutation(std::move(images));
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

Permutation star_transposition(int n) {
  if (n < 1) throw InputError("star transposition index must be >= 1");
  return Permutation::from_cycles({{1, n + 1}});
}

Permutation forward_cycle(int n) {
  if (n < 1) throw InputError("forward cycle length must be >= 1");
  std::vector<int> images(n);
  for (int m = 1; m <= n; ++m) images[m - 1] = m % n + 1;
  return Permutation(std::move(images));
}

std::vector<int> OrbitDecomposition::sizes() const {
  std::vector<int> out;
  out.reserve(orbits.size());
  for (const auto& o : orbits) out.push_back(static_cast<int>(o.size()));
  return out;
}

OrbitDecomposition orbits(const Permutation& p, int domain_bound) {
  if (domain_bound < p.support_bound()) {
    throw InputError("orbit domain bound " + std::to_string(domain_bound) +
                     " is smaller than the support " +
                     std::to_string(p.support_bound()));
  }
  OrbitDecomposition result;
  result.domain_bound = domain_bound;
  std::vector<bool> seen(domain_bound + 1, false);
  for (int start = 1; start <= domain_bound; ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit;
    for (int m = start; !seen[m]; m = p(m)) {
      seen[m] = true;
      orbit.push_back(m);
    }
    result.orbits.push_back(std::move(orbit));
  }
  return result;
}

Permutation induced(const Permutation& p, std::span<const int> subset) {
  if (subset.empty()) throw InputError("induced permutation needs a non-empty set");
  int bound = p.support_bound();
  for (int a : subset) {
    if (a < 1) throw InputError("induced set must hold positive integers");
    bound = std::max(bound, a);
  }
  std::vector<bool> member(bound + 1, false);
  for (int a : subset) member[a] = true;

  std::vector<int> images(bound);
  std::iota(images.begin(), images.end(), 1);
  for (int a : subset) {
    int m = p(a);
    while (!member[m]) m = p(m);
    images[a - 1] = m;
  }
  return Permutation(std::move(images));
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.to_string();
}

}  // namespace starclt

std::size_t std::hash<starclt::Permutation>::operator()(
    const starclt::Permutation& p) const noexcept {
  const auto images = p.images(p.support_bound());
  return boost::hash_range(images.begin(), images.end());
}

namespace starclt {

namespace {

// Right-multiplying by (1, n+1) swaps the images of 1 and n+1.
std::vector<int> star_word_images(std::span<const int> indices) {
  int bound = 1;
  for (int n : indices) {
    if (n < 1) throw InputError("star transposition index must be >= 1");
    bound = std::max(bound, n + 1);
  }
  std::vector<int> images(bound);
  std::iota(images.begin(), images.end(), 1);
  for (int n : indices) std::swap(images[0], images[n]);
  return images;
}

}  // namespace

std::vector<int> star_word_cycle_type(std::span<const int> indices) {
  const auto images = star_word_images(indices);
  const int bound = static_cast<int>(images.size());
  std::vector<bool> seen(bound + 1, false);
  std::vector<int> sizes;
  for (int start = 1; start <= bound; ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (int m = start; !seen[m]; m = images[m - 1]) {
      seen[m] = true;
      ++len;
    }
    if (len >= 2) sizes.push_back(len);
  }
  return sizes;
}

Permutation star_word(std::span<const int> indices) {
  return Permutation(star_word_images(indices));
}

}  // namespace starclt
