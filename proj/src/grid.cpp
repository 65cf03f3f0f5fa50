// Copyright 2026 The invbzf Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "invbzf/grid.hpp"

#include <random>
#include <stdexcept>

namespace invbzf {

Grid::Grid(int n, int denominator) : n_(n), den_(denominator) {
  if (n < 1 || n > 64) throw std::invalid_argument("grid needs 1 <= n <= 64");
  if (denominator < 1 || denominator > 1000) throw std::invalid_argument("grid step must be 1/D with 1 <= D <= 1000");
  if (static_cast<std::uint64_t>(denominator + 1) * (denominator + 1) * (n + 1) > (std::uint64_t{1} << 23))
    throw std::invalid_argument("grid counting table would be too large for this n and step");
  const std::size_t D = den_ + 1;
  table_.assign(D * (n_ + 1) * D, 0);
  auto at = [&](int m, int k, int c) -> std::uint64_t& { return table_[(static_cast<std::size_t>(k) * D + m) * D + c]; };
  for (int c = 0; c <= den_; ++c) at(0, 0, c) = 1;
  for (int k = 1; k <= n_; ++k)
    for (int m = 0; m <= den_; ++m)
      for (int c = 0; c <= den_; ++c) {
        // largest entry < c, or the first entry equals c
        std::uint64_t v = c > 0 ? at(m, k, c - 1) : (m == 0 ? 1 : 0);
        if (c > 0 && m >= c) {
          if (__builtin_add_overflow(v, at(m - c, k - 1, c), &v)) throw std::overflow_error("grid too large");
        }
        at(m, k, c) = v;
      }
  size_ = at(den_, n_, den_);
}

Grid Grid::from_step(int n, const Rational& step) {
  if (step <= 0 || step > 1) throw std::invalid_argument("grid step must lie in (0, 1]");
  if (step.get_num() != 1) throw std::invalid_argument("grid step must be 1/D for an integer D");
  if (!mpz_fits_sint_p(step.get_den_mpz_t())) throw std::invalid_argument("grid step too fine");
  return Grid(n, static_cast<int>(step.get_den().get_si()));
}

std::uint64_t Grid::count(int m, int k, int c) const {
  if (m < 0) return 0;
  if (c > den_) c = den_;
  const std::size_t D = den_ + 1;
  return table_[(static_cast<std::size_t>(k) * D + m) * D + c];
}

std::vector<int> Grid::unrank(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("grid index out of range");
  std::vector<int> parts(n_);
  int rest = den_;
  int cap = den_;
  for (int i = 0; i < n_; ++i) {
    const int k = n_ - i - 1;
    // smallest admissible value first: ascending lexicographic order
    int a = (rest + (k + 1) - 1) / (k + 1);
    for (; a <= std::min(cap, rest); ++a) {
      const std::uint64_t c = count(rest - a, k, a);
      if (index < c) break;
      index -= c;
    }
    parts[i] = a;
    rest -= a;
    cap = a;
  }
  return parts;
}

std::uint64_t Grid::rank(std::span<const int> parts) const {
  if (static_cast<int>(parts.size()) != n_) throw std::invalid_argument("grid point has the wrong length");
  std::uint64_t index = 0;
  int rest = den_;
  int cap = den_;
  for (int i = 0; i < n_; ++i) {
    const int k = n_ - i - 1;
    if (parts[i] > cap || parts[i] < 0) throw std::invalid_argument("not a grid point");
    for (int a = (rest + k) / (k + 1); a < parts[i]; ++a) index += count(rest - a, k, a);
    rest -= parts[i];
    cap = parts[i];
  }
  if (rest != 0) throw std::invalid_argument("not a grid point");
  return index;
}

bool Grid::next(std::vector<int>& parts) const {
  for (int i = n_ - 2; i >= 0; --i) {
    const int v = parts[i] + 1;
    if (i > 0 && v > parts[i - 1]) continue;
    int prefix = 0;
    for (int j = 0; j < i; ++j) prefix += parts[j];
    const int rest = den_ - prefix - v;
    const int k = n_ - 1 - i;
    if (rest < 0 || rest > k * v) continue;
    parts[i] = v;
    // most balanced suffix is the lexicographically smallest
    int r = rest;
    for (int j = i + 1; j < n_; ++j) {
      const int left = n_ - j;
      parts[j] = (r + left - 1) / left;
      r -= parts[j];
    }
    return true;
  }
  return false;
}

TargetVector Grid::target(std::span<const int> parts) const {
  std::vector<Rational> beta;
  for (int k : parts) {
    Rational r(k, den_);
    r.canonicalize();
    beta.push_back(std::move(r));
  }
  return TargetVector(std::move(beta));
}

std::vector<std::uint64_t> Grid::sample_indices(std::uint64_t count, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(bounded_draw(rng, size_));
  return out;
}

}  // namespace invbzf
