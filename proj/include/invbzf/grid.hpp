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

// Grid of sorted targets with entries on multiples of 1/D. A point is given
// by its numerators k_1 >= ... >= k_n >= 0 with sum D.

#ifndef INVBZF_GRID_HPP_
#define INVBZF_GRID_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "invbzf/rational.hpp"
#include "invbzf/target.hpp"

namespace invbzf {

class Grid {
 public:
  // Throws std::invalid_argument unless n >= 1, 1 <= denominator <= 1000 and
  // the (D+1)^2 (n+1) counting table stays below 2^23 entries.
  Grid(int n, int denominator);
  // The step must be 1/D for an integer D.
  static Grid from_step(int n, const Rational& step);

  int players() const { return n_; }
  int denominator() const { return den_; }
  std::uint64_t size() const { return size_; }

  // Points in ascending lexicographic order of (beta_1, ..., beta_n).
  std::vector<int> unrank(std::uint64_t index) const;
  std::uint64_t rank(std::span<const int> parts) const;
  // Advances to the next point; false after the last one.
  bool next(std::vector<int>& parts) const;

  template <class F>
  void for_each(std::uint64_t begin, std::uint64_t end, F&& f) const {
    if (begin >= end || begin >= size_) return;
    std::vector<int> p = unrank(begin);
    for (std::uint64_t i = begin; i < end; ++i) {
      f(i, static_cast<const std::vector<int>&>(p));
      if (!next(p)) break;
    }
  }

  TargetVector target(std::span<const int> parts) const;

  // Uniform draws with replacement, reproducible from seed.
  std::vector<std::uint64_t> sample_indices(std::uint64_t count, std::uint64_t seed) const;

 private:
  // Sequences of length k, entries in [0, c], non-increasing, summing to m.
  std::uint64_t count(int m, int k, int c) const;

  int n_;
  int den_;
  std::vector<std::uint64_t> table_;  // (m, k, c) -> count
  std::uint64_t size_ = 0;
};

// Unbiased draw from [0, bound), bound >= 1, by rejection. Spelled out so
// that a seed gives the same draws with every standard library.
template <class Engine>
std::uint64_t bounded_draw(Engine& engine, std::uint64_t bound) {
  const std::uint64_t reject_from = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  for (;;) {
    const std::uint64_t x = engine();
    if (x <= reject_from) return x % bound;
  }
}

}  // namespace invbzf

#endif  // INVBZF_GRID_HPP_
