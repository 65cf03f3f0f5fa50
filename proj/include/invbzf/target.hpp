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

// Target power vectors and the distances used to compare them.

#ifndef INVBZF_TARGET_HPP_
#define INVBZF_TARGET_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "invbzf/rational.hpp"

namespace invbzf {

class TargetVector {
 public:
  // Non-negative entries summing to exactly 1; throws std::invalid_argument
  // otherwise. error_bound is the certified distance (per entry) to the
  // real-valued target it approximates; 0 for exact targets.
  explicit TargetVector(std::vector<Rational> beta, Rational error_bound = 0);

  // Non-negative entries with arbitrary sum, e.g. the truncated major-player
  // vector compared against k-player games.
  static TargetVector unnormalized(std::vector<Rational> beta);

  int size() const { return static_cast<int>(beta_.size()); }
  const Rational& operator[](int i) const { return beta_[i]; }
  const std::vector<Rational>& values() const { return beta_; }
  const Rational& error_bound() const { return error_bound_; }
  bool normalized() const { return normalized_; }

  friend bool operator==(const TargetVector&, const TargetVector&) = default;

 private:
  TargetVector() = default;
  std::vector<Rational> beta_;
  Rational error_bound_;
  bool normalized_ = true;
};

struct PopulationVector {
  std::vector<std::string> names;
  std::vector<std::int64_t> populations;

  int size() const { return static_cast<int>(populations.size()); }
};

// CSV with header "name,population", one constituency per row. Throws
// std::runtime_error for unreadable files and std::invalid_argument for
// malformed rows, non-positive populations, duplicate names or no rows.
PopulationVector load_population_csv(const std::string& path);
PopulationVector parse_population_csv(const std::string& text);

// beta_i = sqrt(p_i) / sum_j sqrt(p_j), as rationals summing to exactly 1.
// Each entry is within error_bound() = (n+1) 10^-digits of the real value;
// exact when every p_i is a perfect square.
TargetVector sqrt_rule_target(const PopulationVector& p, int digits = 50);

enum class MetricKind { kD1, kDInf, kD1Weighted };

class Metric {
 public:
  static Metric d1();
  static Metric dinf();
  // Weights sqrt(p_i / sum p), held as rationals r_i with
  // r_i <= sqrt(p_i / sum p) < r_i + weight_error().
  static Metric d1_weighted(const PopulationVector& p, int digits = 50);

  MetricKind kind() const { return kind_; }
  // "d1", "dinf" or "d1w"
  std::string name() const;
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& weight_error() const { return weight_error_; }
  const std::optional<PopulationVector>& population() const { return population_; }

 private:
  explicit Metric(MetricKind k) : kind_(k) {}
  MetricKind kind_;
  std::vector<Rational> weights_;
  Rational weight_error_;
  std::optional<PopulationVector> population_;
};

// Throws std::invalid_argument on length mismatch (and, for d1w, when the
// population has a different length). For d1w the result is the exact value
// with the rational weights; the true value lies within
// weight_error() * d1(x, y) above it.
Rational distance(const Metric& m, std::span<const Rational> x, std::span<const Rational> y);

}  // namespace invbzf

#endif  // INVBZF_TARGET_HPP_
