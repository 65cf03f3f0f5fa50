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


#include "invbzf/local_search.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "invbzf/heuristics.hpp"
#include "invbzf/reference.hpp"

namespace invbzf {

namespace {

struct Point {
  std::int64_t quota;
  std::vector<std::int64_t> w;
  Rational distance;
};

bool before(const Point& a, const Point& b) {
  if (a.w != b.w) return a.w < b.w;
  return a.quota < b.quota;
}

class Climber {
 public:
  Climber(const TargetVector& beta, const Metric& metric, std::int64_t max_weight)
      : beta_(beta), metric_(metric), max_weight_(max_weight), n_(beta.size()) {}

  std::uint64_t evaluations() const { return evaluations_; }

  // Fills p.distance; false if (q; w) is not a simple game.
  bool evaluate(Point& p) {
    std::int64_t sum = 0;
    for (auto x : p.w) sum += x;
    if (p.quota < 1 || p.quota > sum) return false;
    ++evaluations_;
    p.distance = distance(metric_, pbi(swings(WeightedGame(p.quota, p.w))), beta_.values());
    return true;
  }

  Point start(std::mt19937_64& rng) {
    Rational top = 0, sq = 0;
    for (const auto& b : beta_.values()) top = std::max(top, b), sq += b * b;
    // log-uniform scale, so small weight ranges are drawn as often as large ones
    const double hi = to_double(max_weight_ / top);
    std::uniform_real_distribution<double> log_scale(0, std::log(std::max(1.0, hi)));
    const double c = std::exp(log_scale(rng));
    // randomized rounding: players with equal targets may get different weights
    std::uniform_real_distribution<double> offset(0, 1);
    Point p;
    std::int64_t sum = 0;
    for (const auto& b : beta_.values()) {
      const double x = std::floor(c * to_double(b) + offset(rng));
      p.w.push_back(std::clamp<std::int64_t>(static_cast<std::int64_t>(x), 0, max_weight_));
      sum += p.w.back();
    }
    if (sum == 0) {
      const auto it = std::max_element(beta_.values().begin(), beta_.values().end());
      p.w[it - beta_.values().begin()] = 1;
      sum = 1;
    }
    const double qstar = (1 + std::sqrt(to_double(sq))) / 2;
    p.quota = std::clamp<std::int64_t>(std::llround(std::ceil(qstar * static_cast<double>(sum))), 1, sum);
    evaluate(p);
    return p;
  }

  // Best strictly improving neighbour, if any.
  std::optional<Point> step(const Point& p) {
    std::optional<Point> best;
    auto consider = [&](Point q) {
      if (!evaluate(q) || q.distance >= p.distance) return;
      if (!best || q.distance < best->distance || (q.distance == best->distance && before(q, *best)))
        best = std::move(q);
    };
    std::int64_t sum = 0;
    for (auto x : p.w) sum += x;
    for (int i = 0; i < n_; ++i)
      for (int d : {-1, 1}) {
        if (p.w[i] + d < 0 || p.w[i] + d > max_weight_) continue;
        for (std::int64_t q = 1; q <= sum + d; ++q) {
          Point nb{q, p.w, 0};
          nb.w[i] += d;
          consider(std::move(nb));
        }
      }
    for (std::int64_t q = 1; q <= sum; ++q)
      if (q != p.quota) consider(Point{q, p.w, 0});
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        if (p.w[i] == p.w[j]) continue;
        Point q{p.quota, p.w, 0};
        std::swap(q.w[i], q.w[j]);
        consider(std::move(q));
      }
    return best;
  }

 private:
  const TargetVector& beta_;
  const Metric& metric_;
  std::int64_t max_weight_;
  int n_;
  std::uint64_t evaluations_ = 0;
};

}  // namespace

SolveResult hill_climb(const TargetVector& beta, const Metric& metric, const SearchConfig& config,
                       std::vector<std::vector<Rational>>* traces) {
  const int n = beta.size();
  if (n > kMaxTablePlayers) throw std::invalid_argument("hill climbing supports n <= 24");
  if (config.restarts < 1) throw std::invalid_argument("restarts must be at least 1");
  const std::int64_t max_weight = config.max_weight == 0 ? 4 * n : config.max_weight;
  if (max_weight < 1) throw std::invalid_argument("max_weight must be at least 1");

  Climber climber(beta, metric, max_weight);
  std::optional<Point> best;
  std::uint64_t steps = 0;
  for (int r = 0; r < config.restarts; ++r) {
    std::seed_seq seq{config.seed, static_cast<std::uint64_t>(r)};
    std::mt19937_64 rng(seq);
    Point p = climber.start(rng);
    std::vector<Rational> trace{p.distance};
    for (std::uint64_t s = 0; s < config.max_steps; ++s) {
      if (config.stop_at && p.distance <= *config.stop_at) break;
      auto next = climber.step(p);
      if (!next) break;
      p = std::move(*next);
      trace.push_back(p.distance);
      ++steps;
    }
    if (traces) traces->push_back(std::move(trace));
    if (!best || p.distance < best->distance || (p.distance == best->distance && before(p, *best))) best = p;
    if (config.stop_at && best->distance <= *config.stop_at) break;
  }

  WeightedGame w(best->quota, best->w);
  return SolveResult{realize(w), best->distance, SolveStatus::kHeuristicOnly, 0, best->distance, steps,
                     climber.evaluations(), w};
}

TerminationQuantiles termination_quantiles(int n, MetricKind metric) {
  if (metric == MetricKind::kD1Weighted) throw std::out_of_range("no termination table for d1w");
  for (const auto& row : reference::grid_stats(GridRule::kOptimal)) {
    if (row.n != n) continue;
    const auto& c = metric == MetricKind::kD1 ? row.d1 : row.dinf;
    return {n,
            parse_rational(c[0]),
            parse_rational(c[1]),
            parse_rational(c[2]),
            parse_rational(c[3]),
            parse_rational(c[4]),
            row.sampled};
  }
  throw std::out_of_range("no termination table for n = " + std::to_string(n));
}

}  // namespace invbzf
