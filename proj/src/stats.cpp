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


#include "invbzf/stats.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "invbzf/grid.hpp"

namespace invbzf {

std::string to_string(GridRule r) {
  switch (r) {
    case GridRule::kHalf: return "half";
    case GridRule::kQStar: return "qstar";
    case GridRule::kQBar: return "qbar";
    case GridRule::kOptimal: return "optimal";
  }
  return "?";
}

GridRule parse_grid_rule(const std::string& s) {
  if (s == "optimal") return GridRule::kOptimal;
  switch (parse_quota_rule(s)) {
    case QuotaRule::kHalf: return GridRule::kHalf;
    case QuotaRule::kQStar: return GridRule::kQStar;
    case QuotaRule::kQBar: return GridRule::kQBar;
  }
  return GridRule::kQStar;
}

Rational lower_quantile(const std::vector<Rational>& sorted, const Rational& p) {
  if (sorted.empty()) throw std::invalid_argument("quantile of an empty sample");
  const Rational pos = p * static_cast<long>(sorted.size());
  BigInt k = pos.get_num() / pos.get_den();
  if (k * pos.get_den() != pos.get_num()) k += 1;  // ceil
  const long idx = std::max(1L, k.get_si());
  return sorted[std::min<std::size_t>(idx, sorted.size()) - 1];
}

Summary summarize(std::vector<Rational> values) {
  if (values.empty()) throw std::invalid_argument("summary of an empty sample");
  std::sort(values.begin(), values.end());
  Summary s;
  s.count = values.size();
  Rational sum = 0;
  for (const auto& v : values) sum += v;
  s.average = sum / static_cast<long>(values.size());
  s.median = lower_quantile(values, Rational(1, 2));
  s.q10 = lower_quantile(values, Rational(1, 10));
  s.q05 = lower_quantile(values, Rational(1, 20));
  s.q01 = lower_quantile(values, Rational(1, 100));
  return s;
}

int default_threads() {
  if (const char* env = std::getenv("INVBZF_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 256L));
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

namespace {

// Exact deviation num / den with small integers.
struct Frac {
  std::int64_t num;
  std::int64_t den;
};

// Deviation of swing vector s (aligned with parts) from parts / D.
Frac deviation(MetricKind metric, std::span<const std::int64_t> s, std::int64_t total, std::span<const int> parts,
               std::int64_t den) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::int64_t e = std::abs(den * s[i] - parts[i] * total);
    acc = metric == MetricKind::kDInf ? std::max(acc, e) : acc + e;
  }
  return {acc, den * total};
}

bool less(const Frac& a, const Frac& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

// Distinct swing vectors of a class, sorted non-increasingly.
std::vector<std::vector<std::int64_t>> sorted_profiles(int n, GameClass cls) {
  std::set<std::vector<std::int64_t>> seen;
  for (const auto& e : class_catalog(n, cls)) {
    auto v = e.swings.per_player;
    std::sort(v.begin(), v.end(), std::greater<>());
    // scale-free: divide by the gcd so proportional profiles collapse
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    for (auto& x : v) x /= g;
    seen.insert(v);
  }
  return {seen.begin(), seen.end()};
}

QuotaRule quota_rule(GridRule r) {
  switch (r) {
    case GridRule::kHalf: return QuotaRule::kHalf;
    case GridRule::kQStar: return QuotaRule::kQStar;
    case GridRule::kQBar: return QuotaRule::kQBar;
    case GridRule::kOptimal: break;
  }
  throw std::logic_error("not a quota rule");
}

}  // namespace

std::vector<Rational> grid_deviations(const GridStatsRequest& req) {
  if (req.metric == MetricKind::kD1Weighted)
    throw std::invalid_argument("grid statistics support the d1 and dinf metrics");
  const Grid grid(req.n, req.denominator);
  const std::int64_t den = req.denominator;

  std::vector<std::uint64_t> points;
  const bool sampled = req.sample.has_value();
  if (sampled) points = grid.sample_indices(*req.sample, req.seed);
  const std::uint64_t m = sampled ? points.size() : grid.size();

  std::vector<std::vector<std::int64_t>> profiles;
  if (req.rule == GridRule::kOptimal) profiles = sorted_profiles(req.n, req.cls);

  auto evaluate = [&](std::span<const int> parts) -> Frac {
    if (req.rule == GridRule::kOptimal) {
      Frac best{1, 0};
      for (const auto& p : profiles) {
        std::int64_t total = 0;
        for (auto x : p) total += x;
        const Frac f = deviation(req.metric, p, total, parts, den);
        if (best.den == 0 || less(f, best)) best = f;
      }
      return best;
    }
    std::vector<std::int64_t> w(parts.begin(), parts.end());
    const std::int64_t t = integer_threshold(w, den, quota_rule(req.rule));
    const SwingProfile s = swings(WeightedGame(t, w));
    return deviation(req.metric, s.per_player, s.total, parts, den);
  };

  std::vector<Frac> out(m);
  const int threads = std::max<int>(1, std::min<std::uint64_t>(req.threads > 0 ? req.threads : default_threads(),
                                                               std::max<std::uint64_t>(1, m / 256)));
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    if (sampled) {
      for (std::uint64_t i = begin; i < end; ++i) out[i] = evaluate(grid.unrank(points[i]));
    } else {
      grid.for_each(begin, end, [&](std::uint64_t i, const std::vector<int>& parts) { out[i] = evaluate(parts); });
    }
  };
  if (threads == 1) {
    work(0, m);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, m * t / threads, m * (t + 1) / threads);
    for (auto& th : pool) th.join();
  }

  std::vector<Rational> values;
  values.reserve(m);
  for (const auto& f : out) values.emplace_back(Rational(BigInt(static_cast<long>(f.num)), BigInt(static_cast<long>(f.den))));
  for (auto& v : values) v.canonicalize();
  return values;
}

Summary grid_statistics(const GridStatsRequest& req) { return summarize(grid_deviations(req)); }

}  // namespace invbzf
