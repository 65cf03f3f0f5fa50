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

#include "invbzf/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "invbzf/heuristics.hpp"

namespace invbzf {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kProvedOptimal: return "ProvedOptimal";
    case SolveStatus::kBracketed: return "Bracketed";
    case SolveStatus::kHeuristicOnly: return "HeuristicOnly";
  }
  return "?";
}

std::string to_string(Feasibility f) {
  switch (f) {
    case Feasibility::kFeasible: return "feasible";
    case Feasibility::kInfeasible: return "infeasible";
    case Feasibility::kUnknown: return "unknown";
  }
  return "?";
}

Rational epsilon_floor(int n) {
  if (n < 1) throw std::invalid_argument("epsilon_floor needs n >= 1");
  const Rational r(BigInt(1), BigInt(n) * (BigInt(1) << n));
  return r * r;
}

namespace {

constexpr int kMaxSearchPlayers = 12;
constexpr int kMaxPairBoundPlayers = 9;

void check_metric(const TargetVector& beta, const Metric& metric) {
  if (metric.kind() == MetricKind::kD1Weighted && static_cast<int>(metric.weights().size()) != beta.size())
    throw std::invalid_argument("weighted metric and target have different lengths");
}

Rational distance_of(const Metric& metric, const SwingProfile& s, const TargetVector& beta) {
  const PowerVector b = pbi(s);
  return distance(metric, b, beta.values());
}

std::vector<double> metric_weights(const Metric& metric, int n) {
  if (metric.kind() != MetricKind::kD1Weighted) return std::vector<double>(n, 1.0);
  std::vector<double> c;
  for (const auto& w : metric.weights()) c.push_back(to_double(w));
  return c;
}

// Players sorted by non-increasing target, ties by index.
std::vector<int> by_target(const TargetVector& beta) {
  std::vector<int> idx(beta.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return beta[a] > beta[b]; });
  return idx;
}

// Game players sorted by non-increasing swing count.
std::vector<int> by_swings(const SwingProfile& s) {
  std::vector<int> idx(s.per_player.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return s.per_player[a] > s.per_player[b]; });
  return idx;
}

SwingProfile permuted(const SwingProfile& s, std::span<const int> perm) {
  SwingProfile out;
  out.total = s.total;
  out.per_player.assign(s.per_player.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) out.per_player[perm[i]] = s.per_player[i];
  return out;
}

WeightedGame permuted(const WeightedGame& w, std::span<const int> perm) {
  std::vector<std::int64_t> ws(w.players());
  for (int i = 0; i < w.players(); ++i) ws[perm[i]] = w.weights()[i];
  return WeightedGame(w.quota(), std::move(ws));
}

double double_distance(MetricKind kind, const std::vector<double>& c, const SwingProfile& s,
                       std::span<const int> perm, const std::vector<double>& beta) {
  const double tot = static_cast<double>(s.total);
  double d = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const double e = std::abs(s.per_player[i] / tot - beta[perm[i]]);
    if (kind == MetricKind::kDInf) d = std::max(d, e);
    else d += c[perm[i]] * e;
  }
  return d;
}

}  // namespace

SolveResult solve_by_enumeration(const TargetVector& beta, GameClass cls, const Metric& metric) {
  check_metric(beta, metric);
  const int n = beta.size();
  const auto& catalog = class_catalog(n, cls);
  const std::vector<int> target_order = by_target(beta);

  std::optional<Rational> best;
  const EnumeratedGame* best_game = nullptr;
  std::vector<int> best_perm;
  std::vector<int> perm(n);

  auto consider = [&](const EnumeratedGame& e, const std::vector<int>& p) {
    const Rational d = distance_of(metric, permuted(e.swings, p), beta);
    if (!best || d < *best) {
      best = d;
      best_game = &e;
      best_perm = p;
    }
  };

  if (metric.kind() != MetricKind::kD1Weighted) {
    // Sorted matching is optimal for d1 and dinf.
    for (const auto& e : catalog) {
      const auto g = by_swings(e.swings);
      for (int r = 0; r < n; ++r) perm[g[r]] = target_order[r];
      consider(e, perm);
    }
  } else {
    const auto c = metric_weights(metric, n);
    std::vector<double> bd;
    for (const auto& b : beta.values()) bd.push_back(to_double(b));
    double best_d = 1e300;
    for (const auto& e : catalog) {
      std::iota(perm.begin(), perm.end(), 0);
      do {
        const double d = double_distance(metric.kind(), c, e.swings, perm, bd);
        if (d > best_d + 1e-9) continue;
        consider(e, perm);
        best_d = std::min(best_d, d);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  if (!best_game) throw std::logic_error("empty game class");

  SolveResult r{relabel(best_game->game, best_perm), *best, SolveStatus::kProvedOptimal, *best, *best, 0, 0, std::nullopt};
  r.iterations = catalog.size();
  if (best_game->weights) r.witness_weights = permuted(*best_game->weights, best_perm);
  else if (cls != GameClass::kS || n <= 6) r.witness_weights = weighted_representation(r.best_game);
  return r;
}

namespace {

// Depth-first search over x_S for one fixed labeling of the players. Search
// player r is original player perm[r]; the target is non-increasing in r so
// that, for C and W, player 0 is the most desirable.
class Search {
 public:
  Search(const FeasibilityProblem& p, std::vector<int> perm, std::uint64_t* nodes, std::uint64_t max_nodes)
      : p_(p), n_(p.beta.size()), perm_(std::move(perm)), nodes_(nodes), max_nodes_(max_nodes) {
    const Mask total = Mask{1} << n_;
    complete_ = p.cls != GameClass::kS;
    kind_ = p.metric.kind();
    const auto c = metric_weights(p.metric, n_);
    for (int r = 0; r < n_; ++r) {
      b_.push_back(to_double(p.beta[perm_[r]]));
      c_.push_back(c[perm_[r]]);
    }
    alpha_ = to_double(p.alpha);
    // Players with equal target and metric weight are interchangeable; we
    // only look for games whose swings are non-increasing within such runs.
    for (int r = 0; r + 1 < n_; ++r)
      same_.push_back(p.beta[perm_[r]] == p.beta[perm_[r + 1]] &&
                      (kind_ != MetricKind::kD1Weighted ||
                       p.metric.weights()[perm_[r]] == p.metric.weights()[perm_[r + 1]]));
    by_cost_.resize(n_);
    std::iota(by_cost_.begin(), by_cost_.end(), 0);
    std::stable_sort(by_cost_.begin(), by_cost_.end(), [&](int a, int b) { return c_[a] < c_[b]; });

    if (complete_) {
      order_ = shift::ascending_order(n_);
    } else {
      order_.resize(total);
      std::iota(order_.begin(), order_.end(), Mask{0});
      std::stable_sort(order_.begin(), order_.end(),
                       [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
    }
    lower_.resize(total);
    std::vector<Mask> tmp;
    for (Mask s = 0; s < total; ++s) {
      if (complete_) {
        shift::lower_neighbours(s, n_, tmp);
      } else {
        tmp.clear();
        for (Mask m = s; m; m &= m - 1) tmp.push_back(s & ~(m & (~m + 1)));
      }
      lower_[s] = tmp;
    }
    double bsum = 0;
    for (double v : b_) bsum += v;
    prefer_threshold_ = bsum / 2;
    val_.assign(total, -1);
    cur_.assign(n_, 0);
    pot_.assign(n_, std::int64_t{1} << (n_ - 1));
    lo_.resize(n_);
    hi_.resize(n_);
  }

  Feasibility run(FeasibilityResult& out) {
    out_ = &out;
    if (n_ >= 3 && n_ <= kMaxPairBoundPlayers && major_pair_excludes()) return Feasibility::kInfeasible;
    const bool found = dfs(0);
    if (found) return Feasibility::kFeasible;
    return exhausted_ ? Feasibility::kUnknown : Feasibility::kInfeasible;
  }

 private:
  void assign(Mask s, int v) {
    val_[s] = static_cast<std::int8_t>(v);
    for (Mask m = s; m; m &= m - 1) {
      const int i = std::countr_zero(m);
      if (val_[s & ~(Mask{1} << i)] == 0) {
        --pot_[i];
        if (v) ++cur_[i];
      }
    }
    if (v)
      for (int j = 0; j < n_; ++j)
        if (!((s >> j) & 1u)) --pot_[j];
  }

  void unassign(Mask s) {
    const int v = val_[s];
    if (v)
      for (int j = 0; j < n_; ++j)
        if (!((s >> j) & 1u)) ++pot_[j];
    for (Mask m = s; m; m &= m - 1) {
      const int i = std::countr_zero(m);
      if (val_[s & ~(Mask{1} << i)] == 0) {
        ++pot_[i];
        if (v) --cur_[i];
      }
    }
    val_[s] = -1;
  }

  // Per-player swing ranges, tightened by the within-run ordering.
  bool ranges() {
    for (int r = 0; r < n_; ++r) {
      lo_[r] = static_cast<double>(cur_[r]);
      hi_[r] = static_cast<double>(cur_[r] + pot_[r]);
    }
    for (int r = 0; r + 1 < n_; ++r)
      if (same_[r]) hi_[r + 1] = std::min(hi_[r + 1], hi_[r]);
    for (int r = n_ - 2; r >= 0; --r)
      if (same_[r]) lo_[r] = std::max(lo_[r], lo_[r + 1]);
    for (int r = 0; r < n_; ++r)
      if (lo_[r] > hi_[r]) return false;
    return true;
  }

  // Convex in s: the least possible (weighted) deviation of a swing vector in
  // the box [lo, hi] with total s, minus alpha s (for dinf: a violation
  // measure that is zero iff the box admits such a vector).
  double excess(double s) const {
    if (kind_ == MetricKind::kDInf) {
      double v = 0, sl = 0, sh = 0;
      for (int r = 0; r < n_; ++r) {
        const double l = std::max(lo_[r], (b_[r] - alpha_) * s);
        const double h = std::min(hi_[r], (b_[r] + alpha_) * s);
        v += std::max(0.0, l - h);
        sl += l;
        sh += h;
      }
      return v + std::max(0.0, sl - s) + std::max(0.0, s - sh);
    }
    double cost = 0, ysum = 0;
    for (int r = 0; r < n_; ++r) {
      const double t = b_[r] * s;
      const double y = std::clamp(t, lo_[r], hi_[r]);
      cost += c_[r] * std::abs(y - t);
      ysum += y;
    }
    double deficit = s - ysum;
    if (kind_ == MetricKind::kD1) {
      cost += std::abs(deficit);
    } else {
      for (int r : by_cost_) {
        if (std::abs(deficit) <= 0) break;
        const double t = std::clamp(b_[r] * s, lo_[r], hi_[r]);
        const double room = deficit > 0 ? hi_[r] - t : t - lo_[r];
        const double take = std::min(room, std::abs(deficit));
        cost += c_[r] * take;
        deficit += deficit > 0 ? -take : take;
      }
    }
    return cost - alpha_ * s;
  }

  bool promising() {
    if (!ranges()) return false;
    double a = 0, b = 0;
    for (int r = 0; r < n_; ++r) {
      a += lo_[r];
      b += hi_[r];
    }
    a = std::max(a, 1.0);
    if (a > b) return false;
    const double tol = 1e-9 * (1 + b);
    // golden-section search for the minimum of a convex function
    const double g = 0.5 * (std::sqrt(5.0) - 1);
    double x1 = b - g * (b - a), x2 = a + g * (b - a);
    double f1 = excess(x1), f2 = excess(x2);
    if (excess(a) <= tol || excess(b) <= tol || f1 <= tol || f2 <= tol) return true;
    for (int it = 0; it < 80 && b - a > 1e-7; ++it) {
      if (f1 < f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - g * (b - a);
        f1 = excess(x1);
        if (f1 <= tol) return true;
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + g * (b - a);
        f2 = excess(x2);
        if (f2 <= tol) return true;
      }
    }
    return false;
  }

  // Root bound. Fix the two search players 0 and 1; every game splits into
  // four up-sets over the other m players: One (v(T) = 1), X0 (v(T + 0)),
  // X1 (v(T + 1)) and A (v(T + 0 + 1)), with One inside X0 and X1, both
  // inside A. With sizes o, x, y, a the swings of players 0 and 1 are
  // x + a - o - y and y + a - o - x, and the others' swings add up to the
  // edge boundaries of the four up-sets, each at least the hypercube
  // isoperimetric minimum h(t) = m t - 2 sum_{j < t} popcount(j). Only the
  // sum R of the others' swings is kept, so R ranges over [h-sum, inf).
  bool major_pair_excludes() const {
    const int m = n_ - 2;
    const int total = 1 << m;
    std::vector<double> h(total + 1);
    double pc = 0;
    for (int t = 0; t <= total; ++t) {
      h[t] = static_cast<double>(m) * t - 2 * pc;
      if (t < total) pc += std::popcount(static_cast<unsigned>(t));
    }
    const double b0 = b_[0], b1 = b_[1];
    double br = 0, cr = c_[2];
    for (int r = 2; r < n_; ++r) {
      br += b_[r];
      cr = std::min(cr, c_[r]);
    }
    const double a = alpha_;

    // Is there R >= r0 whose relaxed deviation is within alpha?
    auto admits = [&](double s1, double s2, double r0) {
      const double s0 = s1 + s2;
      r0 = std::max(r0, 1 - s0);
      const double tol = 1e-9 * (1 + s0 + r0);
      // L_k(R) = p_k + q_k R
      const double p[3] = {s1 - b0 * s0, s2 - b1 * s0, -br * s0};
      const double q[3] = {-b0, -b1, 1 - br};
      if (kind_ == MetricKind::kDInf) {
        const double scale[3] = {a, a, a * m};
        double lo = r0, hi = 1e300;
        for (int k = 0; k < 3; ++k)
          for (double sign : {1.0, -1.0}) {
            // sign (p + q R) <= scale (s0 + R)
            const double c = sign * q[k] - scale[k];
            const double d = scale[k] * s0 - sign * p[k] + tol;
            if (c > 0) hi = std::min(hi, d / c);
            else if (c < 0) lo = std::max(lo, d / c);
            else if (d < 0) return false;
          }
        return lo <= hi + tol;
      }
      const double w[3] = {c_[0], c_[1], cr};
      auto phi = [&](double r) {
        double v = -a * (s0 + r);
        for (int k = 0; k < 3; ++k) v += w[k] * std::abs(p[k] + q[k] * r);
        return v;
      };
      if (phi(r0) <= tol) return true;
      for (int k = 0; k < 3; ++k)
        if (q[k] != 0) {
          const double z = -p[k] / q[k];
          if (z > r0 && phi(z) <= tol * (1 + z)) return true;
        }
      double slope = -a;
      for (int k = 0; k < 3; ++k) slope += w[k] * std::abs(q[k]);
      return slope < 0;
    };

    for (int o = 0; o < total; ++o)
      for (int x = o; x <= total; ++x)
        for (int y = o; y <= total; ++y)
          for (int u = std::max({x, y, 1}); u <= total; ++u)
            if (admits(x + u - o - y, y + u - o - x, h[o] + h[x] + h[y] + h[u])) return false;
    return true;
  }

  bool leaf() {
    for (int r = 0; r + 1 < n_; ++r)
      if (same_[r] && cur_[r] < cur_[r + 1]) return false;
    SwingProfile s;
    s.per_player.assign(n_, 0);
    for (int r = 0; r < n_; ++r) {
      s.per_player[perm_[r]] = cur_[r];
      s.total += cur_[r];
    }
    const Rational d = distance_of(p_.metric, s, p_.beta);
    if (p_.strict ? !(d < p_.alpha) : !(d <= p_.alpha)) return false;

    std::vector<std::uint64_t> words(SimpleGame::word_count(n_), 0);
    for (Mask m = 0; m < val_.size(); ++m)
      if (val_[m] == 1) words[m >> 6] |= std::uint64_t{1} << (m & 63);
    const SimpleGame game = SimpleGame::from_table(n_, std::move(words));
    std::optional<WeightedGame> w;
    if (p_.cls == GameClass::kW) {
      w = weighted_representation_ordered(game);
      if (!w) return false;
    }
    out_->game = relabel(game, perm_);
    out_->distance = d;
    if (w) out_->weights = permuted(*w, perm_);
    return true;
  }

  bool dfs(std::size_t pos) {
    if (pos == order_.size()) return leaf();
    const Mask s = order_[pos];
    const Mask full = static_cast<Mask>(order_.size() - 1);
    bool forced = s == full;
    if (!forced)
      for (Mask t : lower_[s])
        if (val_[t] == 1) {
          forced = true;
          break;
        }
    int first = 1, last = 1;
    if (!forced) {
      if (s == 0) {
        first = last = 0;
      } else {
        double w = 0;
        for (Mask m = s; m; m &= m - 1) w += b_[std::countr_zero(m)];
        first = w > prefer_threshold_ ? 1 : 0;
        last = 1 - first;
      }
    }
    for (int v = first;; v = last) {
      if (++*nodes_ > max_nodes_) {
        exhausted_ = true;
        return false;
      }
      assign(s, v);
      if (promising() && dfs(pos + 1)) return true;
      unassign(s);
      if (exhausted_ || v == last) break;
    }
    return false;
  }

  const FeasibilityProblem& p_;
  int n_;
  std::vector<int> perm_;
  std::uint64_t* nodes_;
  std::uint64_t max_nodes_;
  bool exhausted_ = false;
  bool complete_ = false;
  MetricKind kind_;
  std::vector<double> b_, c_;
  double alpha_ = 0;
  double prefer_threshold_ = 0;
  std::vector<bool> same_;
  std::vector<int> by_cost_;
  std::vector<Mask> order_;
  std::vector<std::vector<Mask>> lower_;
  std::vector<std::int8_t> val_;
  std::vector<std::int64_t> cur_, pot_;
  std::vector<double> lo_, hi_;
  FeasibilityResult* out_ = nullptr;
};

// Labelings to search. For d1 and dinf a sorted swing vector matched to the
// sorted target is optimal, so one labeling suffices; the weighted metric
// needs every ordering of the complete game's players.
std::vector<std::vector<int>> labelings(const FeasibilityProblem& p) {
  const std::vector<int> base = by_target(p.beta);
  if (p.cls == GameClass::kS || p.metric.kind() != MetricKind::kD1Weighted) return {base};
  const int n = p.beta.size();
  // key: (target, weight) equality classes; permute class labels as a multiset
  std::vector<int> key(n);
  for (int i = 0; i < n; ++i) {
    key[i] = i;
    for (int j = 0; j < i; ++j)
      if (p.beta[j] == p.beta[i] && p.metric.weights()[j] == p.metric.weights()[i]) {
        key[i] = key[j];
        break;
      }
  }
  std::vector<int> seq(n);
  for (int i = 0; i < n; ++i) seq[i] = key[i];
  std::sort(seq.begin(), seq.end());
  std::vector<std::vector<int>> out;
  do {
    // search player r gets the next unused original player of class seq[r]
    std::vector<int> perm(n);
    std::vector<bool> used(n, false);
    for (int r = 0; r < n; ++r)
      for (int i = 0; i < n; ++i)
        if (!used[i] && key[i] == seq[r]) {
          used[i] = true;
          perm[r] = i;
          break;
        }
    out.push_back(std::move(perm));
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

}  // namespace

FeasibilityResult feasible(const FeasibilityProblem& problem, const SearchLimits& limits) {
  check_metric(problem.beta, problem.metric);
  const int n = problem.beta.size();
  if (n > kMaxSearchPlayers)
    throw ResourceLimit("the feasibility search is limited to n <= " + std::to_string(kMaxSearchPlayers));
  if (problem.alpha < 0) throw std::invalid_argument("alpha must be non-negative");
  FeasibilityResult out;
  out.status = Feasibility::kInfeasible;
  for (auto& perm : labelings(problem)) {
    Search search(problem, std::move(perm), &out.nodes, limits.max_nodes);
    const Feasibility f = search.run(out);
    if (f == Feasibility::kFeasible) {
      out.status = f;
      return out;
    }
    if (f == Feasibility::kUnknown) {
      out.status = f;
      return out;
    }
  }
  return out;
}

namespace {

// Best heuristic game in the class (weighted games belong to every class),
// or a dictator when the target is not normalized.
std::pair<SimpleGame, Rational> incumbent(const TargetVector& beta, const Metric& metric) {
  const int n = beta.size();
  std::optional<std::pair<SimpleGame, Rational>> best;
  if (beta.normalized()) {
    for (QuotaRule rule : {QuotaRule::kHalf, QuotaRule::kQStar, QuotaRule::kQBar}) {
      const HeuristicResult h = heuristic_game(beta, rule, true);
      const Rational d = distance(metric, h.pbi, beta.values());
      if (!best || d < best->second) best.emplace(*h.game, d);
    }
  }
  const int top = by_target(beta)[0];
  const SimpleGame dict = SimpleGame::from_predicate(n, [&](Coalition s) { return s.contains(top); });
  const Rational d = distance(metric, pbi(dict), beta.values());
  if (!best || d < best->second) best.emplace(dict, d);
  return *best;
}

}  // namespace

SolveResult bisection_solve(const TargetVector& beta, GameClass cls, const Metric& metric,
                            const SearchLimits& limits) {
  check_metric(beta, metric);
  auto [game, u] = incumbent(beta, metric);
  Rational l = 0;
  const Rational eps = epsilon_floor(beta.size());
  SolveResult r{game, u, SolveStatus::kProvedOptimal, l, u, 0, 0, std::nullopt};

  auto take = [&](FeasibilityResult& f) {
    r.best_game = *f.game;
    r.distance = f.distance;
    r.witness_weights = f.weights;
    u = f.distance;
  };
  auto fill_weights = [&] {
    if (!r.witness_weights && (cls == GameClass::kW || beta.size() <= 6))
      r.witness_weights = weighted_representation(r.best_game);
  };
  auto bracketed = [&] {
    r.status = SolveStatus::kBracketed;
    r.lower = l;
    r.upper = u;
    fill_weights();
    return r;
  };

  while (u > 0) {
    while (u - l > eps) {
      FeasibilityProblem p{beta, cls, metric, dyadic_between(l, u), false};
      FeasibilityResult f = feasible(p, limits);
      ++r.iterations;
      r.nodes += f.nodes;
      if (f.status == Feasibility::kUnknown) return bracketed();
      if (f.status == Feasibility::kFeasible) take(f);
      else l = p.alpha;
    }
    // certify: nothing strictly better than u
    FeasibilityResult f = feasible({beta, cls, metric, u, true}, limits);
    ++r.iterations;
    r.nodes += f.nodes;
    if (f.status == Feasibility::kUnknown) return bracketed();
    if (f.status == Feasibility::kInfeasible) break;
    take(f);
  }
  r.lower = r.upper = u;
  r.distance = u;
  fill_weights();
  return r;
}

}  // namespace invbzf
