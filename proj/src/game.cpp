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

#include "invbzf/game.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "invbzf/lp.hpp"

namespace invbzf {

Coalition Coalition::of(std::initializer_list<int> players) {
  Mask m = 0;
  for (int p : players) {
    if (p < 0 || p >= kMaxTablePlayers) throw std::invalid_argument("player index out of range");
    m |= Mask{1} << p;
  }
  return Coalition(m);
}

std::vector<int> Coalition::members() const {
  std::vector<int> out;
  for (Mask m = bits_; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

void SimpleGame::check_players(int n) {
  if (n < 1 || n > kMaxTablePlayers)
    throw std::invalid_argument("player count must be in 1.." + std::to_string(kMaxTablePlayers) +
                                ", got " + std::to_string(n));
}

bool is_monotone_table(int n, std::span<const std::uint64_t> words) {
  const int low = std::min(n, 6);
  for (std::uint64_t w : words)
    for (int i = 0; i < low; ++i)
      if ((w & small::kClearMask[i]) & ~(w >> (1 << i))) return false;
  for (int i = 6; i < n; ++i) {
    const std::size_t step = std::size_t{1} << (i - 6);
    for (std::size_t j = 0; j < words.size(); ++j)
      if (!(j & step) && (words[j] & ~words[j | step])) return false;
  }
  return true;
}

bool is_simple_game_table(int n, std::span<const std::uint64_t> words) {
  if (n < 1 || n > kMaxTablePlayers || words.size() != SimpleGame::word_count(n)) return false;
  if (n < 6 && (words[0] & ~small::full_mask(n))) return false;
  if (words[0] & 1u) return false;
  const std::uint64_t last = (std::uint64_t{1} << n) - 1;
  if (!((words[last >> 6] >> (last & 63)) & 1u)) return false;
  return is_monotone_table(n, words);
}

std::optional<SimpleGame> SimpleGame::try_from_table(int n, std::vector<std::uint64_t> words) {
  if (!is_simple_game_table(n, words)) return std::nullopt;
  return SimpleGame(n, std::move(words));
}

SimpleGame SimpleGame::from_table(int n, std::vector<std::uint64_t> words) {
  check_players(n);
  if (words.size() != word_count(n)) throw std::invalid_argument("truth table has the wrong size");
  if (!is_simple_game_table(n, words))
    throw std::invalid_argument("table is not a simple game (needs v(empty)=0, v(N)=1, monotone)");
  return SimpleGame(n, std::move(words));
}

SimpleGame SimpleGame::from_minimal_winning(int n, std::span<const Coalition> mwc) {
  check_players(n);
  if (mwc.empty()) throw std::invalid_argument("minimal winning list is empty");
  const Coalition grand = Coalition::all(n);
  for (std::size_t a = 0; a < mwc.size(); ++a) {
    if (mwc[a].empty()) throw std::invalid_argument("empty coalition cannot be winning");
    if (!mwc[a].subset_of(grand)) throw std::invalid_argument("coalition names a player outside 1..n");
    for (std::size_t b = 0; b < mwc.size(); ++b)
      if (a != b && mwc[a].subset_of(mwc[b]))
        throw std::invalid_argument("minimal winning coalitions must be pairwise incomparable");
  }
  std::vector<std::uint64_t> words(word_count(n), 0);
  for (Coalition c : mwc) {
    const Mask free = grand.bits() & ~c.bits();
    for_each_subset(Coalition(free), [&](Coalition extra) {
      const Mask s = c.bits() | extra.bits();
      words[s >> 6] |= std::uint64_t{1} << (s & 63);
    });
  }
  return SimpleGame(n, std::move(words));
}

std::uint64_t SimpleGame::winning_count() const {
  std::uint64_t c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

std::vector<Coalition> SimpleGame::minimal_winning() const {
  std::vector<Coalition> out;
  const Mask total = static_cast<Mask>(coalition_count());
  for (Mask s = 0; s < total; ++s) {
    if (!winning(s)) continue;
    bool minimal = true;
    for (Mask m = s; m && minimal; m &= m - 1)
      if (winning(s & ~(m & -m))) minimal = false;
    if (minimal) out.emplace_back(s);
  }
  return out;
}

std::vector<Coalition> SimpleGame::maximal_losing() const {
  std::vector<Coalition> out;
  const Mask total = static_cast<Mask>(coalition_count());
  const Mask grand = total - 1;
  for (Mask s = 0; s < total; ++s) {
    if (winning(s)) continue;
    bool maximal = true;
    for (Mask m = grand & ~s; m && maximal; m &= m - 1)
      if (!winning(s | (m & -m))) maximal = false;
    if (maximal) out.emplace_back(s);
  }
  return out;
}

std::strong_ordering operator<=>(const SimpleGame& a, const SimpleGame& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    const std::uint64_t x = a.words_[i] ^ b.words_[i];
    if (!x) continue;
    // First differing coalition: the game losing it is smaller.
    const std::uint64_t bit = x & -x;
    return (a.words_[i] & bit) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

WeightedGame::WeightedGame(std::int64_t quota, std::vector<std::int64_t> weights)
    : quota_(quota), weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("weighted game needs at least one player");
  if (static_cast<int>(weights_.size()) > kMaxWeightedPlayers)
    throw std::invalid_argument("too many players for a weighted game");
  if (quota_ < 1) throw std::invalid_argument("quota must be at least 1");
  for (std::int64_t w : weights_) {
    if (w < 0) throw std::invalid_argument("weights must be non-negative");
    if (__builtin_add_overflow(weight_sum_, w, &weight_sum_))
      throw std::invalid_argument("weight sum overflows 64 bits");
  }
  if (weight_sum_ < quota_) throw std::invalid_argument("sum of weights is below the quota");
}

std::int64_t WeightedGame::weight(Coalition s) const {
  std::int64_t t = 0;
  for (Mask m = s.bits(); m; m &= m - 1) t += weights_[std::countr_zero(m)];
  return t;
}

SimpleGame realize(const WeightedGame& w) {
  const int n = w.players();
  SimpleGame::check_players(n);
  const std::uint64_t total = std::uint64_t{1} << n;
  // w(S) = low[S & 4095] + high[S >> 12]
  const int split = std::min(n, 12);
  auto sums = [&](int first, int count) {
    std::vector<std::int64_t> t(std::size_t{1} << count, 0);
    for (std::size_t s = 1; s < t.size(); ++s)
      t[s] = t[s & (s - 1)] + w.weights()[first + std::countr_zero(s)];
    return t;
  };
  const auto low = sums(0, split);
  const auto high = sums(split, n - split);
  const std::uint64_t low_mask = (std::uint64_t{1} << split) - 1;
  std::vector<std::uint64_t> words(SimpleGame::word_count(n), 0);
  for (std::uint64_t s = 1; s < total; ++s)
    if (low[s & low_mask] + high[s >> split] >= w.quota()) words[s >> 6] |= std::uint64_t{1} << (s & 63);
  return SimpleGame::from_table(n, std::move(words));
}

SwingProfile swings(const SimpleGame& v) {
  const int n = v.players();
  const auto& t = v.table();
  SwingProfile out;
  out.per_player.assign(n, 0);
  for (int i = 0; i < std::min(n, 6); ++i) {
    std::int64_t c = 0;
    for (std::uint64_t w : t)
      c += std::popcount(w & ~small::kClearMask[i]) - std::popcount(w & small::kClearMask[i]);
    out.per_player[i] = c;
  }
  for (int i = 6; i < n; ++i) {
    const std::size_t step = std::size_t{1} << (i - 6);
    std::int64_t c = 0;
    for (std::size_t j = 0; j < t.size(); ++j)
      c += (j & step) ? std::popcount(t[j]) : -std::popcount(t[j]);
    out.per_player[i] = c;
  }
  out.total = std::accumulate(out.per_player.begin(), out.per_player.end(), std::int64_t{0});
  return out;
}

namespace {

// Coalition counts by weight: the polynomial prod_i (1 + x^{w_i}), then each
// player's factor divided back out.
SwingProfile weighted_swings_dp(const WeightedGame& g) {
  const int n = g.players();
  const std::int64_t total = g.weight_sum();
  const std::int64_t q = g.quota();
  std::vector<std::uint64_t> poly(static_cast<std::size_t>(total) + 1, 0);
  poly[0] = 1;
  std::int64_t reach = 0;
  for (std::int64_t w : g.weights()) {
    for (std::int64_t k = reach; k >= 0; --k)
      if (poly[k]) poly[k + w] += poly[k];
    reach += w;
  }
  SwingProfile out;
  out.per_player.assign(n, 0);
  std::vector<std::uint64_t> rest(poly.size());
  for (int i = 0; i < n; ++i) {
    const std::int64_t w = g.weights()[i];
    if (w == 0) continue;
    // rest = poly / (1 + x^w)
    for (std::int64_t k = 0; k <= total; ++k)
      rest[k] = poly[k] - (k >= w ? rest[k - w] : 0);
    // swings: coalitions of the others with weight in [q - w, q - 1]
    std::uint64_t c = 0;
    for (std::int64_t k = std::max<std::int64_t>(0, q - w); k < q && k <= total; ++k) c += rest[k];
    out.per_player[i] = static_cast<std::int64_t>(c);
  }
  out.total = std::accumulate(out.per_player.begin(), out.per_player.end(), std::int64_t{0});
  return out;
}

}  // namespace

SwingProfile swings(const WeightedGame& w) {
  const int n = w.players();
  if (w.weight_sum() <= (std::int64_t{1} << 24) && n <= kMaxWeightedPlayers)
    return weighted_swings_dp(w);
  return swings(realize(w));
}

PowerVector pbi(const SwingProfile& s) {
  if (s.total <= 0) throw std::invalid_argument("swing total must be positive");
  PowerVector out;
  out.reserve(s.per_player.size());
  for (std::int64_t v : s.per_player) {
    Rational r(from_int64(v), from_int64(s.total));
    r.canonicalize();
    out.push_back(std::move(r));
  }
  return out;
}

PowerVector pbi(const SimpleGame& v) { return pbi(swings(v)); }

PowerVector absolute_pbi(const SwingProfile& s) {
  const std::size_t n = s.per_player.size();
  BigInt den = 1;
  den <<= static_cast<mp_bitcnt_t>(n - 1);
  PowerVector out;
  for (std::int64_t v : s.per_player) {
    Rational r(from_int64(v), den);
    r.canonicalize();
    out.push_back(std::move(r));
  }
  return out;
}

SimpleGame dual(const SimpleGame& v) {
  const int n = v.players();
  const Mask grand = static_cast<Mask>(v.coalition_count() - 1);
  std::vector<std::uint64_t> words(SimpleGame::word_count(n), 0);
  for (Mask s = 0; s <= grand; ++s)
    if (!v.winning(grand & ~s)) words[s >> 6] |= std::uint64_t{1} << (s & 63);
  return SimpleGame::from_table(n, std::move(words));
}

namespace {

// i at least as desirable as j: v(S - j + i) >= v(S) whenever j in S, i not.
bool at_least_as_desirable(const SimpleGame& v, int i, int j) {
  const Mask grand = static_cast<Mask>(v.coalition_count() - 1);
  const Mask others = grand & ~(Mask{1} << i) & ~(Mask{1} << j);
  bool ok = true;
  for_each_subset(Coalition(others), [&](Coalition r) {
    if (!ok) return;
    const Mask with_j = r.bits() | (Mask{1} << j);
    const Mask with_i = r.bits() | (Mask{1} << i);
    if (v.winning(with_j) && !v.winning(with_i)) ok = false;
  });
  return ok;
}

}  // namespace

Desirability desirability(const SimpleGame& v, int i, int j) {
  const int n = v.players();
  if (i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("player index out of range");
  if (i == j) return Desirability::kEqual;
  const bool ij = at_least_as_desirable(v, i, j);
  const bool ji = at_least_as_desirable(v, j, i);
  if (ij && ji) return Desirability::kEqual;
  if (ij) return Desirability::kMore;
  if (ji) return Desirability::kLess;
  return Desirability::kIncomparable;
}

bool is_complete(const SimpleGame& v) {
  const int n = v.players();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (desirability(v, i, j) == Desirability::kIncomparable) return false;
  return true;
}

SimpleGame relabel(const SimpleGame& v, std::span<const int> perm) {
  const int n = v.players();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation has the wrong size");
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) throw std::invalid_argument("not a permutation");
    seen[p] = true;
  }
  const std::uint64_t total = v.coalition_count();
  std::vector<std::uint64_t> words(SimpleGame::word_count(n), 0);
  // image of each single-player bit, then of every coalition incrementally
  std::vector<Mask> image(total, 0);
  for (std::uint64_t s = 1; s < total; ++s) {
    const int low = std::countr_zero(s);
    image[s] = image[s & (s - 1)] | (Mask{1} << perm[low]);
  }
  for (std::uint64_t s = 0; s < total; ++s)
    if (v.winning(static_cast<Mask>(s))) words[image[s] >> 6] |= std::uint64_t{1} << (image[s] & 63);
  return SimpleGame::from_table(n, std::move(words));
}

namespace {

// Per-player profile: number of winning coalitions of each size containing
// the player. Invariant under relabeling, and it determines the swings.
std::vector<std::vector<std::uint64_t>> size_profiles(const SimpleGame& v) {
  const int n = v.players();
  std::vector<std::vector<std::uint64_t>> prof(n, std::vector<std::uint64_t>(n + 1, 0));
  const std::uint64_t total = v.coalition_count();
  for (std::uint64_t s = 1; s < total; ++s) {
    if (!v.winning(static_cast<Mask>(s))) continue;
    const int k = std::popcount(s);
    for (std::uint64_t m = s; m; m &= m - 1) ++prof[std::countr_zero(m)][k];
  }
  return prof;
}

}  // namespace

SimpleGame canonical_form(const SimpleGame& v) {
  const int n = v.players();
  auto prof = size_profiles(v);
  // Players sorted by profile, largest first; canonical position p holds
  // order[p].
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return prof[a] > prof[b]; });
  // Tie groups are permuted exhaustively.
  std::vector<std::pair<int, int>> groups;  // [begin, end) in order
  for (int p = 0; p < n;) {
    int q = p + 1;
    while (q < n && prof[order[q]] == prof[order[p]]) ++q;
    groups.emplace_back(p, q);
    p = q;
  }
  std::optional<SimpleGame> best;
  std::vector<int> perm(n);
  auto visit = [&] {
    for (int p = 0; p < n; ++p) perm[order[p]] = p;
    SimpleGame cand = relabel(v, perm);
    if (!best || cand < *best) best = std::move(cand);
  };
  // odometer over the permutations of every group
  std::function<void(std::size_t)> rec = [&](std::size_t g) {
    if (g == groups.size()) {
      visit();
      return;
    }
    auto [b, e] = groups[g];
    std::sort(order.begin() + b, order.begin() + e);
    do {
      rec(g + 1);
    } while (std::next_permutation(order.begin() + b, order.begin() + e));
  };
  rec(0);
  return *best;
}

namespace {

std::optional<WeightedGame> integer_game(int n, const std::vector<Rational>& weights, const Rational& quota) {
  std::vector<Rational> all = weights;
  all.push_back(quota);
  const BigInt scale = common_denominator(all);
  std::vector<std::int64_t> w(n);
  for (int i = 0; i < n; ++i) {
    Rational s = weights[i] * scale;
    w[i] = to_int64(s.get_num());
  }
  Rational q = quota * scale;
  std::int64_t qi = to_int64(q.get_num());
  if (qi < 1) qi = 1;
  return WeightedGame(qi, std::move(w));
}

}  // namespace

std::optional<WeightedGame> weighted_representation(const SimpleGame& v) {
  const int n = v.players();
  // variables w_0..w_{n-1}, q
  std::vector<LinearRow> rows;
  for (Coalition t : v.minimal_winning()) {
    LinearRow r;
    r.coeffs.assign(n + 1, Rational(0));
    for (int i : t.members()) r.coeffs[i] = 1;
    r.coeffs[n] = -1;
    r.relation = Relation::kGreaterEqual;
    r.rhs = 0;
    rows.push_back(std::move(r));
  }
  for (Coalition s : v.maximal_losing()) {
    LinearRow r;
    r.coeffs.assign(n + 1, Rational(0));
    for (int i : s.members()) r.coeffs[i] = 1;
    r.coeffs[n] = -1;
    r.relation = Relation::kLessEqual;
    r.rhs = -1;
    rows.push_back(std::move(r));
  }
  auto x = find_nonnegative_solution(n + 1, rows);
  if (!x) return std::nullopt;
  std::vector<Rational> w(x->begin(), x->begin() + n);
  auto g = integer_game(n, w, (*x)[n]);
  if (g && realize(*g) != v) throw std::logic_error("weighted representation failed verification");
  return g;
}

std::optional<WeightedGame> weighted_representation_ordered(const SimpleGame& v) {
  const int n = v.players();
  const Mask grand = static_cast<Mask>(v.coalition_count() - 1);
  // w_i = sum_{j >= i} u_j with u >= 0 encodes w_0 >= w_1 >= ... >= 0; the
  // coefficient of u_j in w(S) is |S intersected with {0..j}|.
  auto add_row = [&](std::vector<LinearRow>& rows, Mask s, Relation rel, int rhs) {
    LinearRow r;
    r.coeffs.assign(n + 1, Rational(0));
    int count = 0;
    for (int j = 0; j < n; ++j) {
      if ((s >> j) & 1u) ++count;
      r.coeffs[j] = count;
    }
    r.coeffs[n] = -1;
    r.relation = rel;
    r.rhs = rhs;
    rows.push_back(std::move(r));
  };
  std::vector<LinearRow> rows;
  for (Mask s = 0; s <= grand; ++s) {
    const bool win = v.winning(s);
    bool extreme = true;
    if (win) {
      // shift-minimal: every lower neighbour loses
      for (int i = 0; i < n && extreme; ++i) {
        if (!((s >> i) & 1u)) continue;
        if (v.winning(s & ~(Mask{1} << i))) extreme = false;
        if (i + 1 < n && !((s >> (i + 1)) & 1u) && v.winning((s & ~(Mask{1} << i)) | (Mask{1} << (i + 1))))
          extreme = false;
      }
      if (extreme) add_row(rows, s, Relation::kGreaterEqual, 0);
    } else {
      for (int i = 0; i < n && extreme; ++i) {
        if ((s >> i) & 1u) {
          if (i > 0 && !((s >> (i - 1)) & 1u) && !v.winning((s & ~(Mask{1} << i)) | (Mask{1} << (i - 1))))
            extreme = false;
        } else if (!v.winning(s | (Mask{1} << i))) {
          extreme = false;
        }
      }
      if (extreme) add_row(rows, s, Relation::kLessEqual, -1);
    }
  }
  auto x = find_nonnegative_solution(n + 1, rows);
  if (!x) return std::nullopt;
  std::vector<Rational> w(n, Rational(0));
  Rational acc = 0;
  for (int i = n - 1; i >= 0; --i) {
    acc += (*x)[i];
    w[i] = acc;
  }
  auto g = integer_game(n, w, (*x)[n]);
  if (g && realize(*g) != v) return std::nullopt;  // v was not complete in this order
  return g;
}

}  // namespace invbzf
