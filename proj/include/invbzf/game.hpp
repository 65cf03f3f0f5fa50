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

// Binary voting systems. Players are 0-based internally; the JSON and CLI
// layers translate to the 1-based labels users see.

#ifndef INVBZF_GAME_HPP_
#define INVBZF_GAME_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "invbzf/rational.hpp"

namespace invbzf {

using Mask = std::uint32_t;

// Upper bound for the explicit 2^n truth table.
inline constexpr int kMaxTablePlayers = 24;
// Upper bound for weighted games handled by the weight-sum recursion.
inline constexpr int kMaxWeightedPlayers = 62;

class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(Mask bits) : bits_(bits) {}
  static Coalition of(std::initializer_list<int> players);
  static constexpr Coalition all(int n) { return Coalition(n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1); }

  constexpr Mask bits() const { return bits_; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(Coalition o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr Coalition with(int i) const { return Coalition(bits_ | (Mask{1} << i)); }
  constexpr Coalition without(int i) const { return Coalition(bits_ & ~(Mask{1} << i)); }
  // Largest player index + 1 (0 for the empty coalition).
  constexpr int span() const { return 32 - std::countl_zero(bits_); }
  std::vector<int> members() const;

  friend constexpr auto operator<=>(Coalition, Coalition) = default;

 private:
  Mask bits_ = 0;
};

// Calls f(Coalition) for every subset of c, the empty set included.
template <class F>
void for_each_subset(Coalition c, F&& f) {
  Mask s = 0;
  const Mask m = c.bits();
  do {
    f(Coalition(s));
    s = (s - m) & m;
  } while (s != 0);
}

struct SwingProfile {
  std::vector<std::int64_t> per_player;
  std::int64_t total = 0;

  friend bool operator==(const SwingProfile&, const SwingProfile&) = default;
};

// Normalized (summing to 1) or absolute Banzhaf values.
using PowerVector = std::vector<Rational>;

// A monotone Boolean function on 2^n coalitions with v(empty) = 0 and
// v(N) = 1, stored as a truth table indexed by coalition mask.
class SimpleGame {
 public:
  // Validates: throws std::invalid_argument unless the table describes a
  // simple game.
  static SimpleGame from_table(int n, std::vector<std::uint64_t> words);
  static std::optional<SimpleGame> try_from_table(int n, std::vector<std::uint64_t> words);

  template <class Pred>
  static SimpleGame from_predicate(int n, Pred&& winning) {
    check_players(n);
    std::vector<std::uint64_t> words(word_count(n), 0);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t s = 0; s < total; ++s)
      if (winning(Coalition(static_cast<Mask>(s)))) words[s >> 6] |= std::uint64_t{1} << (s & 63);
    return from_table(n, std::move(words));
  }

  // Throws if mwc is empty, contains the empty coalition, a player outside
  // 0..n-1, or two comparable coalitions.
  static SimpleGame from_minimal_winning(int n, std::span<const Coalition> mwc);

  int players() const { return n_; }
  std::uint64_t coalition_count() const { return std::uint64_t{1} << n_; }
  bool winning(Coalition s) const { return winning(s.bits()); }
  bool winning(Mask s) const { return (words_[s >> 6] >> (s & 63)) & 1u; }
  const std::vector<std::uint64_t>& table() const { return words_; }
  std::uint64_t winning_count() const;

  std::vector<Coalition> minimal_winning() const;
  std::vector<Coalition> maximal_losing() const;

  friend bool operator==(const SimpleGame&, const SimpleGame&) = default;
  // Lexicographic on the sequence v(0), v(1), ..., v(2^n - 1); games with
  // fewer players order first.
  friend std::strong_ordering operator<=>(const SimpleGame& a, const SimpleGame& b);

  static std::size_t word_count(int n) { return n <= 6 ? 1 : std::size_t{1} << (n - 6); }
  static void check_players(int n);

 private:
  SimpleGame(int n, std::vector<std::uint64_t> words) : n_(n), words_(std::move(words)) {}

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Validity check for an arbitrary truth table (monotone, v(0)=0, v(N)=1).
bool is_simple_game_table(int n, std::span<const std::uint64_t> words);
bool is_monotone_table(int n, std::span<const std::uint64_t> words);

class WeightedGame {
 public:
  // Throws std::invalid_argument unless quota >= 1, weights >= 0 and
  // sum(weights) >= quota.
  WeightedGame(std::int64_t quota, std::vector<std::int64_t> weights);

  int players() const { return static_cast<int>(weights_.size()); }
  std::int64_t quota() const { return quota_; }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  std::int64_t weight_sum() const { return weight_sum_; }
  std::int64_t weight(Coalition s) const;
  bool winning(Coalition s) const { return weight(s) >= quota_; }

  friend bool operator==(const WeightedGame&, const WeightedGame&) = default;

 private:
  std::int64_t quota_;
  std::vector<std::int64_t> weights_;
  std::int64_t weight_sum_ = 0;
};

SimpleGame realize(const WeightedGame& w);

SwingProfile swings(const SimpleGame& v);
// Uses the weight-sum recursion when the weight total is moderate, else the
// truth table.
SwingProfile swings(const WeightedGame& w);

PowerVector pbi(const SwingProfile& s);
PowerVector pbi(const SimpleGame& v);
// s_i / 2^(n-1)
PowerVector absolute_pbi(const SwingProfile& s);

SimpleGame dual(const SimpleGame& v);

enum class Desirability { kMore, kLess, kEqual, kIncomparable };
// Compares players i and j under the desirability relation.
Desirability desirability(const SimpleGame& v, int i, int j);
bool is_complete(const SimpleGame& v);

// New game in which old player i is called perm[i].
SimpleGame relabel(const SimpleGame& v, std::span<const int> perm);

// Representative of the isomorphism class: the lexicographically smallest
// table among relabelings that order players by a relabeling-invariant
// profile.
SimpleGame canonical_form(const SimpleGame& v);

// Integer (quota; weights) realizing v, or nullopt if v is not weighted.
// Decided by an exact rational LP.
std::optional<WeightedGame> weighted_representation(const SimpleGame& v);

// Same, for a game known to be complete with players ordered by
// non-increasing desirability (0 most desirable). Uses the much smaller
// system on shift-minimal winning and shift-maximal losing coalitions.
std::optional<WeightedGame> weighted_representation_ordered(const SimpleGame& v);

// Truth-table helpers for n <= 6, where the whole table is one word.
namespace small {
// Bits at positions whose bit i is clear.
inline constexpr std::uint64_t kClearMask[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull};

inline std::uint64_t full_mask(int n) {
  return n == 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
}

inline bool monotone(int n, std::uint64_t t) {
  for (int i = 0; i < n; ++i) {
    const int shift = 1 << i;
    if ((t & kClearMask[i]) & ~(t >> shift)) return false;
  }
  return true;
}

inline void swings(int n, std::uint64_t t, std::int64_t* out) {
  for (int i = 0; i < n; ++i)
    out[i] = std::popcount(t & ~kClearMask[i]) - std::popcount(t & kClearMask[i]);
}
}  // namespace small

}  // namespace invbzf

#endif  // INVBZF_GAME_HPP_
