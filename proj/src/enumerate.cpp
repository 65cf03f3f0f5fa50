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

#include "invbzf/enumerate.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>

namespace invbzf {

std::string to_string(GameClass c) {
  switch (c) {
    case GameClass::kS: return "S";
    case GameClass::kC: return "C";
    case GameClass::kW: return "W";
  }
  return "?";
}

GameClass parse_game_class(const std::string& s) {
  if (s == "S" || s == "s") return GameClass::kS;
  if (s == "C" || s == "c") return GameClass::kC;
  if (s == "W" || s == "w") return GameClass::kW;
  throw std::invalid_argument("unknown game class '" + s + "' (expected S, C or W)");
}

int enumeration_limit(GameClass c) { return c == GameClass::kS ? 6 : 7; }

namespace shift {

int score(Mask s, int n) {
  int t = 0;
  for (Mask m = s; m; m &= m - 1) t += n - 1 - std::countr_zero(m);
  return t;
}

std::vector<Mask> ascending_order(int n) {
  std::vector<Mask> order(std::size_t{1} << n);
  for (Mask s = 0; s < order.size(); ++s) order[s] = s;
  std::stable_sort(order.begin(), order.end(), [n](Mask a, Mask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return score(a, n) < score(b, n);
  });
  return order;
}

void lower_neighbours(Mask s, int n, std::vector<Mask>& out) {
  out.clear();
  for (int j = 0; j < n; ++j) {
    if (!((s >> j) & 1u)) continue;
    out.push_back(s & ~(Mask{1} << j));
    if (j + 1 < n && !((s >> (j + 1)) & 1u)) out.push_back((s & ~(Mask{1} << j)) | (Mask{1} << (j + 1)));
  }
}

void upper_neighbours(Mask s, int n, std::vector<Mask>& out) {
  out.clear();
  for (int j = 0; j < n; ++j) {
    if (!((s >> j) & 1u)) {
      out.push_back(s | (Mask{1} << j));
    } else if (j > 0 && !((s >> (j - 1)) & 1u)) {
      out.push_back((s & ~(Mask{1} << j)) | (Mask{1} << (j - 1)));
    }
  }
}

}  // namespace shift

namespace {

// All monotone Boolean functions of k variables (constants included) as
// truth tables; k <= 5 so each fits in 32 bits.
std::vector<std::uint64_t> monotone_functions(int k) {
  std::vector<std::uint64_t> cur = {0, 1};
  for (int v = 1; v <= k; ++v) {
    const int half = 1 << (v - 1);
    std::vector<std::uint64_t> next;
    for (std::uint64_t f0 : cur)
      for (std::uint64_t f1 : cur)
        if ((f0 & ~f1) == 0) next.push_back(f0 | (f1 << half));
    cur.swap(next);
  }
  return cur;
}

// Positions with popcount k, for 6-bit coalition indices.
std::uint64_t size_layer(int k) {
  std::uint64_t m = 0;
  for (int s = 0; s < 64; ++s)
    if (std::popcount(static_cast<unsigned>(s)) == k) m |= std::uint64_t{1} << s;
  return m;
}

// True when players appear in non-increasing order of their winning-size
// profile, so that every isomorphism class has at least one such member.
bool profile_sorted(int n, std::uint64_t t, const std::uint64_t* layers) {
  std::uint64_t prev[7] = {};
  for (int i = 0; i < n; ++i) {
    const std::uint64_t in = t & ~small::kClearMask[i];
    std::uint64_t cur[7] = {};
    for (int k = 1; k <= n; ++k) cur[k] = std::popcount(in & layers[k]);
    if (i > 0 && std::lexicographical_compare(prev + 1, prev + n + 1, cur + 1, cur + n + 1)) return false;
    std::copy(cur, cur + 7, prev);
  }
  return true;
}

std::uint64_t enumerate_simple(int n, const std::function<void(const EnumeratedGame&)>& visit) {
  std::uint64_t layers[7];
  for (int k = 0; k <= 6; ++k) layers[k] = size_layer(k);
  const std::uint64_t full = small::full_mask(n);
  std::set<std::uint64_t> classes;
  auto consider = [&](std::uint64_t t) {
    if (t == 0 || t == full || (t & 1u)) return;
    if (!profile_sorted(n, t, layers)) return;
    classes.insert(canonical_form(SimpleGame::from_table(n, {t})).table()[0]);
  };
  if (n == 1) {
    consider(0b10);
  } else {
    const auto base = monotone_functions(n - 1);
    const int half = 1 << (n - 1);
    for (std::uint64_t f0 : base)
      for (std::uint64_t f1 : base)
        if ((f0 & ~f1) == 0) consider(f0 | (f1 << half));
  }
  for (std::uint64_t t : classes) {
    EnumeratedGame e{SimpleGame::from_table(n, {t}), {}, std::nullopt};
    e.swings = swings(e.game);
    visit(e);
  }
  return classes.size();
}

std::uint64_t enumerate_complete(int n, bool weighted_only, const std::function<void(const EnumeratedGame&)>& visit) {
  auto order = shift::ascending_order(n);
  std::reverse(order.begin(), order.end());
  const std::size_t total = order.size();
  std::vector<std::vector<Mask>> upper(total);
  std::vector<Mask> tmp;
  for (Mask s = 0; s < total; ++s) {
    shift::upper_neighbours(s, n, tmp);
    upper[s] = tmp;
  }
  std::vector<std::uint8_t> value(total, 0);
  std::uint64_t emitted = 0;

  auto leaf = [&] {
    std::vector<std::uint64_t> words(SimpleGame::word_count(n), 0);
    for (Mask s = 0; s < total; ++s)
      if (value[s]) words[s >> 6] |= std::uint64_t{1} << (s & 63);
    EnumeratedGame e{SimpleGame::from_table(n, std::move(words)), {}, std::nullopt};
    if (weighted_only) {
      e.weights = weighted_representation_ordered(e.game);
      if (!e.weights) return;
    }
    e.swings = swings(e.game);
    ++emitted;
    visit(e);
  };

  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == total) {
      leaf();
      return;
    }
    const Mask s = order[pos];
    if (s == total - 1) {  // grand coalition wins
      value[s] = 1;
      rec(pos + 1);
      return;
    }
    value[s] = 0;
    rec(pos + 1);
    if (s == 0) return;
    bool can_win = true;
    for (Mask u : upper[s])
      if (!value[u]) {
        can_win = false;
        break;
      }
    if (can_win) {
      value[s] = 1;
      rec(pos + 1);
      value[s] = 0;
    }
  };
  rec(0);
  return emitted;
}

}  // namespace

std::uint64_t enumerate_class(int n, GameClass cls, const std::function<void(const EnumeratedGame&)>& visit) {
  if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
  if (n > enumeration_limit(cls))
    throw ResourceLimit("enumerating class " + to_string(cls) + " is limited to n <= " +
                        std::to_string(enumeration_limit(cls)));
  if (cls == GameClass::kS) return enumerate_simple(n, visit);
  return enumerate_complete(n, cls == GameClass::kW, visit);
}

const std::vector<EnumeratedGame>& class_catalog(int n, GameClass cls) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<EnumeratedGame>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, static_cast<int>(cls)}];
  if (!slot) {
    auto games = std::make_unique<std::vector<EnumeratedGame>>();
    enumerate_class(n, cls, [&](const EnumeratedGame& e) { games->push_back(e); });
    slot = std::move(games);
  }
  return *slot;
}

}  // namespace invbzf
