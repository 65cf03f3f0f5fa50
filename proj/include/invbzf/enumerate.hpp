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

// One representative per isomorphism class of simple, complete and weighted
// games.

#ifndef INVBZF_ENUMERATE_HPP_
#define INVBZF_ENUMERATE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "invbzf/game.hpp"

namespace invbzf {

enum class GameClass { kS, kC, kW };

std::string to_string(GameClass c);  // "S", "C", "W"
GameClass parse_game_class(const std::string& s);

class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest n for which enumerate_class runs (6 for S, 7 for C and W).
int enumeration_limit(GameClass c);

struct EnumeratedGame {
  SimpleGame game;
  SwingProfile swings;
  std::optional<WeightedGame> weights;  // filled for class W
};

// Streams the representatives and returns their number. For S the
// representative is canonical_form(v); for C and W it is the unique member
// of the class whose players are ordered by non-increasing desirability.
// Throws ResourceLimit above enumeration_limit(cls).
std::uint64_t enumerate_class(int n, GameClass cls, const std::function<void(const EnumeratedGame&)>& visit);

// All representatives, computed once per (n, cls) and cached; thread-safe.
const std::vector<EnumeratedGame>& class_catalog(int n, GameClass cls);

// Shift-order helpers for games whose player 0 is the most desirable.
namespace shift {
// Sum over members of (n - 1 - i): larger means more desirable players.
int score(Mask s, int n);
// Coalitions sorted by (size, score) ascending: every lower neighbour of a
// coalition comes before it.
std::vector<Mask> ascending_order(int n);
// Lower neighbours: drop a member, or swap member j for j + 1 (not in S).
void lower_neighbours(Mask s, int n, std::vector<Mask>& out);
void upper_neighbours(Mask s, int n, std::vector<Mask>& out);
}  // namespace shift

}  // namespace invbzf

#endif  // INVBZF_ENUMERATE_HPP_
