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


// Text formats: targets, games and solve results as JSON. Players are
// 1-based in every format.

#ifndef INVBZF_IO_HPP_
#define INVBZF_IO_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "invbzf/game.hpp"
#include "invbzf/solver.hpp"
#include "invbzf/target.hpp"

namespace invbzf {

// {"beta": ["1/3", "0.25", ...]}, a bare JSON array, or a comma/space
// separated list. Entries are fractions or decimals; JSON numbers are only
// accepted when integral, since binary floating point is not exact.
TargetVector parse_target(std::string_view text);
std::string target_to_json(const TargetVector& t);

struct ParsedGame {
  SimpleGame game;
  std::optional<WeightedGame> weights;
};
// {"n": 3, "quota": 2, "weights": [1, 1, 1]} or
// {"n": 3, "minimal_winning": [[1, 2], [1, 3], [2, 3]]}
ParsedGame parse_game(std::string_view json);
std::string game_to_json(const SimpleGame& v, const std::optional<WeightedGame>& w = std::nullopt);

// Deterministic: no timings or host details.
std::string solve_result_to_json(const SolveResult& r, const TargetVector& beta, GameClass cls,
                                 const Metric& metric, const std::string& method);

}  // namespace invbzf

#endif  // INVBZF_IO_HPP_
