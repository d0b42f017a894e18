// Copyright 2026 The cwpot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CWPOT_DYNAMICS_H_
#define CWPOT_DYNAMICS_H_

#include <cstddef>
#include <vector>

#include "cwpot/game.h"

namespace cwpot {

// Payoff differences at or below this are ties, not improvements.
inline constexpr double kPayoffTolerance = 1e-9;

// Strategies (1-based, ascending) maximizing c_i(x, p_-i).
std::vector<int> best_responses(const Game& g, int player,
                                const StrategyProfile& p);

bool is_nash(const Game& g, const StrategyProfile& p);

// Exhaustive scan in profile_index order.
std::vector<StrategyProfile> pure_nash_equilibria(const Game& g);

struct PathRecord {
  std::vector<StrategyProfile> states;  // starts with the initial profile
  std::vector<int> deviators;           // deviators[t] moves states[t] -> states[t+1]
  bool terminated = false;              // ended at a Nash equilibrium
  bool cycle_detected = false;

  std::size_t steps() const { return deviators.size(); }
};

// Myopic best-response adjustment: at each step the lowest-index player with
// a strictly improving deviation switches to its lowest-index best response.
// Stops at a Nash equilibrium, on revisiting a profile, or after max_steps.
PathRecord best_response_path(const Game& g, const StrategyProfile& start,
                              std::size_t max_steps);

// Profiles attaining max P, ties within `tol`, in profile_index order.
std::vector<StrategyProfile> potential_argmax(const RowVector& potential,
                                              const GameShape& shape,
                                              double tol = 1e-9);

}  // namespace cwpot

#endif  // CWPOT_DYNAMICS_H_
