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

#include "cwpot/dynamics.h"

#include <set>
#include <stdexcept>

namespace cwpot {

std::vector<int> best_responses(const Game& g, int player,
                                const StrategyProfile& p) {
  const GameShape& shape = g.shape();
  shape.check_player(player);
  p.check(shape);
  std::vector<double> values;
  double best = 0.0;
  for (int x = 1; x <= shape.card(player); ++x) {
    values.push_back(payoff(g, player, p.with(player, x)));
    if (x == 1 || values.back() > best) best = values.back();
  }
  std::vector<int> out;
  for (int x = 1; x <= shape.card(player); ++x) {
    if (values[x - 1] >= best - kPayoffTolerance) out.push_back(x);
  }
  return out;
}

bool is_nash(const Game& g, const StrategyProfile& p) {
  for (int i = 1; i <= g.shape().players(); ++i) {
    const double current = payoff(g, i, p);
    for (int x = 1; x <= g.shape().card(i); ++x) {
      if (payoff(g, i, p.with(i, x)) > current + kPayoffTolerance) return false;
    }
  }
  return true;
}

std::vector<StrategyProfile> pure_nash_equilibria(const Game& g) {
  std::vector<StrategyProfile> out;
  for (const StrategyProfile& s : all_profiles(g.shape())) {
    if (is_nash(g, s)) out.push_back(s);
  }
  return out;
}

PathRecord best_response_path(const Game& g, const StrategyProfile& start,
                              std::size_t max_steps) {
  if (max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
  start.check(g.shape());

  PathRecord path;
  path.states.push_back(start);
  std::set<StrategyProfile> visited{start};
  StrategyProfile current = start;
  while (true) {
    int deviator = 0;
    int target = 0;
    for (int i = 1; i <= g.shape().players() && deviator == 0; ++i) {
      const double now = payoff(g, i, current);
      const std::vector<int> br = best_responses(g, i, current);
      const double best = payoff(g, i, current.with(i, br.front()));
      if (best > now + kPayoffTolerance) {
        deviator = i;
        target = br.front();
      }
    }
    if (deviator == 0) {
      path.terminated = true;
      return path;
    }
    if (path.steps() >= max_steps) return path;

    current = current.with(deviator, target);
    path.deviators.push_back(deviator);
    path.states.push_back(current);
    if (!visited.insert(current).second) {
      path.cycle_detected = true;
      return path;
    }
  }
}

std::vector<StrategyProfile> potential_argmax(const RowVector& potential,
                                              const GameShape& shape,
                                              double tol) {
  if (potential.size() != static_cast<Eigen::Index>(shape.profile_count())) {
    throw std::invalid_argument("potential must have length k");
  }
  const double top = potential.maxCoeff();
  std::vector<StrategyProfile> out;
  for (Eigen::Index m = 0; m < potential.size(); ++m) {
    if (potential(m) >= top - tol) out.push_back(profile_at(m + 1, shape));
  }
  return out;
}

}  // namespace cwpot
