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

#include "cwpot/game.h"

#include <cmath>
#include <stdexcept>

namespace cwpot {

GameShape::GameShape(std::vector<int> cards) : cards_(std::move(cards)) {
  if (cards_.empty()) throw std::invalid_argument("a game needs a player");
  profile_count_ = 1;
  for (int c : cards_) {
    if (c < 2) {
      throw std::invalid_argument("strategy cardinalities must be >= 2");
    }
    profile_count_ *= static_cast<std::size_t>(c);
  }
}

std::size_t GameShape::total_coset_count() const {
  std::size_t total = 0;
  for (int i = 1; i <= players(); ++i) total += coset_count(i);
  return total;
}

void GameShape::check_player(int player) const {
  if (player < 1 || player > players()) {
    throw std::out_of_range("player " + std::to_string(player) +
                            " outside [1, " + std::to_string(players()) + "]");
  }
}

StrategyProfile StrategyProfile::with(int player, int strategy) const {
  StrategyProfile out = *this;
  out.choices_.at(player - 1) = strategy;
  return out;
}

void StrategyProfile::check(const GameShape& shape) const {
  if (static_cast<int>(choices_.size()) != shape.players()) {
    throw std::out_of_range("profile " + to_string() + " has " +
                            std::to_string(choices_.size()) +
                            " entries, expected " +
                            std::to_string(shape.players()));
  }
  for (int i = 1; i <= shape.players(); ++i) {
    const int x = choices_[i - 1];
    if (x < 1 || x > shape.card(i)) {
      throw std::out_of_range("profile " + to_string() + ": strategy of player " +
                              std::to_string(i) + " outside [1, " +
                              std::to_string(shape.card(i)) + "]");
    }
  }
}

std::string StrategyProfile::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < choices_.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(choices_[j]);
  }
  return s + ')';
}

std::size_t profile_index(const StrategyProfile& p, const GameShape& shape) {
  p.check(shape);
  std::size_t m = 0;
  for (int j = 1; j <= shape.players(); ++j) {
    m = m * shape.card(j) + static_cast<std::size_t>(p[j] - 1);
  }
  return m + 1;
}

StrategyProfile profile_at(std::size_t index, const GameShape& shape) {
  if (index < 1 || index > shape.profile_count()) {
    throw std::out_of_range("profile index " + std::to_string(index) +
                            " outside [1, " +
                            std::to_string(shape.profile_count()) + "]");
  }
  std::vector<int> x(shape.players());
  std::size_t rest = index - 1;
  for (int j = shape.players(); j >= 1; --j) {
    const auto kj = static_cast<std::size_t>(shape.card(j));
    x[j - 1] = static_cast<int>(rest % kj) + 1;
    rest /= kj;
  }
  return StrategyProfile(std::move(x));
}

std::size_t reduced_index(const StrategyProfile& p, int player,
                          const GameShape& shape) {
  shape.check_player(player);
  p.check(shape);
  std::size_t m = 0;
  for (int j = 1; j <= shape.players(); ++j) {
    if (j == player) continue;
    m = m * shape.card(j) + static_cast<std::size_t>(p[j] - 1);
  }
  return m + 1;
}

std::vector<StrategyProfile> all_profiles(const GameShape& shape) {
  std::vector<StrategyProfile> out;
  out.reserve(shape.profile_count());
  for (std::size_t m = 1; m <= shape.profile_count(); ++m) {
    out.push_back(profile_at(m, shape));
  }
  return out;
}

Game::Game(GameShape shape, Matrix payoffs)
    : shape_(std::move(shape)), payoffs_(std::move(payoffs)) {
  if (payoffs_.rows() != shape_.players() ||
      payoffs_.cols() != static_cast<Eigen::Index>(shape_.profile_count())) {
    throw std::invalid_argument("payoff matrix must be n x k");
  }
  if (!payoffs_.allFinite()) {
    throw std::invalid_argument("payoffs must be finite");
  }
}

Game Game::from_structure_vector(GameShape shape, const Vector& vg) {
  const auto n = shape.players();
  const auto k = static_cast<Eigen::Index>(shape.profile_count());
  if (vg.size() != n * k) {
    throw std::invalid_argument("structure vector must have length n k");
  }
  Matrix payoffs(n, k);
  for (int i = 0; i < n; ++i) payoffs.row(i) = vg.segment(i * k, k).transpose();
  return Game(std::move(shape), std::move(payoffs));
}

Game Game::zero(GameShape shape) {
  Matrix payoffs = Matrix::Zero(shape.players(), shape.profile_count());
  return Game(std::move(shape), std::move(payoffs));
}

RowVector Game::payoff_vector(int player) const {
  shape_.check_player(player);
  return payoffs_.row(player - 1);
}

double payoff(const Game& g, int player, const StrategyProfile& p) {
  g.shape().check_player(player);
  return g.payoffs()(player - 1, profile_index(p, g.shape()) - 1);
}

RowVector structure_vector(const Game& g) {
  const auto k = static_cast<Eigen::Index>(g.shape().profile_count());
  RowVector v(g.shape().players() * k);
  for (int i = 0; i < g.shape().players(); ++i) {
    v.segment(i * k, k) = g.payoffs().row(i);
  }
  return v;
}

CosetWeights::CosetWeights(GameShape shape, std::vector<RowVector> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.players()) {
    throw std::invalid_argument("one weight row per player is required");
  }
  for (int i = 1; i <= shape_.players(); ++i) {
    const RowVector& r = rows_[i - 1];
    if (r.size() != static_cast<Eigen::Index>(shape_.coset_count(i))) {
      throw std::invalid_argument("weight row " + std::to_string(i) +
                                  " must have length k/k_i");
    }
    for (Eigen::Index j = 0; j < r.size(); ++j) {
      if (!std::isfinite(r(j)) || !(r(j) > 0.0)) {
        throw std::invalid_argument("weights must be finite and positive");
      }
    }
  }
}

CosetWeights CosetWeights::uniform(GameShape shape) {
  std::vector<RowVector> rows;
  for (int i = 1; i <= shape.players(); ++i) {
    rows.push_back(RowVector::Ones(shape.coset_count(i)));
  }
  return CosetWeights(std::move(shape), std::move(rows));
}

CosetWeights CosetWeights::per_player(GameShape shape,
                                      std::span<const double> w) {
  if (static_cast<int>(w.size()) != shape.players()) {
    throw std::invalid_argument("one weight per player is required");
  }
  std::vector<RowVector> rows;
  for (int i = 1; i <= shape.players(); ++i) {
    rows.push_back(RowVector::Constant(shape.coset_count(i), w[i - 1]));
  }
  return CosetWeights(std::move(shape), std::move(rows));
}

double weight_value(const CosetWeights& w, int player,
                    const StrategyProfile& p) {
  return w.row(player)(reduced_index(p, player, w.shape()) - 1);
}

}  // namespace cwpot
