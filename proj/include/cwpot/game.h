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

#ifndef CWPOT_GAME_H_
#define CWPOT_GAME_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cwpot/stp.h"

namespace cwpot {

// Player count and strategy cardinalities (k_1, ..., k_n), each k_i >= 2.
class GameShape {
 public:
  explicit GameShape(std::vector<int> cards);

  int players() const { return static_cast<int>(cards_.size()); }
  std::span<const int> cards() const { return cards_; }
  // Cardinality of the 1-based player i.
  int card(int player) const { return cards_.at(player - 1); }
  // k = prod k_i.
  std::size_t profile_count() const { return profile_count_; }
  // k / k_i, the number of opponent profiles s_{-i}.
  std::size_t coset_count(int player) const {
    return profile_count_ / static_cast<std::size_t>(card(player));
  }
  // sum_j k / k_j.
  std::size_t total_coset_count() const;

  void check_player(int player) const;

  friend bool operator==(const GameShape& a, const GameShape& b) {
    return a.cards_ == b.cards_;
  }

 private:
  std::vector<int> cards_;
  std::size_t profile_count_;
};

// A pure strategy profile (x_1, ..., x_n) with 1-based choices.
class StrategyProfile {
 public:
  StrategyProfile() = default;
  explicit StrategyProfile(std::vector<int> choices)
      : choices_(std::move(choices)) {}
  StrategyProfile(std::initializer_list<int> choices) : choices_(choices) {}

  std::size_t size() const { return choices_.size(); }
  int operator[](int player) const { return choices_.at(player - 1); }
  std::span<const int> choices() const { return choices_; }

  // Same profile with the 1-based player's choice replaced.
  StrategyProfile with(int player, int strategy) const;

  // Throws std::out_of_range unless the profile fits the shape.
  void check(const GameShape& shape) const;

  // "(x_1,...,x_n)".
  std::string to_string() const;

  friend auto operator<=>(const StrategyProfile&,
                          const StrategyProfile&) = default;

 private:
  std::vector<int> choices_;
};

// 1-based index m with delta_k^m = x_1 |x ... |x x_n (last player fastest).
std::size_t profile_index(const StrategyProfile& p, const GameShape& shape);

// Inverse of profile_index.
StrategyProfile profile_at(std::size_t index, const GameShape& shape);

// 1-based index of s_{-i} over players j != i, last fastest.
std::size_t reduced_index(const StrategyProfile& p, int player,
                          const GameShape& shape);

// All profiles in profile_index order.
std::vector<StrategyProfile> all_profiles(const GameShape& shape);

// A finite game held as structure vectors: row i-1 of payoffs() is V^c_i.
class Game {
 public:
  Game(GameShape shape, Matrix payoffs);
  // Builds from the concatenated structure vector V_G (length n k).
  static Game from_structure_vector(GameShape shape, const Vector& vg);
  static Game zero(GameShape shape);

  const GameShape& shape() const { return shape_; }
  const Matrix& payoffs() const { return payoffs_; }
  RowVector payoff_vector(int player) const;

 private:
  GameShape shape_;
  Matrix payoffs_;
};

double payoff(const Game& g, int player, const StrategyProfile& p);

// V_G = [V^c_1, ..., V^c_n].
RowVector structure_vector(const Game& g);

// Coset-depending weights: row i-1 is V^w_i over the opponent profiles of
// player i (reduced_index order). Every entry is finite and > 0.
class CosetWeights {
 public:
  CosetWeights(GameShape shape, std::vector<RowVector> rows);
  static CosetWeights uniform(GameShape shape);
  // Constant weight w_i for each player i.
  static CosetWeights per_player(GameShape shape, std::span<const double> w);

  const GameShape& shape() const { return shape_; }
  const RowVector& row(int player) const { return rows_.at(player - 1); }
  const std::vector<RowVector>& rows() const { return rows_; }

 private:
  GameShape shape_;
  std::vector<RowVector> rows_;
};

double weight_value(const CosetWeights& w, int player,
                    const StrategyProfile& p);

// Game file codec. The document layout is
//   {"players": n, "cardinalities": [k_1, ...],
//    "payoffs": [[V^c_1], ...], "weights": [[V^w_1], ...]}
// with "weights" optional.
struct GameDocument {
  Game game;
  std::optional<CosetWeights> weights;
};

// Throws InputError carrying the offending field path.
GameDocument parse_game(std::string_view text);

// Accepts either a bare array of rows or an object with a "weights" member.
CosetWeights parse_weights(std::string_view text, const GameShape& shape);

std::string serialize_game(const Game& g,
                           const std::optional<CosetWeights>& weights = {});

}  // namespace cwpot

#endif  // CWPOT_GAME_H_
