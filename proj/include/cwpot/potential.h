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

#ifndef CWPOT_POTENTIAL_H_
#define CWPOT_POTENTIAL_H_

#include <optional>
#include <vector>

#include "cwpot/game.h"

namespace cwpot {

inline constexpr double kDefaultTolerance = 1e-8;

// The diagonals of Lambda_i = V^w_i E_i^T |x O^R_k: entry m of diagonal i is
// w_i at the profile with index m.
class LambdaSet {
 public:
  explicit LambdaSet(const CosetWeights& w);

  int players() const { return static_cast<int>(diagonals_.size()); }
  const Vector& diagonal(int player) const { return diagonals_.at(player - 1); }
  auto matrix(int player) const { return diagonal(player).asDiagonal(); }

 private:
  std::vector<Vector> diagonals_;
};

// Lambda_i as a dense k x k matrix.
Matrix lambda_matrix(const CosetWeights& w, int player);

// Psi_w xi = b^w. Block row i-1 (i = 2..n) of psi is
// [-Lambda_i E_1, 0, ..., Lambda_1 E_i, ..., 0]; b^w stacks
// Lambda_1 (V^c_i)^T - Lambda_i (V^c_1)^T. Both are empty when n = 1.
struct PotentialEquation {
  Matrix psi;
  Vector rhs;
};

PotentialEquation potential_equation(const Game& g, const CosetWeights& w);

struct PotentialResult {
  RowVector potential;
  std::vector<RowVector> offsets;  // V^d_i, one per player
  double residual = 0.0;
};

struct SolveOptions {
  double tol = kDefaultTolerance;
  // Shift the potential so that P(1, ..., 1) = 0.
  bool recenter = false;
};

// Outcome of the least-squares solve whether or not the game qualifies.
struct PotentialSolve {
  double residual = 0.0;   // ||Psi_w xi - b^w||_2 at the min-norm xi
  double threshold = 0.0;  // tol * max(1, ||b^w||_2)
  std::optional<PotentialResult> result;

  bool solvable() const { return result.has_value(); }
};

PotentialSolve solve_potential_detailed(const Game& g, const CosetWeights& w,
                                        const SolveOptions& options = {});

// The potential of a coset weighted potential game for the given weights, or
// nothing when the potential equation has no solution.
std::optional<PotentialResult> solve_potential(
    const Game& g, const CosetWeights& w, const SolveOptions& options = {});

// V^P = (V^c_1 - V^d_1 E_1^T) Lambda_1^{-1}.
RowVector potential_from_offset(const Game& g, const CosetWeights& w,
                                const RowVector& first_offset);

// Direct check of c_i(x, s_-i) - c_i(y, s_-i) = w_i(s_-i) (P(x, s_-i) -
// P(y, s_-i)) over every player, coset and pair of own strategies.
bool verify_potential_bruteforce(const Game& g, const CosetWeights& w,
                                 const RowVector& potential, double tol);

// Closed-form solvability residual for shape (2, 2):
// (c-a)/alpha_1 + (e-f)/alpha_2 + (b-d)/beta_1 + (h-g)/beta_2.
double boolean_2x2_residual(const Game& g, const CosetWeights& w);

struct Classification {
  bool exact = false;
  double exact_residual = 0.0;
  bool player_weighted = false;
  // Per-player constant weights normalized to w_1 = 1 when player_weighted.
  std::vector<double> player_weights;
  // False only for shape (2, 2), where the ratio test is exact.
  bool weighted_search_heuristic = true;
};

Classification classify(const Game& g, double tol = kDefaultTolerance);

}  // namespace cwpot

#endif  // CWPOT_POTENTIAL_H_
