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

#include "cwpot/potential.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cwpot {
namespace {

void require_same_shape(const Game& g, const CosetWeights& w) {
  if (!(g.shape() == w.shape())) {
    throw std::invalid_argument("game and weights have different shapes");
  }
}

// Column offset of the V^d_j block inside xi (1-based j).
Eigen::Index offset_block_start(const GameShape& shape, int player) {
  Eigen::Index start = 0;
  for (int j = 1; j < player; ++j) start += shape.coset_count(j);
  return start;
}

double payoff_scale(const Game& g) {
  return std::max(1.0, g.payoffs().cwiseAbs().maxCoeff());
}

}  // namespace

LambdaSet::LambdaSet(const CosetWeights& w) {
  const GameShape& shape = w.shape();
  for (int i = 1; i <= shape.players(); ++i) {
    diagonals_.push_back(dummy_matrix(i, shape.cards()) *
                         w.row(i).transpose());
  }
}

Matrix lambda_matrix(const CosetWeights& w, int player) {
  w.shape().check_player(player);
  return LambdaSet(w).matrix(player);
}

PotentialEquation potential_equation(const Game& g, const CosetWeights& w) {
  require_same_shape(g, w);
  const GameShape& shape = g.shape();
  const int n = shape.players();
  const auto k = static_cast<Eigen::Index>(shape.profile_count());
  const auto unknowns = static_cast<Eigen::Index>(shape.total_coset_count());

  PotentialEquation eq{Matrix::Zero((n - 1) * k, unknowns),
                       Vector::Zero((n - 1) * k)};
  if (n == 1) return eq;

  const LambdaSet lambda(w);
  const Matrix e1 = dummy_matrix(1, shape.cards());
  const Vector c1 = g.payoffs().row(0).transpose();
  for (int i = 2; i <= n; ++i) {
    const Eigen::Index row = (i - 2) * k;
    const Matrix ei = dummy_matrix(i, shape.cards());
    eq.psi.block(row, 0, k, e1.cols()) = -(lambda.matrix(i) * e1);
    eq.psi.block(row, offset_block_start(shape, i), k, ei.cols()) =
        lambda.matrix(1) * ei;
    const Vector ci = g.payoffs().row(i - 1).transpose();
    eq.rhs.segment(row, k) =
        lambda.matrix(1) * ci - lambda.matrix(i) * c1;
  }
  return eq;
}

RowVector potential_from_offset(const Game& g, const CosetWeights& w,
                                const RowVector& first_offset) {
  require_same_shape(g, w);
  const Matrix e1 = dummy_matrix(1, g.shape().cards());
  if (first_offset.size() != e1.cols()) {
    throw std::invalid_argument("V^d_1 must have length k/k_1");
  }
  const RowVector shifted = g.payoffs().row(0) - first_offset * e1.transpose();
  return shifted.cwiseQuotient(LambdaSet(w).diagonal(1).transpose());
}

PotentialSolve solve_potential_detailed(const Game& g, const CosetWeights& w,
                                        const SolveOptions& options) {
  if (!(options.tol > 0.0)) {
    throw std::invalid_argument("solver tolerance must be positive");
  }
  const GameShape& shape = g.shape();
  const PotentialEquation eq = potential_equation(g, w);

  PotentialSolve out;
  out.threshold = options.tol * std::max(1.0, eq.rhs.norm());

  Vector xi = Vector::Zero(shape.total_coset_count());
  if (shape.players() > 1) {
    Eigen::CompleteOrthogonalDecomposition<Matrix> cod(eq.psi);
    xi = cod.solve(eq.rhs);
    out.residual = (eq.psi * xi - eq.rhs).norm();
  }
  if (out.residual > out.threshold) return out;

  PotentialResult result;
  result.residual = out.residual;
  for (int i = 1; i <= shape.players(); ++i) {
    result.offsets.push_back(
        xi.segment(offset_block_start(shape, i), shape.coset_count(i))
            .transpose());
  }
  result.potential = potential_from_offset(g, w, result.offsets.front());
  if (options.recenter) {
    const double base = result.potential(0);
    result.potential.array() -= base;
  }
  out.result = std::move(result);
  return out;
}

std::optional<PotentialResult> solve_potential(const Game& g,
                                               const CosetWeights& w,
                                               const SolveOptions& options) {
  return solve_potential_detailed(g, w, options).result;
}

bool verify_potential_bruteforce(const Game& g, const CosetWeights& w,
                                 const RowVector& potential, double tol) {
  require_same_shape(g, w);
  const GameShape& shape = g.shape();
  if (potential.size() != static_cast<Eigen::Index>(shape.profile_count())) {
    throw std::invalid_argument("potential must have length k");
  }
  for (const StrategyProfile& s : all_profiles(shape)) {
    const std::size_t ms = profile_index(s, shape) - 1;
    for (int i = 1; i <= shape.players(); ++i) {
      const double weight = weight_value(w, i, s);
      for (int y = 1; y <= shape.card(i); ++y) {
        const std::size_t my = profile_index(s.with(i, y), shape) - 1;
        const double lhs = g.payoffs()(i - 1, ms) - g.payoffs()(i - 1, my);
        const double rhs = weight * (potential(ms) - potential(my));
        if (!(std::abs(lhs - rhs) <= tol)) return false;
      }
    }
  }
  return true;
}

double boolean_2x2_residual(const Game& g, const CosetWeights& w) {
  require_same_shape(g, w);
  const auto cards = g.shape().cards();
  if (cards.size() != 2 || cards[0] != 2 || cards[1] != 2) {
    throw std::invalid_argument("closed-form residual needs shape (2, 2)");
  }
  const Matrix& c = g.payoffs();
  const double a = c(0, 0), b = c(0, 1), cc = c(0, 2), d = c(0, 3);
  const double e = c(1, 0), f = c(1, 1), gg = c(1, 2), h = c(1, 3);
  const double alpha1 = w.row(1)(0), beta1 = w.row(1)(1);
  const double alpha2 = w.row(2)(0), beta2 = w.row(2)(1);
  return (cc - a) / alpha1 + (e - f) / alpha2 + (b - d) / beta1 +
         (h - gg) / beta2;
}

namespace {

// Searches u_i = 1 / w_i with u_1 = 1 such that u_i c_i = P + E_i d_i for
// all i, as one linear least-squares problem in (P, d_1..d_n, u_2..u_n).
std::optional<std::vector<double>> search_player_weights(const Game& g,
                                                         double tol) {
  const GameShape& shape = g.shape();
  const int n = shape.players();
  const auto k = static_cast<Eigen::Index>(shape.profile_count());
  const auto offsets = static_cast<Eigen::Index>(shape.total_coset_count());
  const Eigen::Index cols = k + offsets + (n - 1);

  Matrix a = Matrix::Zero(n * k, cols);
  Vector b = Vector::Zero(n * k);
  for (int i = 1; i <= n; ++i) {
    const Eigen::Index row = (i - 1) * k;
    const Matrix ei = dummy_matrix(i, shape.cards());
    a.block(row, 0, k, k).setIdentity();
    a.block(row, k + offset_block_start(shape, i), k, ei.cols()) = ei;
    const Vector ci = g.payoffs().row(i - 1).transpose();
    if (i == 1) {
      b.segment(row, k) = ci;
    } else {
      a.block(row, k + offsets + (i - 2), k, 1) = -ci;
    }
  }
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(a);
  const Vector x = cod.solve(b);
  if ((a * x - b).norm() > tol * std::max(1.0, b.norm())) return std::nullopt;

  std::vector<double> weights{1.0};
  for (int i = 2; i <= n; ++i) {
    const double u = x(k + offsets + (i - 2));
    if (!(u > tol)) return std::nullopt;
    weights.push_back(1.0 / u);
  }
  return weights;
}

}  // namespace

Classification classify(const Game& g, double tol) {
  const GameShape& shape = g.shape();
  Classification out;
  const PotentialSolve exact =
      solve_potential_detailed(g, CosetWeights::uniform(shape), {.tol = tol});
  out.exact = exact.solvable();
  out.exact_residual = exact.residual;

  const auto cards = shape.cards();
  if (cards.size() == 2 && cards[0] == 2 && cards[1] == 2) {
    // w_1 / w_2 = (a - b - c + d) / (e - f - g + h).
    out.weighted_search_heuristic = false;
    const Matrix& c = g.payoffs();
    const double first = c(0, 0) - c(0, 1) - c(0, 2) + c(0, 3);
    const double second = c(1, 0) - c(1, 1) - c(1, 2) + c(1, 3);
    const double zero = tol * payoff_scale(g);
    const bool first_zero = std::abs(first) <= zero;
    const bool second_zero = std::abs(second) <= zero;
    if (first_zero && second_zero) {
      out.player_weighted = true;
      out.player_weights = {1.0, 1.0};
    } else if (!first_zero && !second_zero && first * second > 0.0) {
      out.player_weighted = true;
      out.player_weights = {1.0, second / first};
    }
    return out;
  }

  if (shape.players() == 1) {
    out.player_weighted = true;
    out.player_weights = {1.0};
    return out;
  }
  if (auto w = search_player_weights(g, tol)) {
    out.player_weighted = true;
    out.player_weights = std::move(*w);
  }
  return out;
}

}  // namespace cwpot
