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

#include "cwpot/decomposition.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cwpot/errors.h"

namespace cwpot {
namespace {

Eigen::Index block_start(const GameShape& shape, int player) {
  Eigen::Index start = 0;
  for (int j = 1; j < player; ++j) start += shape.coset_count(j);
  return start;
}

Matrix kron_columns(const std::vector<Matrix>& factors) {
  Matrix acc = Matrix::Ones(1, 1);
  for (const Matrix& f : factors) acc = kron(acc, f);
  return acc;
}

// One column of J_m (1 <= m <= n-1) for the index tuple `idx` (1-based).
Vector harmonic_column(const GameShape& shape, const LambdaSet& lambda, int m,
                       const std::vector<int>& idx) {
  const int n = shape.players();
  const auto k = static_cast<Eigen::Index>(shape.profile_count());
  auto d = [&](int player, int i) { return delta(shape.card(player), i); };
  auto diff = [&](int player) {
    return Matrix(d(player, 1) - d(player, idx[player - 1]));
  };

  Vector col = Vector::Zero(n * k);
  for (int j = 1; j <= m; ++j) {
    std::vector<Matrix> f;
    for (int l = 1; l <= n; ++l) {
      if (l < j || l > m + 1) {
        f.push_back(d(l, idx[l - 1]));
      } else if (l == j || l == m + 1) {
        f.push_back(diff(l));
      } else {
        f.push_back(d(l, 1));
      }
    }
    col.segment((j - 1) * k, k) =
        kron_columns(f).col(0).cwiseQuotient(lambda.diagonal(j));
  }

  // -Lambda_{m+1}^{-1} (delta^{1..1} - delta^{i_1..i_m}) (x) diff (x) tail
  std::vector<Matrix> head_ones, head_idx;
  for (int l = 1; l <= m; ++l) {
    head_ones.push_back(d(l, 1));
    head_idx.push_back(d(l, idx[l - 1]));
  }
  std::vector<Matrix> f{kron_columns(head_ones) - kron_columns(head_idx),
                        diff(m + 1)};
  for (int l = m + 2; l <= n; ++l) f.push_back(d(l, idx[l - 1]));
  col.segment(m * k, k) =
      -kron_columns(f).col(0).cwiseQuotient(lambda.diagonal(m + 1));
  return col;
}

bool tuple_all_ones(const std::vector<int>& idx, int upto) {
  for (int l = 0; l < upto; ++l) {
    if (idx[l] != 1) return false;
  }
  return true;
}

}  // namespace

SubspaceDims subspace_dims(const GameShape& shape) {
  const std::size_t n = shape.players();
  const std::size_t k = shape.profile_count();
  const std::size_t cosets = shape.total_coset_count();
  return SubspaceDims{k - 1, cosets, (n - 1) * k + 1 - cosets};
}

Matrix basis_nonstrategic(const GameShape& shape) {
  const int n = shape.players();
  const auto k = static_cast<Eigen::Index>(shape.profile_count());
  Matrix b = Matrix::Zero(n * k, shape.total_coset_count());
  for (int i = 1; i <= n; ++i) {
    const Matrix ei = dummy_matrix(i, shape.cards());
    b.block((i - 1) * k, block_start(shape, i), k, ei.cols()) = ei;
  }
  return b;
}

PurePotentialBasis basis_pure_potential(const CosetWeights& w) {
  const GameShape& shape = w.shape();
  const int n = shape.players();
  const auto k = static_cast<Eigen::Index>(shape.profile_count());
  const LambdaSet lambda(w);

  PurePotentialBasis out;
  out.full = Matrix::Zero(n * k, k);
  for (int i = 1; i <= n; ++i) {
    const Matrix ei = dummy_matrix(i, shape.cards());
    const Matrix li = lambda.matrix(i);
    out.full.block((i - 1) * k, 0, k, k) =
        li - (li * ei * ei.transpose()) / static_cast<double>(shape.card(i));
  }
  out.reduced = out.full.leftCols(k - 1);
  return out;
}

Matrix basis_potential_span(const CosetWeights& w) {
  const GameShape& shape = w.shape();
  const int n = shape.players();
  const auto k = static_cast<Eigen::Index>(shape.profile_count());
  const LambdaSet lambda(w);

  Matrix span = Matrix::Zero(n * k, k + shape.total_coset_count());
  for (int i = 1; i <= n; ++i) {
    const Matrix ei = dummy_matrix(i, shape.cards());
    span.block((i - 1) * k, 0, k, k) = lambda.matrix(i);
    span.block((i - 1) * k, k + block_start(shape, i), k, ei.cols()) =
        lambda.matrix(i) * ei;
  }
  return span;
}

Matrix basis_pure_harmonic(const CosetWeights& w) {
  const GameShape& shape = w.shape();
  const int n = shape.players();
  const auto k = static_cast<Eigen::Index>(shape.profile_count());
  const std::size_t expected = subspace_dims(shape).pure_harmonic;
  const LambdaSet lambda(w);
  const Matrix kernel_of = basis_potential_span(w).transpose();

  std::vector<Vector> columns;
  const std::vector<StrategyProfile> tuples = all_profiles(shape);
  for (int m = 1; m <= n - 1; ++m) {
    for (const StrategyProfile& t : tuples) {
      std::vector<int> idx(t.choices().begin(), t.choices().end());
      if (tuple_all_ones(idx, m) || idx[m] == 1) continue;
      Vector col = harmonic_column(shape, lambda, m, idx);
      const double violation = (kernel_of * col).cwiseAbs().maxCoeff();
      if (!(violation <= kKernelTolerance)) {
        throw ConsistencyError("pure-harmonic column J_" + std::to_string(m) +
                               " at " + t.to_string() +
                               " leaves the kernel (violation " +
                               std::to_string(violation) + ")");
      }
      columns.push_back(std::move(col));
    }
  }
  if (columns.size() != expected) {
    throw ConsistencyError("pure-harmonic basis has " +
                           std::to_string(columns.size()) +
                           " columns, expected " + std::to_string(expected));
  }
  Matrix out(n * k, static_cast<Eigen::Index>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) out.col(c) = columns[c];
  return out;
}

DecompositionBasis assemble_basis(const CosetWeights& w) {
  DecompositionBasis basis(w);
  const GameShape& shape = w.shape();
  basis.dims_ = subspace_dims(shape);

  PurePotentialBasis potential = basis_pure_potential(w);
  basis.pure_potential_full_ = std::move(potential.full);
  basis.pure_potential_ = std::move(potential.reduced);
  basis.nonstrategic_ = basis_nonstrategic(shape);
  basis.pure_harmonic_ = basis_pure_harmonic(w);

  const auto nk = static_cast<Eigen::Index>(basis.dims_.total());
  basis.assembled_.resize(nk, nk);
  basis.assembled_ << basis.pure_potential_, basis.nonstrategic_,
      basis.pure_harmonic_;
  basis.lu_.compute(basis.assembled_);
  basis.rcond_ = basis.lu_.rcond();
  if (!(basis.rcond_ > 1e-14)) {
    throw ConsistencyError("assembled decomposition basis is singular (rcond " +
                           std::to_string(basis.rcond_) + ")");
  }
  return basis;
}

Decomposition decompose(const DecompositionBasis& basis, const Game& g) {
  if (!(g.shape() == basis.shape())) {
    throw std::invalid_argument("game and basis have different shapes");
  }
  const SubspaceDims dims = basis.dims();
  const Vector vg = structure_vector(g).transpose();
  const Vector x = basis.solve(vg);

  Decomposition out;
  out.x_pure_potential = x.head(dims.pure_potential);
  out.x_nonstrategic = x.segment(dims.pure_potential, dims.nonstrategic);
  out.x_pure_harmonic = x.tail(dims.pure_harmonic);
  out.pure_potential =
      (basis.pure_potential() * out.x_pure_potential).transpose();
  out.nonstrategic = (basis.nonstrategic() * out.x_nonstrategic).transpose();
  out.pure_harmonic =
      (basis.pure_harmonic() * out.x_pure_harmonic).transpose();
  out.potential = out.pure_potential + out.nonstrategic;
  out.harmonic = out.pure_harmonic + out.nonstrategic;
  return out;
}

Decomposition decompose(const Game& g, const CosetWeights& w) {
  if (!(g.shape() == w.shape())) {
    throw std::invalid_argument("game and weights have different shapes");
  }
  return decompose(assemble_basis(w), g);
}

namespace {

// Calls fn(i, s, coset) for every player and profile, where coset holds the
// profile indices (0-based) of (x, s_-i) for x = 1..k_i.
template <typename Fn>
void for_each_coset(const GameShape& shape, Fn&& fn) {
  std::vector<std::size_t> coset;
  for (const StrategyProfile& s : all_profiles(shape)) {
    for (int i = 1; i <= shape.players(); ++i) {
      coset.clear();
      for (int x = 1; x <= shape.card(i); ++x) {
        coset.push_back(profile_index(s.with(i, x), shape) - 1);
      }
      fn(i, s, coset);
    }
  }
}

double coset_sum(const Game& g, int player,
                 const std::vector<std::size_t>& coset) {
  double total = 0.0;
  for (std::size_t m : coset) total += g.payoffs()(player - 1, m);
  return total;
}

}  // namespace

double nonstrategic_residual(const Game& g) {
  double worst = 0.0;
  for_each_coset(g.shape(), [&](int i, const StrategyProfile& s,
                                const std::vector<std::size_t>& coset) {
    const double mean = coset_sum(g, i, coset) / coset.size();
    worst = std::max(worst, std::abs(payoff(g, i, s) - mean));
  });
  return worst;
}

double coset_sum_residual(const Game& g) {
  double worst = 0.0;
  for_each_coset(g.shape(), [&](int i, const StrategyProfile&,
                                const std::vector<std::size_t>& coset) {
    worst = std::max(worst, std::abs(coset_sum(g, i, coset)));
  });
  return worst;
}

double pure_potential_identity_residual(const Game& g, const CosetWeights& w,
                                        const RowVector& potential) {
  const GameShape& shape = g.shape();
  if (potential.size() != static_cast<Eigen::Index>(shape.profile_count())) {
    throw std::invalid_argument("potential must have length k");
  }
  double worst = 0.0;
  for_each_coset(shape, [&](int i, const StrategyProfile& s,
                            const std::vector<std::size_t>& coset) {
    double sum = 0.0;
    for (std::size_t m : coset) sum += potential(m);
    const double p = potential(profile_index(s, shape) - 1);
    const double predicted =
        weight_value(w, i, s) * (p - sum / shape.card(i));
    worst = std::max(worst, std::abs(payoff(g, i, s) - predicted));
  });
  return worst;
}

double weighted_zero_sum_residual(const Game& g, const CosetWeights& w) {
  double worst = 0.0;
  for (const StrategyProfile& s : all_profiles(g.shape())) {
    double total = 0.0;
    for (int i = 1; i <= g.shape().players(); ++i) {
      total += weight_value(w, i, s) * payoff(g, i, s);
    }
    worst = std::max(worst, std::abs(total));
  }
  return worst;
}

double weighted_coset_sum_residual(const Game& g, const CosetWeights& w) {
  const GameShape& shape = g.shape();
  double worst = 0.0;
  for_each_coset(shape, [&](int i, const StrategyProfile& s,
                            const std::vector<std::size_t>& coset) {
    double weight_sum = 0.0;
    for (int x = 1; x <= shape.card(i); ++x) {
      weight_sum += weight_value(w, 1, s.with(i, x));
    }
    worst = std::max(worst, std::abs(weight_sum * coset_sum(g, i, coset)));
  });
  return worst;
}

double harmonic_residual(const Game& g) {
  const GameShape& shape = g.shape();
  double worst = 0.0;
  for (const StrategyProfile& s : all_profiles(shape)) {
    double total = 0.0;
    for (int i = 1; i <= shape.players(); ++i) {
      double sum = 0.0;
      for (int x = 1; x <= shape.card(i); ++x) sum += payoff(g, i, s.with(i, x));
      total += payoff(g, i, s) - sum / shape.card(i);
    }
    worst = std::max(worst, std::abs(total));
  }
  return worst;
}

double plain_pure_harmonic_residual(const Game& g) {
  double worst = coset_sum_residual(g);
  for (const StrategyProfile& s : all_profiles(g.shape())) {
    double total = 0.0;
    for (int i = 1; i <= g.shape().players(); ++i) total += payoff(g, i, s);
    worst = std::max(worst, std::abs(total));
  }
  return worst;
}

MembershipReport membership(const Game& g, const CosetWeights& w, double tol) {
  const DecompositionBasis basis = assemble_basis(w);
  const Decomposition dec = decompose(basis, g);
  const GameShape& shape = g.shape();

  MembershipReport r;
  r.tolerance = tol * std::max(1.0, structure_vector(g).norm());
  r.pure_potential_norm = dec.pure_potential.norm();
  r.nonstrategic_norm = dec.nonstrategic.norm();
  r.pure_harmonic_norm = dec.pure_harmonic.norm();

  const bool no_pure_potential = r.pure_potential_norm <= r.tolerance;
  const bool no_nonstrategic = r.nonstrategic_norm <= r.tolerance;
  const bool no_harmonic = r.pure_harmonic_norm <= r.tolerance;

  r.nonstrategic = nonstrategic_residual(g) <= r.tolerance;
  r.cw_potential = no_harmonic;
  const auto solved = solve_potential(g, w, {.tol = tol});
  r.cw_potential_by_solver = solved.has_value();

  r.cw_pure_potential = no_harmonic && no_nonstrategic;
  r.cw_pure_potential_algebraic =
      solved && coset_sum_residual(g) <= r.tolerance &&
      verify_potential_bruteforce(g, w, solved->potential, r.tolerance);

  double max_weight = 1.0;
  for (const RowVector& row : w.rows()) {
    max_weight = std::max(max_weight, row.maxCoeff());
  }
  int max_card = 0;
  for (int c : shape.cards()) max_card = std::max(max_card, c);
  r.cw_pure_harmonic = no_pure_potential && no_nonstrategic;
  r.cw_pure_harmonic_algebraic =
      weighted_zero_sum_residual(g, w) <= r.tolerance * max_weight &&
      weighted_coset_sum_residual(g, w) <=
          r.tolerance * max_card * max_weight;

  r.harmonic = harmonic_residual(g) <= r.tolerance;
  r.pure_harmonic = plain_pure_harmonic_residual(g) <= r.tolerance;
  return r;
}

}  // namespace cwpot
