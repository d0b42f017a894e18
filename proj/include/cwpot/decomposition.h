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

#ifndef CWPOT_DECOMPOSITION_H_
#define CWPOT_DECOMPOSITION_H_

// Orthogonal decomposition of the game space for fixed coset weights:
//
//   R^{nk} = P^cw (+) N (+) H^cw
//
// where P^cw is the pure-potential subspace, N the non-strategic games and
// H^cw the pure-harmonic subspace. Games are handled as structure vectors
// V_G of length n k.

#include <cstddef>

#include <Eigen/LU>

#include "cwpot/game.h"
#include "cwpot/potential.h"

namespace cwpot {

// Dimensions d_1 = k - 1, d_2 = sum_j k / k_j and
// d_3 = (n - 1) k - sum_j k / k_j + 1.
struct SubspaceDims {
  std::size_t pure_potential;
  std::size_t nonstrategic;
  std::size_t pure_harmonic;

  std::size_t total() const {
    return pure_potential + nonstrategic + pure_harmonic;
  }
};

SubspaceDims subspace_dims(const GameShape& shape);

// B^N = blkdiag(E_1, ..., E_n).
Matrix basis_nonstrategic(const GameShape& shape);

struct PurePotentialBasis {
  Matrix full;     // B^P_cw, nk x k; block i is Lambda_i - Lambda_i E_i E_i^T / k_i
  Matrix reduced;  // B^{P0}_cw, the same without its last column
};

PurePotentialBasis basis_pure_potential(const CosetWeights& w);

// Spanning matrix of the coset weighted potential games: block row i is
// [Lambda_i, 0, ..., Lambda_i E_i, ..., 0]. Its column span equals
// span[B^P_cw | B^N]; its left kernel is the pure-harmonic subspace.
Matrix basis_potential_span(const CosetWeights& w);

// Pure-harmonic basis [J_1, ..., J_{n-1}]. Column count is d_3. Each column
// is checked against the kernel of basis_potential_span(w)^T; a failure
// throws ConsistencyError.
Matrix basis_pure_harmonic(const CosetWeights& w);

// Absolute bound used by the per-column kernel check.
inline constexpr double kKernelTolerance = 1e-10;

class DecompositionBasis {
 public:
  const CosetWeights& weights() const { return weights_; }
  const GameShape& shape() const { return weights_.shape(); }
  SubspaceDims dims() const { return dims_; }

  const Matrix& pure_potential() const { return pure_potential_; }
  const Matrix& pure_potential_full() const { return pure_potential_full_; }
  const Matrix& nonstrategic() const { return nonstrategic_; }
  const Matrix& pure_harmonic() const { return pure_harmonic_; }
  // B_cw = [B^{P0}_cw | B^N | B^H_cw].
  const Matrix& assembled() const { return assembled_; }

  // Reciprocal condition estimate of B_cw (1-norm).
  double rcond() const { return rcond_; }
  bool ill_conditioned() const { return rcond_ < 1e-10; }

  // B_cw^{-1} v.
  Vector solve(const Vector& v) const { return lu_.solve(v); }

 private:
  friend DecompositionBasis assemble_basis(const CosetWeights& w);
  explicit DecompositionBasis(const CosetWeights& w) : weights_(w) {}

  CosetWeights weights_;
  SubspaceDims dims_{};
  Matrix pure_potential_;
  Matrix pure_potential_full_;
  Matrix nonstrategic_;
  Matrix pure_harmonic_;
  Matrix assembled_;
  Eigen::PartialPivLU<Matrix> lu_;
  double rcond_ = 0.0;
};

// Throws ConsistencyError if B_cw turns out singular.
DecompositionBasis assemble_basis(const CosetWeights& w);

struct Decomposition {
  Vector x_pure_potential;  // X^P_cw, length d_1
  Vector x_nonstrategic;    // X^N, length d_2
  Vector x_pure_harmonic;   // X^H_cw, length d_3

  RowVector pure_potential;  // B_cw [X^P 0 0]^T
  RowVector nonstrategic;    // B_cw [0 X^N 0]^T
  RowVector pure_harmonic;   // B_cw [0 0 X^H]^T
  RowVector potential;       // pure_potential + nonstrategic
  RowVector harmonic;        // pure_harmonic + nonstrategic
};

Decomposition decompose(const DecompositionBasis& basis, const Game& g);
Decomposition decompose(const Game& g, const CosetWeights& w);

// Pointwise algebraic residuals (maximum absolute violation over profiles).
// Non-strategic: |c_i(s) - mean_x c_i(x, s_-i)|.
double nonstrategic_residual(const Game& g);
// sum_{x in S_i} c_i(x, s_-i) = 0.
double coset_sum_residual(const Game& g);
// c_i(s) = w_i(s_-i) (P(s) - (1/k_i) sum_x P(x, s_-i)).
double pure_potential_identity_residual(const Game& g, const CosetWeights& w,
                                        const RowVector& potential);
// sum_i w_i(s_-i) c_i(s) = 0.
double weighted_zero_sum_residual(const Game& g, const CosetWeights& w);
// (sum_{x in S_i} w_1 at (x, s_-i)) * (sum_{x in S_i} c_i(x, s_-i)) = 0.
double weighted_coset_sum_residual(const Game& g, const CosetWeights& w);
// Unweighted harmonic condition:
// sum_i (c_i(s) - (1/k_i) sum_x c_i(x, s_-i)) = 0.
double harmonic_residual(const Game& g);
// Unweighted pure harmonic: sum_i c_i(s) = 0 plus zero coset sums.
double plain_pure_harmonic_residual(const Game& g);

struct MembershipReport {
  double tolerance = 0.0;  // absolute bound actually applied

  bool nonstrategic = false;
  bool cw_potential = false;
  bool cw_potential_by_solver = false;
  bool cw_pure_potential = false;
  bool cw_pure_potential_algebraic = false;
  bool cw_pure_harmonic = false;
  bool cw_pure_harmonic_algebraic = false;
  bool harmonic = false;       // unweighted
  bool pure_harmonic = false;  // unweighted

  // Norms of the three projections.
  double pure_potential_norm = 0.0;
  double nonstrategic_norm = 0.0;
  double pure_harmonic_norm = 0.0;
};

// `tol` is scaled by max(1, ||V_G||_2).
MembershipReport membership(const Game& g, const CosetWeights& w,
                            double tol = kDefaultTolerance);

}  // namespace cwpot

#endif  // CWPOT_DECOMPOSITION_H_
