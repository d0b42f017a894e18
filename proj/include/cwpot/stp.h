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

#ifndef CWPOT_STP_H_
#define CWPOT_STP_H_

// Semi-tensor product algebra.
//
// Index convention: every index that appears in this library's public API
// (strategies, players, profile numbers, the i in delta_n^i) is 1-based, as
// in the usual delta notation. Storage is 0-based; converting means
// subtracting one at the boundary and nothing else.

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace cwpot {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using RowVector = Eigen::RowVectorXd;

// A matrix whose columns are all canonical basis vectors, stored as the
// 1-based row index of the single one in each column: delta_rows[i_1, ...].
class LogicalMatrix {
 public:
  LogicalMatrix(std::size_t rows, std::vector<std::size_t> column_indices);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return column_indices_.size(); }
  const std::vector<std::size_t>& column_indices() const {
    return column_indices_;
  }

  Matrix dense() const;

  // Recovers the compressed form from a dense 0/1 matrix; throws
  // std::invalid_argument if some column is not a canonical basis vector.
  static LogicalMatrix from_dense(const Matrix& m);

  friend bool operator==(const LogicalMatrix&, const LogicalMatrix&) = default;

 private:
  std::size_t rows_;
  std::vector<std::size_t> column_indices_;
};

// L * X without expanding L.
Matrix operator*(const LogicalMatrix& lhs, const Matrix& rhs);

// delta_n^i as an n x 1 column.
Matrix delta(std::size_t n, std::size_t i);

// 1_n as an n x 1 column.
Matrix ones(std::size_t n);

Matrix kron(const Matrix& a, const Matrix& b);

// Left semi-tensor product: with t = lcm(a.cols, b.rows),
// (a (x) I_{t/a.cols}) (b (x) I_{t/b.rows}).
Matrix stp(const Matrix& a, const Matrix& b);

// Left-to-right product a_1 |x a_2 |x ... |x a_m. Empty input yields the
// 1 x 1 identity.
Matrix stp(std::span<const Matrix> factors);

// O^R_p = delta_{p^2}[1, p+2, 2p+3, ..., p^2]; satisfies x |x x = O^R_p x
// for every x in Delta_p.
LogicalMatrix power_reducing_matrix(std::size_t p);

// E_i = I_{k_1...k_{i-1}} (x) 1_{k_i} (x) I_{k_{i+1}...k_n} for the 1-based
// player i. Throws std::out_of_range for a bad i and std::invalid_argument
// for a cardinality below 2.
Matrix dummy_matrix(int player, std::span<const int> cards);

}  // namespace cwpot

#endif  // CWPOT_STP_H_
