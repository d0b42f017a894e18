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

#include "cwpot/stp.h"

#include <numeric>
#include <stdexcept>
#include <string>

namespace cwpot {

LogicalMatrix::LogicalMatrix(std::size_t rows,
                             std::vector<std::size_t> column_indices)
    : rows_(rows), column_indices_(std::move(column_indices)) {
  if (rows_ == 0 || column_indices_.empty()) {
    throw std::invalid_argument("logical matrix must be non-empty");
  }
  for (std::size_t idx : column_indices_) {
    if (idx < 1 || idx > rows_) {
      throw std::out_of_range("logical matrix index " + std::to_string(idx) +
                              " outside [1, " + std::to_string(rows_) + "]");
    }
  }
}

Matrix LogicalMatrix::dense() const {
  Matrix m = Matrix::Zero(rows_, cols());
  for (std::size_t j = 0; j < cols(); ++j) m(column_indices_[j] - 1, j) = 1.0;
  return m;
}

LogicalMatrix LogicalMatrix::from_dense(const Matrix& m) {
  std::vector<std::size_t> idx;
  idx.reserve(m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    std::size_t hit = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (m(i, j) == 1.0 && hit == 0) {
        hit = static_cast<std::size_t>(i) + 1;
      } else if (m(i, j) != 0.0) {
        throw std::invalid_argument("column " + std::to_string(j + 1) +
                                    " is not a canonical basis vector");
      }
    }
    if (hit == 0) {
      throw std::invalid_argument("column " + std::to_string(j + 1) +
                                  " has no nonzero entry");
    }
    idx.push_back(hit);
  }
  return LogicalMatrix(m.rows(), std::move(idx));
}

Matrix operator*(const LogicalMatrix& lhs, const Matrix& rhs) {
  if (static_cast<Eigen::Index>(lhs.cols()) != rhs.rows()) {
    throw std::invalid_argument("logical product: dimension mismatch");
  }
  Matrix out = Matrix::Zero(lhs.rows(), rhs.cols());
  const auto& idx = lhs.column_indices();
  for (std::size_t j = 0; j < idx.size(); ++j) out.row(idx[j] - 1) += rhs.row(j);
  return out;
}

Matrix delta(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) {
    throw std::out_of_range("delta_" + std::to_string(n) + "^" +
                            std::to_string(i) + " is undefined");
  }
  Matrix d = Matrix::Zero(n, 1);
  d(i - 1, 0) = 1.0;
  return d;
}

Matrix ones(std::size_t n) { return Matrix::Ones(n, 1); }

Matrix kron(const Matrix& a, const Matrix& b) {
  const Eigen::Index br = b.rows(), bc = b.cols();
  Matrix out(a.rows() * br, a.cols() * bc);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
    }
  }
  return out;
}

Matrix stp(const Matrix& a, const Matrix& b) {
  const auto n = static_cast<std::size_t>(a.cols());
  const auto p = static_cast<std::size_t>(b.rows());
  if (n == p) return a * b;
  const std::size_t t = std::lcm(n, p);
  return kron(a, Matrix::Identity(t / n, t / n)) *
         kron(b, Matrix::Identity(t / p, t / p));
}

Matrix stp(std::span<const Matrix> factors) {
  Matrix acc = Matrix::Identity(1, 1);
  for (const Matrix& f : factors) acc = stp(acc, f);
  return acc;
}

LogicalMatrix power_reducing_matrix(std::size_t p) {
  if (p < 1) throw std::invalid_argument("power_reducing_matrix: p must be >= 1");
  std::vector<std::size_t> idx(p);
  for (std::size_t j = 0; j < p; ++j) idx[j] = j * (p + 1) + 1;
  return LogicalMatrix(p * p, std::move(idx));
}

Matrix dummy_matrix(int player, std::span<const int> cards) {
  const int n = static_cast<int>(cards.size());
  if (player < 1 || player > n) {
    throw std::out_of_range("player " + std::to_string(player) +
                            " outside [1, " + std::to_string(n) + "]");
  }
  std::size_t before = 1, after = 1;
  for (int j = 0; j < n; ++j) {
    if (cards[j] < 2) {
      throw std::invalid_argument("strategy cardinalities must be >= 2");
    }
    if (j < player - 1) before *= cards[j];
    if (j > player - 1) after *= cards[j];
  }
  return kron(kron(Matrix::Identity(before, before), ones(cards[player - 1])),
              Matrix::Identity(after, after));
}

}  // namespace cwpot
