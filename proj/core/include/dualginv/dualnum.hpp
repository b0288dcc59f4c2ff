// Copyright 2026 The dualginv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <iosfwd>

namespace dualginv {

/// Dense row-major real matrix. Every real block (A, B, K, L, ...) uses it.
using RealMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RealVector = Eigen::VectorXd;

/// Dual number a + eps*a' with eps^2 = 0.
struct DualScalar {
  double real = 0.0;
  double dual = 0.0;

  friend DualScalar operator+(DualScalar x, DualScalar y) { return {x.real + y.real, x.dual + y.dual}; }
  friend DualScalar operator-(DualScalar x, DualScalar y) { return {x.real - y.real, x.dual - y.dual}; }
  // The eps^2 term is never formed.
  friend DualScalar operator*(DualScalar x, DualScalar y) {
    return {x.real * y.real, x.real * y.dual + x.dual * y.real};
  }
  friend bool operator==(const DualScalar&, const DualScalar&) = default;
};

std::ostream& operator<<(std::ostream& os, const DualScalar& s);

/// Dual matrix A + eps*B. Both parts always share a shape and hold finite
/// entries; the constructor enforces this.
class DualMatrix {
 public:
  DualMatrix() = default;
  /// Pure real matrix (dual part zero).
  explicit DualMatrix(RealMatrix real);
  DualMatrix(RealMatrix real, RealMatrix dual);

  static DualMatrix zero(Eigen::Index rows, Eigen::Index cols);
  static DualMatrix identity(Eigen::Index n);

  const RealMatrix& real() const noexcept { return real_; }
  const RealMatrix& dual() const noexcept { return dual_; }
  Eigen::Index rows() const noexcept { return real_.rows(); }
  Eigen::Index cols() const noexcept { return real_.cols(); }
  bool is_square() const noexcept { return rows() == cols(); }

  DualMatrix transpose() const;
  /// Largest absolute entry over both parts (0 for an empty matrix).
  double max_abs() const noexcept;

  DualMatrix& operator+=(const DualMatrix& rhs);
  DualMatrix& operator-=(const DualMatrix& rhs);

  friend DualMatrix operator+(DualMatrix lhs, const DualMatrix& rhs) { return lhs += rhs; }
  friend DualMatrix operator-(DualMatrix lhs, const DualMatrix& rhs) { return lhs -= rhs; }
  friend DualMatrix operator*(const DualMatrix& lhs, const DualMatrix& rhs);
  friend DualMatrix operator*(double s, const DualMatrix& m);

 private:
  RealMatrix real_;
  RealMatrix dual_;
};

std::ostream& operator<<(std::ostream& os, const DualMatrix& m);

/// Dual column vector p + eps*q.
class DualVector {
 public:
  DualVector() = default;
  explicit DualVector(RealVector real);
  DualVector(RealVector real, RealVector dual);
  /// Throws DimensionError unless m has exactly one column.
  explicit DualVector(const DualMatrix& m);

  const RealVector& real() const noexcept { return real_; }
  const RealVector& dual() const noexcept { return dual_; }
  Eigen::Index size() const noexcept { return real_.size(); }

  DualMatrix as_matrix() const;

 private:
  RealVector real_;
  RealVector dual_;
};

/// Product of dual matrices: real = A*C, dual = A*D + B*C.
DualMatrix dual_matmul(const DualMatrix& lhs, const DualMatrix& rhs);
DualVector dual_matvec(const DualMatrix& lhs, const DualVector& rhs);
DualMatrix dual_transpose(const DualMatrix& m);

/// u^T u = |p|^2 + 2 eps p^T q.
DualScalar dual_norm_squared(const DualVector& u);

/// <u> = |p|_2 + |q|_2. Defined for every u, including p = 0.
double angle_norm(const DualVector& u);

/// True iff shapes match and both parts differ entrywise by at most
/// tol * max(1, x.max_abs()).
bool approx_eq(const DualMatrix& x, const DualMatrix& y, double tol);

/// Largest absolute entry of a real matrix, 0 when empty.
double max_abs(const RealMatrix& m) noexcept;

}  // namespace dualginv
