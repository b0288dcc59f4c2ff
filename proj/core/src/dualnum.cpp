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

#include "dualginv/dualnum.hpp"

#include "dualginv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <utility>

namespace dualginv {

namespace {

void require_finite(const RealMatrix& m, const char* part) {
  if (!m.allFinite()) {
    throw PreconditionError(std::string("non-finite entry in ") + part + " part");
  }
}

void require_finite(const RealVector& v, const char* part) {
  if (!v.allFinite()) {
    throw PreconditionError(std::string("non-finite entry in ") + part + " part");
  }
}

std::string shape(Eigen::Index r, Eigen::Index c) {
  std::ostringstream os;
  os << r << "x" << c;
  return os.str();
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const DualScalar& s) {
  return os << s.real << (s.dual < 0 ? " - " : " + ") << std::abs(s.dual) << "e";
}

DualMatrix::DualMatrix(RealMatrix real) : real_(std::move(real)) {
  require_finite(real_, "real");
  dual_ = RealMatrix::Zero(real_.rows(), real_.cols());
}

DualMatrix::DualMatrix(RealMatrix real, RealMatrix dual) : real_(std::move(real)), dual_(std::move(dual)) {
  if (real_.rows() != dual_.rows() || real_.cols() != dual_.cols()) {
    throw DimensionError("real part is " + shape(real_.rows(), real_.cols()) + " but dual part is " +
                         shape(dual_.rows(), dual_.cols()));
  }
  require_finite(real_, "real");
  require_finite(dual_, "dual");
}

DualMatrix DualMatrix::zero(Eigen::Index rows, Eigen::Index cols) {
  return DualMatrix(RealMatrix::Zero(rows, cols), RealMatrix::Zero(rows, cols));
}

DualMatrix DualMatrix::identity(Eigen::Index n) { return DualMatrix(RealMatrix::Identity(n, n)); }

DualMatrix DualMatrix::transpose() const { return DualMatrix(real_.transpose(), dual_.transpose()); }

double DualMatrix::max_abs() const noexcept { return std::max(dualginv::max_abs(real_), dualginv::max_abs(dual_)); }

DualMatrix& DualMatrix::operator+=(const DualMatrix& rhs) {
  if (rows() != rhs.rows() || cols() != rhs.cols()) {
    throw DimensionError("cannot add " + shape(rows(), cols()) + " and " + shape(rhs.rows(), rhs.cols()));
  }
  real_ += rhs.real_;
  dual_ += rhs.dual_;
  return *this;
}

DualMatrix& DualMatrix::operator-=(const DualMatrix& rhs) {
  if (rows() != rhs.rows() || cols() != rhs.cols()) {
    throw DimensionError("cannot subtract " + shape(rhs.rows(), rhs.cols()) + " from " + shape(rows(), cols()));
  }
  real_ -= rhs.real_;
  dual_ -= rhs.dual_;
  return *this;
}

DualMatrix operator*(const DualMatrix& lhs, const DualMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw DimensionError("cannot multiply " + shape(lhs.rows(), lhs.cols()) + " by " +
                         shape(rhs.rows(), rhs.cols()));
  }
  RealMatrix real = lhs.real_ * rhs.real_;
  RealMatrix dual = lhs.real_ * rhs.dual_ + lhs.dual_ * rhs.real_;
  return DualMatrix(std::move(real), std::move(dual));
}

DualMatrix operator*(double s, const DualMatrix& m) { return DualMatrix(s * m.real_, s * m.dual_); }

std::ostream& operator<<(std::ostream& os, const DualMatrix& m) {
  Eigen::IOFormat fmt(Eigen::StreamPrecision, 0, ", ", "\n", "  [", "]");
  return os << "real:\n" << m.real().format(fmt) << "\ndual:\n" << m.dual().format(fmt);
}

DualVector::DualVector(RealVector real) : real_(std::move(real)) {
  require_finite(real_, "real");
  dual_ = RealVector::Zero(real_.size());
}

DualVector::DualVector(RealVector real, RealVector dual) : real_(std::move(real)), dual_(std::move(dual)) {
  if (real_.size() != dual_.size()) {
    throw DimensionError("vector parts have lengths " + std::to_string(real_.size()) + " and " +
                         std::to_string(dual_.size()));
  }
  require_finite(real_, "real");
  require_finite(dual_, "dual");
}

DualVector::DualVector(const DualMatrix& m) {
  if (m.cols() != 1) {
    throw DimensionError("expected a column, got " + shape(m.rows(), m.cols()));
  }
  real_ = m.real().col(0);
  dual_ = m.dual().col(0);
}

DualMatrix DualVector::as_matrix() const {
  RealMatrix p(real_.size(), 1);
  RealMatrix q(dual_.size(), 1);
  p.col(0) = real_;
  q.col(0) = dual_;
  return DualMatrix(std::move(p), std::move(q));
}

DualMatrix dual_matmul(const DualMatrix& lhs, const DualMatrix& rhs) { return lhs * rhs; }

DualVector dual_matvec(const DualMatrix& lhs, const DualVector& rhs) {
  if (lhs.cols() != rhs.size()) {
    throw DimensionError("cannot multiply " + shape(lhs.rows(), lhs.cols()) + " by a vector of length " +
                         std::to_string(rhs.size()));
  }
  RealVector p = lhs.real() * rhs.real();
  RealVector q = lhs.real() * rhs.dual() + lhs.dual() * rhs.real();
  return DualVector(std::move(p), std::move(q));
}

DualMatrix dual_transpose(const DualMatrix& m) { return m.transpose(); }

DualScalar dual_norm_squared(const DualVector& u) {
  return {u.real().squaredNorm(), 2.0 * u.real().dot(u.dual())};
}

double angle_norm(const DualVector& u) { return u.real().norm() + u.dual().norm(); }

bool approx_eq(const DualMatrix& x, const DualMatrix& y, double tol) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
  const double bound = tol * std::max(1.0, x.max_abs());
  return max_abs(x.real() - y.real()) <= bound && max_abs(x.dual() - y.dual()) <= bound;
}

double max_abs(const RealMatrix& m) noexcept { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace dualginv
