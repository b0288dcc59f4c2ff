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

#include "dualginv/realginv.hpp"

#include "dualginv/errors.hpp"

#include <algorithm>
#include <cmath>

namespace dualginv {

namespace {

using Svd = Eigen::JacobiSVD<Eigen::MatrixXd>;

void require_square(const RealMatrix& A, const char* what) {
  if (A.rows() != A.cols()) {
    throw DimensionError(std::string(what) + " requires a square matrix, got " + std::to_string(A.rows()) + "x" +
                         std::to_string(A.cols()));
  }
}

Eigen::Index count_above(const RealVector& sv, double cutoff) {
  return static_cast<Eigen::Index>(std::count_if(sv.begin(), sv.end(), [cutoff](double s) { return s > cutoff; }));
}

RealMatrix solve_k(const HartwigDecomposition& h, const RealMatrix& rhs) {
  return h.K.partialPivLu().solve(rhs);
}

}  // namespace

Tolerance::Tolerance(double rank_tol, double eq_tol) : rank_tol_(rank_tol), eq_tol_(eq_tol) {
  if (!(std::isfinite(rank_tol) && rank_tol > 0.0) || !(std::isfinite(eq_tol) && eq_tol > 0.0)) {
    throw PreconditionError("tolerances must be finite and strictly positive");
  }
}

double Tolerance::rank_cutoff(double sigma_max, Eigen::Index rows, Eigen::Index cols) const noexcept {
  return rank_tol_ * static_cast<double>(std::max<Eigen::Index>({rows, cols, 1})) * sigma_max;
}

double product_bound(const Tolerance& tol, double a_scale, double g_scale) noexcept {
  const double a = 1.0 + a_scale;
  const double g = 1.0 + g_scale;
  return tol.eq_tol() * a * a * g * g;
}

RealMatrix HartwigDecomposition::reconstruct() const {
  const Eigen::Index n = size();
  RealMatrix M = RealMatrix::Zero(n, n);
  if (rank > 0) {
    M.topLeftCorner(rank, rank) = sigma.asDiagonal() * K;
    M.topRightCorner(rank, n - rank) = sigma.asDiagonal() * L;
  }
  return from_basis(M);
}

RealMatrix HartwigDecomposition::to_basis(const RealMatrix& M) const { return U.transpose() * M * U; }

RealMatrix HartwigDecomposition::from_basis(const RealMatrix& M) const { return U * M * U.transpose(); }

double HartwigDecomposition::k_sigma_min() const {
  if (rank == 0) return std::numeric_limits<double>::infinity();
  Svd svd(K);
  return svd.singularValues()(rank - 1);
}

Eigen::Index numerical_rank(const RealMatrix& A, const Tolerance& tol) {
  if (A.size() == 0) return 0;
  Svd svd(A);
  const RealVector& sv = svd.singularValues();
  return count_above(sv, tol.rank_cutoff(sv(0), A.rows(), A.cols()));
}

RealMatrix pinv(const RealMatrix& A, const Tolerance& tol) {
  if (A.size() == 0) return RealMatrix::Zero(A.cols(), A.rows());
  Svd svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& sv = svd.singularValues();
  const Eigen::Index r = count_above(sv, tol.rank_cutoff(sv(0), A.rows(), A.cols()));
  if (r == 0) return RealMatrix::Zero(A.cols(), A.rows());
  const auto V = svd.matrixV().leftCols(r);
  const auto U = svd.matrixU().leftCols(r);
  return V * sv.head(r).cwiseInverse().asDiagonal() * U.transpose();
}

MoorePenroseParts moore_penrose(const RealMatrix& A, const Tolerance& tol) {
  const Eigen::Index m = A.rows();
  const Eigen::Index n = A.cols();
  MoorePenroseParts out;
  out.pinv = RealMatrix::Zero(n, m);
  out.left_complement = RealMatrix::Identity(m, m);
  out.right_complement = RealMatrix::Identity(n, n);
  if (A.size() == 0) return out;
  Svd svd(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RealVector& sv = svd.singularValues();
  const Eigen::Index r = count_above(sv, tol.rank_cutoff(sv(0), m, n));
  out.rank = r;
  if (r == 0) return out;
  const auto U = svd.matrixU();
  const auto V = svd.matrixV();
  out.pinv = V.leftCols(r) * sv.head(r).cwiseInverse().asDiagonal() * U.leftCols(r).transpose();
  out.left_complement = U.rightCols(m - r) * U.rightCols(m - r).transpose();
  out.right_complement = V.rightCols(n - r) * V.rightCols(n - r).transpose();
  return out;
}

bool index_is_one(const RealMatrix& A, const Tolerance& tol) {
  require_square(A, "index_is_one");
  if (A.size() == 0) return true;
  const RealVector sv = Svd(A).singularValues();
  const RealVector sv2 = Svd(A * A).singularValues();
  // Both cutoffs are relative to sigma_max(A).
  const double smax = sv(0);
  return count_above(sv2, tol.rank_cutoff(smax * smax, A.rows(), A.cols())) ==
         count_above(sv, tol.rank_cutoff(smax, A.rows(), A.cols()));
}

HartwigDecomposition hartwig_decompose(const RealMatrix& A, const Tolerance& tol) {
  require_square(A, "hartwig_decompose");
  const Eigen::Index n = A.rows();
  HartwigDecomposition h;
  if (n == 0) return h;

  Svd svd(A, Eigen::ComputeFullU);
  const RealVector& sv = svd.singularValues();
  const Eigen::Index r = count_above(sv, tol.rank_cutoff(sv(0), n, n));
  h.rank = r;
  if (r == 0) {
    h.U = RealMatrix::Identity(n, n);
    h.K.resize(0, 0);
    h.L.resize(0, n);
    return h;
  }
  h.U = svd.matrixU();
  h.sigma = sv.head(r);
  // Top r rows of U^T A U are [S*K, S*L]; the rest vanish because the
  // trailing columns of U span the orthogonal complement of R(A).
  const RealMatrix top = h.U.leftCols(r).transpose() * A * h.U;
  const RealVector inv_sigma = h.sigma.cwiseInverse();
  h.K = inv_sigma.asDiagonal() * top.leftCols(r);
  h.L = inv_sigma.asDiagonal() * top.rightCols(n - r);
  return h;
}

bool k_nonsingular(const HartwigDecomposition& h, const Tolerance& tol) {
  if (h.rank == 0) return true;
  // Rows of [K L] are orthonormal, so |K|_2 <= 1 and the cutoff is absolute.
  return h.k_sigma_min() > tol.rank_cutoff(1.0, h.size(), h.size());
}

RealMatrix group_inverse(const RealMatrix& A, const Tolerance& tol) {
  return group_inverse(hartwig_decompose(A, tol), tol);
}

RealMatrix group_inverse(const HartwigDecomposition& h, const Tolerance& tol) {
  const Eigen::Index n = h.size();
  const Eigen::Index r = h.rank;
  if (r == 0) return RealMatrix::Zero(n, n);
  if (!k_nonsingular(h, tol)) throw GroupInverseNotExist(h.k_sigma_min());

  // K^-1 S^-1 and K^-1 S^-1 K^-1 L
  const RealMatrix k_inv_s_inv = solve_k(h, RealMatrix(h.sigma.cwiseInverse().asDiagonal()));
  RealMatrix M = RealMatrix::Zero(n, n);
  M.topLeftCorner(r, r) = k_inv_s_inv;
  M.topRightCorner(r, n - r) = k_inv_s_inv * solve_k(h, h.L);
  return h.from_basis(M);
}

RealMatrix group_complement(const HartwigDecomposition& h, const Tolerance& tol) {
  const Eigen::Index n = h.size();
  const Eigen::Index r = h.rank;
  if (r == 0) return RealMatrix::Identity(n, n);
  if (!k_nonsingular(h, tol)) throw GroupInverseNotExist(h.k_sigma_min());
  RealMatrix M = RealMatrix::Zero(n, n);
  M.topRightCorner(r, n - r) = -solve_k(h, h.L);
  M.bottomRightCorner(n - r, n - r).setIdentity();
  return h.from_basis(M);
}

RealMatrix core_inverse(const RealMatrix& A, const Tolerance& tol) {
  return core_inverse(A, hartwig_decompose(A, tol), tol);
}

RealMatrix core_inverse(const RealMatrix& A, const HartwigDecomposition& h, const Tolerance& tol) {
  require_square(A, "core_inverse");
  const Eigen::Index n = h.size();
  const Eigen::Index r = h.rank;
  if (r == 0) return RealMatrix::Zero(n, n);
  if (!k_nonsingular(h, tol)) throw CoreInverseNotExist(h.k_sigma_min());

  RealMatrix M = RealMatrix::Zero(n, n);
  const RealMatrix sk = h.sigma.asDiagonal() * h.K;
  M.topLeftCorner(r, r) = sk.partialPivLu().inverse();
  RealMatrix block = h.from_basis(M);

  const RealMatrix compact = group_inverse(h, tol) * A * pinv(A, tol);
  const double gap = max_abs(compact - block);
  if (gap > product_bound(tol, max_abs(A), max_abs(block))) {
    throw InternalFormulaMismatch("core inverse: A# A A+ and block form disagree", gap);
  }
  return block;
}

}  // namespace dualginv
