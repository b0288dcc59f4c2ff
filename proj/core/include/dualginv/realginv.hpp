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

#include "dualginv/dualnum.hpp"

#include <limits>

namespace dualginv {

/// Numerical policy shared by every rank and equality decision.
///
/// A singular value s of an m x n matrix counts toward the rank iff
/// s > rank_tol * max(m, n) * s_max. Matrix identities are accepted when
/// their max-abs residual stays within eq_tol times a problem scale.
class Tolerance {
 public:
  static constexpr double kDefaultRankTol = 64.0 * std::numeric_limits<double>::epsilon();
  static constexpr double kEqFactor = 100.0;

  Tolerance() : Tolerance(kDefaultRankTol) {}
  /// eq_tol defaults to kEqFactor * rank_tol.
  explicit Tolerance(double rank_tol) : Tolerance(rank_tol, kEqFactor * rank_tol) {}
  /// Throws PreconditionError unless both values are finite and positive.
  Tolerance(double rank_tol, double eq_tol);

  double rank_tol() const noexcept { return rank_tol_; }
  double eq_tol() const noexcept { return eq_tol_; }

  /// Singular values at or below this are treated as zero.
  double rank_cutoff(double sigma_max, Eigen::Index rows, Eigen::Index cols) const noexcept;

 private:
  double rank_tol_;
  double eq_tol_;
};

/// Acceptance bound for identities built from products of A (entries up to
/// a_scale) and a computed inverse G (entries up to g_scale).
double product_bound(const Tolerance& tol, double a_scale, double g_scale) noexcept;

/// A = U [S*K  S*L; 0 0] U^T with U orthogonal, S = diag(sigma) and
/// K K^T + L L^T = I_r.
struct HartwigDecomposition {
  RealMatrix U;
  RealVector sigma;  // descending, length r
  RealMatrix K;      // r x r
  RealMatrix L;      // r x (n - r)
  Eigen::Index rank = 0;

  Eigen::Index size() const noexcept { return U.rows(); }
  RealMatrix reconstruct() const;
  /// Express M in the decomposition's basis: U^T M U.
  RealMatrix to_basis(const RealMatrix& M) const;
  /// U M U^T
  RealMatrix from_basis(const RealMatrix& M) const;
  /// Smallest singular value of K (+inf when r = 0).
  double k_sigma_min() const;
};

Eigen::Index numerical_rank(const RealMatrix& A, const Tolerance& tol = {});

/// Moore-Penrose inverse via SVD, truncated at the rank cutoff.
RealMatrix pinv(const RealMatrix& A, const Tolerance& tol = {});

/// A+ and the complementary orthogonal projectors, all taken from one SVD.
/// The projectors are formed from the trailing singular vectors.
struct MoorePenroseParts {
  RealMatrix pinv;
  RealMatrix left_complement;   // I - AA+
  RealMatrix right_complement;  // I - A+A
  Eigen::Index rank = 0;
};

MoorePenroseParts moore_penrose(const RealMatrix& A, const Tolerance& tol = {});

/// rank(A^2) == rank(A), both ranks taken relative to the scale of A.
/// Throws DimensionError for a non-square A.
bool index_is_one(const RealMatrix& A, const Tolerance& tol = {});

/// Hartwig-Spindelboeck decomposition built from the left singular vectors
/// of A. The zero matrix yields r = 0 and U = I.
HartwigDecomposition hartwig_decompose(const RealMatrix& A, const Tolerance& tol = {});

/// True iff K is numerically nonsingular, i.e. A has index one.
bool k_nonsingular(const HartwigDecomposition& h, const Tolerance& tol = {});

/// A# = U [K^-1 S^-1, K^-1 S^-1 K^-1 L; 0 0] U^T.
/// Throws GroupInverseNotExist when K is numerically singular.
RealMatrix group_inverse(const RealMatrix& A, const Tolerance& tol = {});
RealMatrix group_inverse(const HartwigDecomposition& h, const Tolerance& tol = {});

/// I - AA# = U [0, -K^-1 L; 0, I] U^T. Throws GroupInverseNotExist.
RealMatrix group_complement(const HartwigDecomposition& h, const Tolerance& tol = {});

/// Core inverse, computed as A# A A+ and as U [(SK)^-1 0; 0 0] U^T.
/// The block form is returned after both routes are checked against each
/// other (InternalFormulaMismatch on disagreement).
/// Throws CoreInverseNotExist when A does not have index one.
RealMatrix core_inverse(const RealMatrix& A, const Tolerance& tol = {});
RealMatrix core_inverse(const RealMatrix& A, const HartwigDecomposition& h, const Tolerance& tol = {});

}  // namespace dualginv
