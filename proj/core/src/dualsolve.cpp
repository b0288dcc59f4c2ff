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

#include "dualginv/dualsolve.hpp"

#include "dualginv/errors.hpp"

#include <algorithm>
#include <utility>

namespace dualginv {

namespace {

DualVector subtract(const DualVector& x, const DualVector& y) {
  return DualVector(RealVector(x.real() - y.real()), RealVector(x.dual() - y.dual()));
}

DualMatrix inverse_of_kind(const DualMatrix& Ah, InverseKind kind, const Tolerance& tol) {
  switch (kind) {
    case InverseKind::Dmpgi:
      return dmpgi(Ah, tol).inverse;
    case InverseKind::Dggi:
      return dggi(Ah, tol).inverse;
    case InverseKind::Dcgi:
      return dcgi(Ah, tol).inverse;
    case InverseKind::Mpdgi:
      break;
  }
  throw PreconditionError("the MPDGI is not a {1}-inverse and cannot drive the solver; use dmpgi, dggi or dcgi");
}

}  // namespace

DualVector DualSolveResult::member(const DualVector& w) const {
  const DualVector shift = dual_matvec(projector, w);
  return DualVector(RealVector(particular.real() + shift.real()), RealVector(particular.dual() + shift.dual()));
}

DualSolveResult solve(const DualMatrix& Ah, const DualVector& b, InverseKind kind, const Tolerance& tol) {
  if (b.size() != Ah.rows()) {
    throw DimensionError("right-hand side has length " + std::to_string(b.size()) + " but the matrix has " +
                         std::to_string(Ah.rows()) + " rows");
  }
  const DualMatrix G = inverse_of_kind(Ah, kind, tol);

  DualSolveResult res;
  res.inverse_kind = kind;
  res.particular = dual_matvec(G, b);
  res.projector = DualMatrix::identity(Ah.cols()) - G * Ah;
  res.error_norm = residual_norm(Ah, res.particular, b);
  const double scale = 1.0 + std::max(Ah.max_abs(), b.as_matrix().max_abs());
  res.consistent = res.error_norm <= product_bound(tol, Ah.max_abs(), G.max_abs()) * scale;
  return res;
}

double residual_norm(const DualMatrix& Ah, const DualVector& x, const DualVector& b) {
  if (x.size() != Ah.cols() || b.size() != Ah.rows()) {
    throw DimensionError("residual_norm: shapes do not conform");
  }
  return angle_norm(subtract(dual_matvec(Ah, x), b));
}

}  // namespace dualginv
