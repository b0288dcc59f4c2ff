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

#include "dualginv/dualginv.hpp"
#include "dualginv/dualnum.hpp"
#include "dualginv/realginv.hpp"

namespace dualginv {

/// Solution family of A x = b built from a {1}-inverse G:
///   x = G b + (I - G A) w   for arbitrary dual w.
/// For a consistent system every member solves it exactly. For an
/// inconsistent one and G = DMPGI (or DCGI) it is the least-squares analog;
/// error_norm is <A x - b> at w = 0.
struct DualSolveResult {
  DualVector particular;
  DualMatrix projector;
  bool consistent = false;
  double error_norm = 0.0;
  InverseKind inverse_kind = InverseKind::Dmpgi;

  /// particular + projector * w
  DualVector member(const DualVector& w) const;
};

/// Throws DimensionError on shape mismatch, PreconditionError for kind MPDGI
/// (not a {1}-inverse, so the consistency test would be meaningless), and the
/// typed nonexistence error of the requested inverse.
DualSolveResult solve(const DualMatrix& Ah, const DualVector& b, InverseKind kind = InverseKind::Dmpgi,
                      const Tolerance& tol = {});

/// <A x - b>
double residual_norm(const DualMatrix& Ah, const DualVector& x, const DualVector& b);

}  // namespace dualginv
