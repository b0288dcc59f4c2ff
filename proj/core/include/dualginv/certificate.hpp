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

#include <optional>

namespace dualginv {

/// Existence evidence for the dual Moore-Penrose inverse of A + eps*B.
struct DmpgiExistence {
  bool exists = false;
  /// max |(I - AA+) B (I - A+A)|
  double residual_proj_mp = 0.0;
  /// rank([B A; A 0]) - 2 rank(A)
  long residual_rank_block = 0;
  /// Threshold the projector residual was compared against.
  double zero_threshold = 0.0;
};

/// Evidence for "dual index one" of a square dual matrix.
///
/// The rank and projector characterizations are always evaluated. The ones
/// that need A# (and the Hartwig block test B4 = B3 K^-1 L) are only defined
/// when A itself has index one; they stay empty otherwise.
struct ExistenceCertificate {
  bool dual_index_one = false;
  bool index_A_one = false;
  long rank_A = 0;

  /// rank([B A; A 0]) - 2 rank(A)
  long residual_rank_block = 0;
  /// rank([A, B(I - AA#)]) - rank(A)
  std::optional<long> residual_rank_aug;
  /// max |(I - AA+) B (I - A+A)|
  double residual_proj_mp = 0.0;
  /// max |(I - AA#) B (I - AA#)|
  std::optional<double> residual_proj_gp;
  /// max |B4 - B3 K^-1 L| in Hartwig coordinates
  std::optional<double> residual_block;

  double zero_threshold = 0.0;
};

}  // namespace dualginv
