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

#include "dualginv/certificate.hpp"
#include "dualginv/dualnum.hpp"
#include "dualginv/realginv.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace dualginv {

/// The four dual generalized inverses of A + eps*B.
///
///   MPDGI  A+ - eps A+ B A+                    always exists
///   DMPGI  the four dual Penrose equations     exists iff (I-AA+)B(I-A+A) = 0
///   DGGI   AGA = A, GAG = G, AG = GA           exists iff dual index one
///   DCGI   AGA = A, AG^2 = G, (AG)^T = AG      exists iff dual index one
enum class InverseKind { Mpdgi, Dmpgi, Dggi, Dcgi };

std::string_view to_string(InverseKind kind) noexcept;
/// Accepts "mpdgi", "dmpgi", "dggi", "dcgi" (any case).
std::optional<InverseKind> parse_inverse_kind(std::string_view name) noexcept;

enum class FormulaPath { Compact, Block, SimpleForm };
std::string_view to_string(FormulaPath path) noexcept;

/// Defining-equation label -> max-abs residual over both parts.
using AxiomResiduals = std::map<std::string, double>;

struct DualGinvResult {
  DualMatrix inverse;
  InverseKind kind = InverseKind::Mpdgi;
  AxiomResiduals axiom_residuals;
  FormulaPath path = FormulaPath::Compact;

  double max_residual() const noexcept;
};

/// 1 + largest absolute entry of either part.
double input_scale(const DualMatrix& Ah) noexcept;

/// Threshold under which a projector or block residual counts as zero.
double zero_threshold(const DualMatrix& Ah, const Tolerance& tol) noexcept;

DualMatrix mpdgi(const DualMatrix& Ah, const Tolerance& tol = {});

/// Evaluates both the projector test and the rank test for DMPGI existence.
/// Throws InconsistentCertificate if they disagree.
DmpgiExistence dmpgi_existence(const DualMatrix& Ah, const Tolerance& tol = {});
bool dmpgi_exists(const DualMatrix& Ah, const Tolerance& tol = {});

/// A+ - eps (A+BA+ - (A^T A)+ B^T (I-AA+) - (I-A+A) B^T (AA^T)+).
/// Throws DmpgiNotExist.
DualGinvResult dmpgi(const DualMatrix& Ah, const Tolerance& tol = {});

/// Decides dual index one and records the residual of every equivalent
/// characterization. When index(A) = 1 all of them must agree, otherwise
/// InconsistentCertificate is thrown.
ExistenceCertificate dual_index_is_one(const DualMatrix& Ah, const Tolerance& tol = {});

/// A# + eps R, R = -A#BA# + (A#)^2 B (I-AA#) + (I-AA#) B (A#)^2.
/// Throws DggiNotExist.
DualGinvResult dggi(const DualMatrix& Ah, const Tolerance& tol = {});

/// DCGI via the compact formula, cross-checked against the Hartwig block
/// formula. Throws DcgiNotExist, or InternalFormulaMismatch if the two
/// routes disagree.
DualGinvResult dcgi(const DualMatrix& Ah, const Tolerance& tol = {});

/// The two DCGI routes on their own (no cross-check). Both throw DcgiNotExist.
DualMatrix dcgi_compact(const DualMatrix& Ah, const Tolerance& tol = {});
DualMatrix dcgi_block(const DualMatrix& Ah, const Tolerance& tol = {});

struct SpecialForms {
  /// DMPGI exists and equals the MPDGI: (I-AA+)B = 0 and B(I-A+A) = 0.
  bool dmpgi_eq_mpdgi = false;
  /// DCGI = Ac - eps Ac B Ac: index(A) = 1 and (I-AA+)B = 0.
  bool dcgi_simple = false;
  /// DGGI = A# - eps A# B A#: index(A) = 1, B(I-AA#) = 0 and (I-AA#)B = 0.
  bool dggi_simple = false;
  /// rank([A B]) = rank(A), the rank form of the DCGI simple-form test.
  bool range_condition = false;
};

/// Flags are decided by projector tests; every set flag's closed form is then
/// compared with the general formula (InternalFormulaMismatch if they differ).
SpecialForms classify_special_forms(const DualMatrix& Ah, const Tolerance& tol = {});

struct SymmetricReport {
  DualMatrix dggi;
  DualMatrix dmpgi;
  DualMatrix dcgi;
  /// max pairwise distance among the three inverses
  double max_pairwise_gap = 0.0;
  /// max |G - G^T| over the three inverses
  double max_asymmetry = 0.0;
  bool range_condition = false;
  /// distance from the MPDGI, only evaluated when range_condition holds
  std::optional<double> mpdgi_gap;
};

/// For symmetric A + eps*B with dual index one, DGGI = DMPGI = DCGI and all
/// are symmetric; when rank([A B]) = rank(A) they also equal the MPDGI.
/// Throws PreconditionError if not symmetric, DcgiNotExist if the dual index
/// is not one, InternalFormulaMismatch if an identity fails.
SymmetricReport symmetric_identities(const DualMatrix& Ah, const Tolerance& tol = {});

/// Residuals of the defining equations of `kind` for candidate G. Never
/// throws on a violated equation, only on shape mismatch.
///
/// The MPDGI is not characterized by dual equations; for it the real-part
/// Penrose equations are reported.
AxiomResiduals verify_axioms(const DualMatrix& Ah, const DualMatrix& G, InverseKind kind);

}  // namespace dualginv
