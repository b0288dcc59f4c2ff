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

#include "dualginv/dualginv.hpp"

#include "dualginv/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace dualginv {

namespace {

void require_square(const DualMatrix& Ah, const char* what) {
  if (!Ah.is_square()) {
    throw DimensionError(std::string(what) + " requires a square dual matrix, got " + std::to_string(Ah.rows()) +
                         "x" + std::to_string(Ah.cols()));
  }
}


RealMatrix hcat(const RealMatrix& left, const RealMatrix& right) {
  RealMatrix out(left.rows(), left.cols() + right.cols());
  out << left, right;
  return out;
}

// [B A; A 0]
RealMatrix dmpgi_block(const RealMatrix& A, const RealMatrix& B) {
  const Eigen::Index m = A.rows();
  const Eigen::Index n = A.cols();
  RealMatrix out = RealMatrix::Zero(2 * m, 2 * n);
  out.topLeftCorner(m, n) = B;
  out.topRightCorner(m, n) = A;
  out.bottomLeftCorner(m, n) = A;
  return out;
}

double gap(const DualMatrix& x, const DualMatrix& y) {
  return std::max(max_abs(x.real() - y.real()), max_abs(x.dual() - y.dual()));
}

// Real-part quantities shared by every dual formula of one call.
struct RealParts {
  HartwigDecomposition h;
  MoorePenroseParts mp;
  bool index_one = false;
  RealMatrix group;        // empty unless index_one
  RealMatrix group_comp;   // I - AA#, empty unless index_one
  RealMatrix core;         // empty unless index_one
};

RealParts analyze(const RealMatrix& A, const Tolerance& tol) {
  RealParts p;
  p.h = hartwig_decompose(A, tol);
  p.mp = moore_penrose(A, tol);
  const bool by_rank = index_is_one(A, tol);
  const bool by_k = k_nonsingular(p.h, tol);
  if (by_rank != by_k) {
    std::ostringstream os;
    os << "index of A is undecidable at this tolerance: rank(A^2) = rank(A) is " << (by_rank ? "true" : "false")
       << " but sigma_min(K) = " << p.h.k_sigma_min();
    throw InconsistentCertificate(os.str());
  }
  p.index_one = by_rank;
  if (p.index_one) {
    p.group = group_inverse(p.h, tol);
    p.group_comp = group_complement(p.h, tol);
    p.core = core_inverse(A, p.h, tol);
  }
  return p;
}

ExistenceCertificate certify(const DualMatrix& Ah, const RealParts& p, const Tolerance& tol) {
  const RealMatrix& A = Ah.real();
  const RealMatrix& B = Ah.dual();
  const Eigen::Index n = A.rows();

  ExistenceCertificate c;
  c.zero_threshold = zero_threshold(Ah, tol);
  c.rank_A = static_cast<long>(p.h.rank);
  c.index_A_one = p.index_one;
  c.residual_proj_mp = max_abs(p.mp.left_complement * B * p.mp.right_complement);
  c.residual_rank_block = static_cast<long>(numerical_rank(dmpgi_block(A, B), tol)) - 2 * c.rank_A;

  if (!p.index_one) {
    c.dual_index_one = false;
    return c;
  }

  const RealMatrix& P = p.group_comp;
  c.residual_rank_aug = static_cast<long>(numerical_rank(hcat(A, B * P), tol)) - c.rank_A;
  c.residual_proj_gp = max_abs(P * B * P);
  const Eigen::Index r = p.h.rank;
  if (r == 0 || r == n) {
    c.residual_block = r == 0 ? max_abs(B) : 0.0;
  } else {
    const RealMatrix Bh = p.h.to_basis(B);
    const RealMatrix B3 = Bh.bottomLeftCorner(n - r, r);
    const RealMatrix B4 = Bh.bottomRightCorner(n - r, n - r);
    c.residual_block = max_abs(B4 - B3 * p.h.K.partialPivLu().solve(p.h.L));
  }

  const bool by_aug = *c.residual_rank_aug == 0;
  const bool by_rank_block = c.residual_rank_block == 0;
  const bool by_proj_mp = c.residual_proj_mp <= c.zero_threshold;
  const bool by_proj_gp = *c.residual_proj_gp <= c.zero_threshold;
  const bool by_block = *c.residual_block <= c.zero_threshold;
  if (!(by_aug == by_rank_block && by_aug == by_proj_mp && by_aug == by_proj_gp && by_aug == by_block)) {
    std::ostringstream os;
    os << "dual index characterizations disagree: rank_aug " << *c.residual_rank_aug << ", rank_block "
       << c.residual_rank_block << ", proj_mp " << c.residual_proj_mp << ", proj_gp " << *c.residual_proj_gp
       << ", block " << *c.residual_block << " (zero threshold " << c.zero_threshold << ")";
    throw InconsistentCertificate(os.str());
  }
  c.dual_index_one = by_aug;
  return c;
}

DualGinvResult finish(const DualMatrix& Ah, DualMatrix G, InverseKind kind, FormulaPath path,
                      const Tolerance& tol) {
  DualGinvResult res{std::move(G), kind, {}, path};
  res.axiom_residuals = verify_axioms(Ah, res.inverse, kind);
  const double bound = product_bound(tol, Ah.max_abs(), res.inverse.max_abs());
  if (res.max_residual() > bound) {
    throw InternalFormulaMismatch(std::string(to_string(kind)) + " fails its defining equations",
                                  res.max_residual());
  }
  return res;
}

// Dual part of the DMPGI, valid for any shape once existence is known.
RealMatrix dmpgi_dual(const RealMatrix& B, const MoorePenroseParts& mp) {
  const RealMatrix& Ap = mp.pinv;
  // (A^T A)+ = A+ A+^T and (A A^T)+ = A+^T A+
  const RealMatrix ata_pinv = Ap * Ap.transpose();
  const RealMatrix aat_pinv = Ap.transpose() * Ap;
  return -(Ap * B * Ap - ata_pinv * B.transpose() * mp.left_complement -
           mp.right_complement * B.transpose() * aat_pinv);
}

RealMatrix dggi_dual(const RealMatrix& B, const RealMatrix& Ag, const RealMatrix& P) {
  const RealMatrix Ag2 = Ag * Ag;
  return -Ag * B * Ag + Ag2 * B * P + P * B * Ag2;
}

RealMatrix dcgi_compact_dual(const RealMatrix& B, const RealParts& p) {
  const RealMatrix& Ap = p.mp.pinv;
  const RealMatrix& Ag = p.group;
  const RealMatrix& Ac = p.core;
  const RealMatrix BAp = B * Ap;
  return -Ac * BAp + Ag * BAp - Ag * B * Ac + Ac * BAp.transpose() * p.mp.left_complement + p.group_comp * B * Ag * Ac;
}

RealMatrix dcgi_block_dual(const RealMatrix& B, const RealParts& p) {
  const HartwigDecomposition& h = p.h;
  const Eigen::Index n = h.size();
  const Eigen::Index r = h.rank;
  RealMatrix M = RealMatrix::Zero(n, n);
  if (r == 0) return M;

  const Eigen::PartialPivLU<RealMatrix> k_lu(h.K);
  const RealMatrix sk_inv = RealMatrix(h.sigma.asDiagonal() * h.K).partialPivLu().inverse();
  const RealMatrix sk_inv2 = sk_inv * sk_inv;
  const RealMatrix Bh = h.to_basis(B);
  const RealMatrix B1 = Bh.topLeftCorner(r, r);
  const RealMatrix B3 = Bh.bottomLeftCorner(n - r, r);
  const RealMatrix k_inv = k_lu.inverse();
  const RealMatrix k_inv_l = k_inv * h.L;
  const RealMatrix b3_k_inv = B3 * k_inv;
  const RealVector inv_sigma2 = h.sigma.cwiseInverse().cwiseAbs2();

  M.topLeftCorner(r, r) = -k_inv_l * B3 * sk_inv2 - sk_inv * B1 * sk_inv;
  M.topRightCorner(r, n - r) = k_inv * inv_sigma2.asDiagonal() * b3_k_inv.transpose();
  M.bottomLeftCorner(n - r, r) = B3 * sk_inv2;
  return h.from_basis(M);
}

struct DcgiRoutes {
  DualMatrix compact;
  DualMatrix block;
};

DcgiRoutes dcgi_routes(const DualMatrix& Ah, const Tolerance& tol) {
  require_square(Ah, "dcgi");
  const RealParts p = analyze(Ah.real(), tol);
  ExistenceCertificate c = certify(Ah, p, tol);
  if (!c.dual_index_one) throw DcgiNotExist(std::move(c));
  return {DualMatrix(p.core, dcgi_compact_dual(Ah.dual(), p)),
          DualMatrix(p.core, dcgi_block_dual(Ah.dual(), p))};
}

}  // namespace

std::string_view to_string(InverseKind kind) noexcept {
  switch (kind) {
    case InverseKind::Mpdgi:
      return "MPDGI";
    case InverseKind::Dmpgi:
      return "DMPGI";
    case InverseKind::Dggi:
      return "DGGI";
    case InverseKind::Dcgi:
      return "DCGI";
  }
  return "?";
}

std::optional<InverseKind> parse_inverse_kind(std::string_view name) noexcept {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (lower == "mpdgi") return InverseKind::Mpdgi;
  if (lower == "dmpgi") return InverseKind::Dmpgi;
  if (lower == "dggi") return InverseKind::Dggi;
  if (lower == "dcgi") return InverseKind::Dcgi;
  return std::nullopt;
}

std::string_view to_string(FormulaPath path) noexcept {
  switch (path) {
    case FormulaPath::Compact:
      return "compact";
    case FormulaPath::Block:
      return "block";
    case FormulaPath::SimpleForm:
      return "simple-form";
  }
  return "?";
}

double DualGinvResult::max_residual() const noexcept {
  double worst = 0.0;
  for (const auto& [label, value] : axiom_residuals) worst = std::max(worst, value);
  return worst;
}

double input_scale(const DualMatrix& Ah) noexcept { return 1.0 + Ah.max_abs(); }

double zero_threshold(const DualMatrix& Ah, const Tolerance& tol) noexcept {
  const double s = input_scale(Ah);
  return tol.eq_tol() * s * s;
}

DualMatrix mpdgi(const DualMatrix& Ah, const Tolerance& tol) {
  RealMatrix Ap = pinv(Ah.real(), tol);
  RealMatrix dual = -Ap * Ah.dual() * Ap;
  return DualMatrix(std::move(Ap), std::move(dual));
}

DmpgiExistence dmpgi_existence(const DualMatrix& Ah, const Tolerance& tol) {
  const RealMatrix& A = Ah.real();
  const RealMatrix& B = Ah.dual();
  const MoorePenroseParts mp = moore_penrose(A, tol);
  DmpgiExistence e;
  e.zero_threshold = zero_threshold(Ah, tol);
  e.residual_proj_mp = max_abs(mp.left_complement * B * mp.right_complement);
  e.residual_rank_block =
      static_cast<long>(numerical_rank(dmpgi_block(A, B), tol)) - 2 * static_cast<long>(mp.rank);
  const bool by_proj = e.residual_proj_mp <= e.zero_threshold;
  const bool by_rank = e.residual_rank_block == 0;
  if (by_proj != by_rank) {
    std::ostringstream os;
    os << "DMPGI existence tests disagree: projector residual " << e.residual_proj_mp << " (threshold "
       << e.zero_threshold << "), rank([B A; A 0]) - 2 rank(A) = " << e.residual_rank_block;
    throw InconsistentCertificate(os.str());
  }
  e.exists = by_proj;
  return e;
}

bool dmpgi_exists(const DualMatrix& Ah, const Tolerance& tol) { return dmpgi_existence(Ah, tol).exists; }

DualGinvResult dmpgi(const DualMatrix& Ah, const Tolerance& tol) {
  DmpgiExistence e = dmpgi_existence(Ah, tol);
  if (!e.exists) throw DmpgiNotExist(e);
  MoorePenroseParts mp = moore_penrose(Ah.real(), tol);
  RealMatrix dual = dmpgi_dual(Ah.dual(), mp);
  return finish(Ah, DualMatrix(std::move(mp.pinv), std::move(dual)), InverseKind::Dmpgi, FormulaPath::Compact, tol);
}

ExistenceCertificate dual_index_is_one(const DualMatrix& Ah, const Tolerance& tol) {
  require_square(Ah, "dual_index_is_one");
  return certify(Ah, analyze(Ah.real(), tol), tol);
}

DualGinvResult dggi(const DualMatrix& Ah, const Tolerance& tol) {
  require_square(Ah, "dggi");
  const RealParts p = analyze(Ah.real(), tol);
  ExistenceCertificate c = certify(Ah, p, tol);
  if (!c.dual_index_one) throw DggiNotExist(std::move(c));
  RealMatrix dual = dggi_dual(Ah.dual(), p.group, p.group_comp);
  return finish(Ah, DualMatrix(p.group, std::move(dual)), InverseKind::Dggi, FormulaPath::Compact, tol);
}

DualGinvResult dcgi(const DualMatrix& Ah, const Tolerance& tol) {
  DcgiRoutes routes = dcgi_routes(Ah, tol);
  const double disagreement = gap(routes.compact, routes.block);
  if (disagreement > product_bound(tol, Ah.max_abs(), routes.compact.max_abs())) {
    throw InternalFormulaMismatch("DCGI compact and block formulas disagree", disagreement);
  }
  return finish(Ah, std::move(routes.compact), InverseKind::Dcgi, FormulaPath::Compact, tol);
}

DualMatrix dcgi_compact(const DualMatrix& Ah, const Tolerance& tol) { return dcgi_routes(Ah, tol).compact; }

DualMatrix dcgi_block(const DualMatrix& Ah, const Tolerance& tol) { return dcgi_routes(Ah, tol).block; }

SpecialForms classify_special_forms(const DualMatrix& Ah, const Tolerance& tol) {
  require_square(Ah, "classify_special_forms");
  const RealMatrix& A = Ah.real();
  const RealMatrix& B = Ah.dual();
  const RealParts p = analyze(A, tol);
  const double thr = zero_threshold(Ah, tol);

  const bool left_mp = max_abs(p.mp.left_complement * B) <= thr;
  const bool right_mp = max_abs(B * p.mp.right_complement) <= thr;

  SpecialForms f;
  f.dmpgi_eq_mpdgi = left_mp && right_mp;
  f.range_condition = numerical_rank(hcat(A, B), tol) == p.h.rank;
  if (p.index_one) {
    f.dcgi_simple = left_mp;
    if (f.dcgi_simple != f.range_condition) {
      throw InconsistentCertificate("DCGI simple-form tests disagree: (I-AA+)B = 0 is " +
                                    std::string(left_mp ? "true" : "false") + " but rank([A B]) = rank(A) is " +
                                    std::string(f.range_condition ? "true" : "false"));
    }
    const RealMatrix& P = p.group_comp;
    f.dggi_simple = max_abs(B * P) <= thr && max_abs(P * B) <= thr;
  }

  const auto check = [&](const DualMatrix& general, const DualMatrix& simple, const char* what) {
    const double d = gap(general, simple);
    if (d > product_bound(tol, Ah.max_abs(), general.max_abs())) throw InternalFormulaMismatch(what, d);
  };
  if (f.dmpgi_eq_mpdgi) {
    check(dmpgi(Ah, tol).inverse, mpdgi(Ah, tol), "DMPGI differs from MPDGI although flagged equal");
  }
  if (f.dcgi_simple) {
    check(dcgi(Ah, tol).inverse, DualMatrix(p.core, -p.core * B * p.core), "DCGI differs from its simple form");
  }
  if (f.dggi_simple) {
    check(dggi(Ah, tol).inverse, DualMatrix(p.group, -p.group * B * p.group), "DGGI differs from its simple form");
  }
  return f;
}

SymmetricReport symmetric_identities(const DualMatrix& Ah, const Tolerance& tol) {
  require_square(Ah, "symmetric_identities");
  const double asym = gap(Ah, Ah.transpose());
  if (asym > tol.eq_tol() * input_scale(Ah)) {
    std::ostringstream os;
    os << "dual matrix is not symmetric (max |A - A^T| over both parts = " << asym << ")";
    throw PreconditionError(os.str());
  }
  ExistenceCertificate c = dual_index_is_one(Ah, tol);
  if (!c.dual_index_one) throw DcgiNotExist(std::move(c));

  SymmetricReport rep;
  rep.dggi = dggi(Ah, tol).inverse;
  rep.dmpgi = dmpgi(Ah, tol).inverse;
  rep.dcgi = dcgi(Ah, tol).inverse;
  rep.max_pairwise_gap =
      std::max({gap(rep.dggi, rep.dmpgi), gap(rep.dggi, rep.dcgi), gap(rep.dmpgi, rep.dcgi)});
  rep.max_asymmetry = std::max({gap(rep.dggi, rep.dggi.transpose()), gap(rep.dmpgi, rep.dmpgi.transpose()),
                                gap(rep.dcgi, rep.dcgi.transpose())});
  rep.range_condition = numerical_rank(hcat(Ah.real(), Ah.dual()), tol) == c.rank_A;
  if (rep.range_condition) rep.mpdgi_gap = gap(rep.dcgi, mpdgi(Ah, tol));

  const double bound = product_bound(tol, Ah.max_abs(), rep.dcgi.max_abs());
  const double worst = std::max({rep.max_pairwise_gap, rep.max_asymmetry, rep.mpdgi_gap.value_or(0.0)});
  if (worst > bound) throw InternalFormulaMismatch("symmetric-case identities violated", worst);
  return rep;
}

AxiomResiduals verify_axioms(const DualMatrix& Ah, const DualMatrix& G, InverseKind kind) {
  if (G.rows() != Ah.cols() || G.cols() != Ah.rows()) {
    throw DimensionError("candidate inverse must be " + std::to_string(Ah.cols()) + "x" +
                         std::to_string(Ah.rows()) + ", got " + std::to_string(G.rows()) + "x" +
                         std::to_string(G.cols()));
  }
  if ((kind == InverseKind::Dggi || kind == InverseKind::Dcgi) && !Ah.is_square()) {
    throw DimensionError(std::string(to_string(kind)) + " is only defined for square dual matrices");
  }

  AxiomResiduals out;
  if (kind == InverseKind::Mpdgi) {
    const RealMatrix& A = Ah.real();
    const RealMatrix& X = G.real();
    const RealMatrix AX = A * X;
    const RealMatrix XA = X * A;
    out["real:AGA=A"] = max_abs(AX * A - A);
    out["real:GAG=G"] = max_abs(XA * X - X);
    out["real:(AG)^T=AG"] = max_abs(AX.transpose() - AX);
    out["real:(GA)^T=GA"] = max_abs(XA.transpose() - XA);
    return out;
  }

  const DualMatrix AG = Ah * G;
  const DualMatrix GA = G * Ah;
  out["AGA=A"] = gap(AG * Ah, Ah);
  switch (kind) {
    case InverseKind::Dmpgi:
      out["GAG=G"] = gap(GA * G, G);
      out["(AG)^T=AG"] = gap(AG.transpose(), AG);
      out["(GA)^T=GA"] = gap(GA.transpose(), GA);
      break;
    case InverseKind::Dggi:
      out["GAG=G"] = gap(GA * G, G);
      out["AG=GA"] = gap(AG, GA);
      break;
    case InverseKind::Dcgi:
      out["AG^2=G"] = gap(AG * G, G);
      out["(AG)^T=AG"] = gap(AG.transpose(), AG);
      break;
    case InverseKind::Mpdgi:
      break;
  }
  return out;
}

}  // namespace dualginv
