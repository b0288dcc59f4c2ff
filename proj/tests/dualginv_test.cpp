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
#include "support/generators.hpp"
#include "support/literals.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

namespace dualginv {
namespace {

using testing::mat;
using testing::Rng;
namespace oracle = testing::oracle;

void expect_near(const DualMatrix& got, const DualMatrix& want, double tol) {
  ASSERT_EQ(got.rows(), want.rows());
  ASSERT_EQ(got.cols(), want.cols());
  EXPECT_LE(max_abs(got.real() - want.real()), tol) << "real part\n" << got.real() << "\nwant\n" << want.real();
  EXPECT_LE(max_abs(got.dual() - want.dual()), tol) << "dual part\n" << got.dual() << "\nwant\n" << want.dual();
}

double worst(const AxiomResiduals& r) {
  double w = 0.0;
  for (const auto& [label, value] : r) w = std::max(w, value);
  return w;
}

RealMatrix zeros(Eigen::Index n) { return RealMatrix::Zero(n, n); }

// A = diag(1,0), B = e1 e2^T.
DualMatrix upper_shift() { return DualMatrix(mat({{1, 0}, {0, 0}}), mat({{0, 1}, {0, 0}})); }
DualMatrix consistent_example() { return DualMatrix(mat({{1, 0}, {0, 0}}), mat({{1, 1}, {1, 0}})); }
DualMatrix inconsistent_example() { return DualMatrix(mat({{4, 2}, {2, 1}}), mat({{10, 10}, {9, 7}})); }
// diag(1,1,0) + eps * e3 e3^T
DualMatrix no_index_one() { return DualMatrix(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}), mat({{0, 0, 0}, {0, 0, 0}, {0, 0, 1}})); }

TEST(InverseKindTest, ParseAndPrint) {
  EXPECT_EQ(parse_inverse_kind("dcgi"), InverseKind::Dcgi);
  EXPECT_EQ(parse_inverse_kind("DMPGI"), InverseKind::Dmpgi);
  EXPECT_EQ(parse_inverse_kind("Dggi"), InverseKind::Dggi);
  EXPECT_EQ(parse_inverse_kind("mpdgi"), InverseKind::Mpdgi);
  EXPECT_FALSE(parse_inverse_kind("core").has_value());
  EXPECT_EQ(to_string(InverseKind::Dcgi), "DCGI");
}

TEST(MpdgiTest, Examples) {
  expect_near(mpdgi(upper_shift()), DualMatrix(mat({{1, 0}, {0, 0}}), zeros(2)), 1e-15);
  const DualMatrix I = DualMatrix::identity(3);
  expect_near(mpdgi(I), I, 1e-15);
}

TEST(DmpgiTest, Examples) {
  expect_near(dmpgi(upper_shift()).inverse, DualMatrix(mat({{1, 0}, {0, 0}}), mat({{0, 0}, {1, 0}})), 1e-14);
  const DualGinvResult r = dmpgi(inconsistent_example());
  expect_near(r.inverse, DualMatrix(mat({{0.16, 0.08}, {0.08, 0.04}}), mat({{-0.688, -0.184}, {-0.144, 0.008}})),
              1e-12);
  EXPECT_EQ(r.kind, InverseKind::Dmpgi);
  EXPECT_LE(r.max_residual(), 1e-12);
}

TEST(DmpgiTest, Existence) {
  EXPECT_TRUE(dmpgi_exists(inconsistent_example()));
  EXPECT_TRUE(dmpgi_exists(upper_shift()));
  const DualMatrix bad(zeros(2), mat({{1, 0}, {0, 0}}));
  const DmpgiExistence e = dmpgi_existence(bad);
  EXPECT_FALSE(e.exists);
  EXPECT_EQ(e.residual_rank_block, 1);
  EXPECT_NEAR(e.residual_proj_mp, 1.0, 1e-15);
  EXPECT_THROW(dmpgi(bad), DmpgiNotExist);
  EXPECT_THROW(dmpgi(no_index_one()), DmpgiNotExist);
}

TEST(DmpgiTest, Rectangular) {
  // A = [1 0 0], B = [0 1 0]: (I-AA+) = 0 so the DMPGI exists.
  const DualMatrix Ah(mat({{1, 0, 0}}), mat({{0, 1, 0}}));
  const DualGinvResult r = dmpgi(Ah);
  EXPECT_EQ(r.inverse.rows(), 3);
  EXPECT_EQ(r.inverse.cols(), 1);
  expect_near(r.inverse, oracle::dmpgi(Ah), 1e-14);
  EXPECT_LE(worst(verify_axioms(Ah, r.inverse, InverseKind::Dmpgi)), 1e-14);
}

TEST(DualIndexTest, Examples) {
  const ExistenceCertificate ok = dual_index_is_one(consistent_example());
  EXPECT_TRUE(ok.dual_index_one);
  EXPECT_TRUE(ok.index_A_one);
  EXPECT_EQ(ok.rank_A, 1);
  EXPECT_EQ(ok.residual_rank_block, 0);
  EXPECT_EQ(ok.residual_rank_aug, 0);

  const ExistenceCertificate bad = dual_index_is_one(no_index_one());
  EXPECT_FALSE(bad.dual_index_one);
  EXPECT_TRUE(bad.index_A_one);
  EXPECT_EQ(bad.rank_A, 2);
  EXPECT_EQ(bad.residual_rank_aug, 1);
  EXPECT_EQ(bad.residual_rank_block, 1);
  EXPECT_GT(bad.residual_proj_mp, bad.zero_threshold);
  ASSERT_TRUE(bad.residual_block.has_value());
  EXPECT_NEAR(*bad.residual_block, 1.0, 1e-15);

  // index(A) = 2: the A#-based fields stay empty.
  const ExistenceCertificate nil = dual_index_is_one(DualMatrix(mat({{0, 1}, {0, 0}}), zeros(2)));
  EXPECT_FALSE(nil.dual_index_one);
  EXPECT_FALSE(nil.index_A_one);
  EXPECT_FALSE(nil.residual_rank_aug.has_value());
  EXPECT_FALSE(nil.residual_proj_gp.has_value());
  EXPECT_FALSE(nil.residual_block.has_value());

  EXPECT_THROW(dual_index_is_one(DualMatrix(mat({{1, 2, 3}}))), DimensionError);
}

TEST(DggiTest, Examples) {
  expect_near(dggi(upper_shift()).inverse, DualMatrix(mat({{1, 0}, {0, 0}}), mat({{0, 1}, {0, 0}})), 1e-14);
  try {
    dggi(no_index_one());
    FAIL() << "expected DggiNotExist";
  } catch (const DggiNotExist& e) {
    EXPECT_FALSE(e.certificate().dual_index_one);
    EXPECT_EQ(e.certificate().rank_A, 2);
  }
  EXPECT_THROW(dggi(DualMatrix(mat({{0, 1}, {0, 0}}))), DggiNotExist);
}

TEST(DcgiTest, Examples) {
  const DualGinvResult r = dcgi(consistent_example());
  expect_near(r.inverse, DualMatrix(mat({{1, 0}, {0, 0}}), mat({{-1, 1}, {1, 0}})), 1e-14);
  EXPECT_EQ(r.kind, InverseKind::Dcgi);
  expect_near(dcgi(inconsistent_example()).inverse,
              DualMatrix(mat({{0.16, 0.08}, {0.08, 0.04}}), mat({{-0.672, -0.176}, {-0.176, -0.008}})), 1e-12);
  expect_near(dcgi(upper_shift()).inverse, DualMatrix(mat({{1, 0}, {0, 0}}), zeros(2)), 1e-14);
  EXPECT_THROW(dcgi(no_index_one()), DcgiNotExist);
  EXPECT_THROW(dcgi_compact(no_index_one()), DcgiNotExist);
  EXPECT_THROW(dcgi_block(no_index_one()), DcgiNotExist);
}

TEST(DcgiTest, FamilyWithCornerEntry) {
  // diag(a, b, 0) + eps B, B with only b33 nonzero: no DCGI for any a, b, b33 != 0.
  for (double a : {1.0, -2.0, 0.5}) {
    for (double b33 : {1.0, -3.0, 1e-3}) {
      RealMatrix B = zeros(3);
      B(2, 2) = b33;
      const DualMatrix Ah(mat({{a, 0, 0}, {0, 2.0, 0}, {0, 0, 0}}), B);
      EXPECT_THROW(dcgi(Ah), DcgiNotExist) << "a=" << a << " b33=" << b33;
    }
  }
}

TEST(ClassifyTest, Examples) {
  const SpecialForms f = classify_special_forms(upper_shift());
  EXPECT_TRUE(f.dcgi_simple);
  EXPECT_TRUE(f.range_condition);
  EXPECT_FALSE(f.dmpgi_eq_mpdgi);
  EXPECT_FALSE(f.dggi_simple);

  Rng rng(5);
  const SpecialForms all = classify_special_forms(DualMatrix(RealMatrix::Identity(3, 3), testing::gaussian(3, 3, rng)));
  EXPECT_TRUE(all.dmpgi_eq_mpdgi);
  EXPECT_TRUE(all.dcgi_simple);
  EXPECT_TRUE(all.dggi_simple);

  const SpecialForms lower = classify_special_forms(DualMatrix(mat({{1, 0}, {0, 0}}), mat({{0, 0}, {1, 0}})));
  EXPECT_FALSE(lower.dcgi_simple);
  EXPECT_FALSE(lower.range_condition);

  EXPECT_THROW(classify_special_forms(DualMatrix(mat({{1, 0}}))), DimensionError);
}

TEST(SymmetricTest, Examples) {
  const DualMatrix Ah(mat({{2, 0}, {0, 0}}), mat({{1, 0}, {0, 0}}));
  const SymmetricReport rep = symmetric_identities(Ah);
  const DualMatrix want(mat({{0.5, 0}, {0, 0}}), mat({{-0.25, 0}, {0, 0}}));
  expect_near(rep.dggi, want, 1e-15);
  expect_near(rep.dmpgi, want, 1e-15);
  expect_near(rep.dcgi, want, 1e-15);
  EXPECT_TRUE(rep.range_condition);
  ASSERT_TRUE(rep.mpdgi_gap.has_value());
  EXPECT_LE(*rep.mpdgi_gap, 1e-15);
  expect_near(mpdgi(Ah), want, 1e-15);

  // B = [[10, 10], [9, 7]] is not symmetric.
  EXPECT_THROW(symmetric_identities(inconsistent_example()), PreconditionError);
  EXPECT_THROW(symmetric_identities(no_index_one()), DcgiNotExist);
}

TEST(SymmetricTest, SymmetrizedRankOneExample) {
  // A = [[4,2],[2,1]] with a symmetric dual part; rank([A B]) = 2 != rank(A).
  const DualMatrix Ah(mat({{4, 2}, {2, 1}}), mat({{10, 9.5}, {9.5, 7}}));
  const SymmetricReport rep = symmetric_identities(Ah);
  EXPECT_LE(rep.max_pairwise_gap, 1e-8);
  EXPECT_LE(rep.max_asymmetry, 1e-8);
  EXPECT_FALSE(rep.range_condition);
  EXPECT_FALSE(rep.mpdgi_gap.has_value());
  EXPECT_GT(max_abs(mpdgi(Ah).dual() - rep.dcgi.dual()), 1e-3);
  expect_near(rep.dcgi, oracle::dcgi(Ah), 1e-12);
}

TEST(VerifyAxiomsTest, Examples) {
  const DualMatrix Ah = consistent_example();
  const AxiomResiduals r = verify_axioms(Ah, dcgi(Ah).inverse, InverseKind::Dcgi);
  EXPECT_EQ(r.size(), 3u);
  EXPECT_LE(worst(r), 1e-12);

  const AxiomResiduals p = verify_axioms(upper_shift(), mpdgi(upper_shift()), InverseKind::Dmpgi);
  EXPECT_GT(worst(p), 0.5);

  const DualMatrix I = DualMatrix::identity(3);
  for (const auto& [label, value] : verify_axioms(I, I, InverseKind::Dcgi)) EXPECT_EQ(value, 0.0) << label;

  EXPECT_THROW(verify_axioms(Ah, DualMatrix::identity(3), InverseKind::Dcgi), DimensionError);
  const DualMatrix wide(mat({{1, 0, 0}}));
  EXPECT_THROW(verify_axioms(wide, DualMatrix(mat({{1}, {0}, {0}})), InverseKind::Dggi), DimensionError);
  EXPECT_NO_THROW(verify_axioms(wide, DualMatrix(mat({{1}, {0}, {0}})), InverseKind::Dmpgi));
}

TEST(NonsingularTest, AllInversesCollapse) {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index n = testing::uniform_int(rng, 1, 7);
    const testing::HartwigParts p = testing::random_hartwig(n, n, rng, 0.3);
    const DualMatrix Ah(p.assemble(), testing::gaussian(n, n, rng));
    const RealMatrix inv = Ah.real().inverse();
    const DualMatrix want(inv, -inv * Ah.dual() * inv);
    const double tol = 1e-10 * (1.0 + want.max_abs());
    expect_near(mpdgi(Ah), want, tol);
    expect_near(dmpgi(Ah).inverse, want, tol);
    expect_near(dggi(Ah).inverse, want, tol);
    expect_near(dcgi(Ah).inverse, want, tol);
  }
}

// Generator-based existence and agreement with the oracle.
TEST(DualGinvProperty, ExistingFamilyMatchesOracle) {
  Rng rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const Eigen::Index n = testing::uniform_int(rng, 2, 8);
    const Eigen::Index r = testing::uniform_int(rng, 1, static_cast<int>(n) - 1);
    const testing::HartwigParts p = testing::random_hartwig(n, r, rng);
    const DualMatrix Ah = testing::hartwig_instance(p, testing::DualFamily::Existing, rng);

    const ExistenceCertificate c = dual_index_is_one(Ah);
    ASSERT_TRUE(c.dual_index_one) << "n=" << n << " r=" << r;
    EXPECT_TRUE(oracle::dual_index_one(Ah));
    EXPECT_TRUE(dmpgi_exists(Ah));

    const DualGinvResult gd = dggi(Ah);
    const DualGinvResult gc = dcgi(Ah);
    const DualGinvResult gm = dmpgi(Ah);
    const double scale = 1.0 + Ah.max_abs();
    const double tol = 1e-8 * scale * (1.0 + gc.inverse.max_abs()) * (1.0 + gd.inverse.max_abs());
    expect_near(gd.inverse, oracle::dggi(Ah), tol);
    expect_near(gc.inverse, oracle::dcgi(Ah), tol);
    expect_near(gm.inverse, oracle::dmpgi(Ah), tol);
    expect_near(dcgi_block(Ah), dcgi_compact(Ah), tol);
    // DCGI = DGGI * A * DMPGI
    expect_near(gc.inverse, gd.inverse * Ah * gm.inverse, tol);

    EXPECT_LE(worst(verify_axioms(Ah, gd.inverse, InverseKind::Dggi)), tol);
    EXPECT_LE(worst(verify_axioms(Ah, gc.inverse, InverseKind::Dcgi)), tol);
    EXPECT_LE(worst(verify_axioms(Ah, gm.inverse, InverseKind::Dmpgi)), tol);
  }
}

TEST(DualGinvProperty, PerturbedCornerBlockBreaksExistence) {
  Rng rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index n = testing::uniform_int(rng, 2, 8);
    const Eigen::Index r = testing::uniform_int(rng, 1, static_cast<int>(n) - 1);
    const testing::HartwigParts p = testing::random_hartwig(n, r, rng);
    const DualMatrix base = testing::hartwig_instance(p, testing::DualFamily::Existing, rng);
    RealMatrix Bh = p.U.transpose() * base.dual() * p.U;
    RealMatrix delta = testing::gaussian(n - r, n - r, rng);
    delta *= testing::uniform(rng, 1e-3, 1.0) / max_abs(delta);
    Bh.bottomRightCorner(n - r, n - r) += delta;
    const DualMatrix Ah(base.real(), p.U * Bh * p.U.transpose());

    const ExistenceCertificate c = dual_index_is_one(Ah);
    EXPECT_FALSE(c.dual_index_one);
    EXPECT_FALSE(oracle::dual_index_one(Ah));
    EXPECT_FALSE(dmpgi_exists(Ah));
    EXPECT_THROW(dcgi(Ah), DcgiNotExist);
    EXPECT_THROW(dggi(Ah), DggiNotExist);
  }
}

TEST(DualGinvProperty, SimpleFormsAndImplications) {
  Rng rng(31);
  int core_simple = 0;
  int group_simple = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const Eigen::Index n = testing::uniform_int(rng, 2, 8);
    const Eigen::Index r = testing::uniform_int(rng, 1, static_cast<int>(n) - 1);
    const testing::HartwigParts p = testing::random_hartwig(n, r, rng);
    const auto family = trial % 2 == 0 ? testing::DualFamily::CoreSimple : testing::DualFamily::GroupSimple;
    const DualMatrix Ah = testing::hartwig_instance(p, family, rng);
    const SpecialForms f = classify_special_forms(Ah);
    EXPECT_TRUE(f.dcgi_simple);
    EXPECT_EQ(f.dcgi_simple, f.range_condition);
    if (family == testing::DualFamily::GroupSimple) {
      EXPECT_TRUE(f.dggi_simple);
    }
    if (f.dggi_simple) EXPECT_TRUE(f.dmpgi_eq_mpdgi);
    if (f.dmpgi_eq_mpdgi) EXPECT_TRUE(f.dcgi_simple);
    core_simple += f.dcgi_simple;
    group_simple += f.dggi_simple;

    const RealMatrix C = oracle::core(Ah.real());
    const double tol = 1e-8 * (1.0 + Ah.max_abs()) * (1.0 + max_abs(C)) * (1.0 + max_abs(C));
    expect_near(dcgi(Ah).inverse, DualMatrix(C, -C * Ah.dual() * C), tol);
  }
  EXPECT_EQ(core_simple, 120);
  EXPECT_GE(group_simple, 60);
}

TEST(DualGinvProperty, ArbitraryDualPartsAgreeWithOracle) {
  Rng rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index n = testing::uniform_int(rng, 2, 8);
    const Eigen::Index r = testing::uniform_int(rng, 1, static_cast<int>(n) - 1);
    const testing::HartwigParts p = testing::random_hartwig(n, r, rng);
    const DualMatrix Ah = testing::hartwig_instance(p, testing::DualFamily::Arbitrary, rng);
    const bool want = oracle::dual_index_one(Ah);
    const ExistenceCertificate c = dual_index_is_one(Ah);
    EXPECT_EQ(c.dual_index_one, want);
    EXPECT_EQ(dmpgi_exists(Ah), want);
    // mpdgi always exists
    expect_near(mpdgi(Ah), oracle::mpdgi(Ah), 1e-8 * (1.0 + Ah.max_abs()) * 100.0);
  }
}

TEST(DualGinvProperty, IndexTwoHasNoGroupOrCoreInverse) {
  Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index n = testing::uniform_int(rng, 2, 8);
    const DualMatrix Ah = testing::index_two_instance(n, rng);
    const ExistenceCertificate c = dual_index_is_one(Ah);
    EXPECT_FALSE(c.index_A_one);
    EXPECT_FALSE(c.dual_index_one);
    EXPECT_THROW(dggi(Ah), DggiNotExist);
    EXPECT_THROW(dcgi(Ah), DcgiNotExist);
    EXPECT_NO_THROW(mpdgi(Ah));
  }
}

TEST(DualGinvProperty, SymmetricInstances) {
  Rng rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const Eigen::Index n = testing::uniform_int(rng, 2, 8);
    const Eigen::Index r = testing::uniform_int(rng, 1, static_cast<int>(n) - 1);
    const bool range = trial % 3 == 0;
    const DualMatrix Ah = testing::symmetric_instance(n, r, range, rng);
    const SymmetricReport rep = symmetric_identities(Ah);
    const double tol = 1e-8 * (1.0 + Ah.max_abs());
    EXPECT_LE(rep.max_pairwise_gap, tol);
    EXPECT_LE(rep.max_asymmetry, tol);
    EXPECT_EQ(rep.range_condition, range);
    if (range) {
      ASSERT_TRUE(rep.mpdgi_gap.has_value());
      EXPECT_LE(*rep.mpdgi_gap, tol);
    }
  }
}

// The closed form with the -Ac B Ac term reproduces the DCGI on symmetric
// inputs; the form without it does not once that term is nonzero.
TEST(DualGinvProperty, SymmetricClosedForm) {
  Rng rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const Eigen::Index n = testing::uniform_int(rng, 2, 8);
    const Eigen::Index r = testing::uniform_int(rng, 1, static_cast<int>(n) - 1);
    const DualMatrix Ah = testing::symmetric_instance(n, r, false, rng);
    const DualMatrix G = dcgi(Ah).inverse;
    const RealMatrix C = G.real();
    const double scale = 1.0 + Ah.max_abs();
    expect_near(oracle::symmetric_full_form(Ah), G, 1e-8 * scale);
    const double term = max_abs(C * Ah.dual() * C);
    if (term > 1e-6) {
      EXPECT_GT(max_abs(oracle::symmetric_short_form(Ah).dual() - G.dual()), 0.5 * term);
    }
  }
}

}  // namespace
}  // namespace dualginv
