#include <gtest/gtest.h>

#include "mforge/octonion_aut.hpp"

using namespace mforge;

namespace {

CDAlgebra O() { return builtin_algebra("octonion-Q"); }

// quaternion subalgebra spanned by 1, e1, e2, e3 and the doubling unit e4
Subspace H0() { return span(O(), {CDElt::one(O()), CDElt::basis(O(), 1), CDElt::basis(O(), 2), CDElt::basis(O(), 3)}); }
CDElt e4() { return CDElt::basis(O(), 4); }

void expect_pass(const Report& r) {
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
}

}  // namespace

TEST(JordanMap, PsiCentralWIsIdentity) {
  JordanMap psi = jm_psi(H0(), e4(), CDElt::from_int(O(), 3));
  Rng rng(1);
  for (int n = 0; n < 20; ++n) {
    CDElt x = random_elt(O(), rng);
    EXPECT_EQ(jaut_apply(psi, x), x);
  }
}

TEST(JordanMap, PsiFixesH) {
  JordanMap psi = jm_psi(H0(), e4(), CDElt::basis(O(), 1) + CDElt::from_int(O(), 2));
  for (const auto& h : H0().basis()) EXPECT_EQ(jaut_apply(psi, h), h);
}

TEST(JordanMap, SigmaNegatesDoublingUnit) { EXPECT_EQ(jaut_apply(jm_sigma(O()), e4()), -e4()); }

TEST(JordanMap, FrameValidation) {
  EXPECT_THROW(jm_psi(H0(), CDElt::basis(O(), 1), CDElt::one(O())), MathError);
  EXPECT_THROW(jm_psi(H0(), e4(), e4()), MathError);
  EXPECT_THROW(jm_phi(H0(), e4(), CDElt::one(O()), CDElt::from_int(O(), 2)), MathError);
}

TEST(JautVerify, PsiIsNeither) {
  JautResult r = jaut_verify(jm_psi(H0(), e4(), CDElt::basis(O(), 1)), 100, 2, 2000);
  EXPECT_TRUE(r.jordan);
  EXPECT_TRUE(r.norm_isometry);
  EXPECT_TRUE(r.auto_witness);
  EXPECT_TRUE(r.anti_witness);
}

TEST(JautVerify, SigmaIsAnti) {
  JautResult r = jaut_verify(jm_sigma(O()), 100, 3, 2000);
  EXPECT_TRUE(r.jordan);
  EXPECT_TRUE(r.auto_witness);
  EXPECT_FALSE(r.anti_witness);
}

TEST(JautVerify, LinearIdentity) {
  Mat id(8, Vec(8, Scalar::zero(rationals())));
  for (int i = 0; i < 8; ++i) id[i][i] = Scalar::one(rationals());
  JautResult r = jaut_verify(jm_linear(O(), id), 60, 4, 1000);
  EXPECT_TRUE(r.jordan);
  EXPECT_FALSE(r.auto_witness);
  // the octonions are not commutative
  EXPECT_TRUE(r.anti_witness);
}

TEST(JautVerify, PhiIsAutomorphism) {
  CDElt i = CDElt::basis(O(), 1), j = CDElt::basis(O(), 2);
  CDElt w = CDElt::one(O()) + j;
  CDElt p = i;  // N(i) = 1
  JautResult r = jaut_verify(jm_phi(H0(), e4(), w, p), 80, 5, 2000);
  EXPECT_TRUE(r.jordan);
  EXPECT_FALSE(r.auto_witness);
  EXPECT_TRUE(r.anti_witness);
}

TEST(JautVerify, CompositeStaysJordan) {
  JordanMap a = jm_psi(H0(), e4(), CDElt::basis(O(), 1));
  JordanMap b = jm_conj(CDElt::one(O()) + CDElt::basis(O(), 5));
  JordanMap c = jm_psi(H0(), e4(), CDElt::basis(O(), 2) + CDElt::from_int(O(), 1));
  EXPECT_TRUE(jaut_verify(jm_compose(jm_compose(a, b), c), 60, 6, 0).jordan);
}

TEST(PsiProduct, Rule) {
  expect_pass(psi_product_rule_check(jm_psi(H0(), e4(), CDElt::basis(O(), 1) + CDElt::basis(O(), 3)), 300, 7));
}

TEST(GammaW, UnitW) {
  GammaDecomp d = gamma_w_decompose(CDElt::one(O()), 30, 8);
  expect_pass(d.report);
  Rng rng(8);
  CDElt x = random_elt(O(), rng);
  EXPECT_EQ(jaut_apply(d.phi, x), x);
  EXPECT_EQ(jaut_apply(d.psi, x), x);
}

TEST(GammaW, OnePlusI) {
  GammaDecomp d = gamma_w_decompose(CDElt::one(O()) + CDElt::basis(O(), 1), 1000, 9);
  expect_pass(d.report);
}

TEST(GammaW, OutsideH0) {
  expect_pass(gamma_w_decompose(CDElt::from_int(O(), 2) + CDElt::basis(O(), 6) - CDElt::basis(O(), 3), 200, 10).report);
}

TEST(SigmaCentral, Fragments) {
  expect_pass(sigma_s_central_check(jm_identity(O()), 50, 1));
  expect_pass(sigma_s_central_check(jm_psi(H0(), e4(), CDElt::basis(O(), 1)), 100, 2));
  expect_pass(sigma_s_central_check(jm_conj(CDElt::one(O()) + CDElt::basis(O(), 2)), 100, 3));
}

TEST(SpecialPair, RationalOctonions) {
  SpecialPair s = special_pair_check(CDElt::basis(O(), 1), CDElt::basis(O(), 2));
  EXPECT_TRUE(s.is_special);
  expect_pass(s.report);
  SpecialPair t = special_pair_check(CDElt::one(O()), CDElt::basis(O(), 1));
  EXPECT_FALSE(t.is_special);
}

TEST(SpecialPair, CharacteristicTwo) {
  auto a = cd_with_stage(prime_field(2), Scalar::one(prime_field(2)), Scalar::one(prime_field(2)),
                         {Scalar::one(prime_field(2))}, "Q(F4,1)");
  SpecialPair s = special_pair_check(CDElt::basis(a, 1), CDElt::basis(a, 2));
  EXPECT_TRUE(s.is_special);
}
