#include <gtest/gtest.h>

#include "mforge/moufang.hpp"

using namespace mforge;

namespace mforge {
void PrintTo(const MElt& x, std::ostream* os) { *os << x.str(); }
}  // namespace mforge

namespace {

Scalar q(long n, long d = 1) {
  mpq_class r{mpz_class(n), mpz_class(d)};
  r.canonicalize();
  return Scalar::from_rational(rationals(), r);
}

MSet linear_q() { return ms_linear(cd_field(rationals(), "Q")); }

void expect_pass(const Report& r) {
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
}

}  // namespace

TEST(MoufangTau, LinearRationals) {
  MSet M = linear_q();
  MElt x = ms_from_coords(M, {q(2)});
  EXPECT_EQ(ms_tau(x), ms_from_coords(M, {q(-1, 2)}));
  EXPECT_THROW(ms_tau(ms_zero(M)), MathError);
}

TEST(MoufangTau, QuadraticF4) {
  MSet M = ms_quadratic(norm_space(builtin_algebra("F4")));
  Field F2 = prime_field(2);
  MElt om = ms_from_coords(M, {Scalar::zero(F2), Scalar::one(F2)});
  EXPECT_EQ(ms_tau(om), ms_from_coords(M, {Scalar::one(F2), Scalar::one(F2)}));
}

TEST(MoufangTau, PseudoUnit) {
  PQSpace s = xi_hamilton();
  MSet M = ms_pseudo(s);
  MElt t = ms_tau(ms_unit(M));
  EXPECT_EQ(t.point(), (TPoint{s, pq_zero(s), -CDElt::one(s->K())}));
}

TEST(MoufangHua, OctonionUnitAnchor) {
  MSet M = ms_linear(builtin_algebra("octonion-Q"));
  Rng rng(1);
  for (int n = 0; n < 20; ++n) {
    MElt x = ms_random(M, rng);
    EXPECT_EQ(ms_hua(ms_unit(M), x), x);
  }
  EXPECT_THROW(ms_hua(ms_zero(M), ms_unit(M)), MathError);
}

TEST(MoufangHua, InvolutoryHamilton) {
  MSet M = ms_involutory(hamilton_involutory());
  const CDAlgebra& H = M->A;
  MElt a = ms_from_coords(M, CDElt::from_int(H, 2).coords());
  MElt x = ms_from_coords(M, CDElt::from_int(H, 3).coords());
  EXPECT_EQ(ms_hua(a, x).elt(), CDElt::from_int(H, 12));
  EXPECT_THROW(ms_from_coords(M, CDElt::basis(H, 1).coords()), MathError);
}

TEST(MoufangHua, QuadraticSharesOracle) {
  QuadSpace s = norm_space(builtin_algebra("quaternion-Q"));
  MSet M = ms_quadratic(s);
  Rng rng(2);
  for (int n = 0; n < 1000; ++n) {
    QSVector a = qs_random(s, rng, 5), x = qs_random(s, rng, 5);
    if (a.is_zero()) continue;
    EXPECT_EQ(ms_hua(MElt{M, a}, MElt{M, x}).vec(), qs_hua(a, x));
  }
}

TEST(MoufangVerify, F4Pseudo) {
  MSet M = ms_pseudo(xi_f4());
  expect_pass(ms_verify(M, 50, 3));
  for (const auto& a : ms_enumerate(M))
    if (!ms_is_zero(a))
      for (const auto& x : ms_enumerate(M)) EXPECT_EQ(ms_hua(a, x), x);
}

TEST(MoufangVerify, AllFamilies) {
  expect_pass(ms_verify(ms_linear(builtin_algebra("octonion-Q")), 300, 4));
  expect_pass(ms_verify(ms_linear(builtin_algebra("F4")), 50, 4));
  expect_pass(ms_verify(ms_involutory(hamilton_involutory()), 100, 4));
  auto F4 = builtin_algebra("F4");
  expect_pass(ms_verify(ms_indifferent(make_indifferent(F4, {CDElt::one(F4), CDElt::basis(F4, 1)}, {CDElt::one(F4)})),
                        50, 4));
  expect_pass(ms_verify(ms_quadratic(norm_space(builtin_algebra("octonion-Q"))), 100, 4));
  expect_pass(ms_verify(ms_quadratic(norm_space(builtin_algebra("F4"))), 50, 4));
  expect_pass(ms_verify(ms_pseudo(xi_hamilton()), 100, 4));
}

TEST(MoufangVerify, CorruptedHuaFails) {
  MSet M = ms_linear(builtin_algebra("Qi"));
  MSet bad = ms_with_hua(M, [](const MElt& a, const MElt& x) {
    return MElt{a.M, a.elt() * x.elt() * a.elt() + CDElt::one(a.M->A)};
  }, "broken");
  Report r = ms_verify(bad, 50, 5);
  EXPECT_FALSE(r.pass());
  bool witnessed = false;
  for (const auto& c : r.checks) witnessed = witnessed || (!c.pass && !c.detail.empty());
  EXPECT_TRUE(witnessed);
}

TEST(MoufangCoincide, NormSpaceVsLinearF4) {
  auto F4 = builtin_algebra("F4");
  Report r = ms_coincide(ms_quadratic(norm_space(F4)), ms_linear(F4), 0, 1);
  expect_pass(r);
  EXPECT_EQ(r.samples, 16);
}

TEST(MoufangCoincide, NormSpaceVsLinearOctonions) {
  auto O = builtin_algebra("octonion-Q");
  expect_pass(ms_coincide(ms_quadratic(norm_space(O)), ms_linear(O), 200, 6));
}

TEST(MoufangCoincide, SmallDimField) {
  QuadSpace s = make_quadspace(rationals(), {q(1), q(3)}, {{q(0), q(1)}, {}}, {q(1), q(0)});
  SmallDimField fd = qs_small_dim_field(s);
  MSet Mq = ms_quadratic(s), Ml = ms_linear(fd.F);
  MMap g = [&](const MElt& x) { return MElt{Ml, fd.embed(x.vec())}; };
  expect_pass(ms_coincide(Mq, Ml, 200, 7, g));
}

TEST(MoufangCoincide, CarrierMismatch) {
  EXPECT_THROW(ms_coincide(linear_q(), ms_linear(builtin_algebra("F5")), 10, 1), MathError);
}

TEST(MoufangJordan, StandardInvolutionOnOctonions) {
  MSet M = ms_linear(builtin_algebra("octonion-Q"));
  JordanResult j = ms_jordan_check([&](const MElt& x) { return MElt{M, x.elt().conj()}; }, M, M, false, 200, 8);
  EXPECT_TRUE(j.jordan);
  EXPECT_TRUE(j.moufang_iso);
  EXPECT_EQ(j.tag, "anti-automorphism");
}

TEST(MoufangJordan, FrobeniusF4) {
  MSet M = ms_linear(builtin_algebra("F4"));
  JordanResult j = ms_jordan_check([&](const MElt& x) { return MElt{M, x.elt() * x.elt()}; }, M, M, true, 0, 0);
  EXPECT_TRUE(j.jordan);
  EXPECT_EQ(j.tag, "automorphism");
}

TEST(MoufangJordan, TranslationFails) {
  MSet M = ms_linear(builtin_algebra("F4"));
  JordanResult j = ms_jordan_check([&](const MElt& x) { return MElt{M, x.elt() + CDElt::one(M->A)}; }, M, M, true,
                                   0, 0);
  EXPECT_FALSE(j.jordan);
}
