#include <gtest/gtest.h>

#include "mforge/quadspace.hpp"

using namespace mforge;

namespace {

Scalar q(long n, long d = 1) {
  mpq_class r{mpz_class(n), mpz_class(d)};
  r.canonicalize();
  return Scalar::from_rational(rationals(), r);
}

Vec v2(const Field& K, long a, long b) { return {Scalar::from_int(K, a), Scalar::from_int(K, b)}; }

QuadSpace f4_norm() { return norm_space(builtin_algebra("F4")); }

}  // namespace

TEST(QuadSpace, EvalAtBasepoint) {
  QuadSpace s = norm_space(builtin_algebra("Qi"));
  QSVector e = qs_eps(s);
  EXPECT_EQ(qs_q(e), q(1));
  EXPECT_EQ(qs_trace(e), q(2));
  EXPECT_EQ(qs_sigma(e), e);
  QSVector z = qs_zero(s);
  EXPECT_EQ(qs_q(z), q(0));
  EXPECT_EQ(qs_trace(z), q(0));
  EXPECT_EQ(qs_sigma(z), z);
}

TEST(QuadSpace, F4Omega) {
  QuadSpace s = f4_norm();
  const Field& K = s->K;
  QSVector om = qs_vector(s, v2(K, 0, 1));
  EXPECT_EQ(qs_q(om), Scalar::one(K));
  EXPECT_EQ(qs_trace(om), Scalar::one(K));
  // omega^2 = 1 + omega
  EXPECT_EQ(qs_sigma(om), qs_vector(s, v2(K, 1, 1)));
  EXPECT_EQ(s->aniso, Anisotropy::Exhaustive);
}

TEST(QuadSpace, F4HuaOmegaOne) {
  QuadSpace s = f4_norm();
  QSVector om = qs_vector(s, v2(s->K, 0, 1));
  QSVector expect = qs_vector(s, v2(s->K, 1, 1));
  EXPECT_EQ(qs_hua(om, qs_eps(s)), expect);
  EXPECT_EQ(qs_hua_pi(om, qs_eps(s)), expect);
}

TEST(QuadSpace, HuaAtEpsIsIdentity) {
  QuadSpace s = norm_space(builtin_algebra("quaternion-Q"));
  Rng rng(3);
  for (int n = 0; n < 40; ++n) {
    QSVector x = qs_random(s, rng);
    EXPECT_EQ(qs_hua(qs_eps(s), x), x);
  }
}

TEST(QuadSpace, HuaScaling) {
  QuadSpace s = norm_space(builtin_algebra("octonion-Q"));
  Rng rng(5);
  for (int n = 0; n < 30; ++n) {
    QSVector a = qs_random(s, rng, 6), x = qs_random(s, rng, 6);
    Scalar t = random_nonzero(s->K, rng, 6);
    if (a.is_zero()) continue;
    EXPECT_EQ(qs_hua(a * t, x), qs_hua(a, x) * t.square());
  }
}

TEST(QuadSpace, ZeroAnchor) {
  QuadSpace s = f4_norm();
  EXPECT_THROW(qs_hua(qs_zero(s), qs_eps(s)), MathError);
}

TEST(QuadSpace, BasepointMustBeUnital) {
  Field Q = rationals();
  EXPECT_THROW(make_quadspace(Q, {q(2)}, {{q(0)}}, {q(1)}), MathError);
}

TEST(QuadSpace, Defects) {
  Defect d = qs_defect(f4_norm());
  EXPECT_TRUE(d.radical.empty());
  EXPECT_TRUE(d.proper);

  Field F2 = prime_field(2);
  QuadSpace flat = make_quadspace(F2, {Scalar::one(F2)}, {{Scalar::zero(F2)}}, {Scalar::one(F2)});
  Defect d2 = qs_defect(flat);
  EXPECT_EQ(d2.radical.size(), 1u);
  EXPECT_FALSE(d2.proper);

  QuadSpace line = make_quadspace(rationals(), {q(1)}, {{q(0)}}, {q(1)});
  EXPECT_TRUE(qs_defect(line).radical.empty());
}

TEST(QuadSpace, SmallDimFieldTags) {
  QuadSpace line = make_quadspace(rationals(), {q(1)}, {{q(0)}}, {q(1)});
  SmallDimField a = qs_small_dim_field(line);
  EXPECT_EQ(a.type_tag, "(ii)");
  EXPECT_EQ(a.F->dim, 1);

  SmallDimField b = qs_small_dim_field(f4_norm());
  EXPECT_EQ(b.type_tag, "(iii)");
  EXPECT_EQ(b.F->dim, 2);
  EXPECT_EQ(enumerate_elts(b.F).size(), 4u);

  SmallDimField c = qs_small_dim_field(norm_space(builtin_algebra("Qi")));
  EXPECT_EQ(c.type_tag, "(iii)");

  EXPECT_THROW(qs_small_dim_field(norm_space(builtin_algebra("quaternion-Q"))), MathError);
}

TEST(QuadSpace, SmallDimFieldConditionIv) {
  QuadSpace s = norm_space(builtin_algebra("Qi"));
  SmallDimField fd = qs_small_dim_field(s);
  Rng rng(9);
  for (int n = 0; n < 30; ++n) {
    QSVector x = qs_random(s, rng);
    CDElt prod = fd.embed(x) * fd.embed(qs_sigma(x));
    EXPECT_EQ(prod, CDElt::scalar(fd.F, qs_q(x)));
    EXPECT_EQ(fd.back(fd.embed(x), s), x);
  }
}

class QuadSpaceVerify : public ::testing::TestWithParam<std::string> {};

TEST_P(QuadSpaceVerify, AllChecksPass) {
  Report r = qs_verify(norm_space(builtin_algebra(GetParam())), 60, 11);
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
}

INSTANTIATE_TEST_SUITE_P(Norms, QuadSpaceVerify,
                         ::testing::Values("F2", "F4", "F5", "Qi", "quaternion-Q", "octonion-Q"));
