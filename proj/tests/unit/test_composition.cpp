#include <gtest/gtest.h>

#include "mforge/cd.hpp"

using namespace mforge;

namespace {

Scalar q(long n, long d = 1) {
  mpq_class r{mpz_class(n), mpz_class(d)};
  r.canonicalize();
  return Scalar::from_rational(rationals(), r);
}

CDElt elt(const CDAlgebra& a, std::vector<long> c) {
  Vec v;
  for (long x : c) v.push_back(q(x));
  return CDElt(a, v);
}

// Hamilton's product on (1, i, j, k) with ij = k, written out by hand
std::array<mpq_class, 4> hamilton(const std::array<mpq_class, 4>& x, const std::array<mpq_class, 4>& y) {
  return {x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
          x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
          x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
          x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]};
}

}  // namespace

TEST(Composition, UnitIsNeutral) {
  auto O = builtin_algebra("octonion-Q");
  Rng rng(1);
  CDElt x = random_elt(O, rng);
  EXPECT_EQ(CDElt::one(O) * x, x);
  EXPECT_EQ(x * CDElt::one(O), x);
}

TEST(Composition, QuaternionUnits) {
  auto H = builtin_algebra("quaternion-Q");
  CDElt i = CDElt::basis(H, 1), j = CDElt::basis(H, 2);
  EXPECT_EQ(i * i, CDElt::from_int(H, -1));
  CDElt k = i * j;
  EXPECT_EQ(j * i, -k);
  EXPECT_EQ(k * k, CDElt::from_int(H, -1));
}

TEST(Composition, MatchesHamiltonOracle) {
  // coordinates x0 + x1 e1 + x2 e2 + x3 e3 with e3 = -(e1 e2) = -k
  auto H = builtin_algebra("quaternion-Q");
  Rng rng(5);
  for (int n = 0; n < 500; ++n) {
    CDElt x = random_elt(H, rng), y = random_elt(H, rng);
    CDElt p = x * y;
    std::array<mpq_class, 4> hx{x[0].q(), x[1].q(), x[2].q(), -x[3].q()};
    std::array<mpq_class, 4> hy{y[0].q(), y[1].q(), y[2].q(), -y[3].q()};
    auto hp = hamilton(hx, hy);
    ASSERT_EQ(p[0].q(), hp[0]);
    ASSERT_EQ(p[1].q(), hp[1]);
    ASSERT_EQ(p[2].q(), hp[2]);
    ASSERT_EQ(p[3].q(), -hp[3]);
  }
}

TEST(Composition, FrozenOctonionTable) {
  const char* expected =
      "1\te1\te2\te3\te4\te5\te6\te7\n"
      "e1\t-1\t-e3\te2\t-e5\te4\te7\t-e6\n"
      "e2\te3\t-1\t-e1\t-e6\t-e7\te4\te5\n"
      "e3\t-e2\te1\t-1\t-e7\te6\t-e5\te4\n"
      "e4\te5\te6\te7\t-1\t-e1\t-e2\t-e3\n"
      "e5\t-e4\te7\t-e6\te1\t-1\te3\t-e2\n"
      "e6\t-e7\t-e4\te5\te2\t-e3\t-1\te1\n"
      "e7\te6\t-e5\t-e4\te3\te2\t-e1\t-1\n";
  EXPECT_EQ(basis_table(builtin_algebra("octonion-Q")), expected);
}

TEST(Composition, TableAgreesWithRecursion) {
  auto O = builtin_algebra("octonion-Q");
  Rng rng(3);
  for (int n = 0; n < 200; ++n) {
    CDElt x = random_elt(O, rng), y = random_elt(O, rng);
    ASSERT_EQ((x * y).coords(), cd_mul_recursive(*O, x.coords(), y.coords()));
  }
}

TEST(Composition, ConjNormTrace) {
  auto O = builtin_algebra("octonion-Q");
  CDElt one = CDElt::one(O);
  EXPECT_EQ(one.conj(), one);
  EXPECT_EQ(one.norm(), q(1));
  EXPECT_EQ(one.trace(), q(2));
  CDElt e = CDElt::basis(O, 4);
  EXPECT_EQ(e.conj(), -e);
  EXPECT_EQ(e.norm(), q(1));
  EXPECT_EQ(e.trace(), q(0));
  auto H = builtin_algebra("quaternion-Q");
  CDElt x = elt(H, {3, 1, 0, 0});
  EXPECT_EQ(x.conj(), elt(H, {3, -1, 0, 0}));
  EXPECT_EQ(x.norm(), q(10));
  EXPECT_EQ(x.trace(), q(6));
}

TEST(Composition, Inverse) {
  auto H = builtin_algebra("quaternion-Q");
  EXPECT_EQ(CDElt::one(H).inv(), CDElt::one(H));
  EXPECT_EQ(CDElt::basis(H, 1).inv(), -CDElt::basis(H, 1));
  try {
    (void)CDElt::zero(H).inv();
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.kind(), Err::NotInvertible);
  }
}

TEST(Composition, AlgebraMismatch) {
  try {
    (void)(CDElt::one(builtin_algebra("octonion-Q")) * CDElt::one(builtin_algebra("quaternion-Q")));
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.kind(), Err::AlgebraMismatch);
  }
}

TEST(Composition, DoublingCoordinates) {
  auto O = builtin_algebra("octonion-Q");
  Subspace A = span(O, {CDElt::basis(O, 0), CDElt::basis(O, 1), CDElt::basis(O, 2), CDElt::basis(O, 3)});
  CDElt e = CDElt::basis(O, 4);
  CDElt i = CDElt::basis(O, 1);
  auto d = doubling_coordinates(i, A, e);
  EXPECT_EQ(d.h, i);
  EXPECT_TRUE(d.y.is_zero());
  d = doubling_coordinates(e, A, e);
  EXPECT_TRUE(d.h.is_zero());
  EXPECT_EQ(d.y, CDElt::one(O));
  d = doubling_coordinates(e * i, A, e);
  EXPECT_TRUE(d.h.is_zero());
  EXPECT_EQ(d.y, i);
  Rng rng(9);
  for (int n = 0; n < 50; ++n) {
    CDElt x = random_elt(O, rng);
    auto c = doubling_coordinates(x, A, e);
    ASSERT_TRUE(A.contains(c.h));
    ASSERT_TRUE(A.contains(c.y));
    ASSERT_EQ(c.h + e * c.y, x);
  }
  try {
    (void)doubling_coordinates(i, A, i);
    FAIL();
  } catch (const MathError& ex) {
    EXPECT_EQ(ex.kind(), Err::BadDoublingUnit);
  }
  Subspace small = span(O, {CDElt::basis(O, 0), CDElt::basis(O, 1)});
  try {
    (void)doubling_coordinates(CDElt::basis(O, 7), small, CDElt::basis(O, 2));
    FAIL();
  } catch (const MathError& ex) {
    EXPECT_EQ(ex.kind(), Err::NotInSpan);
  }
}

TEST(Composition, OrthogonalComplement) {
  auto H = builtin_algebra("quaternion-Q");
  Subspace c = orthogonal_complement(span(H, {CDElt::one(H)}));
  EXPECT_TRUE(c.equals(span(H, {CDElt::basis(H, 1), CDElt::basis(H, 2), CDElt::basis(H, 3)})));
  EXPECT_EQ(orthogonal_complement(whole(H)).dim(), 0u);
  EXPECT_EQ(orthogonal_complement(span(H, {})).dim(), 4u);
  auto O = builtin_algebra("octonion-Q");
  EXPECT_EQ(orthogonal_complement(whole(O)).dim(), 0u);
}

TEST(Composition, Center) {
  EXPECT_EQ(center(builtin_algebra("F5")).dim(), 1u);
  EXPECT_EQ(center(builtin_algebra("Qi")).dim(), 2u);
  auto H = builtin_algebra("quaternion-Q");
  EXPECT_TRUE(center(H).equals(span(H, {CDElt::one(H)})));
  auto O = builtin_algebra("octonion-Q");
  EXPECT_TRUE(center(O).equals(span(O, {CDElt::one(O)})));
}

TEST(Composition, SubalgebraGenerated) {
  auto O = builtin_algebra("octonion-Q");
  EXPECT_EQ(subalgebra_generated(O, {}).dim(), 1u);
  CDElt i = CDElt::basis(O, 1), j = CDElt::basis(O, 2), e = CDElt::basis(O, 4);
  EXPECT_TRUE(subalgebra_generated(O, {i}).equals(span(O, {CDElt::one(O), i})));
  Subspace H = subalgebra_generated(O, {i, j});
  EXPECT_EQ(H.dim(), 4u);
  EXPECT_TRUE(is_subalgebra(H));
  EXPECT_EQ(subalgebra_generated(O, {i, j, e}).dim(), 8u);
}

TEST(Composition, NormSplitting) {
  auto O = builtin_algebra("octonion-Q");
  Subspace E = span(O, {CDElt::one(O), CDElt::basis(O, 1)});
  NormSplitting ns = norm_splitting(O, E);
  EXPECT_EQ(ns.s[0], q(1));
  for (const auto& s : ns.s) EXPECT_FALSE(s.is_zero());
  EXPECT_EQ(ns.z.norm(), ns.product);
  EXPECT_TRUE(norm_splitting_check(O, E, 200, 4).pass());
  try {
    (void)norm_splitting(O, span(O, {CDElt::basis(O, 1), CDElt::basis(O, 2)}));
    FAIL();
  } catch (const MathError& ex) {
    EXPECT_EQ(ex.kind(), Err::BadSubfield);
  }
}

TEST(Composition, DivisionFlags) {
  EXPECT_TRUE(builtin_algebra("octonion-Q")->division);
  EXPECT_TRUE(builtin_algebra("F4")->division);
  EXPECT_FALSE(builtin_algebra("sedenion-Q")->division);
  Field Q = rationals();
  EXPECT_FALSE(cd_from_betas(Q, {q(1)})->division);
  EXPECT_THROW(cd_from_betas(Q, {q(0)}), MathError);
  EXPECT_THROW(cd_from_betas(Q, {q(-1), q(-1), q(-1), q(-1)}), MathError);
}

class OctonionSuites : public ::testing::TestWithParam<std::string> {};

TEST_P(OctonionSuites, Pass) {
  Report r = verify_identities(builtin_algebra("octonion-Q"), GetParam(), 150, 17);
  EXPECT_TRUE(r.pass()) << r.to_text();
  EXPECT_FALSE(r.checks.empty());
}

INSTANTIATE_TEST_SUITE_P(All, OctonionSuites, ::testing::ValuesIn(identity_suites()));

TEST(Composition, QuaternionAndF4Suites) {
  for (const char* name : {"quaternion-Q", "Qi", "F4"})
    for (const auto& s : identity_suites()) {
      Report r = verify_identities(builtin_algebra(name), s, 100, 2);
      EXPECT_TRUE(r.pass()) << r.to_text();
    }
}

TEST(Composition, SedenionFailsAlternativity) {
  Report r = verify_identities(builtin_algebra("sedenion-Q"), "alternative", 100, 7);
  EXPECT_FALSE(r.pass());
  EXPECT_FALSE(r.checks[0].detail.empty());
}
