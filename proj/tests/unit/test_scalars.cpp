#include <gtest/gtest.h>

#include "mforge/scalar.hpp"

using namespace mforge;

namespace {

Field F4() {
  Field F2 = prime_field(2);
  return quad_ext(F2, Scalar::one(F2), Scalar::one(F2), "w", "F4");
}

Scalar q(long n, long d = 1) {
  mpq_class r{mpz_class(n), mpz_class(d)};
  r.canonicalize();
  return Scalar::from_rational(rationals(), r);
}

}  // namespace

TEST(Scalars, RationalSum) { EXPECT_EQ(q(1, 3) + q(1, 6), q(1, 2)); }

TEST(Scalars, RationalsLowestTerms) {
  Scalar x = q(6, -4);
  EXPECT_EQ(x.q().get_num(), -3);
  EXPECT_EQ(x.q().get_den(), 2);
}

TEST(Scalars, F4OmegaSquared) {
  Field f = F4();
  Field b = base_of(f);
  Scalar w = Scalar::make_pair(f, Scalar::zero(b), Scalar::one(b));
  EXPECT_EQ(w * w, w + Scalar::one(f));
}

TEST(Scalars, F5Division) {
  Field f = prime_field(5);
  EXPECT_EQ(Scalar::from_int(f, 2) / Scalar::from_int(f, 3), Scalar::from_int(f, 4));
}

TEST(Scalars, ResiduesNormalized) {
  Field f = prime_field(7);
  EXPECT_EQ(Scalar::from_int(f, -1).residue(), 6);
}

TEST(Scalars, DivisionByZero) {
  try {
    (void)(q(1) / q(0));
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.kind(), Err::DivisionByZero);
  }
}

TEST(Scalars, DescriptorMismatch) {
  try {
    (void)(q(1) + Scalar::one(prime_field(5)));
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.kind(), Err::DescriptorMismatch);
  }
}

TEST(Scalars, GaloisDataF4) {
  Field f = F4();
  Field b = base_of(f);
  Scalar w = Scalar::make_pair(f, Scalar::zero(b), Scalar::one(b));
  EXPECT_EQ(w.conj(), w * w);
  EXPECT_TRUE(w.norm().is_one());
  EXPECT_TRUE(w.trace().is_one());
}

TEST(Scalars, GaloisDataGaussian) {
  Field Q = rationals();
  Field Qi = quad_ext(Q, q(0), q(1), "i");
  Scalar x = Scalar::make_pair(Qi, q(3), q(4));
  EXPECT_EQ(x.conj(), Scalar::make_pair(Qi, q(3), q(-4)));
  EXPECT_EQ(x.norm(), q(25));
  EXPECT_EQ(x.trace(), q(6));
  EXPECT_EQ(x.conj().str(), "3 - 4*i");
  Scalar one = Scalar::one(Qi);
  EXPECT_TRUE(one.conj().is_one());
  EXPECT_TRUE(one.norm().is_one());
  EXPECT_EQ(one.trace(), q(2));
}

TEST(Scalars, NotQuadExt) {
  try {
    (void)q(2).conj();
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.kind(), Err::NotQuadExt);
  }
}

TEST(Scalars, ReducibleRejected) {
  Field Q = rationals();
  // y^2 - 4 has the root 2
  EXPECT_THROW(quad_ext(Q, q(0), q(-4)), MathError);
  Field F5 = prime_field(5);
  // y^2 + 1 = (y - 2)(y + 2) over F5
  EXPECT_THROW(quad_ext(F5, Scalar::zero(F5), Scalar::one(F5)), MathError);
  EXPECT_THROW(prime_field(6), MathError);
}

TEST(Scalars, Characteristic) {
  EXPECT_EQ(characteristic(rationals()), 0);
  EXPECT_EQ(characteristic(F4()), 2);
  EXPECT_EQ(field_order(F4()), 4);
  EXPECT_EQ(enumerate(F4()).size(), 4u);
}

class ScalarProperties : public ::testing::TestWithParam<int> {};

TEST_P(ScalarProperties, NormTraceConjLaws) {
  Field Q = rationals();
  std::vector<Field> fields = {quad_ext(Q, q(1), q(3), "w"), quad_ext(Q, q(0), q(2), "r"), F4(),
                               quad_ext(prime_field(7), Scalar::zero(prime_field(7)), Scalar::one(prime_field(7)))};
  Field f = fields[GetParam()];
  Rng rng(11 + GetParam());
  for (int n = 0; n < 300; ++n) {
    Scalar x = random_scalar(f, rng), y = random_scalar(f, rng);
    ASSERT_EQ((x * y).norm(), x.norm() * y.norm());
    ASSERT_EQ(x.conj().trace(), x.trace());
    ASSERT_EQ(x.conj().conj(), x);
    ASSERT_EQ((x + y).conj(), x.conj() + y.conj());
    ASSERT_EQ((x * y).conj(), x.conj() * y.conj());
    ASSERT_TRUE((x * x - x * Scalar::embed(f, x.trace()) + Scalar::embed(f, x.norm())).is_zero());
    if (!y.is_zero()) ASSERT_EQ((x / y) * y, x);
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, ScalarProperties, ::testing::Range(0, 4));
