#include <gtest/gtest.h>

#include "mforge/pseudoquad.hpp"

using namespace mforge;

namespace mforge {
void PrintTo(const TPoint& p, std::ostream* os) { *os << p.str(); }
}  // namespace mforge

TEST(PseudoQuad, HamiltonAxioms) {
  PQSpace s = xi_hamilton();
  EXPECT_EQ(s->aniso, Anisotropy::Structural);
  Report r = pq_verify(s, 80, 2);
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
}

TEST(PseudoQuad, F4Axioms) {
  Report r = pq_verify(xi_f4(), 40, 2);
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
}

TEST(PseudoQuad, PointMembership) {
  PQSpace s = xi_hamilton();
  PQVec a = pq_basis(s, 0);
  CDElt qa = pq_q(s, a);
  EXPECT_NO_THROW(t_point(s, a, qa + CDElt::from_int(s->K(), 3)));
  EXPECT_THROW(t_point(s, a, qa + CDElt::basis(s->K(), 2)), MathError);
}

TEST(PseudoQuad, InverseAndTau) {
  PQSpace s = xi_hamilton();
  Rng rng(4);
  for (int n = 0; n < 20; ++n) {
    TPoint x = t_random_nonzero(s, rng, 8);
    EXPECT_TRUE(t_mul(x, t_inv(x)).is_identity());
    if (x.t.is_zero()) continue;
    TPoint y = t_tau(x);
    EXPECT_TRUE(t_member(s, y.a, y.t));
    EXPECT_EQ(t_tau(y), TPoint({s, pq_neg(x.a), x.t}));
  }
  EXPECT_EQ(t_tau(t_unit(s)), TPoint({s, pq_zero(s), -CDElt::one(s->K())}));
}

TEST(PseudoQuad, HuaUnitAndZeroAnchor) {
  PQSpace s = xi_hamilton();
  Rng rng(6);
  TPoint x = t_random(s, rng);
  EXPECT_EQ(t_hua(t_unit(s), x), x);
  EXPECT_THROW(t_hua(t_identity(s), x), MathError);
}

TEST(Q8, TableAxioms) {
  FiniteGroup g = q8_group();
  EXPECT_TRUE(g.check_axioms());
  EXPECT_EQ(g.automorphisms().size(), 24u);
  EXPECT_EQ(g.inner_automorphisms().size(), 4u);
  EXPECT_EQ(g.center().size(), 2u);
}

TEST(F4Census, Counts) {
  F4Census c = f4_census();
  EXPECT_EQ(c.order, 8);
  EXPECT_EQ(c.automorphisms, 24);
  EXPECT_EQ(c.inner, 4);
  EXPECT_EQ(c.outer_quotient, 6);
  for (const auto& ch : c.report.checks) EXPECT_TRUE(ch.pass) << ch.name << " " << ch.detail;
}

TEST(DimSwitch, Up) {
  PQSpace s = xi_hamilton();
  CDElt j = CDElt::basis(s->K(), 2);
  DimSwitch d = dim_switch_up(s, pq_basis(s, 0), j, 40, 3);
  EXPECT_EQ(d.dst->dim, 2);
  EXPECT_EQ(d.dst->K()->dim, 2);
  for (const auto& c : d.report.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
}

TEST(DimSwitch, UpRejectsBadUnit) {
  PQSpace s = xi_hamilton();
  // i spans E_a together with 1
  EXPECT_THROW(dim_switch_up(s, pq_basis(s, 0), CDElt::basis(s->K(), 1), 5, 3), MathError);
}

TEST(DimSwitch, RoundTrip) {
  Report r = dim_switch_round_trip(xi_hamilton(), 40, 8);
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
}
