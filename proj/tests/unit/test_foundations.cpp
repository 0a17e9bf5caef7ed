#include <gtest/gtest.h>

#include <fstream>

#include "mforge/cite.hpp"
#include "mforge/foundations.hpp"

using namespace mforge;
using json = nlohmann::json;

namespace {

std::string data(const std::string& name) { return std::string(MFORGE_DATA_DIR) + "/foundations/" + name; }

void expect_pass(const Report& r) {
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << r.suite << ": " << c.name << " " << c.detail;
}

json tri(const std::string& algebra, const json& glueings) {
  return {{"name", "tri"},
          {"scalars", {{"algebra", algebra}}},
          {"vertices", {"1", "2", "3"}},
          {"edges",
           {{{"from", "1"}, {"to", "2"}, {"m", 3}, {"symbol", "T"}},
            {{"from", "2"}, {"to", "3"}, {"m", 3}, {"symbol", "T"}},
            {{"from", "3"}, {"to", "1"}, {"m", 3}, {"symbol", "T"}}}},
          {"glueings", glueings}};
}

json glue(const std::string& a, const std::string& b, const std::string& c, const json& atoms) {
  return {{"triple", {a, b, c}}, {"atoms", atoms}};
}

json edge(const std::string& a, const std::string& b) { return {{"from", a}, {"to", b}, {"m", 3}, {"symbol", "T"}}; }

json conj_qi() { return {{"kind", "field-iso"}, {"matrix", {{1, 0}, {0, -1}}}}; }

bool all_identity(const Foundation& F) {
  for (const auto& [t, g] : F.glue)
    if (!g.is_identity()) return false;
  return true;
}

}  // namespace

TEST(Foundations, SignOfIdentity) {
  CDAlgebra H = builtin_algebra("quaternion-Q");
  SignResult s = fnd_glueing_sign(gm_identity(), H);
  EXPECT_EQ(s.sign, Sign::Negative);
  EXPECT_FALSE(s.not_mult);
}

TEST(Foundations, StandardInvolutionIsPositiveOnQuaternions) {
  CDAlgebra H = builtin_algebra("quaternion-Q");
  GAtom a;
  a.kind = GAtom::StandardInvolution;
  SignResult s = fnd_glueing_sign(gm_atom(a), H);
  EXPECT_EQ(s.sign, Sign::Positive);
  EXPECT_TRUE(s.not_mult);
  EXPECT_FALSE(s.mult_witness.empty());
}

TEST(Foundations, StandardInvolutionIsNegativeOnAField) {
  GAtom a;
  a.kind = GAtom::StandardInvolution;
  EXPECT_EQ(fnd_glueing_sign(gm_atom(a), builtin_algebra("Qi")).sign, Sign::Negative);
}

TEST(Foundations, PsiIsExceptional) {
  CDAlgebra O = builtin_algebra("octonion-Q");
  CDElt w = CDElt::one(O) + CDElt::basis(O, 1);
  Subspace H = quaternion_containing(w);
  GAtom a;
  a.kind = GAtom::Psi;
  a.psi = jm_psi(H, perp_unit(H), w);
  SignResult s = fnd_glueing_sign(gm_atom(a), O);
  EXPECT_EQ(s.sign, Sign::Exceptional);
  EXPECT_FALSE(s.structural_known);
}

TEST(Foundations, InverseAndSimplify) {
  CDAlgebra Qi = builtin_algebra("Qi");
  GAtom c;
  c.kind = GAtom::ScalarConj;
  c.w = CDElt::one(Qi) + CDElt::basis(Qi, 1);
  GlueingMap g = gm_atom(c);
  EXPECT_TRUE(gm_simplify(gm_compose(gm_inverse(g), g)).is_identity());
  GAtom f;
  f.kind = GAtom::Frobenius;
  f.w = CDElt::one(builtin_algebra("F4"));
  CDElt x = CDElt::basis(builtin_algebra("F4"), 1);
  Param y = gm_apply(gm_atom(f), x);
  EXPECT_NE(param_key(y), param_key(Param(x)));
  EXPECT_EQ(param_key(gm_apply(gm_inverse(gm_atom(f)), y)), param_key(Param(x)));
}

TEST(Foundations, TildeA2OverOctonionsPasses) { expect_pass(fnd_check(fnd_load(data("a2-tilde-octonion.json")), 30, 1)); }

TEST(Foundations, P3PlusOverQuaternionsPasses) {
  Foundation F = fnd_load(data("p3-plus-quaternion.json"));
  expect_pass(fnd_check(F, 30, 1));
  EXPECT_EQ(fnd_triple_sign(F, {0, 1, 2}).sign, Sign::Positive);
}

TEST(Foundations, ShiftByOneBreaksUnits) {
  // x -> x + 1 on F4 = {0, 1, w, w + 1}
  json pairs = {{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}, {{0, 1}, {1, 1}}, {{1, 1}, {0, 1}}};
  Foundation F = fnd_from_json(tri("F4", json::array({glue("1", "2", "3", json::array({{{"kind", "table"}, {"pairs", pairs}}}))})));
  Report r = fnd_check(F, 30, 1);
  const Check* unit = r.find("(F3) glueings map 1 to 1");
  ASSERT_NE(unit, nullptr);
  EXPECT_FALSE(unit->pass);
  EXPECT_EQ(unit->detail, "(1,2,3)");
}

TEST(Foundations, MissingGlueingsDefaultToIdentity) {
  Foundation F = fnd_from_json(tri("Qi", json::array()));
  EXPECT_EQ(F.glue.size(), 6u);
  EXPECT_TRUE(all_identity(F));
  EXPECT_EQ(F.notes.size(), 6u);
}

TEST(Foundations, ReverseGlueingIsTheInverse) {
  CDAlgebra Qi = builtin_algebra("Qi");
  Foundation F = fnd_from_json(tri("Qi", json::array({glue("1", "2", "3", json::array({{{"kind", "scalar-conj"}, {"w", {1, 2}}}}))})));
  const GlueingMap& g = F.glueing(0, 1, 2);
  const GlueingMap& h = F.glueing(2, 1, 0);
  EXPECT_TRUE(gm_simplify(gm_compose(h, g)).is_identity());
  CDElt x = CDElt::basis(Qi, 1);
  EXPECT_EQ(param_key(gm_apply(h, gm_apply(g, x))), param_key(Param(x)));
}

TEST(Foundations, LoaderErrors) {
  EXPECT_THROW(fnd_from_json(tri("Qi", json::array({glue("1", "2", "3", json::array({"no-such-atom"}))}))), MathError);
  EXPECT_THROW(fnd_from_json(tri("Qi", json::array({glue("1", "2", "1", json::array({"id"}))}))), MathError);
  json bad = tri("Qi", json::array());
  bad["edges"][0]["m"] = 4;
  EXPECT_THROW(fnd_from_json(bad), MathError);
  std::string path = testing::TempDir() + "malformed.json";
  std::ofstream(path) << "{\"vertices\": [\n";
  try {
    fnd_load(path);
    FAIL() << "malformed file parsed";
  } catch (const MathError& e) {
    EXPECT_EQ(e.kind(), Err::InvalidInput);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(Foundations, ResidueOfTheTetrahedron) {
  Foundation F = fnd_load(data("bad-tetrahedron.json"));
  Foundation R = fnd_residue(F, {0, 1, 2});
  EXPECT_EQ(R.D.size(), 3);
  EXPECT_EQ(R.D.m.size(), 3u);
  EXPECT_EQ(R.glue.size(), 6u);
  Foundation A = fnd_residue(F, {3, 2, 1, 0});
  EXPECT_EQ(A.D.vertices, F.D.vertices);
  EXPECT_EQ(A.glue.size(), F.glue.size());
  EXPECT_THROW(fnd_residue(F, {2}), MathError);
}

TEST(Foundations, ResidueOfAPathEdge) {
  json j = {{"scalars", {{"algebra", "Qi"}}}, {"vertices", {"1", "2", "3"}}, {"edges", {edge("1", "2"), edge("2", "3")}}};
  Foundation R = fnd_residue(fnd_from_json(j), {0, 1});
  EXPECT_EQ(R.D.m.size(), 1u);
  EXPECT_TRUE(R.glue.empty());
}

TEST(Foundations, IdentityReparametrizationChangesNothing) {
  Foundation F = fnd_load(data("p3-plus-quaternion.json"));
  EdgeMaps alpha;
  for (const auto& [e, m] : F.D.m) alpha[e] = gm_identity();
  Foundation G = fnd_reparametrize(F, alpha);
  for (const auto& [t, g] : F.glue) EXPECT_EQ(G.glue.at(t).key(), g.key());
}

TEST(Foundations, ReparametrizationNeedsUnits) {
  json pairs = {{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}, {{0, 1}, {1, 1}}, {{1, 1}, {0, 1}}};
  GAtom shift;
  shift.kind = GAtom::Table;
  CDAlgebra F4 = builtin_algebra("F4");
  for (const auto& p : pairs) {
    CDElt a(F4, {Scalar::from_int(F4->K, p[0][0].get<int>()), Scalar::from_int(F4->K, p[0][1].get<int>())});
    CDElt b(F4, {Scalar::from_int(F4->K, p[1][0].get<int>()), Scalar::from_int(F4->K, p[1][1].get<int>())});
    shift.table.push_back({a, b});
  }
  Foundation F = fnd_from_json(tri("F4", json::array()));
  try {
    fnd_reparametrize(F, {{{0, 1}, gm_atom(shift)}});
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.kind(), Err::UnitIncompatible);
  }
}

TEST(Foundations, CanonicalPathTakesOnePush) {
  json j = {{"scalars", {{"algebra", "Qi"}}},
            {"vertices", {"1", "2", "3"}},
            {"edges", {edge("1", "2"), edge("2", "3")}},
            {"glueings", json::array({glue("1", "2", "3", json::array({conj_qi()}))})}};
  Canonical c = fnd_canonicalize_tree(fnd_from_json(j));
  EXPECT_EQ(c.pushes, 1);
  EXPECT_TRUE(all_identity(c.F));
}

TEST(Foundations, CanonicalFoundationIsAFixedPoint) {
  json j = {{"scalars", {{"algebra", "quaternion-Q"}}}, {"vertices", {"1", "2", "3"}}, {"edges", {edge("1", "2"), edge("2", "3")}}};
  Canonical c = fnd_canonicalize_tree(fnd_from_json(j));
  EXPECT_EQ(c.pushes, 0);
  EXPECT_TRUE(all_identity(c.F));
}

TEST(Foundations, CanonicalStarOverAField) {
  // the third glueing at the centre is the composite of the other two
  json j = {{"scalars", {{"algebra", "Qi"}}},
            {"vertices", {"a", "c", "b", "d"}},
            {"edges", {edge("c", "a"), edge("c", "b"), edge("c", "d")}},
            {"glueings",
             {glue("a", "c", "b", json::array({conj_qi()})), glue("a", "c", "d", json::array({conj_qi()})),
              glue("b", "c", "d", json::array({"id"}))}}};
  Foundation F = fnd_from_json(j);
  expect_pass(fnd_check(F, 20, 1));
  Canonical c = fnd_canonicalize_tree(F);
  EXPECT_EQ(c.pushes, 2);
  EXPECT_TRUE(all_identity(c.F));
}

TEST(Foundations, CanonicalizeRejectsCycles) {
  try {
    fnd_canonicalize_tree(fnd_load(data("a2-tilde-octonion.json")));
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.kind(), Err::NotTree);
  }
}

TEST(Foundations, RelabelingCoverIsIsomorphic) {
  Foundation F = fnd_from_json(tri("Qi", json::array({glue("1", "2", "3", json::array({conj_qi()}))})));
  GraphCover c{{"x", "y", "z"}, {1, 2, 0}, {{0, 1}, {1, 2}, {2, 0}}};
  Foundation C = fnd_cover(F, c);
  for (const auto& [t, g] : C.glue)
    EXPECT_EQ(g.key(), F.glueing(c.image[t[0]], c.image[t[1]], c.image[t[2]]).key());
}

TEST(Foundations, HexagonCoverRepeatsWithPeriodThree) {
  Foundation F = fnd_from_json(tri("Qi", json::array({glue("1", "2", "3", json::array({conj_qi()}))})));
  GraphCover c;
  for (int k = 0; k < 6; ++k) {
    c.vertices.push_back("v" + std::to_string(k));
    c.image.push_back(k % 3);
    c.edges.push_back({k, (k + 1) % 6});
  }
  Foundation C = fnd_cover(F, c);
  EXPECT_EQ(C.D.size(), 6);
  for (int k = 0; k < 6; ++k) {
    int a = k, b = (k + 1) % 6, d = (k + 2) % 6;
    EXPECT_EQ(C.glueing(a, b, d).key(), C.glueing((a + 3) % 6, (b + 3) % 6, (d + 3) % 6).key());
  }
  EXPECT_FALSE(C.glueing(0, 1, 2).is_identity());
  expect_pass(fnd_check(C, 20, 1));
}

TEST(Foundations, CoverMustBeLocallyBijective) {
  Foundation F = fnd_from_json(tri("Qi", json::array()));
  GraphCover c{{"x", "y"}, {0, 1}, {{0, 1}}};
  try {
    fnd_cover(F, c);
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.kind(), Err::NotACover);
  }
}

TEST(Foundations, UniversalCoverOfTheCircle) {
  Foundation F = fnd_load(data("circle5-field.json"));
  Foundation U = fnd_universal_cover(F, 0, 4);
  EXPECT_EQ(U.D.size(), 9);
  EXPECT_EQ(U.D.m.size(), 8u);
  EXPECT_TRUE(U.D.is_tree());
  for (int v = 0; v < U.D.size(); ++v) EXPECT_LE(U.D.neighbors(v).size(), 2u);
  expect_pass(fnd_check(U, 10, 1));
}

TEST(Foundations, PositiveAnalysisOfP3Plus) {
  PositiveAnalysis pa = fnd_positive_analysis(fnd_load(data("p3-plus-quaternion.json")));
  ASSERT_EQ(pa.M.size(), 1u);
  EXPECT_EQ(pa.M[0], (std::vector<int>{0, 1, 2}));
  for (bool c : pa.conditions) EXPECT_TRUE(c);
}

TEST(Foundations, PositiveTrianglesSharingAVertex) {
  json sig = json::array({"standard-involution"});
  json j = {{"scalars", {{"algebra", "quaternion-Q"}}},
            {"vertices", {"1", "2", "3", "4", "5"}},
            {"edges", {edge("1", "2"), edge("2", "3"), edge("3", "1"), edge("3", "4"), edge("4", "5"), edge("5", "3")}},
            {"glueings",
             {glue("1", "2", "3", sig), glue("2", "3", "1", sig), glue("3", "1", "2", sig), glue("3", "4", "5", sig),
              glue("4", "5", "3", sig), glue("5", "3", "4", sig), glue("2", "3", "4", json::array({"id"})), glue("1", "3", "4", sig),
              glue("2", "3", "5", sig), glue("1", "3", "5", json::array({"id"}))}}};
  Foundation F = fnd_from_json(j);
  expect_pass(fnd_check(F, 20, 1));
  PositiveAnalysis pa = fnd_positive_analysis(F);
  EXPECT_EQ(pa.M.size(), 2u);
  EXPECT_EQ(pa.gp_edges.size(), 1u);
  EXPECT_TRUE(pa.tree);
  for (bool c : pa.conditions) EXPECT_TRUE(c);
  EXPECT_EQ(fnd_classify(F).kind, Verdict::MatchesCase);
}

TEST(Foundations, PositiveTrianglesSharingAnEdge) {
  json sig = json::array({"standard-involution"});
  json j = {{"scalars", {{"algebra", "quaternion-Q"}}},
            {"vertices", {"1", "2", "3", "4"}},
            {"edges", {edge("1", "2"), edge("2", "3"), edge("3", "1"), edge("3", "4"), edge("4", "2")}},
            {"glueings",
             {glue("1", "2", "3", sig), glue("2", "3", "1", sig), glue("3", "1", "2", sig), glue("2", "3", "4", sig),
              glue("3", "4", "2", sig), glue("4", "2", "3", sig), glue("1", "2", "4", sig), glue("1", "3", "4", sig)}}};
  PositiveAnalysis pa = fnd_positive_analysis(fnd_from_json(j));
  EXPECT_EQ(pa.M.size(), 2u);
  EXPECT_FALSE(pa.conditions[2]);
}

TEST(Foundations, OctonionTetrahedronIsNotIntegrable) {
  Verdict v = fnd_classify(fnd_load(data("bad-tetrahedron.json")));
  EXPECT_EQ(v.kind, Verdict::NotIntegrable);
  EXPECT_EQ(v.cite, cite::kTetrahedron);
}

TEST(Foundations, TildeA2OverOctonionsMatches) {
  Verdict v = fnd_classify(fnd_load(data("a2-tilde-octonion.json")));
  EXPECT_EQ(v.kind, Verdict::MatchesCase);
  EXPECT_EQ(v.label, "octonion: affine A2(O)");
}

TEST(Foundations, ExceptionalGlueingOverOctonionsFails) {
  json j = tri("octonion-Q", json::array({glue("1", "2", "3", json::array({{{"kind", "psi"}, {"w", {1, 1, 0, 0, 0, 0, 0, 0}}}}))}));
  Verdict v = fnd_classify(fnd_from_json(j));
  EXPECT_EQ(v.kind, Verdict::NotIntegrable);
  EXPECT_EQ(v.cite, cite::kOctonionFoundations);
}

TEST(Foundations, D4StarOverQuaternions) {
  Foundation F = fnd_load(data("d4-star-quaternion.json"));
  Verdict v = fnd_classify(F);
  EXPECT_EQ(v.kind, Verdict::NotIntegrable);
  EXPECT_EQ(v.cite, cite::kD4);
  const Check* parity = v.evidence.find("positive glueings at a branch number 1 or 3");
  ASSERT_NE(parity, nullptr);
  EXPECT_FALSE(parity->pass);
  EXPECT_EQ(parity->cite, cite::kParity);
  // three negative glueings at a vertex also break the cocycle
  EXPECT_FALSE(fnd_check(F, 20, 1).pass());
}

TEST(Foundations, FieldCircle) {
  Verdict v = fnd_classify(fnd_load(data("circle5-field.json")));
  EXPECT_EQ(v.kind, Verdict::MatchesCase);
  EXPECT_EQ(v.label, "field: no further restrictions");
  EXPECT_EQ(v.cite, cite::kSimplyLaced);
}

TEST(Foundations, ClassifyRejectsMixedRings) {
  json j = tri("Qi", json::array());
  j["edges"][2]["params"] = {{"algebra", "quaternion-Q"}};
  EXPECT_EQ(fnd_classify(fnd_from_json(j)).kind, Verdict::Inconclusive);
}

TEST(Foundations, Involutory443Pattern) {
  Foundation F = fnd_load(data("443-involutory.json"));
  expect_pass(fnd_check(F, 20, 1));
  Verdict v = fnd_check_443(F);
  EXPECT_EQ(v.kind, Verdict::MatchesCase);
  EXPECT_EQ(v.label, "(iii)");
}

TEST(Foundations, Involutory443WrongGlueings) {
  Foundation F = fnd_load(data("443-involutory.json"));
  for (auto& [t, g] : F.glue) g = gm_identity();
  EXPECT_NE(fnd_check_443(F).kind, Verdict::MatchesCase);
}

TEST(Foundations, TagsAreRejected) {
  std::pair<const char*, const char*> cases[] = {
      {"443-qd-tag.json", cite::kIndifferentType}, {"443-qe-tag.json", cite::kEn}, {"443-qf-tag.json", cite::kF4Type}};
  for (auto [file, c] : cases) {
    Verdict v = fnd_classify(fnd_load(data(file)));
    EXPECT_EQ(v.kind, Verdict::NotIntegrable) << file;
    EXPECT_EQ(v.cite, c) << file;
  }
}

TEST(Foundations, UnequalQuadraticSpaces) {
  Verdict v = fnd_check_443(fnd_load(data("443-quadratic-unequal.json")));
  EXPECT_EQ(v.kind, Verdict::NotIntegrable);
  EXPECT_EQ(v.cite, cite::kSameSpace);
}

TEST(Foundations, Not443Shape) {
  try {
    fnd_check_443(fnd_load(data("a2-tilde-octonion.json")));
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.kind(), Err::NotA443Shape);
  }
}

TEST(Foundations, DotOfTildeA2) {
  const char* expected =
      "digraph \"A2~(O)\" {\n"
      "  node [shape=circle];\n"
      "  \"1\";\n"
      "  \"2\";\n"
      "  \"3\";\n"
      "  \"1\" -> \"2\" [label=\"T(octonion-Q)\"];\n"
      "  \"2\" -> \"3\" [label=\"T(octonion-Q)\"];\n"
      "  \"3\" -> \"1\" [label=\"T(octonion-Q)\"];\n"
      "  \"1\" -> \"3\" [style=dashed, constraint=false, label=\"γ(1,2,3) = id\"];\n"
      "  \"2\" -> \"1\" [style=dashed, constraint=false, label=\"γ(2,3,1) = id\"];\n"
      "  \"3\" -> \"2\" [style=dashed, constraint=false, label=\"γ(3,1,2) = id\"];\n"
      "}\n";
  EXPECT_EQ(fnd_to_dot(fnd_load(data("a2-tilde-octonion.json"))), expected);
}

TEST(Foundations, DotOfASingleEdge) {
  std::string d = fnd_to_dot(fnd_load(data("single-edge.json")));
  EXPECT_EQ(d,
            "digraph \"single edge\" {\n  node [shape=circle];\n  \"1\";\n  \"2\";\n"
            "  \"1\" -> \"2\" [label=\"T(Qi)\"];\n}\n");
}

TEST(Foundations, DotOfThe443Instance) {
  std::string d = fnd_to_dot(fnd_load(data("443-involutory.json")));
  EXPECT_NE(d.find("Q_I°"), std::string::npos) << d;
  EXPECT_NE(d.find("label=\"T(quaternion-Q)\""), std::string::npos) << d;
  EXPECT_NE(d.find("γ(1,2,3) = id°"), std::string::npos) << d;
}
