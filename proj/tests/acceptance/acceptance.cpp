#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "mforge/cd.hpp"
#include "mforge/cite.hpp"
#include "mforge/error.hpp"
#include "mforge/foundations.hpp"
#include "mforge/moufang.hpp"
#include "mforge/octonion_aut.hpp"
#include "mforge/polygons.hpp"
#include "mforge/pseudoquad.hpp"
#include "mforge/quadspace.hpp"

using namespace mforge;

namespace {

// collects the first failure of a criterion
struct Outcome {
  bool ok = true;
  std::string why;
  void need(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
  void need(const Report& r) {
    for (const auto& c : r.checks)
      if (!c.pass) return need(false, r.suite + ": " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
  }
};

std::string data(const std::string& name) { return std::string(MFORGE_DATA_DIR) + "/foundations/" + name; }

CDAlgebra O() { return builtin_algebra("octonion-Q"); }

void identity_suite(Outcome& o) {
  for (const auto& s : identity_suites()) {
    Report r = verify_identities(O(), s, 1000, 1);
    o.need(r.samples >= 1000, s + " ran on fewer than 1000 samples");
    o.need(r);
  }
}

void negative_control(Outcome& o) {
  Report r = verify_identities(builtin_algebra("sedenion-Q"), "alternative", 200, 1);
  const Check* bad = nullptr;
  for (const auto& c : r.checks)
    if (!c.pass && !c.detail.empty()) bad = &c;
  o.need(bad != nullptr, "no alternativity counterexample over the sedenions");
}

void f4_census_criterion(Outcome& o) {
  F4Census c = f4_census();
  o.need(c.report);
  o.need(c.order == 8, "|T| = " + std::to_string(c.order));
  o.need(c.q8_iso.size() == 8, "no isomorphism to Q8");
  o.need(c.automorphisms == 24, "Jordan automorphisms: " + std::to_string(c.automorphisms));
  o.need(c.outer_quotient == 6, "outer quotient of order " + std::to_string(c.outer_quotient));
  o.need(c.report.find("every Hua map is the identity") != nullptr, "Hua maps not examined");
  o.need(c.report.find("the three twists are the three non-trivial inner automorphisms") != nullptr,
         "inner twists not examined");
}

void finite_polygons(Outcome& o) {
  Polygon Q = poly_quadratic(norm_space(builtin_algebra("F4")));
  Polygon P = poly_pseudo(xi_f4());
  o.need(rgs_enumerate(Q).size() == 64, "Q_Q word group size");
  o.need(rgs_enumerate(P).size() == 1024, "Q_P word group size");
  for (const Polygon& X : {Q, P}) {
    o.need(rgs_verify(X, 0, 1));
    o.need(rgs_hua_consistency(X, 0, 1));
  }
}

void triangle_hua(Outcome& o) {
  Rng rng(5);
  long bad = 0;
  for (long k = 0; k < 10000; ++k) {
    CDElt s = random_invertible(O(), rng, 6), t = random_elt(O(), rng, 6), u = random_elt(O(), rng, 6);
    if ((s * t * s) * (s.inv() * u) != s * (t * u)) ++bad;
  }
  o.need(bad == 0, std::to_string(bad) + " samples violate (sts)(s^-1 u) = s(tu)");
  o.need(rgs_hua_consistency(poly_triangle(O()), 200, 5));
}

void norm_splitting_criterion(Outcome& o) {
  Subspace E = span(O(), {CDElt::one(O()), CDElt::basis(O(), 1)});
  NormSplitting ns = norm_splitting(O(), E);
  o.need(E.contains(ns.z), "z lies outside E");
  Scalar prod = ns.s[0] * ns.s[1] * ns.s[2] * ns.s[3];
  o.need(prod == ns.product && ns.z.norm() == prod, "s1 s2 s3 s4 is not N(z)");
  o.need(norm_splitting_check(O(), E, 1000, 6));
}

Subspace H0() { return span(O(), {CDElt::one(O()), CDElt::basis(O(), 1), CDElt::basis(O(), 2), CDElt::basis(O(), 3)}); }

void gamma_machinery(Outcome& o) {
  CDElt e4 = CDElt::basis(O(), 4);
  o.need(psi_product_rule_check(jm_psi(H0(), e4, CDElt::basis(O(), 1) + CDElt::basis(O(), 3)), 300, 7));
  Rng rng(7);
  for (int k = 0; k < 10; ++k) {
    CDElt w = random_invertible(O(), rng, 5);
    if (w.is_zero()) continue;
    o.need(gamma_w_decompose(w, 1000, 100 + k).report);
  }
  for (int k = 0; k < 10; ++k) {
    JordanMap chain = jm_identity(O());
    for (int n = 0; n < 3; ++n) {
      if (draw_below(rng, 2)) {
        CDElt h = CDElt::one(O());
        for (int b = 1; b <= 3; ++b) h += CDElt::basis(O(), b) * Scalar::from_int(rationals(), draw_range(rng, -3, 3));
        chain = jm_compose(jm_psi(H0(), e4, h), chain);
      } else {
        chain = jm_compose(jm_conj(random_invertible(O(), rng, 4)), chain);
      }
    }
    o.need(sigma_s_central_check(chain, 60, 200 + k));
  }
  JautResult r = jaut_verify(jm_psi(H0(), e4, CDElt::basis(O(), 1)), 100, 2, 2000);
  o.need(r.auto_witness && r.anti_witness, "psi is not witnessed as neither auto nor anti");
}

void dim_switch(Outcome& o) {
  PQSpace s = xi_hamilton();
  DimSwitch up = dim_switch_up(s, pq_basis(s, 0), CDElt::basis(s->K(), 2), 1000, 8);
  o.need(up.report);
  o.need(up.report.find("new space satisfies the pseudo-quadratic axioms") != nullptr, "axioms of the new space not checked");
  o.need(dim_switch_round_trip(s, 1000, 8));
}

Verdict classify(const std::string& file) { return fnd_classify(fnd_load(data(file)), 100, 1); }

void foundation_suite(Outcome& o) {
  o.need(fnd_check(fnd_load(data("a2-tilde-octonion.json")), 50, 1));
  o.need(fnd_check(fnd_load(data("p3-plus-quaternion.json")), 50, 1));
  Verdict t = classify("bad-tetrahedron.json");
  o.need(t.kind == Verdict::NotIntegrable && t.cite == cite::kTetrahedron, "tetrahedron: " + t.str());
  Verdict d = classify("d4-star-quaternion.json");
  const Check* parity = d.evidence.find("positive glueings at a branch number 1 or 3");
  o.need(d.kind == Verdict::NotIntegrable && d.cite == cite::kD4, "D4 star: " + d.str());
  o.need(parity && parity->cite == cite::kParity, "D4 star evidence lacks the parity count");
  Verdict c = classify("circle5-field.json");
  o.need(c.kind == Verdict::MatchesCase && c.label.rfind("field", 0) == 0, "circle: " + c.str());
  std::pair<const char*, const char*> tags[] = {
      {"443-qd-tag.json", cite::kIndifferentType}, {"443-qe-tag.json", cite::kEn}, {"443-qf-tag.json", cite::kF4Type}};
  for (auto [file, cite] : tags) {
    Verdict v = classify(file);
    o.need(v.kind == Verdict::NotIntegrable && v.cite == cite, std::string(file) + ": " + v.str());
  }
  Verdict i = classify("443-involutory.json");
  o.need(i.kind == Verdict::MatchesCase && i.label == "(iii)", "443 involutory: " + i.str());
}

void coincidences(Outcome& o) {
  CDAlgebra F4 = builtin_algebra("F4");
  o.need(ms_coincide(ms_quadratic(norm_space(F4)), ms_linear(F4), 0, 1));
  Field Q = rationals();
  auto q = [&](long n) { return Scalar::from_int(Q, n); };
  QuadSpace s = make_quadspace(Q, {q(1), q(3)}, {{q(0), q(1)}, {}}, {q(1), q(0)});
  SmallDimField fd = qs_small_dim_field(s);
  MSet Mq = ms_quadratic(s), Ml = ms_linear(fd.F);
  MMap g = [&](const MElt& x) { return MElt{Ml, fd.embed(x.vec())}; };
  o.need(ms_coincide(Mq, Ml, 300, 7, g));
}

void determinism(Outcome& o) {
  std::vector<std::function<std::string()>> runs = {
      [] { return verify_identities(O(), "moufang", 300, 11).to_json().dump(); },
      [] { return f4_census().report.to_json().dump(); },
      [] { return rgs_hua_consistency(poly_triangle(O()), 50, 12).to_json().dump(); },
      [] { return fnd_check(fnd_load(data("p3-plus-quaternion.json")), 30, 13).to_json().dump(); },
      [] { return fnd_classify(fnd_load(data("d4-star-quaternion.json")), 50, 14).to_json().dump(); },
      [] { return dim_switch_round_trip(xi_hamilton(), 30, 15).to_json().dump(); },
  };
  for (size_t k = 0; k < runs.size(); ++k) o.need(runs[k]() == runs[k](), "run " + std::to_string(k) + " differs");
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  void (*run)(Outcome&);
};

}  // namespace

int main() {
  const Criterion all[] = {
      {1, "octonion identity suite", 30, identity_suite},
      {2, "dim-16 tower fails alternativity", 10, negative_control},
      {3, "F4 census", 5, f4_census_criterion},
      {4, "finite polygon exhaustives", 60, finite_polygons},
      {5, "Hua consistency on T(octonion-Q)", 20, triangle_hua},
      {6, "norm splitting over octonion-Q", 5, norm_splitting_criterion},
      {7, "Gamma machinery", 60, gamma_machinery},
      {8, "dim-switch round trip", 30, dim_switch},
      {9, "foundation suite", 30, foundation_suite},
      {10, "Moufang-set coincidences", 5, coincidences},
      {11, "determinism", 60, determinism},
  };
  int failed = 0;
  for (const auto& c : all) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.need(false, std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char limit[64];
    std::snprintf(limit, sizeof limit, "%.2fs over the %.0fs budget", s, c.limit_s);
    o.need(s < c.limit_s, limit);
    std::printf("[%s] %2d %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, s, o.ok ? "" : ": ", o.why.c_str());
    if (!o.ok) ++failed;
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(std::size(all)) - failed, std::size(all));
  return failed == 0 ? 0 : 1;
}
