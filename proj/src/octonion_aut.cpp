#include "mforge/octonion_aut.hpp"

#include "mforge/cite.hpp"

namespace mforge {

namespace {

struct Acc {
  bool ok = true;
  std::string detail;
  void fail(const std::string& d) {
    if (ok) detail = d;
    ok = false;
  }
};

void check_frame(const Subspace& H, const CDElt& e, const CDElt& w) {
  if (H.dim() != 4 || !is_subalgebra(H)) throw MathError(Err::InvalidInput, "H must be a quaternion subalgebra");
  if (!orthogonal_complement(H).contains(e) || H.contains(e) || e.norm().is_zero())
    throw MathError(Err::BadOrthogonalUnit, "e must lie in H-perp minus H with N(e) != 0");
  if (!H.contains(w) || w.norm().is_zero()) throw MathError(Err::InvalidInput, "w must be an invertible element of H");
}

JordanMap single(const CDAlgebra& O, JAtom a) { return JordanMap{O, {std::move(a)}}; }

CDElt apply_atom(const JAtom& a, const CDElt& x) {
  switch (a.kind) {
    case JAtom::StandardInvolution: return x.conj();
    case JAtom::Conj: return (a.w.inv() * x) * a.w;
    case JAtom::Linear: return CDElt(x.alg(), mat_vec(a.m, x.coords()));
    case JAtom::Psi:
    case JAtom::Phi: {
      DoublingCoords dc = doubling_coordinates(x, a.H, a.e);
      CDElt wi = a.w.inv();
      CDElt y = (wi * dc.y) * a.w;
      if (a.kind == JAtom::Psi) return dc.h + a.e * y;
      return (wi * dc.h) * a.w + a.e * (y * a.p);
    }
  }
  return x;
}

}  // namespace

std::string JAtom::str() const {
  switch (kind) {
    case StandardInvolution: return "sigma_s";
    case Psi: return "psi(e = " + e.str() + ", w = " + w.str() + ")";
    case Phi: return "phi(e = " + e.str() + ", w = " + w.str() + ", p = " + p.str() + ")";
    case Conj: return "gamma(" + w.str() + ")";
    case Linear: return "linear";
  }
  return "?";
}

std::string JordanMap::str() const {
  if (atoms.empty()) return "id";
  std::string s;
  for (size_t i = 0; i < atoms.size(); ++i) s += (i ? " o " : "") + atoms[i].str();
  return s;
}

JordanMap jm_identity(const CDAlgebra& O) { return JordanMap{O, {}}; }

JordanMap jm_sigma(const CDAlgebra& O) {
  JAtom a;
  a.kind = JAtom::StandardInvolution;
  return single(O, a);
}

JordanMap jm_psi(const Subspace& H, const CDElt& e, const CDElt& w) {
  check_frame(H, e, w);
  JAtom a;
  a.kind = JAtom::Psi;
  a.H = H;
  a.e = e;
  a.w = w;
  return single(H.alg, a);
}

JordanMap jm_phi(const Subspace& H, const CDElt& e, const CDElt& w, const CDElt& p) {
  check_frame(H, e, w);
  if (!H.contains(p) || p.norm() != Scalar::one(p.alg()->K))
    throw MathError(Err::InvalidInput, "p must lie in H with N(p) = 1");
  JAtom a;
  a.kind = JAtom::Phi;
  a.H = H;
  a.e = e;
  a.w = w;
  a.p = p;
  return single(H.alg, a);
}

JordanMap jm_conj(const CDElt& w) {
  if (w.norm().is_zero()) throw MathError(Err::NotInvertible, "w must be invertible");
  JAtom a;
  a.kind = JAtom::Conj;
  a.w = w;
  return single(w.alg(), a);
}

JordanMap jm_linear(const CDAlgebra& O, const Mat& m) {
  if (m.size() != static_cast<size_t>(O->dim)) throw MathError(Err::InvalidInput, "matrix size");
  JAtom a;
  a.kind = JAtom::Linear;
  a.m = m;
  return single(O, a);
}

JordanMap jm_compose(const JordanMap& outer, const JordanMap& inner) {
  if (outer.O != inner.O) throw MathError(Err::AlgebraMismatch, "maps on different algebras");
  JordanMap j = outer;
  j.atoms.insert(j.atoms.end(), inner.atoms.begin(), inner.atoms.end());
  return j;
}

CDElt jaut_apply(const JordanMap& j, const CDElt& x) {
  if (x.alg() != j.O) throw MathError(Err::AlgebraMismatch, "element of a different algebra");
  CDElt y = x;
  for (auto it = j.atoms.rbegin(); it != j.atoms.rend(); ++it) y = apply_atom(*it, y);
  return y;
}

Subspace quaternion_containing(const CDElt& w) {
  const CDAlgebra& O = w.alg();
  if (O->dim < 4) throw MathError(Err::InvalidInput, "algebra too small for a quaternion subalgebra");
  Subspace E = subalgebra_generated(O, {w.is_scalar() ? CDElt::basis(O, 1) : w});
  for (const auto& u : orthogonal_complement(E).basis()) {
    if (u.norm().is_zero() || E.contains(u)) continue;
    Subspace H = subalgebra_generated(O, {E.basis().back(), u});
    if (H.dim() == 4) return H;
  }
  throw MathError(Err::InvalidInput, "no quaternion subalgebra found around " + w.str());
}

CDElt perp_unit(const Subspace& H) {
  for (const auto& u : orthogonal_complement(H).basis())
    if (!u.norm().is_zero() && !H.contains(u)) return u;
  throw MathError(Err::BadOrthogonalUnit, "no anisotropic vector in the orthogonal complement");
}

JautResult jaut_verify(const JordanMap& j, long samples, uint64_t seed, long budget) {
  JautResult out;
  Report& r = out.report;
  r.suite = "jordan-map/" + j.str();
  r.cite = cite::kPsiPhi;
  r.samples = samples;
  r.seed = seed;
  const CDAlgebra& O = j.O;
  Rng rng(seed);
  CDElt one = CDElt::one(O);
  bool unit = jaut_apply(j, one) == one;
  Acc jord, iso;
  for (long n = 0; n < samples; ++n) {
    CDElt x = random_elt(O, rng, 6), y = random_elt(O, rng, 6);
    CDElt gx = jaut_apply(j, x), gy = jaut_apply(j, y);
    if (jaut_apply(j, (x * y) * x) != (gx * gy) * gx) jord.fail("x = " + x.str() + ", y = " + y.str());
    if (gx.norm() != x.norm()) iso.fail("x = " + x.str());
  }
  out.jordan = unit && jord.ok;
  out.norm_isometry = iso.ok;
  r.add("g(1) = 1", cite::kPsiPhi, 1, unit);
  r.add("g(xyx) = g(x) g(y) g(x)", cite::kPsiPhi, samples, jord.ok, jord.detail);
  r.add("N(g(x)) = N(x)", cite::kNormIsometry, samples, iso.ok, iso.detail);
  std::string aw, nw;
  for (long n = 0; n < budget && !(out.auto_witness && out.anti_witness); ++n) {
    CDElt s = random_elt(O, rng, 4), t = random_elt(O, rng, 4);
    CDElt gst = jaut_apply(j, s * t), gs = jaut_apply(j, s), gt = jaut_apply(j, t);
    if (!out.auto_witness && gst != gs * gt) {
      out.auto_witness = true;
      aw = "s = " + s.str() + ", t = " + t.str();
    }
    if (!out.anti_witness && gst != gt * gs) {
      out.anti_witness = true;
      nw = "s = " + s.str() + ", t = " + t.str();
    }
  }
  r.notes.push_back("not an automorphism: " + (out.auto_witness ? "witness " + aw : "no witness within budget"));
  r.notes.push_back("not an anti-automorphism: " +
                    (out.anti_witness ? "witness " + nw : "no witness within budget"));
  return out;
}

Report psi_product_rule_check(const JordanMap& psi, long samples, uint64_t seed) {
  if (psi.atoms.size() != 1 || psi.atoms[0].kind != JAtom::Psi)
    throw MathError(Err::InvalidInput, "expected a single psi atom");
  const JAtom& a = psi.atoms[0];
  const CDAlgebra& O = psi.O;
  CDElt w = a.w, wi = a.w.inv();
  auto rule = [&](const CDElt& s, const CDElt& t) {
    return jaut_apply(psi, s * t) == (jaut_apply(psi, s) * (jaut_apply(psi, t) * w)) * wi;
  };
  Report r;
  r.suite = "psi-product-rule";
  r.cite = cite::kPsiProduct;
  r.samples = samples;
  r.seed = seed;
  Rng rng(seed);
  Acc unit_s, in_h, all;
  auto hb = a.H.basis();
  for (long n = 0; n < samples; ++n) {
    CDElt s = random_elt(O, rng, 6), t = random_elt(O, rng, 6);
    if (!rule(CDElt::one(O), t)) unit_s.fail("t = " + t.str());
    CDElt hs = CDElt::zero(O), ht = CDElt::zero(O);
    for (const auto& b : hb) {
      hs += b * random_scalar(O->K, rng, 6);
      ht += b * random_scalar(O->K, rng, 6);
    }
    if (!rule(hs, ht) || jaut_apply(psi, hs * ht) != hs * ht) in_h.fail("s = " + hs.str() + ", t = " + ht.str());
    if (!rule(s, t)) all.fail("s = " + s.str() + ", t = " + t.str());
  }
  r.add("s = 1", cite::kPsiProduct, samples, unit_s.ok, unit_s.detail);
  r.add("s, t in H: both sides st", cite::kPsiProduct, samples, in_h.ok, in_h.detail);
  r.add("psi(st) = (psi(s) . psi(t) w) w^-1", cite::kPsiProduct, samples, all.ok, all.detail);
  return r;
}

GammaDecomp gamma_w_decompose(const CDElt& w, long samples, uint64_t seed) {
  const CDAlgebra& O = w.alg();
  if (O->dim != 8) throw MathError(Err::InvalidInput, "gamma_w decomposition needs an octonion algebra");
  if (w.norm().is_zero()) throw MathError(Err::NotInvertible, "w must be invertible");
  GammaDecomp out;
  out.H = quaternion_containing(w);
  out.e = perp_unit(out.H);
  CDElt wb = w.conj();
  CDElt p = wb.inv() * w;
  CDElt wpsi = (w.inv() * w.inv()) * wb;
  out.phi = jm_phi(out.H, out.e, w, p);
  out.psi = jm_psi(out.H, out.e, wpsi);
  JordanMap comp = jm_compose(out.phi, out.psi);
  JordanMap gw = jm_conj(w);
  Report& r = out.report;
  r.suite = "gamma-w/" + w.str();
  r.cite = cite::kGammaW;
  r.samples = samples;
  r.seed = seed;
  r.add("H is a quaternion subalgebra containing w", cite::kGammaW, 1, out.H.contains(w) && is_subalgebra(out.H));
  r.add("N(conj(w)^-1 w) = 1", cite::kGammaW, 1, p.norm() == Scalar::one(O->K));
  Rng rng(seed);
  Acc eq;
  for (long n = 0; n < samples; ++n) {
    CDElt x = random_elt(O, rng, 6);
    if (jaut_apply(comp, x) != jaut_apply(gw, x)) eq.fail("x = " + x.str());
  }
  r.add("phi o psi = gamma_w", cite::kGammaW, samples, eq.ok, eq.detail);
  return out;
}

Report sigma_s_central_check(const JordanMap& j, long samples, uint64_t seed) {
  Report r;
  r.suite = "sigma-central/" + j.str();
  r.cite = cite::kSigmaCentral;
  r.samples = samples;
  r.seed = seed;
  Rng rng(seed);
  Acc ok;
  for (long n = 0; n < samples; ++n) {
    CDElt x = random_elt(j.O, rng, 6);
    if (jaut_apply(j, x.conj()) != jaut_apply(j, x).conj()) ok.fail("x = " + x.str());
  }
  r.add("sigma_s o g = g o sigma_s", cite::kSigmaCentral, samples, ok.ok, ok.detail);
  return r;
}

SpecialPair special_pair_check(const CDElt& e1, const CDElt& e2) {
  SpecialPair out;
  out.lambda = e1.norm();
  out.mu = e2.norm();
  if (out.lambda.is_zero() || out.mu.is_zero()) throw MathError(Err::ZeroArgument, "N(e1) and N(e2) must be nonzero");
  const CDAlgebra& O = e1.alg();
  const Field& K = O->K;
  CDElt one = CDElt::one(O);
  Report& r = out.report;
  r.suite = "special-pair";
  r.cite = cite::kSpecialPair;
  r.samples = 1;
  bool char2 = characteristic(K) == 2;
  Scalar g11 = bilinear(e1, one), g21 = bilinear(e2, one), g12 = bilinear(e1, e2);
  Scalar want = char2 ? Scalar::one(K) : Scalar::zero(K);
  r.add(std::string("<e1, 1> = ") + (char2 ? "1" : "0"), cite::kSpecialPair, 1, g11 == want, g11.str());
  r.add("<e2, 1> = 0", cite::kSpecialPair, 1, g21.is_zero(), g21.str());
  r.add("<e1, e2> = 0", cite::kSpecialPair, 1, g12.is_zero(), g12.str());
  out.is_special = g11 == want && g21.is_zero() && g12.is_zero();
  r.notes.push_back(std::string(out.is_special ? "special" : "not special") + " (" + out.lambda.str() + ", " +
                    out.mu.str() + ")-pair");
  if (out.is_special) {
    Subspace E = span(O, {one, e1});
    r.add("conj(e1) != e1", cite::kSpecialPairLemma, 1, e1.conj() != e1);
    r.add("e2 in E-perp minus E", cite::kSpecialPairLemma, 1,
          orthogonal_complement(E).contains(e2) && !E.contains(e2));
  }
  return out;
}

}  // namespace mforge
