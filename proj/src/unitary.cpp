#include "mforge/unitary.hpp"

#include "mforge/cite.hpp"

namespace mforge {

const char* sigma_name(SigmaKind s) {
  switch (s) {
    case SigmaKind::Identity: return "identity";
    case SigmaKind::Standard: return "standard";
    case SigmaKind::Galois: return "galois";
  }
  return "?";
}

SigmaKind parse_sigma(const std::string& s) {
  if (s == "identity" || s == "id") return SigmaKind::Identity;
  if (s == "standard" || s == "standard_involution" || s == "sigma_s") return SigmaKind::Standard;
  if (s == "galois") return SigmaKind::Galois;
  throw MathError(Err::InvalidInput, "unknown involution '" + s + "'");
}

CDElt InvolutorySet::apply(const CDElt& x) const { return sigma == SigmaKind::Identity ? x : x.conj(); }

InvolutorySet make_involutory(const CDAlgebra& K, SigmaKind sigma, const std::vector<CDElt>& K0gens,
                              const std::string& name) {
  if (sigma == SigmaKind::Galois && K->dim != 2)
    throw MathError(Err::InvalidInput, "a Galois involution needs a quadratic extension");
  if (K->dim > 4) throw MathError(Err::InvalidInput, "involutory sets live over skew fields of dim <= 4");
  return InvolutorySet{K, sigma, span(K, K0gens), name.empty() ? K->name : name};
}

InvolutorySet hamilton_involutory() {
  auto H = builtin_algebra("quaternion-Q");
  return make_involutory(H, SigmaKind::Standard, {CDElt::one(H)}, "Hamilton");
}

const char* closure_name(Closure c) {
  switch (c) {
    case Closure::Generating: return "generating";
    case Closure::NonGenerating: return "non-generating";
    case Closure::Inconclusive: return "inconclusive";
  }
  return "?";
}

Closure ring_closure(const Subspace& gens, const Subspace& target, Subspace* out, int rounds) {
  const CDAlgebra& a = gens.alg;
  auto b0 = gens.basis();
  b0.push_back(CDElt::one(a));
  Subspace s = span(a, b0);
  for (int r = 0; r < rounds; ++r) {
    auto b = s.basis();
    std::vector<CDElt> all = b;
    for (const auto& x : b)
      for (const auto& y : b) all.push_back(x * y);
    Subspace t = span(a, all);
    if (t.dim() == s.dim()) {
      if (out) *out = s;
      return s.dim() == target.dim() ? Closure::Generating : Closure::NonGenerating;
    }
    s = t;
  }
  if (out) *out = s;
  return s.dim() == target.dim() ? Closure::Generating : Closure::Inconclusive;
}

InvCheck inv_check(const InvolutorySet& S, long samples, uint64_t seed) {
  InvCheck out;
  Report& r = out.report;
  r.suite = "involutory/" + S.name;
  r.cite = cite::kInvolutorySet;
  r.samples = samples;
  r.seed = seed;
  const CDAlgebra& K = S.K;
  auto basis = whole(K).basis();

  bool unit = S.in_K0(CDElt::one(K));
  r.add("1 in K0", cite::kInvolutorySet, 1, unit);

  bool invol = true, anti = true;
  std::string anti_detail;
  for (const auto& x : basis) {
    if (S.apply(S.apply(x)) != x) invol = false;
    for (const auto& y : basis)
      if (S.apply(x * y) != S.apply(y) * S.apply(x)) {
        if (anti) anti_detail = "x = " + x.str() + ", y = " + y.str();
        anti = false;
      }
  }
  r.add("sigma involutive", cite::kInvolutorySet, static_cast<long>(basis.size()), invol);
  r.add("sigma anti-multiplicative", cite::kInvolutorySet, static_cast<long>(basis.size() * basis.size()), anti,
        anti_detail);

  // K_sigma and Fix(sigma) are linear conditions; basis vectors decide them
  bool traces = true, fixed = true;
  for (const auto& x : basis)
    if (!S.in_K0(x + S.apply(x))) traces = false;
  for (const auto& k : S.K0.basis())
    if (S.apply(k) != k) fixed = false;
  r.add("K_sigma subset K0", cite::kInvolutorySet, static_cast<long>(basis.size()), traces);
  r.add("K0 subset Fix(sigma)", cite::kInvolutorySet, static_cast<long>(S.K0.dim()), fixed);

  Rng rng(seed);
  bool conj_ok = true;
  std::string conj_detail;
  auto k0b = S.K0.basis();
  for (long n = 0; n < samples && conj_ok; ++n) {
    CDElt a = random_elt(K, rng);
    for (const auto& k : k0b)
      if (!S.in_K0(S.apply(a) * k * a)) {
        conj_ok = false;
        conj_detail = "a = " + a.str() + ", k = " + k.str();
      }
  }
  r.add("a^sigma K0 a subset K0", cite::kInvolutorySet, samples, conj_ok, conj_detail);
  out.axioms = unit && invol && anti && traces && fixed && conj_ok;

  bool sigma_id = true;
  for (const auto& x : basis)
    if (S.apply(x) != x) sigma_id = false;
  Closure cl = ring_closure(S.K0, whole(K));
  out.proper = !sigma_id && cl == Closure::Generating;
  r.add(std::string("ring closure of K0: ") + closure_name(cl), cite::kInvolutorySet, 1, cl != Closure::Inconclusive);
  r.notes.push_back(out.proper ? "proper" : "non-proper");

  // quadratic types, with F := K0 as the coefficient field
  bool commutative = center(K).dim() == static_cast<size_t>(K->dim);
  bool F_is_K = S.K0.dim() == static_cast<size_t>(K->dim);
  bool F_is_base = S.K0.dim() == 1;
  std::string t = "none";
  if (commutative && characteristic(K->K) == 2 && sigma_id && !F_is_K) {
    bool squares = true;
    for (const auto& x : basis)
      if (!S.in_K0(x * x)) squares = false;
    if (squares) t = "(i)";
  }
  if (t == "none" && K->dim == 1 && sigma_id && F_is_K) t = "(ii)";
  if (t == "none" && K->dim == 2 && !sigma_id && F_is_base && K->division) t = "(iii)";
  if (t == "none" && K->dim == 4 && S.sigma == SigmaKind::Standard && F_is_base && K->division) t = "(iv)";
  if (t == "none" && K->dim == 8 && S.sigma == SigmaKind::Standard && F_is_base && K->division) t = "(v)";
  out.quad_type = t;
  if (t == "(iv)" || t == "(v)") {
    bool central = center(K).equals(span(K, {CDElt::one(K)}));
    r.add("type " + t + ": center = span{1}", cite::kQuadTypes, 1, central);
  }
  if (t != "none") {
    // trace test: x + x^sigma lies in F and x^sigma x lies in F
    bool ok = true;
    Rng rng2(seed + 1);
    for (long n = 0; n < samples && ok; ++n) {
      CDElt x = random_elt(K, rng2);
      if (!S.in_K0(x + S.apply(x)) || !S.in_K0(S.apply(x) * x)) ok = false;
    }
    r.add("quadratic over F: x + x^sigma, x^sigma x in F", cite::kQuadTypes, samples, ok);
  }
  r.notes.push_back("quadratic type " + t);
  return out;
}

IndifferentSet make_indifferent(const CDAlgebra& ambient, const std::vector<CDElt>& K0gens,
                                const std::vector<CDElt>& L0gens) {
  if (characteristic(ambient->K) != 2) throw MathError(Err::InvalidInput, "indifferent sets need characteristic 2");
  if (center(ambient).dim() != static_cast<size_t>(ambient->dim))
    throw MathError(Err::InvalidInput, "indifferent sets live in a commutative ring");
  for (const auto& g : K0gens)
    if (g.alg() != ambient) throw MathError(Err::UnrepresentableClosure, "generator outside the ambient ring");
  for (const auto& g : L0gens)
    if (g.alg() != ambient) throw MathError(Err::UnrepresentableClosure, "generator outside the ambient ring");
  IndifferentSet s{ambient, whole(ambient), K0gens, L0gens};
  Subspace K;
  ring_closure(s.K0(), whole(ambient), &K);
  s.K = K;
  return s;
}

IndCheck ind_check(const IndifferentSet& S) {
  IndCheck out;
  Report& r = out.report;
  r.suite = "indifferent";
  r.cite = cite::kIndifferentSet;
  r.samples = 1;
  const CDAlgebra& a = S.ambient;
  Subspace K0 = S.K0(), L0 = S.L0();
  CDElt one = CDElt::one(a);
  bool units = K0.contains(one) && L0.contains(one);
  r.add("1 in K0 and 1 in L0", cite::kIndifferentSet, 2, units);
  bool in_K = true;
  for (const auto& g : S.K0gens) in_K = in_K && S.K.contains(g);
  for (const auto& g : S.L0gens) in_K = in_K && S.K.contains(g);
  r.add("K0, L0 subset K", cite::kIndifferentSet, 1, in_K);
  // squaring is additive in characteristic 2, so generators decide both
  bool c1 = true, c2 = true;
  for (const auto& k : S.K0gens)
    for (const auto& l : S.L0gens) {
      if (!L0.contains(k * k * l)) c1 = false;
      if (!K0.contains(l * k)) c2 = false;
    }
  r.add("K0^2 L0 subset L0", cite::kIndifferentSet, static_cast<long>(S.K0gens.size() * S.L0gens.size()), c1);
  r.add("L0 K0 subset K0", cite::kIndifferentSet, static_cast<long>(S.K0gens.size() * S.L0gens.size()), c2);
  Subspace gen;
  Closure cl = ring_closure(K0, S.K, &gen);
  r.add("<K0> = K", cite::kIndifferentSet, 1, cl == Closure::Generating);
  // Frobenius injective on the represented fragment
  std::vector<CDElt> sq;
  for (const auto& b : S.K.basis()) sq.push_back(b * b);
  r.add("Frobenius injective", cite::kIndifferentOpposite, 1, span(a, sq).dim() == S.K.dim());
  out.axioms = units && in_K && c1 && c2 && cl == Closure::Generating;
  Subspace L;
  ring_closure(L0, S.K, &L);
  out.proper = K0.dim() != S.K.dim() && L0.dim() != L.dim();
  r.notes.push_back(out.proper ? "proper" : "non-proper");
  return out;
}

IndifferentSet ind_opposite(const IndifferentSet& S) {
  IndifferentSet o;
  o.ambient = S.ambient;
  ring_closure(S.L0(), whole(S.ambient), &o.K);
  o.K0gens = S.L0gens;
  for (const auto& k : S.K0gens) o.L0gens.push_back(k * k);
  return o;
}

}  // namespace mforge
