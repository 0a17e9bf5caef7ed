#include "mforge/moufang.hpp"

#include <set>

#include "mforge/cite.hpp"

namespace mforge {

const char* family_name(Family f) {
  switch (f) {
    case Family::Linear: return "linear";
    case Family::Involutory: return "involutory";
    case Family::Indifferent: return "indifferent";
    case Family::Quadratic: return "quadratic";
    case Family::Pseudo: return "pseudoquadratic";
  }
  return "?";
}

namespace {

const char* family_cite(Family f) {
  switch (f) {
    case Family::Linear: return cite::kLinearFamily;
    case Family::Involutory: return cite::kInvolutoryFamily;
    case Family::Indifferent: return cite::kIndifferentFamily;
    case Family::Quadratic: return cite::kQuadraticFamily;
    case Family::Pseudo: return cite::kPseudoFamily;
  }
  return "";
}

bool ring_family(Family f) { return f == Family::Linear || f == Family::Involutory || f == Family::Indifferent; }

Subspace carrier_span(const MoufangSetDesc& d) {
  if (d.family == Family::Involutory) return d.inv.K0;
  if (d.family == Family::Indifferent) return d.ind.K0();
  return whole(d.A);
}

std::vector<CDElt> span_elements(const Subspace& s) {
  auto basis = s.basis();
  auto ks = enumerate(s.alg->K);
  std::vector<CDElt> out;
  std::vector<size_t> idx(basis.size(), 0);
  for (;;) {
    CDElt e = CDElt::zero(s.alg);
    for (size_t i = 0; i < basis.size(); ++i) e += basis[i] * ks[idx[i]];
    out.push_back(e);
    size_t p = 0;
    while (p < basis.size() && ++idx[p] == ks.size()) idx[p++] = 0;
    if (p == basis.size()) break;
  }
  return out;
}

MElt wrap(const MSet& M, CDElt x) { return MElt{M, std::move(x)}; }
MElt wrap(const MSet& M, QSVector x) { return MElt{M, std::move(x)}; }
MElt wrap(const MSet& M, TPoint x) { return MElt{M, std::move(x)}; }

void same_set(const MElt& x, const MElt& y) {
  if (x.M != y.M) throw MathError(Err::CarrierMismatch, "elements of different Moufang sets");
}

struct Acc {
  bool ok = true;
  std::string detail;
  void fail(const std::string& d) {
    if (ok) detail = d;
    ok = false;
  }
};

}  // namespace

bool MElt::operator==(const MElt& o) const { return M == o.M && key() == o.key(); }

std::string MElt::str() const {
  if (auto p = std::get_if<CDElt>(&v)) return p->str();
  if (auto p = std::get_if<QSVector>(&v)) return p->str();
  return std::get<TPoint>(v).str();
}

std::string MElt::key() const {
  if (auto p = std::get_if<CDElt>(&v)) return p->key();
  if (auto p = std::get_if<QSVector>(&v)) return p->key();
  return std::get<TPoint>(v).key();
}

MSet ms_linear(const CDAlgebra& A) {
  if (A->dim > 8) throw MathError(Err::InvalidInput, "linear Moufang sets need an alternative algebra");
  if (!A->division) throw MathError(Err::InvalidInput, A->name + " is not known to be a division algebra");
  auto d = std::make_shared<MoufangSetDesc>();
  d->family = Family::Linear;
  d->name = "M(" + A->name + ")";
  d->A = A;
  return d;
}

MSet ms_involutory(const InvolutorySet& S) {
  auto d = std::make_shared<MoufangSetDesc>();
  d->family = Family::Involutory;
  d->name = "M(" + S.name + ", K0, " + sigma_name(S.sigma) + ")";
  d->A = S.K;
  d->inv = S;
  return d;
}

MSet ms_indifferent(const IndifferentSet& S) {
  auto d = std::make_shared<MoufangSetDesc>();
  d->family = Family::Indifferent;
  d->name = "M(" + S.ambient->name + ", K0, L0)";
  d->A = S.ambient;
  d->ind = S;
  return d;
}

MSet ms_quadratic(const QuadSpace& S) {
  auto d = std::make_shared<MoufangSetDesc>();
  d->family = Family::Quadratic;
  d->name = "M(" + (S->name.empty() ? std::string("L0") : S->name) + ", q)";
  d->qs = S;
  return d;
}

MSet ms_pseudo(const PQSpace& S) {
  auto d = std::make_shared<MoufangSetDesc>();
  d->family = Family::Pseudo;
  d->name = "M(" + S->name + ")";
  d->pq = S;
  return d;
}

MSet ms_with_hua(const MSet& M, HuaFn h, const std::string& name) {
  auto d = std::make_shared<MoufangSetDesc>(*M);
  d->hua_override = std::move(h);
  d->name = name;
  return d;
}

bool ms_finite(const MSet& M) {
  switch (M->family) {
    case Family::Quadratic: return is_finite(M->qs->K);
    case Family::Pseudo: return is_finite(M->pq->K()->K);
    default: return is_finite(M->A->K);
  }
}

MElt ms_zero(const MSet& M) {
  if (ring_family(M->family)) return wrap(M, CDElt::zero(M->A));
  if (M->family == Family::Quadratic) return wrap(M, qs_zero(M->qs));
  return wrap(M, t_identity(M->pq));
}

MElt ms_unit(const MSet& M) {
  if (ring_family(M->family)) return wrap(M, CDElt::one(M->A));
  if (M->family == Family::Quadratic) return wrap(M, qs_eps(M->qs));
  return wrap(M, t_unit(M->pq));
}

MElt ms_add(const MElt& x, const MElt& y) {
  same_set(x, y);
  if (ring_family(x.M->family)) return wrap(x.M, x.elt() + y.elt());
  if (x.M->family == Family::Quadratic) return wrap(x.M, x.vec() + y.vec());
  return wrap(x.M, t_mul(x.point(), y.point()));
}

MElt ms_neg(const MElt& x) {
  if (ring_family(x.M->family)) return wrap(x.M, -x.elt());
  if (x.M->family == Family::Quadratic) return wrap(x.M, -x.vec());
  return wrap(x.M, t_inv(x.point()));
}

bool ms_is_zero(const MElt& x) {
  if (ring_family(x.M->family)) return x.elt().is_zero();
  if (x.M->family == Family::Quadratic) return x.vec().is_zero();
  return x.point().is_identity();
}

bool ms_member(const MElt& x) {
  const auto& d = *x.M;
  switch (d.family) {
    case Family::Linear: return x.elt().alg() == d.A;
    case Family::Involutory:
    case Family::Indifferent: return x.elt().alg() == d.A && carrier_span(d).contains(x.elt());
    case Family::Quadratic: return x.vec().S == d.qs;
    case Family::Pseudo: return x.point().S == d.pq && t_member(d.pq, x.point().a, x.point().t);
  }
  return false;
}

MElt ms_random(const MSet& M, Rng& rng, int height) {
  switch (M->family) {
    case Family::Linear: return wrap(M, random_elt(M->A, rng, height));
    case Family::Involutory:
    case Family::Indifferent: {
      CDElt e = CDElt::zero(M->A);
      for (const auto& b : carrier_span(*M).basis()) e += b * random_scalar(M->A->K, rng, height);
      return wrap(M, e);
    }
    case Family::Quadratic: return wrap(M, qs_random(M->qs, rng, height));
    case Family::Pseudo: return wrap(M, t_random(M->pq, rng, height));
  }
  throw MathError(Err::InvalidInput, "unknown family");
}

std::vector<MElt> ms_enumerate(const MSet& M) {
  if (!ms_finite(M)) throw MathError(Err::InvalidInput, "carrier is infinite");
  std::vector<MElt> out;
  switch (M->family) {
    case Family::Quadratic:
      for (auto& v : qs_enumerate(M->qs)) out.push_back(wrap(M, v));
      break;
    case Family::Pseudo:
      for (auto& p : t_enumerate(M->pq)) out.push_back(wrap(M, p));
      break;
    default:
      for (auto& e : span_elements(carrier_span(*M))) out.push_back(wrap(M, e));
  }
  return out;
}

Vec ms_coords(const MElt& x) {
  if (ring_family(x.M->family)) return x.elt().coords();
  if (x.M->family == Family::Quadratic) return x.vec().c;
  Vec c;
  for (const auto& a : x.point().a)
    for (const auto& s : a.coords()) c.push_back(s);
  for (const auto& s : x.point().t.coords()) c.push_back(s);
  return c;
}

MElt ms_from_coords(const MSet& M, const Vec& c) {
  MElt out;
  if (ring_family(M->family)) {
    if (c.size() != static_cast<size_t>(M->A->dim)) throw MathError(Err::CarrierMismatch, "coordinate length");
    out = wrap(M, CDElt(M->A, c));
  } else if (M->family == Family::Quadratic) {
    if (c.size() != static_cast<size_t>(M->qs->dim)) throw MathError(Err::CarrierMismatch, "coordinate length");
    out = wrap(M, qs_vector(M->qs, c));
  } else {
    const CDAlgebra& K = M->pq->K();
    size_t k = K->dim, n = M->pq->dim;
    if (c.size() != k * (n + 1)) throw MathError(Err::CarrierMismatch, "coordinate length");
    PQVec a;
    for (size_t i = 0; i < n; ++i) a.push_back(CDElt(K, Vec(c.begin() + i * k, c.begin() + (i + 1) * k)));
    out = wrap(M, TPoint{M->pq, a, CDElt(K, Vec(c.begin() + n * k, c.end()))});
  }
  if (!ms_member(out)) throw MathError(Err::CarrierMismatch, "coordinates outside the carrier");
  return out;
}

MElt ms_tau(const MElt& x) {
  if (ms_is_zero(x)) throw MathError(Err::ZeroArgument, "tau is defined on nonzero elements");
  const MSet& M = x.M;
  if (ring_family(M->family)) return wrap(M, -x.elt().inv());
  if (M->family == Family::Quadratic) return wrap(M, -qs_sigma(x.vec()) * qs_q(x.vec()).inv());
  return wrap(M, t_tau(x.point()));
}

MElt ms_hua(const MElt& a, const MElt& x) {
  same_set(a, x);
  if (ms_is_zero(a)) throw MathError(Err::ZeroAnchor, "Hua maps need a nonzero anchor");
  const MSet& M = a.M;
  if (M->hua_override) return M->hua_override(a, x);
  if (ring_family(M->family)) return wrap(M, (a.elt() * x.elt()) * a.elt());
  if (M->family == Family::Quadratic) return wrap(M, qs_hua(a.vec(), x.vec()));
  return wrap(M, t_hua(a.point(), x.point()));
}

Report ms_verify(const MSet& M, long samples, uint64_t seed) {
  Report r;
  r.suite = "moufang/" + M->name;
  r.cite = cite::kMoufangSet;
  r.samples = samples;
  r.seed = seed;
  r.notes.push_back(std::string("family ") + family_name(M->family));
  const char* fc = family_cite(M->family);
  Rng rng(seed);
  bool finite = ms_finite(M);
  std::vector<MElt> all;
  if (finite) all = ms_enumerate(M);
  auto draw = [&]() { return finite ? all[draw_below(rng, all.size())] : ms_random(M, rng); };
  auto draw_nonzero = [&]() {
    for (;;) {
      MElt a = draw();
      if (!ms_is_zero(a)) return a;
    }
  };

  MElt one = ms_unit(M);
  Acc unit, add, closed, tau_in, scaling;
  long n_pairs = 0;
  auto check = [&](const MElt& a, const MElt& x, const MElt& y) {
    ++n_pairs;
    MElt hx = ms_hua(a, x), hy = ms_hua(a, y);
    if (ms_hua(a, ms_add(x, y)) != ms_add(hx, hy)) add.fail("a = " + a.str() + ", x = " + x.str() + ", y = " + y.str());
    if (!ms_member(hx)) closed.fail("a = " + a.str() + ", x = " + x.str());
  };
  bool exhaustive = finite && all.size() * all.size() * all.size() <= 40000;
  if (exhaustive) {
    for (const auto& a : all)
      if (!ms_is_zero(a))
        for (const auto& x : all)
          for (const auto& y : all) check(a, x, y);
  } else {
    for (long i = 0; i < samples; ++i) check(draw_nonzero(), draw(), draw());
  }
  long n_unit = 0;
  for (long i = 0; i < (finite ? static_cast<long>(all.size()) : samples); ++i) {
    MElt x = finite ? all[i] : draw();
    ++n_unit;
    if (ms_hua(one, x) != x) unit.fail("x = " + x.str());
    if (!ms_is_zero(x)) {
      MElt t = ms_tau(x);
      if (!ms_member(t) || ms_is_zero(t)) tau_in.fail("x = " + x.str());
    }
  }
  r.add("h_1 = id", cite::kMoufangSet, n_unit, unit.ok, unit.detail);
  r.add("h_a additive", fc, n_pairs, add.ok, add.detail);
  r.add("h_a maps U into U", fc, n_pairs, closed.ok, closed.detail);
  r.add("tau maps U* into U*", fc, n_unit, tau_in.ok, tau_in.detail);

  if (M->family == Family::Quadratic && !M->hua_override) {
    for (long i = 0; i < samples; ++i) {
      MElt a = draw_nonzero(), x = draw();
      Scalar s = finite ? random_nonzero(M->qs->K, rng) : random_nonzero(M->qs->K, rng, 8);
      MElt as = wrap(M, a.vec() * s);
      if (ms_hua(as, x) != wrap(M, ms_hua(a, x).vec() * s.square())) scaling.fail("a = " + a.str());
    }
    r.add("h_(a s) = s^2 h_a", cite::kHuaScaling, samples, scaling.ok, scaling.detail);
  }

  if (finite) {
    bool bij = true;
    std::string det;
    for (const auto& a : all) {
      if (ms_is_zero(a)) continue;
      std::set<std::string> img;
      for (const auto& x : all) img.insert(ms_hua(a, x).key());
      if (img.size() != all.size()) {
        if (bij) det = "h_a not injective for a = " + a.str();
        bij = false;
      }
    }
    r.add("h_a bijective", fc, static_cast<long>(all.size() * all.size()), bij, det);
    std::set<std::string> timg;
    for (const auto& x : all)
      if (!ms_is_zero(x)) timg.insert(ms_tau(x).key());
    r.add("tau bijective on U*", fc, static_cast<long>(all.size()), timg.size() + 1 == all.size());
  }
  return r;
}

Report ms_coincide(const MSet& M1, const MSet& M2, long samples, uint64_t seed, MMap bijection) {
  MMap g = bijection;
  if (!g) {
    auto f1 = M1->family == Family::Quadratic ? M1->qs->K : M1->family == Family::Pseudo ? M1->pq->K()->K : M1->A->K;
    auto f2 = M2->family == Family::Quadratic ? M2->qs->K : M2->family == Family::Pseudo ? M2->pq->K()->K : M2->A->K;
    if (!same_field(f1, f2)) throw MathError(Err::CarrierMismatch, "carriers over different fields");
    g = [M2](const MElt& x) { return ms_from_coords(M2, ms_coords(x)); };
    g(ms_unit(M1));
  }
  Report r;
  r.suite = "coincide/" + M1->name + "~" + M2->name;
  r.cite = cite::kNormCoincide;
  r.seed = seed;
  Rng rng(seed);
  bool finite = ms_finite(M1);
  std::vector<MElt> all;
  if (finite) all = ms_enumerate(M1);
  Acc tau, hua, unit;
  if (g(ms_unit(M1)) != ms_unit(M2)) unit.fail("unit maps to " + g(ms_unit(M1)).str());
  auto one = [&](const MElt& a, const MElt& x) {
    if (!ms_is_zero(x) && g(ms_tau(x)) != ms_tau(g(x))) tau.fail("x = " + x.str());
    if (!ms_is_zero(a) && g(ms_hua(a, x)) != ms_hua(g(a), g(x))) hua.fail("a = " + a.str() + ", x = " + x.str());
  };
  long n = 0;
  if (finite) {
    for (const auto& a : all)
      for (const auto& x : all) {
        one(a, x);
        ++n;
      }
  } else {
    for (; n < samples; ++n) one(ms_random(M1, rng), ms_random(M1, rng));
  }
  r.samples = n;
  r.add("units correspond", cite::kMoufangSet, 1, unit.ok, unit.detail);
  r.add("tau agrees", cite::kNormCoincide, n, tau.ok, tau.detail);
  r.add("Hua maps agree", cite::kNormCoincide, n, hua.ok, hua.detail);
  return r;
}

JordanResult ms_jordan_check(const MMap& g, const MSet& M, const MSet& Mt, bool exhaustive, long samples,
                             uint64_t seed) {
  JordanResult out;
  Report& r = out.report;
  r.suite = "jordan/" + M->name + "->" + Mt->name;
  r.cite = cite::kJordanMoufang;
  r.seed = seed;
  Rng rng(seed);
  std::vector<MElt> all;
  if (exhaustive) all = ms_enumerate(M);
  Acc in, hom, hua, tau, mult, anti;
  MElt gu = g(ms_unit(M));
  bool unit = gu == ms_unit(Mt);
  bool ring = M->family == Family::Linear && Mt->family == Family::Linear;
  auto one = [&](const MElt& x, const MElt& y) {
    MElt gx = g(x), gy = g(y);
    if (gx.M != Mt || !ms_member(gx)) in.fail("x = " + x.str());
    if (g(ms_add(x, y)) != ms_add(gx, gy)) hom.fail("x = " + x.str() + ", y = " + y.str());
    if (!ms_is_zero(x) && ms_is_zero(gx)) {
      hua.fail("nonzero " + x.str() + " maps to 0");
      tau.fail("nonzero " + x.str() + " maps to 0");
    } else if (!ms_is_zero(x)) {
      if (g(ms_hua(x, y)) != ms_hua(gx, gy)) hua.fail("a = " + x.str() + ", x = " + y.str());
      if (g(ms_tau(x)) != ms_tau(gx)) tau.fail("x = " + x.str());
    }
    if (ring) {
      MElt p = g(wrap(M, x.elt() * y.elt()));
      if (p.elt() != gx.elt() * gy.elt()) mult.fail("x = " + x.str());
      if (p.elt() != gy.elt() * gx.elt()) anti.fail("x = " + x.str());
    }
  };
  long n = 0;
  if (exhaustive) {
    for (const auto& x : all)
      for (const auto& y : all) {
        one(x, y);
        ++n;
      }
  } else {
    for (; n < samples; ++n) one(ms_random(M, rng), ms_random(M, rng));
  }
  r.samples = n;
  r.add("image lies in the target carrier", cite::kJordanMoufang, n, in.ok, in.detail);
  r.add("group homomorphism", cite::kJordanMoufang, n, hom.ok, hom.detail);
  r.add("unit fixed", cite::kJordanMoufang, 1, unit, unit ? "" : "1 maps to " + gu.str());
  r.add("Hua maps preserved", cite::kJordanMoufang, n, hua.ok, hua.detail);
  out.jordan = in.ok && hom.ok && unit && hua.ok;
  out.moufang_iso = out.jordan && tau.ok;
  r.notes.push_back(std::string("tau preserved: ") + (tau.ok ? "yes" : "no, " + tau.detail));
  if (ring) out.tag = mult.ok ? "automorphism" : anti.ok ? "anti-automorphism" : "neither";
  else out.tag = "n/a";
  r.notes.push_back("consistent with: " + out.tag);
  return out;
}

}  // namespace mforge
