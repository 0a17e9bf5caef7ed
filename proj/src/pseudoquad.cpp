#include "mforge/pseudoquad.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mforge/cite.hpp"

namespace mforge {

namespace {

CDElt sig(const PQSpace& s, const CDElt& x) { return s->inv.apply(x); }

std::vector<CDElt> k0_elements(const PQSpace& s) {
  auto basis = s->inv.K0.basis();
  std::vector<Scalar> ks = enumerate(s->K()->K);
  std::vector<CDElt> out;
  std::vector<size_t> idx(basis.size(), 0);
  for (;;) {
    CDElt e = CDElt::zero(s->K());
    for (size_t i = 0; i < basis.size(); ++i) e += basis[i] * ks[idx[i]];
    out.push_back(e);
    size_t p = 0;
    while (p < basis.size() && ++idx[p] == ks.size()) idx[p++] = 0;
    if (p == basis.size()) break;
  }
  return out;
}

CDElt random_k0(const PQSpace& s, Rng& rng) {
  CDElt e = CDElt::zero(s->K());
  for (const auto& b : s->inv.K0.basis()) e += b * random_scalar(s->K()->K, rng);
  return e;
}

struct Acc {
  bool ok = true;
  std::string detail;
  void fail(const std::string& d) {
    if (ok) detail = d;
    ok = false;
  }
};

std::string vec_str(const PQVec& a) {
  std::string s = "[";
  for (size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + a[i].str();
  return s + "]";
}

}  // namespace

PQVec pq_zero(const PQSpace& s) { return PQVec(s->dim, CDElt::zero(s->K())); }
PQVec pq_basis(const PQSpace& s, int i) {
  PQVec v = pq_zero(s);
  v.at(i) = CDElt::one(s->K());
  return v;
}
PQVec pq_add(const PQVec& a, const PQVec& b) {
  PQVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
PQVec pq_neg(const PQVec& a) {
  PQVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}
PQVec pq_scale(const PQVec& a, const CDElt& s) {
  PQVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}
bool pq_is_zero(const PQVec& a) {
  return std::all_of(a.begin(), a.end(), [](const CDElt& x) { return x.is_zero(); });
}

CDElt pq_f(const PQSpace& s, const PQVec& a, const PQVec& b) {
  CDElt r = CDElt::zero(s->K());
  for (int i = 0; i < s->dim; ++i) {
    if (a[i].is_zero()) continue;
    CDElt ai = sig(s, a[i]);
    for (int j = 0; j < s->dim; ++j)
      if (!b[j].is_zero()) r += ai * s->F[i][j] * b[j];
  }
  return r;
}

CDElt pq_q(const PQSpace& s, const PQVec& a) {
  CDElt r = CDElt::zero(s->K());
  for (int i = 0; i < s->dim; ++i) {
    if (a[i].is_zero()) continue;
    CDElt ai = sig(s, a[i]);
    r += ai * s->q[i] * a[i];
    for (int j = i + 1; j < s->dim; ++j) r += ai * s->F[i][j] * a[j];
  }
  return r;
}

PQVec pq_random(const PQSpace& s, Rng& rng, int height) {
  PQVec v;
  for (int i = 0; i < s->dim; ++i) v.push_back(random_elt(s->K(), rng, height));
  return v;
}

std::vector<PQVec> pq_enumerate(const PQSpace& s) {
  auto ks = enumerate_elts(s->K());
  std::vector<PQVec> out;
  std::vector<size_t> idx(s->dim, 0);
  for (;;) {
    PQVec v;
    for (int i = 0; i < s->dim; ++i) v.push_back(ks[idx[i]]);
    out.push_back(v);
    int p = 0;
    while (p < s->dim && ++idx[p] == ks.size()) idx[p++] = 0;
    if (p == s->dim) break;
  }
  return out;
}

PQSpace make_pqspace(const InvolutorySet& inv, const std::vector<CDElt>& q,
                     const std::vector<std::vector<CDElt>>& f_upper, const std::string& name) {
  if (inv.K->dim > 4) throw MathError(Err::InvalidInput, "pseudo-quadratic spaces need an associative algebra");
  auto d = std::make_shared<PQSpaceDesc>();
  d->inv = inv;
  d->dim = static_cast<int>(q.size());
  d->q = q;
  d->name = name;
  const CDAlgebra& K = inv.K;
  d->F.assign(d->dim, std::vector<CDElt>(d->dim, CDElt::zero(K)));
  for (int i = 0; i < d->dim; ++i) {
    d->F[i][i] = q[i] - inv.apply(q[i]);
    for (int j = i + 1; j < d->dim; ++j) {
      d->F[i][j] = f_upper.at(i).at(j);
      d->F[j][i] = -inv.apply(f_upper[i][j]);
    }
  }
  PQSpace s = d;
  // (P3) anisotropy
  if (is_finite(K->K)) {
    for (const auto& a : pq_enumerate(s))
      if (!pq_is_zero(a) && inv.in_K0(pq_q(s, a)))
        throw MathError(Err::InvalidInput, "q(a) in K0 for a = " + vec_str(a));
    d->aniso = Anisotropy::Exhaustive;
  } else {
    Rng rng(0x5eed);
    for (int n = 0; n < 300; ++n) {
      PQVec a = pq_random(s, rng, 6);
      if (!pq_is_zero(a) && inv.in_K0(pq_q(s, a)))
        throw MathError(Err::InvalidInput, "q(a) in K0 for a = " + vec_str(a));
    }
    d->aniso = Anisotropy::Attested;
  }
  Report r = pq_verify(s, 60, 1);
  for (const auto& c : r.checks)
    if (!c.pass && c.name.rfind("Remark", 0) != 0)
      throw MathError(Err::InvalidInput, "pseudo-quadratic axiom fails: " + c.name + " " + c.detail);
  return s;
}

PQSpace xi_hamilton() {
  static PQSpace s = [] {
    InvolutorySet inv = hamilton_involutory();
    CDElt half_i = CDElt::basis(inv.K, 1) * Scalar::from_rational(rationals(), mpq_class(1, 2));
    PQSpace p = make_pqspace(inv, {half_i}, {{CDElt::zero(inv.K)}}, "Xi_H");
    // q(x) = x^sigma (i/2) x has trace zero, so q(x) in Q forces x = 0
    const_cast<PQSpaceDesc&>(*p).aniso = Anisotropy::Structural;
    return p;
  }();
  return s;
}

PQSpace xi_f4() {
  static PQSpace s = [] {
    auto F4 = builtin_algebra("F4");
    InvolutorySet inv = make_involutory(F4, SigmaKind::Galois, {CDElt::one(F4)}, "F4/F2");
    return make_pqspace(inv, {CDElt::basis(F4, 1)}, {{CDElt::zero(F4)}}, "Xi_F4");
  }();
  return s;
}

// ---------------------------------------------------------------- T

std::string TPoint::str() const { return "(" + vec_str(a) + ", " + t.str() + ")"; }
std::string TPoint::key() const {
  std::string k;
  for (const auto& x : a) k += x.key() + ";";
  return k + "/" + t.key();
}

bool t_member(const PQSpace& s, const PQVec& a, const CDElt& t) { return s->inv.in_K0(pq_q(s, a) - t); }

TPoint t_point(const PQSpace& s, const PQVec& a, const CDElt& t) {
  if (!t_member(s, a, t)) throw MathError(Err::InvalidInput, "q(a) - t not in K0");
  return TPoint{s, a, t};
}

TPoint t_identity(const PQSpace& s) { return TPoint{s, pq_zero(s), CDElt::zero(s->K())}; }
TPoint t_unit(const PQSpace& s) { return TPoint{s, pq_zero(s), CDElt::one(s->K())}; }

TPoint t_mul(const TPoint& x, const TPoint& y) {
  if (x.S != y.S) throw MathError(Err::SpaceMismatch, "points of different spaces");
  return TPoint{x.S, pq_add(x.a, y.a), x.t + y.t + pq_f(x.S, y.a, x.a)};
}

TPoint t_inv(const TPoint& x) { return TPoint{x.S, pq_neg(x.a), -sig(x.S, x.t)}; }

TPoint t_hua(const TPoint& anchor, const TPoint& x) {
  if (anchor.S != x.S) throw MathError(Err::SpaceMismatch, "points of different spaces");
  if (anchor.t.is_zero()) throw MathError(Err::ZeroAnchor, "anchor must be nonzero");
  const PQSpace& s = x.S;
  CDElt ts = sig(s, anchor.t);
  CDElt ti = anchor.t.inv();
  CDElt mid = ti * pq_f(s, anchor.a, x.a) * ts;
  return TPoint{s, pq_add(pq_scale(x.a, ts), pq_neg(pq_scale(anchor.a, mid))), anchor.t * x.t * ts};
}

TPoint t_tau(const TPoint& x) {
  if (x.t.is_zero()) throw MathError(Err::ZeroArgument, "tau needs a nonzero point");
  CDElt ti = x.t.inv();
  return TPoint{x.S, pq_scale(x.a, ti), -ti};
}

TPoint t_random(const PQSpace& s, Rng& rng, int height) {
  PQVec a = pq_random(s, rng, height);
  return TPoint{s, a, pq_q(s, a) + random_k0(s, rng)};
}

TPoint t_random_nonzero(const PQSpace& s, Rng& rng, int height) {
  for (;;) {
    TPoint p = t_random(s, rng, height);
    if (!p.is_identity()) return p;
  }
}

std::vector<TPoint> t_enumerate(const PQSpace& s) {
  auto k0 = k0_elements(s);
  std::vector<TPoint> out;
  for (const auto& a : pq_enumerate(s)) {
    CDElt qa = pq_q(s, a);
    for (const auto& k : k0) out.push_back(TPoint{s, a, qa + k});
  }
  return out;
}

// ---------------------------------------------------------------- verification

Report pq_verify(const PQSpace& s, long samples, uint64_t seed) {
  Report r;
  r.suite = "pseudoquad/" + s->name;
  r.cite = cite::kPseudoQuadratic;
  r.samples = samples;
  r.seed = seed;
  r.notes.push_back(std::string("anisotropy: ") + anisotropy_name(s->aniso));
  Rng rng(seed);
  const CDAlgebra& K = s->K();
  const auto& inv = s->inv;
  bool finite = is_finite(K->K);
  std::vector<TPoint> all;
  if (finite) all = t_enumerate(s);
  auto draw_pt = [&]() { return finite ? all[draw_below(rng, all.size())] : t_random(s, rng); };

  Acc p1, p2, skew, sesq, l72, p3, l77, c78, r74;
  bool char2 = characteristic(K->K) == 2;
  for (long n = 0; n < samples; ++n) {
    PQVec a = pq_random(s, rng), b = pq_random(s, rng);
    CDElt x = random_elt(K, rng);
    CDElt fab = pq_f(s, a, b);
    if (!inv.in_K0(pq_q(s, pq_add(a, b)) - pq_q(s, a) - pq_q(s, b) - fab)) p1.fail("a = " + vec_str(a));
    if (!inv.in_K0(pq_q(s, pq_scale(a, x)) - sig(s, x) * pq_q(s, a) * x)) p2.fail("a = " + vec_str(a));
    if (pq_f(s, b, a) != -sig(s, fab)) skew.fail("a = " + vec_str(a));
    if (pq_f(s, pq_scale(a, x), b) != sig(s, x) * fab || pq_f(s, a, pq_scale(b, x)) != fab * x)
      sesq.fail("a = " + vec_str(a));
    CDElt qa = pq_q(s, a);
    if (pq_f(s, a, a) != qa - sig(s, qa)) l72.fail("a = " + vec_str(a));
    if (!pq_is_zero(a) && inv.in_K0(qa)) p3.fail("a = " + vec_str(a));
    TPoint p = draw_pt();
    CDElt k = random_k0(s, rng);
    if (!t_member(s, p.a, p.t + k)) l77.fail("point " + p.str());
    CDElt off = random_elt(K, rng);
    if (!inv.in_K0(off) && t_member(s, p.a, p.t + off)) l77.fail("point " + p.str() + ", k = " + off.str());
    if (pq_f(s, p.a, p.a) != p.t - sig(s, p.t)) c78.fail("point " + p.str());
    if (!char2) {
      CDElt half = CDElt::scalar(K, Scalar::from_int(K->K, 2).inv());
      if (!inv.in_K0(qa - pq_f(s, a, a) * half)) r74.fail("a = " + vec_str(a));
    }
  }
  r.add("(P1) q(a+b) = q(a) + q(b) + f(a,b) mod K0", cite::kPseudoQuadratic, samples, p1.ok, p1.detail);
  r.add("(P2) q(at) = t^sigma q(a) t mod K0", cite::kPseudoQuadratic, samples, p2.ok, p2.detail);
  r.add("f skew-hermitian", cite::kPseudoQuadratic, samples, skew.ok, skew.detail);
  r.add("f sesquilinear", cite::kPseudoQuadratic, samples, sesq.ok, sesq.detail);
  r.add("f(a,a) = q(a) - q(a)^sigma", cite::kPseudoQuadratic, samples, l72.ok, l72.detail);
  r.add("(P3) q(a) in K0 only for a = 0", cite::kPseudoQuadratic, samples, p3.ok, p3.detail);
  r.add("(a, t + k) in T iff k in K0", cite::kGroupT, samples, l77.ok, l77.detail);
  r.add("f(a,a) = t - t^sigma on T", cite::kGroupT, samples, c78.ok, c78.detail);
  if (!char2) r.add("Remark: q(a) = f(a,a)/2 mod K0", cite::kPseudoQuadratic, samples, r74.ok, r74.detail);

  Acc assoc, ident, inverse, closed, hua_aut, hua_unit;
  auto check_group = [&](const TPoint& x, const TPoint& y, const TPoint& z) {
    if (t_mul(t_mul(x, y), z) != t_mul(x, t_mul(y, z))) assoc.fail(x.str() + ", " + y.str() + ", " + z.str());
    if (t_mul(x, t_identity(s)) != x || t_mul(t_identity(s), x) != x) ident.fail(x.str());
    if (!t_mul(x, t_inv(x)).is_identity() || !t_mul(t_inv(x), x).is_identity()) inverse.fail(x.str());
    TPoint xy = t_mul(x, y);
    if (!t_member(s, xy.a, xy.t)) closed.fail(x.str() + ", " + y.str());
  };
  auto check_hua = [&](const TPoint& a, const TPoint& x, const TPoint& y) {
    if (t_hua(a, t_mul(x, y)) != t_mul(t_hua(a, x), t_hua(a, y))) hua_aut.fail("anchor " + a.str());
    if (t_hua(t_unit(s), x) != x) hua_unit.fail(x.str());
  };
  long group_samples = samples;
  if (finite && all.size() <= 64) {
    group_samples = static_cast<long>(all.size() * all.size() * all.size());
    for (const auto& x : all)
      for (const auto& y : all)
        for (const auto& z : all) check_group(x, y, z);
    for (const auto& a : all)
      if (!a.is_identity())
        for (const auto& x : all)
          for (const auto& y : all) check_hua(a, x, y);
  } else {
    for (long n = 0; n < samples; ++n) {
      TPoint x = draw_pt(), y = draw_pt(), z = draw_pt();
      check_group(x, y, z);
      TPoint a = finite ? draw_pt() : t_random_nonzero(s, rng);
      if (!a.is_identity()) check_hua(a, x, y);
    }
  }
  r.add("T closed under the product", cite::kGroupT, group_samples, closed.ok, closed.detail);
  r.add("T associative", cite::kGroupT, group_samples, assoc.ok, assoc.detail);
  r.add("T identity (0,0)", cite::kGroupT, group_samples, ident.ok, ident.detail);
  r.add("(a,t)^-1 = (-a, -t^sigma)", cite::kGroupT, group_samples, inverse.ok, inverse.detail);
  r.add("h_anchor is an automorphism of T", cite::kHuaAut, group_samples, hua_aut.ok, hua_aut.detail);
  r.add("h_(0,1) = id", cite::kHuaT, group_samples, hua_unit.ok, hua_unit.detail);

  if (finite && all.size() <= 64) {
    FiniteGroup g = group_from_points(all);
    std::set<std::string> expected;
    for (const auto& k : k0_elements(s)) expected.insert(TPoint{s, pq_zero(s), k}.key());
    std::set<std::string> got;
    for (int c : g.center()) got.insert(all[c].key());
    r.add("Z(T) = {(0,t) : t in K0}", cite::kCentralT, static_cast<long>(all.size()), got == expected);
    bool l711 = true;
    for (const auto& x : all)
      for (const auto& y : all) {
        TPoint xy = t_mul(x, y);
        bool central = got.count(xy.key()) > 0;
        if (central != pq_is_zero(pq_add(x.a, y.a))) l711 = false;
      }
    r.add("xy central iff a = -b", cite::kCentralT, static_cast<long>(all.size() * all.size()), l711);
  }
  return r;
}

Report t_jordan_check(const PQSpace& src, const PQSpace& dst, const TMap& g, bool exhaustive, long samples,
                      uint64_t seed) {
  Report r;
  r.suite = "jordan/" + src->name + "->" + dst->name;
  r.cite = cite::kJordanIso;
  r.seed = seed;
  Acc in_t, hom, hua, unit;
  unit.ok = g(t_unit(src)) == t_unit(dst);
  if (!unit.ok) unit.detail = "image of (0,1) = " + g(t_unit(src)).str();
  auto one = [&](const TPoint& x, const TPoint& y) {
    TPoint gx = g(x), gy = g(y);
    if (gx.S != dst || !t_member(dst, gx.a, gx.t)) in_t.fail(x.str());
    if (g(t_mul(x, y)) != t_mul(gx, gy)) hom.fail(x.str() + ", " + y.str());
    if (!x.is_identity() && g(t_hua(x, y)) != t_hua(gx, gy)) hua.fail("anchor " + x.str() + ", x = " + y.str());
  };
  long n = 0;
  if (exhaustive) {
    auto all = t_enumerate(src);
    for (const auto& x : all)
      for (const auto& y : all) {
        one(x, y);
        ++n;
      }
    std::set<std::string> img;
    for (const auto& x : all) img.insert(g(x).key());
    size_t target = t_enumerate(dst).size();
    r.add("bijective", cite::kJordanIso, static_cast<long>(all.size()), img.size() == all.size() && target == all.size());
  } else {
    Rng rng(seed);
    for (; n < samples; ++n) one(t_random(src, rng), t_random(src, rng));
  }
  r.samples = n;
  r.add("image lies in T", cite::kJordanIso, n, in_t.ok, in_t.detail);
  r.add("(i) group homomorphism", cite::kReverseDirection, n, hom.ok, hom.detail);
  r.add("(ii) (0,1) fixed", cite::kReverseDirection, 1, unit.ok, unit.detail);
  r.add("(iii) preserves Hua maps", cite::kReverseDirection, n, hua.ok, hua.detail);
  return r;
}

// ---------------------------------------------------------------- finite groups

int FiniteGroup::inv(int x) const {
  for (int y = 0; y < size(); ++y)
    if (mul[x][y] == identity) return y;
  return -1;
}

int FiniteGroup::order(int x) const {
  int k = 1, y = x;
  while (y != identity) {
    y = mul[y][x];
    ++k;
  }
  return k;
}

bool FiniteGroup::check_axioms(std::string* detail) const {
  int n = size();
  for (int x = 0; x < n; ++x) {
    if (mul[identity][x] != x || mul[x][identity] != x) {
      if (detail) *detail = "identity fails at " + labels[x];
      return false;
    }
    if (inv(x) < 0) {
      if (detail) *detail = "no inverse for " + labels[x];
      return false;
    }
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (mul[mul[x][y]][z] != mul[x][mul[y][z]]) {
          if (detail) *detail = "associativity fails at " + labels[x] + ", " + labels[y] + ", " + labels[z];
          return false;
        }
  }
  return true;
}

bool FiniteGroup::is_hom(const std::vector<int>& p) const {
  for (int x = 0; x < size(); ++x)
    for (int y = 0; y < size(); ++y)
      if (p[mul[x][y]] != mul[p[x]][p[y]]) return false;
  return true;
}

std::vector<std::vector<int>> FiniteGroup::automorphisms() const {
  int n = size();
  if (n > 10) throw MathError(Err::InvalidInput, "brute-force automorphism search limited to 10 elements");
  std::vector<int> rest;
  for (int x = 0; x < n; ++x)
    if (x != identity) rest.push_back(x);
  std::vector<std::vector<int>> out;
  std::vector<int> img = rest;
  do {
    std::vector<int> p(n);
    p[identity] = identity;
    for (size_t i = 0; i < rest.size(); ++i) p[rest[i]] = img[i];
    if (is_hom(p)) out.push_back(p);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<std::vector<int>> FiniteGroup::inner_automorphisms() const {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> out;
  for (int g = 0; g < size(); ++g) {
    std::vector<int> p(size());
    int gi = inv(g);
    for (int x = 0; x < size(); ++x) p[x] = mul[mul[gi][x]][g];
    if (seen.insert(p).second) out.push_back(p);
  }
  return out;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x) {
    bool c = true;
    for (int y = 0; y < size() && c; ++y) c = mul[x][y] == mul[y][x];
    if (c) out.push_back(x);
  }
  return out;
}

FiniteGroup q8_group() {
  // units 1, i, j, k; unit products with signs
  static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  const char* names[4] = {"1", "i", "j", "k"};
  FiniteGroup g;
  // index 2u + (negative ? 1 : 0)
  for (int e = 0; e < 8; ++e) g.labels.push_back(std::string(e % 2 ? "-" : "") + names[e / 2]);
  g.mul.assign(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int u = x / 2, v = y / 2;
      int s = sign[u][v] * (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1);
      g.mul[x][y] = 2 * prod[u][v] + (s < 0 ? 1 : 0);
    }
  g.identity = 0;
  return g;
}

FiniteGroup group_from_points(const std::vector<TPoint>& pts) {
  FiniteGroup g;
  std::map<std::string, int> index;
  for (size_t i = 0; i < pts.size(); ++i) {
    index[pts[i].key()] = static_cast<int>(i);
    g.labels.push_back(pts[i].str());
    if (pts[i].is_identity()) g.identity = static_cast<int>(i);
  }
  g.mul.assign(pts.size(), std::vector<int>(pts.size()));
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = 0; j < pts.size(); ++j) {
      auto it = index.find(t_mul(pts[i], pts[j]).key());
      if (it == index.end()) throw MathError(Err::InvalidInput, "point set not closed under the product");
      g.mul[i][j] = it->second;
    }
  return g;
}

std::vector<std::vector<int>> perm_closure(const std::vector<std::vector<int>>& gens, int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> out{id}, frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        std::vector<int> c(n);
        for (int x = 0; x < n; ++x) c[x] = g[p[x]];
        if (seen.insert(c).second) {
          out.push_back(c);
          next.push_back(c);
        }
      }
    frontier = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------- F4 census

F4Census f4_census() {
  F4Census out;
  Report& r = out.report;
  r.suite = "f4-census";
  r.cite = cite::kQ8;
  r.samples = 1;
  PQSpace s = xi_f4();
  const CDAlgebra& K = s->K();
  auto pts = t_enumerate(s);
  FiniteGroup g = group_from_points(pts);
  out.order = g.size();
  r.add("|T| = " + std::to_string(g.size()), cite::kQ8, 1, g.size() == 8);
  std::string det;
  r.add("T group axioms", cite::kGroupT, 512, g.check_axioms(&det), det);
  std::map<std::string, int> index;
  for (int i = 0; i < g.size(); ++i) index[pts[i].key()] = i;
  auto idx = [&](const TPoint& p) { return index.at(p.key()); };

  // squares of non-central elements
  bool squares = true;
  for (const auto& p : pts)
    if (!pq_is_zero(p.a) && t_mul(p, p) != t_unit(s)) squares = false;
  r.add("(a,t)^2 = (0, f(a,a)) = (0,1) for a != 0", cite::kQ8, 6, squares);

  // explicit isomorphism to Q8: i -> x, j -> y with x, y of order 4 and y not in <x>
  FiniteGroup q8 = q8_group();
  int x = -1, y = -1;
  for (int c = 0; c < g.size() && y < 0; ++c) {
    if (g.order(c) != 4) continue;
    if (x < 0) x = c;
    else if (c != x && c != g.inv(x)) y = c;
  }
  std::vector<int> to_T(8);  // Q8 index -> T index
  int minus = g.mul[x][x];
  int units[4] = {g.identity, x, y, g.mul[x][y]};
  for (int u = 0; u < 4; ++u) {
    to_T[2 * u] = units[u];
    to_T[2 * u + 1] = g.mul[minus][units[u]];
  }
  bool iso = std::set<int>(to_T.begin(), to_T.end()).size() == 8;
  for (int a = 0; a < 8 && iso; ++a)
    for (int b = 0; b < 8 && iso; ++b) iso = to_T[q8.mul[a][b]] == g.mul[to_T[a]][to_T[b]];
  out.q8_iso.assign(8, 0);
  std::string iso_text;
  for (int a = 0; a < 8; ++a) {
    out.q8_iso[to_T[a]] = a;
    iso_text += (a ? ", " : "") + q8.labels[a] + " -> " + pts[to_T[a]].str();
  }
  r.add("explicit isomorphism T -> Q8", cite::kQ8, 64, iso, iso_text);

  // Hua maps
  bool hua_id = true;
  for (const auto& a : pts)
    if (!a.is_identity())
      for (const auto& p : pts)
        if (t_hua(a, p) != p) hua_id = false;
  r.add("every Hua map is the identity", cite::kF4Hua, 56, hua_id);

  // automorphisms, brute force oracle
  auto autos = g.automorphisms();
  out.automorphisms = static_cast<int>(autos.size());
  int unit = idx(t_unit(s));
  bool fix_unit = true, jordan = true;
  for (const auto& p : autos) {
    if (p[unit] != unit) fix_unit = false;
    TMap m = [&, p](const TPoint& q) { return pts[p[idx(q)]]; };
    if (!t_jordan_check(s, s, m, true, 0, 0).pass()) jordan = false;
  }
  r.add("group automorphisms: " + std::to_string(autos.size()), cite::kF4Jordan, 5040, autos.size() == 24);
  r.add("every automorphism fixes (0,1)", cite::kF4Jordan, static_cast<long>(autos.size()), fix_unit);
  r.add("Jordan automorphisms: " + std::string(jordan ? std::to_string(autos.size()) : "fewer"), cite::kF4Jordan,
        static_cast<long>(autos.size()), jordan && autos.size() == 24);

  auto inner = g.inner_automorphisms();
  out.inner = static_cast<int>(inner.size());
  r.add("inner automorphisms: " + std::to_string(inner.size()) + " (Klein four)", cite::kF4Outer, 8,
        inner.size() == 4);

  // the three maps gamma_a, gamma_as, gamma_as^sigma with a = b_0, s = omega
  CDElt one = CDElt::one(K), om = CDElt::basis(K, 1), om2 = om.conj();
  auto xcoord = [&](const TPoint& p) { return p.a[0]; };
  auto twist = [&](const CDElt& keep) {
    std::vector<int> p(8);
    for (int i = 0; i < 8; ++i) {
      const TPoint& q = pts[i];
      CDElt xc = xcoord(q);
      TPoint img = q;
      if (!xc.is_zero() && xc != keep) img.t = q.t.conj();
      p[i] = idx(img);
    }
    return p;
  };
  std::set<std::vector<int>> inner_set(inner.begin(), inner.end());
  std::vector<int> id(8);
  std::iota(id.begin(), id.end(), 0);
  const char* tw_names[3] = {"gamma_a", "gamma_as", "gamma_as^sigma"};
  CDElt keeps[3] = {one, om, om2};
  bool all_inner = true;
  std::set<std::vector<int>> twists;
  for (int k = 0; k < 3; ++k) {
    auto p = twist(keeps[k]);
    bool ok = inner_set.count(p) && p != id;
    all_inner = all_inner && ok;
    twists.insert(p);
    r.add(std::string(tw_names[k]) + " is a non-trivial inner automorphism", cite::kF4Outer, 8, ok);
  }
  r.add("the three twists are the three non-trivial inner automorphisms", cite::kF4Outer, 3,
        all_inner && twists.size() == 3);

  // outer representatives gamma_sigma, rho_s
  std::vector<int> gs(8), rs(8);
  for (int i = 0; i < 8; ++i) {
    const TPoint& q = pts[i];
    TPoint a = q;
    a.a[0] = q.a[0].conj();
    a.t = q.t.conj();
    gs[i] = idx(a);
    TPoint b = q;
    b.a[0] = q.a[0] * om;
    rs[i] = idx(b);
  }
  bool gens_aut = g.is_hom(gs) && g.is_hom(rs);
  auto outer = perm_closure({gs, rs}, 8);
  bool nonabelian = false;
  for (const auto& p : outer)
    for (const auto& q : outer) {
      std::vector<int> pq(8), qp(8);
      for (int i = 0; i < 8; ++i) {
        pq[i] = p[q[i]];
        qp[i] = q[p[i]];
      }
      if (pq != qp) nonabelian = true;
    }
  int meet = 0;
  for (const auto& p : outer) meet += inner_set.count(p) ? 1 : 0;
  std::set<std::vector<int>> products;
  for (const auto& p : outer)
    for (const auto& q : inner) {
      std::vector<int> c(8);
      for (int i = 0; i < 8; ++i) c[i] = p[q[i]];
      products.insert(c);
    }
  out.outer_quotient = static_cast<int>(autos.size() / inner.size());
  r.add("gamma_sigma, rho_s are automorphisms", cite::kF4Outer, 2, gens_aut);
  r.add("<gamma_sigma, rho_s> has order " + std::to_string(outer.size()) + ", non-abelian (Sigma_3)", cite::kF4Outer,
        static_cast<long>(outer.size()), outer.size() == 6 && nonabelian);
  r.add("outer quotient of order " + std::to_string(out.outer_quotient), cite::kF4Outer, 24,
        out.outer_quotient == 6 && meet == 1 && products.size() == 24);
  // the twists are Jordan but not induced by a space isomorphism
  bool exceptional = true;
  std::set<std::vector<int>> outer_set(outer.begin(), outer.end());
  for (const auto& p : twists) exceptional = exceptional && !outer_set.count(p);
  r.add("twists not induced by a space isomorphism", cite::kF4Outer, 3, exceptional);
  r.notes.push_back("|T| = " + std::to_string(out.order));
  return out;
}

// ---------------------------------------------------------------- dimension switches

namespace {

// coordinates of x in span{1, g}
std::pair<Scalar, Scalar> coords_1g(const CDElt& x, const CDElt& g) {
  const CDAlgebra& a = x.alg();
  Mat m(a->dim, Vec());
  for (int r = 0; r < a->dim; ++r) {
    m[r].push_back(CDElt::one(a)[r]);
    m[r].push_back(g[r]);
  }
  auto sol = solve(m, x.coords(), a->K, 2);
  if (!sol) throw MathError(Err::NotInSpan, "element outside E_a");
  return {(*sol)[0], (*sol)[1]};
}

}  // namespace

DimSwitch dim_switch_up(const PQSpace& xi, const PQVec& a, const CDElt& e, long samples, uint64_t seed) {
  const CDAlgebra& H = xi->K();
  if (xi->dim != 1 || H->dim != 4) throw MathError(Err::InvalidInput, "dim_switch_up needs a dim-1 space over a quaternion algebra");
  if (inv_check(xi->inv, 20, seed).quad_type != "(iv)")
    throw MathError(Err::InvalidInput, "involutory set is not quadratic of type (iv)");
  if (pq_is_zero(a)) throw MathError(Err::ZeroArgument, "a must be nonzero");
  CDElt g = pq_q(xi, a);
  Subspace Ea = span(H, {CDElt::one(H), g});
  if (Ea.dim() != 2) throw MathError(Err::InvalidInput, "q(a) is central; E_a is not quadratic");
  Subspace perp = orthogonal_complement(Ea);
  if (!perp.contains(e) || Ea.contains(e) || e.norm().is_zero())
    throw MathError(Err::BadOrthogonalUnit, "e must lie in E_a-perp with N(e) != 0");

  const Field& F = H->K;
  CDAlgebra E = cd_with_stage(F, g.trace(), g.norm(), {}, "E_a");
  auto phi = [E, g](const CDElt& x) {
    auto [c0, c1] = coords_1g(x, g);
    return CDElt(E, {c0, c1});
  };
  InvolutorySet inv = make_involutory(E, SigmaKind::Galois, {CDElt::one(E)}, "E_a/F");
  CDElt Ne = CDElt::scalar(H, e.norm());
  CDElt qa = g;
  PQSpace dst = make_pqspace(inv, {phi(qa), phi(Ne * qa)}, {{CDElt::zero(E), CDElt::zero(E)}, {}}, "Xi~");

  CDElt a0inv = a[0].inv();
  TMap gamma = [=](const TPoint& p) {
    CDElt x = a0inv * p.a[0];
    DoublingCoords dc = doubling_coordinates(x, Ea, e);
    CDElt u = p.t - x.conj() * qa * x;
    if (!xi->inv.in_K0(u)) throw MathError(Err::InvalidInput, "point not in T");
    PQVec v = {phi(dc.h), phi(dc.y.conj())};
    return TPoint{dst, v, phi(CDElt::scalar(H, x.norm()) * qa + u)};
  };

  DimSwitch out{xi, dst, gamma, Report{}};
  Report& r = out.report;
  r.suite = "dim-switch-up";
  r.cite = cite::kSwitchUp;
  r.samples = samples;
  r.seed = seed;
  Report v = pq_verify(dst, samples, seed);
  r.add("new space satisfies the pseudo-quadratic axioms", cite::kPseudoQuadratic, samples, v.pass());
  PQVec A = pq_basis(dst, 0), B = pq_basis(dst, 1);
  r.add("f~(a,b) = 0", cite::kSwitchUp, 1, pq_f(dst, A, B).is_zero());
  r.add("f~(b,b) = N(e) f(a,a)", cite::kSwitchUp, 1, pq_f(dst, B, B) == phi(Ne * pq_f(xi, a, a)));
  r.add("q~(a) = q(a) mod F", cite::kSwitchUp, 1, inv.in_K0(pq_q(dst, A) - phi(qa)));
  r.add("q~(b) = N(e) q(a) mod F", cite::kSwitchUp, 1, inv.in_K0(pq_q(dst, B) - phi(Ne * qa)));
  Report j = t_jordan_check(xi, dst, gamma, false, samples, seed);
  for (const auto& c : j.checks) r.checks.push_back(c);
  return out;
}

DimSwitch dim_switch_down(const PQSpace& xi, long samples, uint64_t seed) {
  const CDAlgebra& E = xi->K();
  if (xi->dim != 2 || E->dim != 2) throw MathError(Err::InvalidInput, "dim_switch_down needs a dim-2 space over a quadratic field");
  if (inv_check(xi->inv, 20, seed).quad_type != "(iii)")
    throw MathError(Err::InvalidInput, "involutory set is not quadratic of type (iii)");
  PQVec A = pq_basis(xi, 0), B = pq_basis(xi, 1);
  if (!pq_f(xi, A, B).is_zero()) throw MathError(Err::BasisNotOrthogonal, "f(b_0, b_1) != 0");
  CDElt beta = -(pq_f(xi, B, B) * pq_f(xi, A, A).inv());
  bool beta_fixed = beta.conj() == beta;
  if (!beta.is_scalar()) throw MathError(Err::InvalidInput, "beta not in F");
  const Field& F = E->K;
  CDAlgebra Ht = cd_with_stage(F, E->t0, E->n0, {beta.scalar_part()}, "(E/F,beta)");
  auto iota = [Ht](const CDElt& x) {
    Vec c = zero_vec(Ht->K, 4);
    c[0] = x[0];
    c[1] = x[1];
    return CDElt(Ht, c);
  };
  auto lower = [E](const CDElt& x) { return CDElt(E, {x[0], x[1]}); };
  auto upper = [E](const CDElt& x) { return CDElt(E, {x[2], x[3]}); };
  InvolutorySet inv = make_involutory(Ht, SigmaKind::Standard, {CDElt::one(Ht)}, "(E/F,beta)");
  CDElt qa = pq_q(xi, A);
  PQSpace src = make_pqspace(inv, {iota(qa)}, {{CDElt::zero(Ht)}}, "Xi^");
  CDElt e = CDElt::basis(Ht, 2);

  TMap gamma = [=](const TPoint& p) {
    CDElt x = p.a[0];
    CDElt u = p.t - x.conj() * iota(qa) * x;
    if (!src->inv.in_K0(u)) throw MathError(Err::InvalidInput, "point not in T");
    PQVec v = {lower(x), upper(x).conj()};
    return TPoint{xi, v, qa * Scalar(x.norm()) + lower(u)};
  };

  DimSwitch out{src, xi, gamma, Report{}};
  Report& r = out.report;
  r.suite = "dim-switch-down";
  r.cite = cite::kSwitchDown;
  r.samples = samples;
  r.seed = seed;
  r.add("beta^sigma = beta", cite::kSwitchDown, 1, beta_fixed);
  r.add("beta in F", cite::kSwitchDown, 1, beta.is_scalar(), "beta = " + beta.str());
  r.add("(E/F, beta) division", cite::kSwitchDown, 1, Ht->division, Ht->division_note);
  r.add("N(e) = -beta", cite::kSwitchDown, 1, e.norm() == -beta.scalar_part());
  Report v = pq_verify(src, samples, seed);
  r.add("new space satisfies the pseudo-quadratic axioms", cite::kPseudoQuadratic, samples, v.pass());
  r.add("q(b) = N(e) q^(a) mod F", cite::kSwitchDown, 1,
        xi->inv.in_K0(pq_q(xi, B) - qa * Scalar(e.norm())));
  Report j = t_jordan_check(src, xi, gamma, false, samples, seed);
  for (const auto& c : j.checks) r.checks.push_back(c);
  return out;
}

Report dim_switch_round_trip(const PQSpace& xi_h, long samples, uint64_t seed) {
  const CDAlgebra& H = xi_h->K();
  PQVec a = pq_basis(xi_h, 0);
  // e: first basis vector orthogonal to E_a with nonzero norm
  Subspace Ea = span(H, {CDElt::one(H), pq_q(xi_h, a)});
  CDElt e;
  for (const auto& c : orthogonal_complement(Ea).basis())
    if (!c.norm().is_zero()) {
      e = c;
      break;
    }
  DimSwitch up = dim_switch_up(xi_h, a, e, samples, seed);
  DimSwitch down = dim_switch_down(up.dst, samples, seed);
  Report r;
  r.suite = "dim-switch-round-trip";
  r.cite = cite::kSwitchUp;
  r.samples = samples;
  r.seed = seed;
  r.add("dim_switch_up", cite::kSwitchUp, samples, up.report.pass());
  r.add("dim_switch_down", cite::kSwitchDown, samples, down.report.pass());
  // psi: H -> (E/F, beta), s + e t -> (s, t) in E_a coordinates
  const CDAlgebra& Ht = down.src->K();
  CDElt g = pq_q(xi_h, a);
  auto psi = [&](const CDElt& x) {
    DoublingCoords dc = doubling_coordinates(x, Ea, e);
    auto [s0, s1] = coords_1g(dc.h, g);
    auto [t0, t1] = coords_1g(dc.y, g);
    return CDElt(Ht, {s0, s1, t0, t1});
  };
  Rng rng(seed);
  Acc mult, sigma, qv, pts;
  const InvolutorySet& hinv = down.src->inv;
  for (long n = 0; n < samples; ++n) {
    CDElt x = random_elt(H, rng), y = random_elt(H, rng);
    if (psi(x * y) != psi(x) * psi(y)) mult.fail("x = " + x.str());
    if (psi(x.conj()) != psi(x).conj()) sigma.fail("x = " + x.str());
    PQVec ax = pq_scale(a, x);
    if (!hinv.in_K0(psi(pq_q(xi_h, ax)) - pq_q(down.src, {psi(x)}))) qv.fail("x = " + x.str());
    TPoint p = t_random(xi_h, rng);
    TPoint mapped{down.src, {psi(p.a[0])}, psi(p.t)};
    if (up.gamma(p) != down.gamma(mapped)) pts.fail("point " + p.str());
  }
  r.add("psi multiplicative", cite::kSwitchDown, samples, mult.ok, mult.detail);
  r.add("psi commutes with sigma", cite::kSwitchDown, samples, sigma.ok, sigma.detail);
  r.add("q-values agree mod K0", cite::kSwitchDown, samples, qv.ok, qv.detail);
  r.add("gamma_up = gamma_down o psi on T", cite::kSwitchDown, samples, pts.ok, pts.detail);
  return r;
}

}  // namespace mforge
