#include "mforge/polygons.hpp"

#include <set>
#include <unordered_map>

#include "mforge/cite.hpp"

namespace mforge {

const char* symbol_name(PolySymbol s) {
  switch (s) {
    case PolySymbol::T: return "T";
    case PolySymbol::QI: return "Q_I";
    case PolySymbol::QP: return "Q_P";
    case PolySymbol::QQ: return "Q_Q";
    case PolySymbol::QD: return "Q_D";
  }
  return "?";
}

std::string param_str(const Param& p) {
  return std::visit([](const auto& x) { return x.str(); }, p);
}

std::string param_key(const Param& p) {
  return std::visit([](const auto& x) { return x.key(); }, p);
}

bool param_eq(const Param& a, const Param& b) { return a.index() == b.index() && param_key(a) == param_key(b); }

namespace {

enum class RGKind { Ring, Span, Field, Vector, Point };

struct Acc {
  bool ok = true;
  std::string detail;
  void fail(const std::string& d) {
    if (ok) detail = d;
    ok = false;
  }
};

using Factors = std::vector<RootFactor>;

int to_std(const PolygonDesc& d, int i) { return d.opposite ? d.n + 1 - i : i; }

void check_index(const PolygonDesc& d, int i) {
  if (i < 1 || i > d.n) throw MathError(Err::IndexOutOfRange, "root index " + std::to_string(i));
}

RGKind kind_std(const PolygonDesc& d, int s) {
  bool odd = s % 2 == 1;
  switch (d.symbol) {
    case PolySymbol::T: return RGKind::Ring;
    case PolySymbol::QI: return odd ? RGKind::Span : RGKind::Ring;
    case PolySymbol::QP: return odd ? RGKind::Point : RGKind::Ring;
    case PolySymbol::QQ: return odd ? RGKind::Field : RGKind::Vector;
    case PolySymbol::QD: return RGKind::Span;
  }
  return RGKind::Ring;
}

CDAlgebra alg_std(const PolygonDesc& d, int s) {
  switch (d.symbol) {
    case PolySymbol::T:
    case PolySymbol::QQ: return d.A;
    case PolySymbol::QI: return d.inv.K;
    case PolySymbol::QP: return d.pq->K();
    case PolySymbol::QD: return d.ind.ambient;
  }
  (void)s;
  return d.A;
}

Subspace span_std(const PolygonDesc& d, int s) {
  if (d.symbol == PolySymbol::QI) return d.inv.K0;
  return s % 2 == 1 ? d.ind.K0() : d.ind.L0();
}

Param zero_std(const PolygonDesc& d, int s) {
  switch (kind_std(d, s)) {
    case RGKind::Vector: return qs_zero(d.qs);
    case RGKind::Point: return t_identity(d.pq);
    default: return CDElt::zero(alg_std(d, s));
  }
}

Param unit_std(const PolygonDesc& d, int s) {
  switch (kind_std(d, s)) {
    case RGKind::Vector: return qs_eps(d.qs);
    case RGKind::Point: return t_unit(d.pq);
    default: return CDElt::one(alg_std(d, s));
  }
}

Param add_std(const PolygonDesc& d, int s, const Param& a, const Param& b) {
  switch (kind_std(d, s)) {
    case RGKind::Vector: return std::get<QSVector>(a) + std::get<QSVector>(b);
    case RGKind::Point: return t_mul(std::get<TPoint>(a), std::get<TPoint>(b));
    default: return std::get<CDElt>(a) + std::get<CDElt>(b);
  }
}

Param neg_std(const PolygonDesc& d, int s, const Param& a) {
  switch (kind_std(d, s)) {
    case RGKind::Vector: return -std::get<QSVector>(a);
    case RGKind::Point: return t_inv(std::get<TPoint>(a));
    default: return -std::get<CDElt>(a);
  }
}

bool member_std(const PolygonDesc& d, int s, const Param& a) {
  switch (kind_std(d, s)) {
    case RGKind::Vector: return std::holds_alternative<QSVector>(a) && std::get<QSVector>(a).S == d.qs;
    case RGKind::Point: {
      if (!std::holds_alternative<TPoint>(a)) return false;
      const TPoint& p = std::get<TPoint>(a);
      return p.S == d.pq && t_member(d.pq, p.a, p.t);
    }
    case RGKind::Span:
      return std::holds_alternative<CDElt>(a) && std::get<CDElt>(a).alg() == alg_std(d, s) &&
             span_std(d, s).contains(std::get<CDElt>(a));
    case RGKind::Field:
      return std::holds_alternative<CDElt>(a) && std::get<CDElt>(a).alg() == d.A;
    case RGKind::Ring: return std::holds_alternative<CDElt>(a) && std::get<CDElt>(a).alg() == alg_std(d, s);
  }
  return false;
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

bool is_zero_param(const Param& a) {
  if (auto e = std::get_if<CDElt>(&a)) return e->is_zero();
  if (auto v = std::get_if<QSVector>(&a)) return v->is_zero();
  return std::get<TPoint>(a).is_identity();
}

const CDElt& E(const Param& p) { return std::get<CDElt>(p); }
const TPoint& P(const Param& p) { return std::get<TPoint>(p); }
const QSVector& V(const Param& p) { return std::get<QSVector>(p); }

// [x_i(a), x_j(b)^-1] in standard labels, i < j
Factors relation(const PolygonDesc& d, int i, const Param& a, int j, const Param& b) {
  Factors w;
  auto put = [&](int k, Param p) {
    if (!is_zero_param(p)) w.push_back({k, std::move(p)});
  };
  switch (d.symbol) {
    case PolySymbol::T:
      if (i == 1 && j == 3) put(2, -(E(a) * E(b)));
      break;
    case PolySymbol::QI: {
      auto sg = [&](const CDElt& x) { return d.inv.apply(x); };
      if (i == 2 && j == 4) put(3, sg(E(a)) * E(b) + sg(E(b)) * E(a));
      if (i == 1 && j == 4) {
        put(2, E(a) * E(b));
        put(3, (sg(E(b)) * E(a)) * E(b));
      }
      break;
    }
    case PolySymbol::QP: {
      auto sg = [&](const CDElt& x) { return d.pq->inv.apply(x); };
      if (i == 1 && j == 3) put(2, pq_f(d.pq, P(a).a, P(b).a));
      if (i == 2 && j == 4) put(3, TPoint{d.pq, pq_zero(d.pq), sg(E(a)) * E(b) + sg(E(b)) * E(a)});
      if (i == 1 && j == 4) {
        const TPoint& x = P(a);
        const CDElt& v = E(b);
        put(2, x.t * v);
        put(3, TPoint{d.pq, pq_scale(x.a, v), (sg(v) * x.t) * v});
      }
      break;
    }
    case PolySymbol::QQ:
      if (i == 2 && j == 4) put(3, CDElt::scalar(d.A, qs_f(V(a), V(b))));
      if (i == 1 && j == 4) {
        Scalar t = E(a)[0];
        put(2, V(b) * t);
        put(3, CDElt::scalar(d.A, t * qs_q(V(b))));
      }
      break;
    case PolySymbol::QD:
      if (i == 1 && j == 4) {
        put(2, (E(a) * E(a)) * E(b));
        put(3, E(a) * E(b));
      }
      break;
  }
  return w;
}

void push(const PolygonDesc& d, Factors& r, int k, const Param& c) {
  if (is_zero_param(c)) return;
  size_t pos = 0;
  while (pos < r.size() && r[pos].i <= k) ++pos;
  Factors suffix(r.begin() + pos, r.end());
  r.resize(pos);
  // x_j(b) x_k(c) = x_k(c) [x_k(c), x_j(b)^-1] x_j(b)
  Factors pending;
  for (const auto& s : suffix) {
    Factors w = relation(d, k, c, s.i, s.p);
    pending.insert(pending.end(), w.begin(), w.end());
    pending.push_back(s);
  }
  if (!r.empty() && r.back().i == k) {
    Param sum = add_std(d, k, r.back().p, c);
    if (is_zero_param(sum)) r.pop_back();
    else r.back().p = sum;
  } else {
    r.push_back({k, c});
  }
  for (const auto& f : pending) push(d, r, f.i, f.p);
}

Factors collect_std(const PolygonDesc& d, const Factors& fs) {
  Factors r;
  for (const auto& f : fs) push(d, r, f.i, f.p);
  return r;
}

Factors inverse_std(const PolygonDesc& d, const Factors& g) {
  Factors rev;
  for (auto it = g.rbegin(); it != g.rend(); ++it) rev.push_back({it->i, neg_std(d, it->i, it->p)});
  return collect_std(d, rev);
}

// word in the polygon's labels -> standard normal form
Factors word_to_std(const PolygonDesc& d, const Factors& w) {
  if (!d.opposite) return collect_std(d, w);
  Factors s;
  for (const auto& f : w) s.push_back({d.n + 1 - f.i, f.p});
  return collect_std(d, s);
}

Factors std_to_word(const PolygonDesc& d, const Factors& g) {
  if (!d.opposite) return g;
  // g = x_n(-c_n) ... x_1(-c_1) where g^-1 = x_1(c_1) ... x_n(c_n)
  Factors h = inverse_std(d, g);
  Factors out;
  for (auto it = h.rbegin(); it != h.rend(); ++it) out.push_back({d.n + 1 - it->i, neg_std(d, it->i, it->p)});
  return out;
}

RootWord make(const Polygon& Pg, Factors f) { return RootWord{Pg, std::move(f)}; }

std::shared_ptr<PolygonDesc> base(PolySymbol s, int n, const std::string& name) {
  auto d = std::make_shared<PolygonDesc>();
  d->symbol = s;
  d->n = n;
  d->name = name;
  return d;
}

const char* relation_cite(PolySymbol s) {
  switch (s) {
    case PolySymbol::T: return cite::kTriangle;
    case PolySymbol::QI: return cite::kInvolutoryQuadrangle;
    case PolySymbol::QP: return cite::kPseudoQuadrangle;
    case PolySymbol::QQ: return cite::kQuadraticQuadrangle;
    case PolySymbol::QD: return cite::kIndifferentQuadrangle;
  }
  return "";
}

const char* hua_cite(PolySymbol s) {
  switch (s) {
    case PolySymbol::T: return cite::kTriangleHua;
    case PolySymbol::QI: return cite::kInvolutoryHua;
    case PolySymbol::QP: return cite::kPseudoHua;
    case PolySymbol::QQ: return cite::kQuadraticHua;
    case PolySymbol::QD: return cite::kIndifferentHua;
  }
  return "";
}

// all maps in standard labels
std::vector<PMap> end_action_std(const PolygonDesc& d, int s_end, const Param& s) {
  if (is_zero_param(s)) throw MathError(Err::ZeroParameter, "Hua anchor must be nonzero");
  if (!member_std(d, s_end, s)) throw MathError(Err::InvalidInput, "anchor outside its root group");
  PMap id = [](const Param& x) { return x; };
  std::vector<PMap> m(d.n, id);
  switch (d.symbol) {
    case PolySymbol::T: {
      CDElt a = E(s), ai = a.inv();
      if (s_end == 1) {
        m[0] = [=](const Param& x) { return Param((a * E(x)) * a); };
        m[1] = [=](const Param& x) { return Param(a * E(x)); };
        m[2] = [=](const Param& x) { return Param(ai * E(x)); };
      } else {
        m[0] = [=](const Param& x) { return Param(E(x) * ai); };
        m[1] = [=](const Param& x) { return Param(E(x) * a); };
        m[2] = [=](const Param& x) { return Param((a * E(x)) * a); };
      }
      break;
    }
    case PolySymbol::QI: {
      InvolutorySet inv = d.inv;
      CDElt c = E(s), ci = c.inv(), cs = inv.apply(c), csi = cs.inv();
      if (s_end == 1) {
        m[0] = [=](const Param& x) { return Param((c * E(x)) * cs); };
        m[1] = [=](const Param& x) { return Param(c * E(x)); };
        m[3] = [=](const Param& x) { return Param(ci * E(x)); };
      } else {
        m[0] = [=](const Param& x) { return Param((csi * E(x)) * ci); };
        m[1] = [=](const Param& x) { return Param((csi * E(x)) * c); };
        m[2] = [=](const Param& x) { return Param((cs * E(x)) * c); };
        m[3] = [=](const Param& x) { return Param((c * E(x)) * c); };
      }
      break;
    }
    case PolySymbol::QP: {
      PQSpace pq = d.pq;
      if (s_end == 4) {
        CDElt c = E(s), ci = c.inv(), cs = pq->inv.apply(c), csi = cs.inv();
        m[0] = [=](const Param& x) { return Param(TPoint{pq, pq_scale(P(x).a, ci), (csi * P(x).t) * ci}); };
        m[1] = [=](const Param& x) { return Param((csi * E(x)) * c); };
        m[2] = [=](const Param& x) { return Param(TPoint{pq, pq_scale(P(x).a, c), (cs * P(x).t) * c}); };
        m[3] = [=](const Param& x) { return Param((c * E(x)) * c); };
      } else {
        TPoint anchor = P(s);
        CDElt t0 = anchor.t, t0i = t0.inv(), t0si = pq->inv.apply(t0).inv();
        m[0] = [=](const Param& x) { return Param(t_hua(anchor, P(x))); };
        m[1] = [=](const Param& x) { return Param(t0 * E(x)); };
        m[2] = [=](const Param& x) {
          const TPoint& y = P(x);
          CDElt lam = t0i * pq_f(pq, anchor.a, y.a);
          return Param(TPoint{pq, pq_add(y.a, pq_neg(pq_scale(anchor.a, lam))), y.t});
        };
        m[3] = [=](const Param& x) { return Param(t0si * E(x)); };
      }
      break;
    }
    case PolySymbol::QQ: {
      CDAlgebra A = d.A;
      if (s_end == 1) {
        Scalar t = E(s)[0], ti = t.inv();
        m[0] = [=](const Param& x) { return Param(E(x) * (t * t)); };
        m[1] = [=](const Param& x) { return Param(V(x) * t); };
        m[3] = [=](const Param& x) { return Param(V(x) * ti); };
      } else {
        QSVector a = V(s);
        Scalar qa = qs_q(a), qai = qa.inv();
        m[0] = [=](const Param& x) { return Param(E(x) * qai); };
        m[1] = [=](const Param& x) { return Param(qs_hua(a, V(x)) * qai); };
        m[2] = [=](const Param& x) { return Param(E(x) * qa); };
        m[3] = [=](const Param& x) { return Param(qs_hua(a, V(x))); };
      }
      break;
    }
    case PolySymbol::QD: {
      CDElt c = E(s), ci = c.inv();
      if (s_end == 1) {
        m[0] = [=](const Param& x) { return Param(E(x) * (c * c)); };
        m[1] = [=](const Param& x) { return Param(E(x) * (c * c)); };
        m[3] = [=](const Param& x) { return Param(E(x) * (ci * ci)); };
      } else {
        m[0] = [=](const Param& x) { return Param(E(x) * ci); };
        m[2] = [=](const Param& x) { return Param(E(x) * c); };
        m[3] = [=](const Param& x) { return Param(E(x) * (c * c)); };
      }
      break;
    }
  }
  return m;
}

// finite word group with right multiplication by root generators tabulated
struct WordTable {
  std::vector<RootWord> elts;
  std::unordered_map<std::string, int> index;
  std::vector<RootFactor> gens;
  std::unordered_map<std::string, int> gen_index;  // key of the one-factor word
  std::vector<std::vector<int>> rmul;
  std::vector<std::vector<int>> fac;
  int identity = 0;

  int mul(int x, int y) const {
    for (int g : fac[y]) x = rmul[x][g];
    return x;
  }
};

WordTable build_table(const Polygon& Pg) {
  WordTable t;
  t.elts = rgs_enumerate(Pg);
  for (size_t k = 0; k < t.elts.size(); ++k) t.index[t.elts[k].key()] = static_cast<int>(k);
  t.identity = t.index.at(rgs_identity(Pg).key());
  for (int i = 1; i <= Pg->n; ++i)
    for (const auto& p : rg_enumerate(Pg, i))
      if (!is_zero_param(p)) {
        t.gen_index[rgs_root(Pg, i, p).key()] = static_cast<int>(t.gens.size());
        t.gens.push_back({i, p});
      }
  t.rmul.assign(t.elts.size(), std::vector<int>(t.gens.size()));
  for (size_t x = 0; x < t.elts.size(); ++x)
    for (size_t g = 0; g < t.gens.size(); ++g) {
      RootWord y = rgs_multiply(t.elts[x], rgs_root(Pg, t.gens[g].i, t.gens[g].p));
      auto it = t.index.find(y.key());
      if (it == t.index.end()) throw MathError(Err::InvalidInput, "word group not closed: " + y.str());
      t.rmul[x][g] = it->second;
    }
  t.fac.resize(t.elts.size());
  for (size_t x = 0; x < t.elts.size(); ++x)
    for (const auto& f : t.elts[x].f) t.fac[x].push_back(t.gen_index.at(rgs_root(Pg, f.i, f.p).key()));
  return t;
}

}  // namespace

// ---------------------------------------------------------------- descriptors

Polygon poly_triangle(const CDAlgebra& A) {
  if (A->dim > 8 || !A->division) throw MathError(Err::InvalidInput, "triangles need an alternative division ring");
  auto d = base(PolySymbol::T, 3, "T(" + A->name + ")");
  d->A = A;
  return d;
}

Polygon poly_involutory(const InvolutorySet& S) {
  auto d = base(PolySymbol::QI, 4, "Q_I(" + S.name + ")");
  d->inv = S;
  InvCheck c = inv_check(S, 20, 1);
  if (!c.axioms) throw MathError(Err::InvalidInput, "involutory set axioms fail");
  if (!c.proper) d->notes.push_back("parameter system is not proper");
  return d;
}

Polygon poly_pseudo(const PQSpace& S) {
  auto d = base(PolySymbol::QP, 4, "Q_P(" + S->name + ")");
  d->pq = S;
  return d;
}

Polygon poly_quadratic(const QuadSpace& S) {
  auto d = base(PolySymbol::QQ, 4, "Q_Q(" + (S->name.empty() ? std::string("L0") : S->name) + ")");
  d->qs = S;
  d->A = cd_field(S->K, "K");
  return d;
}

Polygon poly_indifferent(const IndifferentSet& S) {
  auto d = base(PolySymbol::QD, 4, "Q_D(" + S.ambient->name + ")");
  d->ind = S;
  IndCheck c = ind_check(S);
  if (!c.axioms) throw MathError(Err::InvalidInput, "indifferent set axioms fail");
  if (!c.proper) d->notes.push_back("parameter system is not proper");
  return d;
}

Polygon rgs_opposite(const Polygon& P) {
  auto d = std::make_shared<PolygonDesc>(*P);
  d->opposite = !P->opposite;
  const std::string& nm = P->name;
  if (d->opposite) {
    auto paren = nm.find('(');
    d->name = nm.substr(0, paren) + "o" + nm.substr(paren);
  } else {
    auto o = nm.find("o(");
    d->name = nm.substr(0, o) + nm.substr(o + 1);
  }
  return d;
}

bool same_polygon_type(const Polygon& a, const Polygon& b) {
  return a->symbol == b->symbol && a->opposite == b->opposite && a->n == b->n;
}

// ---------------------------------------------------------------- root groups

Param rg_zero(const Polygon& P, int i) {
  check_index(*P, i);
  return zero_std(*P, to_std(*P, i));
}
Param rg_unit(const Polygon& P, int i) {
  check_index(*P, i);
  return unit_std(*P, to_std(*P, i));
}
Param rg_add(const Polygon& P, int i, const Param& a, const Param& b) {
  check_index(*P, i);
  return add_std(*P, to_std(*P, i), a, b);
}
Param rg_neg(const Polygon& P, int i, const Param& a) {
  check_index(*P, i);
  return neg_std(*P, to_std(*P, i), a);
}
bool rg_is_zero(const Param& a) { return is_zero_param(a); }
bool rg_member(const Polygon& P, int i, const Param& a) {
  check_index(*P, i);
  return member_std(*P, to_std(*P, i), a);
}

Param rg_random(const Polygon& P, int i, Rng& rng, int height) {
  check_index(*P, i);
  const PolygonDesc& d = *P;
  int s = to_std(d, i);
  switch (kind_std(d, s)) {
    case RGKind::Ring: return random_elt(alg_std(d, s), rng, height);
    case RGKind::Span: {
      CDAlgebra a = alg_std(d, s);
      CDElt e = CDElt::zero(a);
      for (const auto& b : span_std(d, s).basis()) e += b * random_scalar(a->K, rng, height);
      return e;
    }
    case RGKind::Field: return CDElt::scalar(d.A, random_scalar(d.A->K, rng, height));
    case RGKind::Vector: return qs_random(d.qs, rng, height);
    case RGKind::Point: return t_random(d.pq, rng, height);
  }
  throw MathError(Err::InvalidInput, "unknown root group");
}

std::vector<Param> rg_enumerate(const Polygon& P, int i) {
  check_index(*P, i);
  if (!poly_finite(P)) throw MathError(Err::InvalidInput, "root group is infinite");
  const PolygonDesc& d = *P;
  int s = to_std(d, i);
  std::vector<Param> out;
  switch (kind_std(d, s)) {
    case RGKind::Ring:
      for (auto& e : enumerate_elts(alg_std(d, s))) out.push_back(e);
      break;
    case RGKind::Span:
      for (auto& e : span_elements(span_std(d, s))) out.push_back(e);
      break;
    case RGKind::Field:
      for (auto& k : enumerate(d.A->K)) out.push_back(CDElt::scalar(d.A, k));
      break;
    case RGKind::Vector:
      for (auto& v : qs_enumerate(d.qs)) out.push_back(v);
      break;
    case RGKind::Point:
      for (auto& p : t_enumerate(d.pq)) out.push_back(p);
      break;
  }
  return out;
}

bool poly_finite(const Polygon& P) { return is_finite(alg_std(*P, 2)->K); }

// ---------------------------------------------------------------- words

std::string RootWord::str() const {
  if (f.empty()) return "1";
  std::string s;
  for (size_t k = 0; k < f.size(); ++k)
    s += (k ? " " : "") + std::string("x") + std::to_string(f[k].i) + "(" + param_str(f[k].p) + ")";
  return s;
}

std::string RootWord::key() const {
  std::string s;
  for (const auto& x : f) s += std::to_string(x.i) + ":" + param_key(x.p) + "|";
  return s;
}

RootWord rgs_identity(const Polygon& P) { return make(P, {}); }

RootWord rgs_root(const Polygon& P, int i, const Param& p) {
  check_index(*P, i);
  if (!rg_member(P, i, p)) throw MathError(Err::InvalidInput, "parameter outside U_" + std::to_string(i));
  if (is_zero_param(p)) return rgs_identity(P);
  return make(P, {{i, p}});
}

RootWord rgs_word(const Polygon& P, const std::vector<RootFactor>& factors) {
  for (const auto& f : factors) check_index(*P, f.i);
  return make(P, std_to_word(*P, word_to_std(*P, factors)));
}

RootWord rgs_multiply(const RootWord& a, const RootWord& b) {
  if (a.P != b.P) throw MathError(Err::InvalidInput, "words of different polygons");
  const PolygonDesc& d = *a.P;
  if (!d.opposite) {
    Factors r = a.f;
    for (const auto& x : b.f) push(d, r, x.i, x.p);
    return make(a.P, r);
  }
  Factors r = word_to_std(d, a.f);
  for (const auto& x : word_to_std(d, b.f)) push(d, r, x.i, x.p);
  return make(a.P, std_to_word(d, r));
}

RootWord rgs_inverse(const RootWord& a) {
  const PolygonDesc& d = *a.P;
  return make(a.P, std_to_word(d, inverse_std(d, word_to_std(d, a.f))));
}

RootWord rgs_commutator(const Polygon& P, int i, const Param& a, int j, const Param& b) {
  check_index(*P, i);
  check_index(*P, j);
  if (i >= j) throw MathError(Err::IndexOutOfRange, "commutator needs i < j");
  return rgs_word(P, {{i, rg_neg(P, i, a)}, {j, rg_neg(P, j, b)}, {i, a}, {j, b}});
}

RootWord rgs_random(const Polygon& P, Rng& rng, int height) {
  Factors f;
  for (int i = 1; i <= P->n; ++i) {
    Param p = rg_random(P, i, rng, height);
    if (!is_zero_param(p)) f.push_back({i, p});
  }
  return make(P, f);
}

std::vector<RootWord> rgs_enumerate(const Polygon& P) {
  std::vector<std::vector<Param>> per;
  for (int i = 1; i <= P->n; ++i) per.push_back(rg_enumerate(P, i));
  std::vector<RootWord> out;
  std::vector<size_t> idx(P->n, 0);
  for (;;) {
    Factors f;
    for (int i = 0; i < P->n; ++i)
      if (!is_zero_param(per[i][idx[i]])) f.push_back({i + 1, per[i][idx[i]]});
    out.push_back(make(P, f));
    int k = P->n - 1;
    while (k >= 0 && ++idx[k] == per[k].size()) idx[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

// ---------------------------------------------------------------- Hua actions

EndAction rgs_hua_end_action(const Polygon& P, End end, const Param& s) {
  const PolygonDesc& d = *P;
  int label = end == End::First ? 1 : d.n;
  auto m = end_action_std(d, to_std(d, label), s);
  EndAction a;
  for (int i = 1; i <= d.n; ++i) a.maps.push_back(m[to_std(d, i) - 1]);
  return a;
}

RootWord apply_action(const EndAction& a, const RootWord& w) {
  Factors f;
  for (const auto& x : w.f) f.push_back({x.i, a.maps[x.i - 1](x.p)});
  return rgs_word(w.P, f);
}

// ---------------------------------------------------------------- verification

Report rgs_verify(const Polygon& P, long samples, uint64_t seed) {
  Report r;
  r.suite = "polygon/" + P->name;
  r.cite = cite::kParametrizedPolygon;
  r.samples = samples;
  r.seed = seed;
  for (const auto& n : P->notes) r.notes.push_back(n);
  const char* rc = relation_cite(P->symbol);
  Rng rng(seed);
  if (poly_finite(P)) {
    WordTable t = build_table(P);
    long N = static_cast<long>(t.elts.size());
    long expect = 1;
    for (int i = 1; i <= P->n; ++i) expect *= static_cast<long>(rg_enumerate(P, i).size());
    r.notes.push_back("|U| = " + std::to_string(N));
    r.add("|U| = product of root group orders", cite::kParametrizedPolygon, 1, N == expect);
    Acc ident, inv;
    for (int x = 0; x < N; ++x) {
      if (t.mul(x, t.identity) != x || t.mul(t.identity, x) != x) ident.fail(t.elts[x].str());
      int y = t.index.at(rgs_inverse(t.elts[x]).key());
      if (t.mul(x, y) != t.identity || t.mul(y, x) != t.identity) inv.fail(t.elts[x].str());
    }
    r.add("identity", cite::kParametrizedPolygon, N, ident.ok, ident.detail);
    r.add("inverses", cite::kParametrizedPolygon, N, inv.ok, inv.detail);
    Acc assoc;
    long triples = 0;
    if (N <= 64) {
      for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
          int xy = t.mul(x, y);
          for (int z = 0; z < N; ++z) {
            ++triples;
            if (t.mul(xy, z) != t.mul(x, t.mul(y, z)))
              assoc.fail(t.elts[x].str() + ", " + t.elts[y].str() + ", " + t.elts[z].str());
          }
        }
      r.add("associativity, all triples", rc, triples, assoc.ok, assoc.detail);
    } else {
      // (xy)g = x(yg) for all x, y and root generators g implies associativity
      int G = static_cast<int>(t.gens.size());
      for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
          int xy = t.mul(x, y);
          for (int g = 0; g < G; ++g) {
            ++triples;
            if (t.rmul[xy][g] != t.mul(x, t.rmul[y][g]))
              assoc.fail(t.elts[x].str() + ", " + t.elts[y].str() + ", generator " + std::to_string(g));
          }
        }
      r.add("associativity, all pairs against all root generators", rc, triples, assoc.ok, assoc.detail);
    }
    Acc swap;
    long pairs = 0;
    for (const auto& u : t.gens)
      for (const auto& v : t.gens)
        if (u.i < v.i) {
          ++pairs;
          RootWord c1 = rgs_commutator(P, u.i, u.p, v.i, v.p);
          RootWord uu = rgs_root(P, u.i, u.p), vv = rgs_root(P, v.i, v.p);
          RootWord c2 = rgs_multiply(rgs_multiply(rgs_inverse(vv), rgs_inverse(uu)), rgs_multiply(vv, uu));
          if (rgs_inverse(c1) != c2) swap.fail("x" + std::to_string(u.i) + "(" + param_str(u.p) + "), x" +
                                               std::to_string(v.i) + "(" + param_str(v.p) + ")");
        }
    r.add("[u, v]^-1 = [v, u]", cite::kTriangleOpposite, pairs, swap.ok, swap.detail);
    return r;
  }
  Acc assoc, ident, inv, swap;
  for (long k = 0; k < samples; ++k) {
    RootWord x = rgs_random(P, rng), y = rgs_random(P, rng), z = rgs_random(P, rng);
    if (rgs_multiply(rgs_multiply(x, y), z) != rgs_multiply(x, rgs_multiply(y, z)))
      assoc.fail(x.str() + ", " + y.str() + ", " + z.str());
    if (rgs_multiply(x, rgs_identity(P)) != x || rgs_multiply(rgs_identity(P), x) != x) ident.fail(x.str());
    if (!rgs_multiply(x, rgs_inverse(x)).is_identity()) inv.fail(x.str());
    int i = 1 + static_cast<int>(draw_below(rng, P->n - 1));
    int j = i + 1 + static_cast<int>(draw_below(rng, P->n - i));
    Param a = rg_random(P, i, rng), b = rg_random(P, j, rng);
    RootWord uu = rgs_root(P, i, a), vv = rgs_root(P, j, b);
    RootWord c2 = rgs_multiply(rgs_multiply(rgs_inverse(vv), rgs_inverse(uu)), rgs_multiply(vv, uu));
    if (rgs_inverse(rgs_commutator(P, i, a, j, b)) != c2) swap.fail(uu.str() + ", " + vv.str());
  }
  r.add("associativity", rc, samples, assoc.ok, assoc.detail);
  r.add("identity", cite::kParametrizedPolygon, samples, ident.ok, ident.detail);
  r.add("inverses", cite::kParametrizedPolygon, samples, inv.ok, inv.detail);
  r.add("[u, v]^-1 = [v, u]", cite::kTriangleOpposite, samples, swap.ok, swap.detail);
  return r;
}

Report rgs_hua_consistency(const Polygon& P, long samples, uint64_t seed) {
  Report r;
  r.suite = "polygon-hua/" + P->name;
  r.cite = hua_cite(P->symbol);
  r.samples = samples;
  r.seed = seed;
  const char* hc = hua_cite(P->symbol);
  const int n = P->n;
  Rng rng(seed);
  bool finite = poly_finite(P);

  // unit anchors act trivially
  Acc unit;
  for (End e : {End::First, End::Last}) {
    int label = e == End::First ? 1 : n;
    EndAction a = rgs_hua_end_action(P, e, rg_unit(P, label));
    for (long k = 0; k < std::min<long>(samples, 50); ++k) {
      RootWord w = rgs_random(P, rng);
      if (apply_action(a, w) != w) unit.fail("end " + std::to_string(label) + ", word " + w.str());
    }
  }
  r.add("unit anchors act trivially", hc, std::min<long>(samples, 50) * 2, unit.ok, unit.detail);

  std::vector<std::pair<End, Param>> anchors;
  if (finite) {
    for (End e : {End::First, End::Last})
      for (const auto& p : rg_enumerate(P, e == End::First ? 1 : n))
        if (!is_zero_param(p)) anchors.push_back({e, p});
  } else {
    long k = std::max<long>(2, std::min<long>(samples / 50, 10));
    for (long c = 0; c < k; ++c)
      for (End e : {End::First, End::Last}) {
        int label = e == End::First ? 1 : n;
        Param p;
        do p = rg_random(P, label, rng, 5);
        while (is_zero_param(p));
        anchors.push_back({e, p});
      }
  }
  long per = finite ? 0 : std::max<long>(1, samples / static_cast<long>(anchors.size()));

  Acc hom, into, rel;
  long checks = 0;
  for (const auto& [e, s] : anchors) {
    EndAction a = rgs_hua_end_action(P, e, s);
    std::string who = std::string(e == End::First ? "h_1(" : "h_n(") + param_str(s) + ")";
    auto pair_check = [&](int i, const Param& x, int j, const Param& y) {
      ++checks;
      RootWord lhs = apply_action(a, rgs_commutator(P, i, x, j, y));
      RootWord rhs = rgs_commutator(P, i, a.maps[i - 1](x), j, a.maps[j - 1](y));
      if (lhs != rhs)
        rel.fail(who + ": [x" + std::to_string(i) + "(" + param_str(x) + "), x" + std::to_string(j) + "(" +
                 param_str(y) + ")]");
    };
    for (int i = 1; i <= n; ++i) {
      auto map = a.maps[i - 1];
      auto one = [&](const Param& x, const Param& y) {
        Param fx = map(x);
        if (!rg_member(P, i, fx)) into.fail(who + " on U_" + std::to_string(i) + ": " + param_str(x));
        if (!param_eq(map(rg_add(P, i, x, y)), rg_add(P, i, fx, map(y))))
          hom.fail(who + " on U_" + std::to_string(i) + ": " + param_str(x) + ", " + param_str(y));
      };
      if (finite) {
        auto all = rg_enumerate(P, i);
        for (const auto& x : all)
          for (const auto& y : all) one(x, y);
      } else {
        for (long k = 0; k < per; ++k) one(rg_random(P, i, rng), rg_random(P, i, rng));
      }
    }
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        if (finite) {
          for (const auto& x : rg_enumerate(P, i))
            for (const auto& y : rg_enumerate(P, j)) pair_check(i, x, j, y);
        } else {
          for (long k = 0; k < per; ++k) pair_check(i, rg_random(P, i, rng), j, rg_random(P, j, rng));
        }
      }
  }
  r.add("root group maps land in their groups", hc, checks, into.ok, into.detail);
  r.add("root group maps are homomorphisms", hc, checks, hom.ok, hom.detail);
  r.add("commutator relations preserved", hc, checks, rel.ok, rel.detail);

  if (finite) {
    WordTable t = build_table(P);
    int N = static_cast<int>(t.elts.size());
    std::vector<int> end_gens;
    for (int g = 0; g < static_cast<int>(t.gens.size()); ++g)
      if (t.gens[g].i == 1 || t.gens[g].i == n) end_gens.push_back(g);
    Acc extend, gen_all, bij, agree;
    for (const auto& [e, s] : anchors) {
      EndAction a = rgs_hua_end_action(P, e, s);
      std::vector<int> gimg(t.gens.size());
      for (int g : end_gens) {
        Param p = a.maps[t.gens[g].i - 1](t.gens[g].p);
        gimg[g] = t.gen_index.at(rgs_root(P, t.gens[g].i, p).key());
      }
      // extend along the Cayley graph of the end generators
      std::vector<int> phi(N, -1);
      phi[t.identity] = t.identity;
      std::vector<int> queue{t.identity};
      for (size_t q = 0; q < queue.size(); ++q) {
        int x = queue[q];
        for (int g : end_gens) {
          int y = t.rmul[x][g];
          int img = t.rmul[phi[x]][gimg[g]];
          if (phi[y] < 0) {
            phi[y] = img;
            queue.push_back(y);
          } else if (phi[y] != img) {
            extend.fail("anchor " + param_str(s) + " at " + t.elts[y].str());
          }
        }
      }
      if (static_cast<int>(queue.size()) != N) gen_all.fail("anchor " + param_str(s));
      std::set<int> img(phi.begin(), phi.end());
      if (static_cast<int>(img.size()) != N || img.count(-1)) bij.fail("anchor " + param_str(s));
      for (int x = 0; x < N && agree.ok; ++x)
        if (phi[x] >= 0 && t.index.at(apply_action(a, t.elts[x]).key()) != phi[x])
          agree.fail("anchor " + param_str(s) + " at " + t.elts[x].str());
    }
    long work = static_cast<long>(anchors.size()) * N;
    r.add("U_1 and U_n generate the word group", cite::kParametrizedPolygon, work, gen_all.ok, gen_all.detail);
    r.add("end maps extend to a well-defined homomorphism", hc, work * static_cast<long>(end_gens.size()), extend.ok,
          extend.detail);
    r.add("extension is bijective", hc, work, bij.ok, bij.detail);
    r.add("extension agrees with the induced middle maps", hc, work, agree.ok, agree.detail);
  }
  return r;
}

Report rgs_reparam_check(const Polygon& src, const Polygon& dst, const std::vector<PMap>& maps, long samples,
                         uint64_t seed) {
  if (src->symbol != dst->symbol || src->n != dst->n) throw MathError(Err::InvalidInput, "polygons of different types");
  if (static_cast<int>(maps.size()) != src->n) throw MathError(Err::InvalidInput, "one map per root group");
  Report r;
  r.suite = "reparametrization/" + src->name + "->" + dst->name;
  r.cite = src->symbol == PolySymbol::T ? cite::kTriangleReparam : cite::kReparametrization;
  r.seed = seed;
  Rng rng(seed);
  bool finite = poly_finite(src);
  Acc hom, rel;
  long n_hom = 0, n_rel = 0;
  auto image = [&](const RootWord& w) {
    Factors f;
    for (const auto& x : w.f) f.push_back({x.i, maps[x.i - 1](x.p)});
    return rgs_word(dst, f);
  };
  for (int i = 1; i <= src->n; ++i) {
    auto one = [&](const Param& x, const Param& y) {
      ++n_hom;
      if (!param_eq(maps[i - 1](rg_add(src, i, x, y)), rg_add(dst, i, maps[i - 1](x), maps[i - 1](y))))
        hom.fail("U_" + std::to_string(i) + ": " + param_str(x) + ", " + param_str(y));
    };
    if (finite) {
      auto all = rg_enumerate(src, i);
      for (const auto& x : all)
        for (const auto& y : all) one(x, y);
    } else {
      for (long k = 0; k < samples; ++k) one(rg_random(src, i, rng), rg_random(src, i, rng));
    }
    for (int j = i + 1; j <= src->n; ++j) {
      auto pc = [&](const Param& x, const Param& y) {
        ++n_rel;
        if (image(rgs_commutator(src, i, x, j, y)) != rgs_commutator(dst, i, maps[i - 1](x), j, maps[j - 1](y)))
          rel.fail("[x" + std::to_string(i) + "(" + param_str(x) + "), x" + std::to_string(j) + "(" + param_str(y) +
                   ")]");
      };
      if (finite) {
        for (const auto& x : rg_enumerate(src, i))
          for (const auto& y : rg_enumerate(src, j)) pc(x, y);
      } else {
        for (long k = 0; k < samples; ++k) pc(rg_random(src, i, rng), rg_random(src, j, rng));
      }
    }
  }
  r.samples = n_rel;
  r.add("each map is additive", cite::kReparametrization, n_hom, hom.ok, hom.detail);
  r.add("commutator relations carried over", r.cite, n_rel, rel.ok, rel.detail);
  return r;
}

}  // namespace mforge
