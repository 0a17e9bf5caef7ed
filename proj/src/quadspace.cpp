#include "mforge/quadspace.hpp"

#include <set>
#include <sstream>

#include "mforge/cite.hpp"

namespace mforge {

const char* anisotropy_name(Anisotropy a) {
  switch (a) {
    case Anisotropy::Exhaustive: return "exhaustive";
    case Anisotropy::Structural: return "structural";
    case Anisotropy::Attested: return "attested";
  }
  return "?";
}

QSVector qs_vector(const QuadSpace& s, const Vec& c) {
  if (static_cast<int>(c.size()) != s->dim) throw MathError(Err::InvalidInput, "vector length mismatch");
  return QSVector{s, c};
}
QSVector qs_zero(const QuadSpace& s) { return {s, zero_vec(s->K, s->dim)}; }
QSVector qs_eps(const QuadSpace& s) { return {s, s->eps}; }
QSVector qs_basis(const QuadSpace& s, int i) {
  Vec c = zero_vec(s->K, s->dim);
  c.at(i) = Scalar::one(s->K);
  return {s, c};
}

QSVector qs_random(const QuadSpace& s, Rng& rng, int height) {
  Vec c;
  for (int i = 0; i < s->dim; ++i) c.push_back(random_scalar(s->K, rng, height));
  return {s, c};
}

std::vector<QSVector> qs_enumerate(const QuadSpace& s) {
  std::vector<Scalar> ks = enumerate(s->K);
  std::vector<QSVector> out;
  std::vector<size_t> idx(s->dim, 0);
  for (;;) {
    Vec c;
    for (int i = 0; i < s->dim; ++i) c.push_back(ks[idx[i]]);
    out.push_back({s, c});
    int p = 0;
    while (p < s->dim && ++idx[p] == ks.size()) idx[p++] = 0;
    if (p == s->dim) break;
  }
  return out;
}

QSVector QSVector::operator+(const QSVector& o) const {
  if (S != o.S) throw MathError(Err::SpaceMismatch, "vectors of different spaces");
  Vec r(c.size());
  for (size_t i = 0; i < c.size(); ++i) r[i] = c[i] + o.c[i];
  return {S, r};
}
QSVector QSVector::operator-(const QSVector& o) const { return *this + (-o); }
QSVector QSVector::operator-() const {
  Vec r(c.size());
  for (size_t i = 0; i < c.size(); ++i) r[i] = -c[i];
  return {S, r};
}
QSVector QSVector::operator*(const Scalar& s) const {
  Vec r(c.size());
  for (size_t i = 0; i < c.size(); ++i) r[i] = c[i] * s;
  return {S, r};
}

std::string QSVector::str() const {
  std::string s = "(";
  for (size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + c[i].str();
  return s + ")";
}
std::string QSVector::key() const {
  std::string k;
  for (const auto& x : c) k += x.key() + "|";
  return k;
}

Scalar qs_q(const QSVector& x) {
  const auto& S = *x.S;
  Scalar r = Scalar::zero(S.K);
  for (int i = 0; i < S.dim; ++i) {
    if (x.c[i].is_zero()) continue;
    r += S.q_basis[i] * x.c[i] * x.c[i];
    for (int j = i + 1; j < S.dim; ++j) r += S.f[i][j] * x.c[i] * x.c[j];
  }
  return r;
}

Scalar qs_f(const QSVector& x, const QSVector& y) {
  if (x.S != y.S) throw MathError(Err::SpaceMismatch, "vectors of different spaces");
  const auto& S = *x.S;
  Scalar r = Scalar::zero(S.K);
  for (int i = 0; i < S.dim; ++i) {
    if (x.c[i].is_zero()) continue;
    for (int j = 0; j < S.dim; ++j) r += x.c[i] * S.f[i][j] * y.c[j];
  }
  return r;
}

Scalar qs_trace(const QSVector& x) { return qs_f(qs_eps(x.S), x); }
QSVector qs_sigma(const QSVector& x) { return qs_eps(x.S) * qs_trace(x) - x; }

QSVector qs_hua(const QSVector& a, const QSVector& v) {
  Scalar qa = qs_q(a);
  if (qa.is_zero()) throw MathError(Err::ZeroAnchor, "anchor with q(a) = 0");
  QSVector vs = qs_sigma(v);
  return a * qs_f(a, vs) - vs * qa;
}

QSVector qs_hua_pi(const QSVector& a, const QSVector& v) {
  Scalar qa = qs_q(a);
  if (qa.is_zero()) throw MathError(Err::ZeroAnchor, "anchor with q(a) = 0");
  auto pi = [](const QSVector& b, const QSVector& w) { return w - b * (qs_f(b, w) / qs_q(b)); };
  return pi(a, pi(qs_eps(a.S), v)) * qa;
}

QuadSpace make_quadspace(const Field& K, const Vec& q_basis, const Mat& f_upper, const Vec& eps,
                         const std::string& name, bool structural) {
  auto d = std::make_shared<QuadSpaceDesc>();
  d->K = K;
  d->dim = static_cast<int>(q_basis.size());
  d->q_basis = q_basis;
  d->eps = eps;
  d->name = name;
  if (static_cast<int>(eps.size()) != d->dim) throw MathError(Err::InvalidInput, "basepoint length mismatch");
  d->f.assign(d->dim, zero_vec(K, d->dim));
  for (int i = 0; i < d->dim; ++i) {
    d->f[i][i] = q_basis[i] + q_basis[i];
    for (int j = i + 1; j < d->dim; ++j) {
      d->f[i][j] = f_upper.at(i).at(j);
      d->f[j][i] = f_upper[i][j];
    }
  }
  QuadSpace s = d;
  if (!qs_q(qs_eps(s)).is_one()) throw MathError(Err::InvalidInput, "q(eps) must be 1");
  if (is_finite(K)) {
    for (const auto& v : qs_enumerate(s))
      if (!v.is_zero() && qs_q(v).is_zero()) throw MathError(Err::InvalidInput, "isotropic vector " + v.str());
    d->aniso = Anisotropy::Exhaustive;
  } else if (structural) {
    d->aniso = Anisotropy::Structural;
  } else {
    Rng rng(0x5eed);
    for (int n = 0; n < 500; ++n) {
      QSVector v = qs_random(s, rng, 6);
      if (!v.is_zero() && qs_q(v).is_zero()) throw MathError(Err::InvalidInput, "isotropic vector " + v.str());
    }
    d->aniso = Anisotropy::Attested;
  }
  return s;
}

QuadSpace norm_space(const CDAlgebra& a, const std::string& name) {
  Vec qb;
  Mat fu(a->dim, zero_vec(a->K, a->dim));
  for (int i = 0; i < a->dim; ++i) {
    qb.push_back(CDElt::basis(a, i).norm());
    for (int j = i + 1; j < a->dim; ++j) fu[i][j] = bilinear(CDElt::basis(a, i), CDElt::basis(a, j));
  }
  Vec eps = zero_vec(a->K, a->dim);
  eps[0] = Scalar::one(a->K);
  std::string n = name.empty() ? "N(" + a->name + ")" : name;
  if (!is_finite(a->K) && !a->division)
    throw MathError(Err::InvalidInput, "norm form of " + a->name + " is not certified anisotropic");
  return make_quadspace(a->K, qb, fu, eps, n, a->division);
}

Defect qs_defect(const QuadSpace& s) {
  Defect d;
  d.radical = kernel(s->f, s->K, s->dim);
  for (const auto& row : s->f)
    if (!is_zero_vec(row)) d.proper = true;
  return d;
}

CDElt SmallDimField::embed(const QSVector& v) const { return CDElt(F, mat_vec(to_F, v.c)); }
QSVector SmallDimField::back(const CDElt& x, const QuadSpace& s) const {
  return qs_vector(s, mat_vec(from_F, x.coords()));
}

SmallDimField qs_small_dim_field(const QuadSpace& s) {
  if (s->dim > 2) throw MathError(Err::DimensionTooLarge, "small-dimension field needs dim <= 2");
  SmallDimField out;
  const Field& K = s->K;
  if (s->dim == 1) {
    out.F = cd_field(K, "F(" + s->name + ")");
    out.to_F = {{s->eps[0].inv()}};
    out.from_F = {{s->eps[0]}};
    out.type_tag = "(ii)";
    return out;
  }
  // complement x: the first standard basis vector independent of eps
  QSVector x = qs_basis(s, s->eps[1].is_zero() ? 1 : 0);
  out.xt = x;
  Scalar T = qs_trace(x), qx = qs_q(x);
  out.F = cd_with_stage(K, T, qx, {}, "F(" + s->name + ")");
  // columns eps, x
  out.from_F = {{s->eps[0], x.c[0]}, {s->eps[1], x.c[1]}};
  out.to_F = mat_inverse(out.from_F, K);
  bool sigma_id = true;
  for (int i = 0; i < 2; ++i)
    if (qs_sigma(qs_basis(s, i)) != qs_basis(s, i)) sigma_id = false;
  out.type_tag = (characteristic(K) == 2 && sigma_id) ? "(i)" : "(iii)";
  return out;
}

Report qs_verify(const QuadSpace& s, long samples, uint64_t seed) {
  Report r;
  r.suite = "quadspace/" + s->name;
  r.cite = cite::kHuaClosedForm;
  r.samples = samples;
  r.seed = seed;
  r.notes.push_back(std::string("anisotropy: ") + anisotropy_name(s->aniso));
  Rng rng(seed);
  bool finite = is_finite(s->K);
  std::vector<QSVector> all;
  if (finite) all = qs_enumerate(s);
  auto draw = [&]() { return finite ? all[draw_below(rng, all.size())] : qs_random(s, rng); };
  auto draw_nz = [&]() {
    for (;;) {
      QSVector v = draw();
      if (!v.is_zero()) return v;
    }
  };
  struct Acc {
    bool ok = true;
    std::string detail;
    void fail(const std::string& d) {
      if (ok) detail = d;
      ok = false;
    }
  } polar, sig, tr, adj, diag, hua_agree, add, lin, scale, unit;
  r.add("q(eps) = 1", cite::kHuaClosedForm, 1, qs_q(qs_eps(s)).is_one());
  for (long n = 0; n < samples; ++n) {
    QSVector x = draw(), y = draw(), a = draw_nz();
    Scalar t = random_scalar(s->K, rng);
    if (qs_q(x + y) != qs_q(x) + qs_q(y) + qs_f(x, y)) polar.fail("x = " + x.str());
    if (qs_sigma(qs_sigma(x)) != x) sig.fail("x = " + x.str());
    if (qs_trace(qs_sigma(x)) != qs_trace(x)) tr.fail("x = " + x.str());
    if (qs_f(qs_sigma(x), y) != qs_f(x, qs_sigma(y))) adj.fail("x = " + x.str());
    if (qs_f(x, x) != qs_q(x) + qs_q(x)) diag.fail("x = " + x.str());
    QSVector h = qs_hua(a, x);
    if (h != qs_hua_pi(a, x)) hua_agree.fail("a = " + a.str() + ", v = " + x.str());
    if (qs_hua(a, x + y) != h + qs_hua(a, y)) add.fail("a = " + a.str());
    if (qs_hua(a, x * t) != h * t) lin.fail("a = " + a.str());
    if (!t.is_zero() && qs_hua(a * t, x) != h * (t * t)) scale.fail("a = " + a.str() + ", s = " + t.str());
    if (qs_hua(qs_eps(s), x) != x) unit.fail("x = " + x.str());
  }
  r.add("q(x+y) = q(x) + q(y) + f(x,y)", cite::kHuaClosedForm, samples, polar.ok, polar.detail);
  r.add("sigma^2 = id", cite::kHuaClosedForm, samples, sig.ok, sig.detail);
  r.add("T(x^sigma) = T(x)", cite::kHuaClosedForm, samples, tr.ok, tr.detail);
  r.add("f(x^sigma, y) = f(x, y^sigma)", cite::kHuaClosedForm, samples, adj.ok, adj.detail);
  r.add("f(x,x) = 2q(x)", cite::kHuaClosedForm, samples, diag.ok, diag.detail);
  r.add("closed-form Hua = pi-form Hua", cite::kHuaClosedForm, samples, hua_agree.ok, hua_agree.detail);
  r.add("h_a additive", cite::kHuaClosedForm, samples, add.ok, add.detail);
  r.add("h_a K-linear", cite::kHuaClosedForm, samples, lin.ok, lin.detail);
  r.add("h_{a s} = s^2 h_a", cite::kHuaScaling, samples, scale.ok, scale.detail);
  r.add("h_eps = id", cite::kHuaClosedForm, samples, unit.ok, unit.detail);
  if (finite) {
    bool bij = true;
    for (const auto& a : all) {
      if (a.is_zero()) continue;
      std::set<std::string> img;
      for (const auto& x : all) img.insert(qs_hua(a, x).key());
      if (img.size() != all.size()) bij = false;
    }
    r.add("h_a bijective", cite::kHuaClosedForm, static_cast<long>(all.size() - 1), bij);
  }
  if (s->dim <= 2) {
    SmallDimField F = qs_small_dim_field(s);
    bool ok = true;
    std::string detail;
    for (long n = 0; n < samples && ok; ++n) {
      QSVector x = draw();
      // condition (iv): q(x) eps = x * x^sigma
      CDElt lhs = CDElt::scalar(F.F, qs_q(x));
      CDElt rhs = F.embed(x) * F.embed(qs_sigma(x));
      if (lhs != rhs) {
        ok = false;
        detail = "x = " + x.str();
      }
    }
    r.add("phi(q(x)) = x * x^sigma", cite::kSmallDimField, samples, ok, detail);
    r.add("small-dim field " + F.type_tag, cite::kSmallDimField, 1, F.F->division, F.F->division_note);
  }
  return r;
}

}  // namespace mforge
