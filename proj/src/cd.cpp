#include "mforge/cd.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mforge/cite.hpp"

namespace mforge {

int CDDesc::levels() const {
  int l = 0;
  while ((1 << l) < dim) ++l;
  return l;
}

namespace {

Vec vslice(const Vec& v, size_t from, size_t n) { return Vec(v.begin() + from, v.begin() + from + n); }

Vec vadd(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vneg(const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vec vscale(const Vec& a, const Scalar& s) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

Vec concat(const Vec& a, const Vec& b) {
  Vec r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Vec mul_level(const CDDesc& d, const Vec& x, const Vec& y, int level);

Vec conj_level(const CDDesc& d, const Vec& x, int level) {
  if (level == 0) return x;
  if (level == 1) return {x[0] + x[1] * d.t0, -x[1]};
  size_t h = x.size() / 2;
  return concat(conj_level(d, vslice(x, 0, h), level - 1), vneg(vslice(x, h, h)));
}

Vec mul_level(const CDDesc& d, const Vec& x, const Vec& y, int level) {
  if (level == 0) return {x[0] * y[0]};
  if (level == 1) {
    // (u + v w)(u' + v' w) with w^2 = t0 w - n0
    Scalar vv = x[1] * y[1];
    return {x[0] * y[0] - vv * d.n0, x[0] * y[1] + x[1] * y[0] + vv * d.t0};
  }
  size_t h = x.size() / 2;
  const Scalar& beta = d.betas[level - 2];
  Vec a = vslice(x, 0, h), u = vslice(x, h, h);
  Vec b = vslice(y, 0, h), v = vslice(y, h, h);
  // (a, u)(b, v) = (ab + beta v conj(u), conj(a) v + b u)
  Vec first = vadd(mul_level(d, a, b, level - 1),
                   vscale(mul_level(d, v, conj_level(d, u, level - 1), level - 1), beta));
  Vec second = vadd(mul_level(d, conj_level(d, a, level - 1), v, level - 1), mul_level(d, b, u, level - 1));
  return concat(first, second);
}

Scalar norm_level(const CDDesc& d, const Vec& x, int level) {
  if (level == 0) return x[0] * x[0];
  if (level == 1) return x[0] * x[0] + d.t0 * x[0] * x[1] + d.n0 * x[1] * x[1];
  size_t h = x.size() / 2;
  return norm_level(d, vslice(x, 0, h), level - 1) - d.betas[level - 2] * norm_level(d, vslice(x, h, h), level - 1);
}

Scalar trace_level(const CDDesc& d, const Vec& x, int level) {
  if (level == 0) return x[0] + x[0];
  if (level == 1) return x[0] + x[0] + d.t0 * x[1];
  return trace_level(d, vslice(x, 0, x.size() / 2), level - 1);
}

bool is_square_rational(const mpq_class& q) {
  if (sgn(q) < 0) return false;
  mpz_class n = q.get_num(), dd = q.get_den();
  return mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(dd.get_mpz_t());
}

void decide_division(CDDesc& d) {
  const Field& K = d.K;
  int L = d.levels();
  if (L == 0) {
    d.division = true;
    d.division_note = "field";
    return;
  }
  // quadratic stage: y^2 - t0 y + n0 irreducible over K
  bool stage_ok = false;
  if (is_finite(K)) {
    stage_ok = true;
    for (const auto& y : enumerate(K))
      if ((y * y - d.t0 * y + d.n0).is_zero()) stage_ok = false;
  } else if (K->kind == FieldKind::Rationals) {
    mpq_class disc = d.t0.q() * d.t0.q() - 4 * d.n0.q();
    stage_ok = !is_square_rational(disc);
  }
  if (L == 1) {
    d.division = stage_ok;
    d.division_note = stage_ok ? "irreducible quadratic stage" : "quadratic stage splits";
    return;
  }
  if (is_finite(K)) {
    d.division = false;
    d.division_note = "finite base field: norm form isotropic in dim >= 4";
    return;
  }
  if (L > 3) {
    d.division = false;
    d.division_note = "dimension above 8: not a composition algebra";
    return;
  }
  bool definite = K->kind == FieldKind::Rationals && sgn(d.t0.q() * d.t0.q() - 4 * d.n0.q()) < 0 &&
                  sgn(d.n0.q()) > 0;
  for (const auto& b : d.betas)
    if (K->kind != FieldKind::Rationals || sgn(b.q()) >= 0) definite = false;
  d.division = definite;
  d.division_note = definite ? "positive definite norm form" : "division unverified";
}

void build_table(CDDesc& d) {
  const Field& K = d.K;
  int n = d.dim;
  int L = d.levels();
  d.table.assign(n, std::vector<std::vector<std::pair<int, Scalar>>>(n));
  for (int i = 0; i < n; ++i) {
    Vec ei = zero_vec(K, n);
    ei[i] = Scalar::one(K);
    for (int j = 0; j < n; ++j) {
      Vec ej = zero_vec(K, n);
      ej[j] = Scalar::one(K);
      Vec p = mul_level(d, ei, ej, L);
      for (int k = 0; k < n; ++k)
        if (!p[k].is_zero()) d.table[i][j].emplace_back(k, p[k]);
    }
  }
}

CDAlgebra finish(CDDesc d) {
  for (const auto& b : d.betas)
    if (b.is_zero()) throw MathError(Err::InvalidInput, "doubling constant must be nonzero");
  decide_division(d);
  build_table(d);
  return std::make_shared<const CDDesc>(std::move(d));
}

}  // namespace

CDAlgebra cd_from_betas(const Field& K, const std::vector<Scalar>& betas, const std::string& name, bool allow_big) {
  if (betas.size() > 3 && !allow_big) throw MathError(Err::DimensionTooLarge, "at most three doublings");
  if (betas.empty()) return cd_field(K, name);
  std::vector<Scalar> rest(betas.begin() + 1, betas.end());
  CDDesc d;
  d.K = K;
  d.dim = 1 << betas.size();
  d.t0 = Scalar::zero(K);
  d.n0 = -betas[0];
  if (betas[0].is_zero()) throw MathError(Err::InvalidInput, "doubling constant must be nonzero");
  d.betas = rest;
  d.name = name;
  return finish(std::move(d));
}

CDAlgebra cd_with_stage(const Field& K, const Scalar& t0, const Scalar& n0, const std::vector<Scalar>& betas,
                        const std::string& name) {
  if (betas.size() > 2) throw MathError(Err::DimensionTooLarge, "at most three doublings");
  CDDesc d;
  d.K = K;
  d.dim = 2 << betas.size();
  d.t0 = t0;
  d.n0 = n0;
  d.betas = betas;
  d.name = name;
  return finish(std::move(d));
}

CDAlgebra cd_field(const Field& K, const std::string& name) {
  CDDesc d;
  d.K = K;
  d.dim = 1;
  d.t0 = Scalar::zero(K);
  d.n0 = Scalar::zero(K);
  d.name = name;
  return finish(std::move(d));
}

std::vector<std::string> builtin_names() {
  return {"octonion-Q", "quaternion-Q", "Qi", "F4", "F2", "F5", "sedenion-Q"};
}

CDAlgebra builtin_algebra(const std::string& name) {
  static std::map<std::string, CDAlgebra> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  Field Q = rationals();
  Scalar m1 = Scalar::from_int(Q, -1);
  CDAlgebra a;
  if (name == "octonion-Q") a = cd_from_betas(Q, {m1, m1, m1}, name);
  else if (name == "quaternion-Q") a = cd_from_betas(Q, {m1, m1}, name);
  else if (name == "Qi") a = cd_from_betas(Q, {m1}, name);
  else if (name == "F4") {
    Field F2 = prime_field(2);
    a = cd_with_stage(F2, Scalar::one(F2), Scalar::one(F2), {}, name);
  } else if (name == "F2") a = cd_field(prime_field(2), name);
  else if (name == "F5") a = cd_field(prime_field(5), name);
  else if (name == "sedenion-Q") a = cd_from_betas(Q, {m1, m1, m1, m1}, name, true);
  else throw MathError(Err::InvalidInput, "unknown algebra '" + name + "'");
  cache[name] = a;
  return a;
}

Vec cd_mul_recursive(const CDDesc& a, const Vec& x, const Vec& y) { return mul_level(a, x, y, a.levels()); }
Vec cd_conj_recursive(const CDDesc& a, const Vec& x) { return conj_level(a, x, a.levels()); }

// ---------------------------------------------------------------- CDElt

CDElt::CDElt(CDAlgebra a, Vec c) : a_(std::move(a)), c_(std::move(c)) {
  if (static_cast<int>(c_.size()) != a_->dim) throw MathError(Err::InvalidInput, "coordinate length mismatch");
}

CDElt CDElt::zero(const CDAlgebra& a) { return CDElt(a, zero_vec(a->K, a->dim)); }
CDElt CDElt::one(const CDAlgebra& a) { return scalar(a, Scalar::one(a->K)); }
CDElt CDElt::scalar(const CDAlgebra& a, const Scalar& s) {
  Vec c = zero_vec(a->K, a->dim);
  c[0] = s;
  return CDElt(a, c);
}
CDElt CDElt::from_int(const CDAlgebra& a, long n) { return scalar(a, Scalar::from_int(a->K, n)); }
CDElt CDElt::basis(const CDAlgebra& a, int i) {
  if (i < 0 || i >= a->dim) throw MathError(Err::IndexOutOfRange, "basis index");
  Vec c = zero_vec(a->K, a->dim);
  c[i] = Scalar::one(a->K);
  return CDElt(a, c);
}

void CDElt::check_same(const CDElt& o) const {
  if (a_ != o.a_) throw MathError(Err::AlgebraMismatch, "elements of different algebras");
}

CDElt CDElt::operator+(const CDElt& o) const {
  check_same(o);
  return CDElt(a_, vadd(c_, o.c_));
}
CDElt CDElt::operator-(const CDElt& o) const {
  check_same(o);
  Vec r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] - o.c_[i];
  return CDElt(a_, r);
}
CDElt CDElt::operator-() const { return CDElt(a_, vneg(c_)); }
CDElt CDElt::operator*(const Scalar& s) const { return CDElt(a_, vscale(c_, s)); }

CDElt CDElt::operator*(const CDElt& o) const {
  check_same(o);
  Vec r = zero_vec(a_->K, a_->dim);
  for (int i = 0; i < a_->dim; ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; j < a_->dim; ++j) {
      if (o.c_[j].is_zero()) continue;
      Scalar xy = c_[i] * o.c_[j];
      for (const auto& [k, coeff] : a_->table[i][j]) r[k] += xy * coeff;
    }
  }
  return CDElt(a_, r);
}

bool CDElt::operator==(const CDElt& o) const { return a_ == o.a_ && c_ == o.c_; }

bool CDElt::is_scalar() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

CDElt CDElt::conj() const { return CDElt(a_, conj_level(*a_, c_, a_->levels())); }
Scalar CDElt::norm() const { return norm_level(*a_, c_, a_->levels()); }
Scalar CDElt::trace() const { return trace_level(*a_, c_, a_->levels()); }

CDElt CDElt::inv() const {
  Scalar n = norm();
  if (n.is_zero()) throw MathError(Err::NotInvertible, "element of norm zero");
  return conj() * n.inv();
}

std::string CDElt::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    std::string s = c_[i].str();
    bool compound = s.find(' ') != std::string::npos;
    bool negative = !compound && s[0] == '-';
    if (negative) s = s.substr(1);
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    if (i == 0) {
      os << s;
    } else if (s == "1") {
      os << "e" << i;
    } else {
      os << (compound ? "(" + s + ")" : s) << "*e" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::string CDElt::key() const {
  std::string k;
  for (const auto& s : c_) k += s.key() + "|";
  return k;
}

CDElt random_elt(const CDAlgebra& a, Rng& rng, int height) {
  Vec c;
  c.reserve(a->dim);
  for (int i = 0; i < a->dim; ++i) c.push_back(random_scalar(a->K, rng, height));
  return CDElt(a, c);
}

CDElt random_invertible(const CDAlgebra& a, Rng& rng, int height) {
  for (;;) {
    CDElt x = random_elt(a, rng, height);
    if (!x.norm().is_zero()) return x;
  }
}

std::vector<CDElt> enumerate_elts(const CDAlgebra& a) {
  if (!is_finite(a->K)) throw MathError(Err::InvalidInput, "enumeration needs a finite base field");
  std::vector<Scalar> ks = enumerate(a->K);
  std::vector<CDElt> out;
  std::vector<size_t> idx(a->dim, 0);
  for (;;) {
    Vec c;
    for (int i = 0; i < a->dim; ++i) c.push_back(ks[idx[i]]);
    out.emplace_back(a, c);
    int p = 0;
    while (p < a->dim && ++idx[p] == ks.size()) idx[p++] = 0;
    if (p == a->dim) break;
  }
  return out;
}

CDElt commutator(const CDElt& x, const CDElt& y) { return x * y - y * x; }
CDElt associator(const CDElt& x, const CDElt& y, const CDElt& z) { return (x * y) * z - x * (y * z); }
Scalar bilinear(const CDElt& x, const CDElt& y) { return (x * y.conj()).trace(); }

// ---------------------------------------------------------------- subspaces

std::vector<CDElt> Subspace::basis() const {
  std::vector<CDElt> out;
  for (const auto& r : rows) out.emplace_back(alg, r);
  return out;
}

bool Subspace::contains(const CDElt& x) const {
  Vec r = x.coords();
  for (size_t i = 0; i < rows.size(); ++i) {
    Scalar f = r[pivots[i]];
    if (f.is_zero()) continue;
    for (size_t k = 0; k < r.size(); ++k) r[k] = r[k] - f * rows[i][k];
  }
  return is_zero_vec(r);
}

bool Subspace::equals(const Subspace& o) const { return alg == o.alg && rows == o.rows; }

Subspace span(const CDAlgebra& a, const std::vector<CDElt>& gens) {
  Mat m;
  for (const auto& g : gens) m.push_back(g.coords());
  Echelon e = rref(m, a->K, a->dim);
  return Subspace{a, e.rows, e.pivots};
}

Subspace whole(const CDAlgebra& a) {
  std::vector<CDElt> gens;
  for (int i = 0; i < a->dim; ++i) gens.push_back(CDElt::basis(a, i));
  return span(a, gens);
}

Subspace orthogonal_complement(const Subspace& s) {
  const CDAlgebra& a = s.alg;
  Mat gram;
  for (const auto& b : s.basis()) {
    Vec row;
    for (int j = 0; j < a->dim; ++j) row.push_back(bilinear(b, CDElt::basis(a, j)));
    gram.push_back(row);
  }
  Mat k = kernel(gram, a->K, a->dim);
  std::vector<CDElt> gens;
  for (auto& v : k) gens.emplace_back(a, v);
  return span(a, gens);
}

Subspace center(const CDAlgebra& a) {
  int n = a->dim;
  // rows indexed by (j, k): sum_i x_i [e_i, e_j]_k = 0
  Mat m;
  std::vector<std::vector<CDElt>> comm(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) comm[i].push_back(commutator(CDElt::basis(a, i), CDElt::basis(a, j)));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Vec row;
      for (int i = 0; i < n; ++i) row.push_back(comm[i][j][k]);
      m.push_back(row);
    }
  std::vector<CDElt> gens;
  for (auto& v : kernel(m, a->K, n)) gens.emplace_back(a, v);
  return span(a, gens);
}

Subspace subalgebra_generated(const CDAlgebra& a, const std::vector<CDElt>& gens) {
  std::vector<CDElt> g = gens;
  g.push_back(CDElt::one(a));
  Subspace s = span(a, g);
  for (;;) {
    std::vector<CDElt> b = s.basis();
    std::vector<CDElt> all = b;
    for (const auto& x : b)
      for (const auto& y : b) all.push_back(x * y);
    Subspace t = span(a, all);
    if (t.dim() == s.dim()) return s;
    s = t;
  }
}

bool is_subalgebra(const Subspace& s) {
  if (!s.contains(CDElt::one(s.alg))) return false;
  auto b = s.basis();
  for (const auto& x : b)
    for (const auto& y : b)
      if (!s.contains(x * y)) return false;
  return true;
}

DoublingCoords doubling_coordinates(const CDElt& x, const Subspace& A, const CDElt& e) {
  const CDAlgebra& a = A.alg;
  if (!is_subalgebra(A)) throw MathError(Err::BadDoublingUnit, "A is not a subalgebra");
  if (A.contains(e) || e.norm().is_zero()) throw MathError(Err::BadDoublingUnit, "e lies in A or has norm zero");
  auto b = A.basis();
  for (const auto& y : b)
    if (!bilinear(e, y).is_zero()) throw MathError(Err::BadDoublingUnit, "e is not orthogonal to A");
  size_t k = b.size();
  Mat m(a->dim, Vec());
  for (size_t col = 0; col < 2 * k; ++col) {
    CDElt c = col < k ? b[col] : e * b[col - k];
    for (int r = 0; r < a->dim; ++r) m[r].push_back(c[r]);
  }
  auto sol = solve(m, x.coords(), a->K, 2 * k);
  if (!sol) throw MathError(Err::NotInSpan, "x is not in A + e A");
  CDElt h = CDElt::zero(a), y = CDElt::zero(a);
  for (size_t i = 0; i < k; ++i) {
    h += b[i] * (*sol)[i];
    y += b[i] * (*sol)[k + i];
  }
  return {h, y};
}

// ---------------------------------------------------------------- norm splitting

NormSplitting norm_splitting(const CDAlgebra& o, const Subspace& E) {
  if (o->dim != 8) throw MathError(Err::BadSubfield, "norm splitting needs an octonion algebra");
  if (E.dim() != 2 || !is_subalgebra(E)) throw MathError(Err::BadSubfield, "E must be a 2-dim subalgebra");
  CDElt v1 = CDElt::one(o);
  Subspace Eperp = orthogonal_complement(E);
  CDElt v2;
  for (const auto& c : Eperp.basis())
    if (!E.contains(c) && !c.norm().is_zero()) {
      v2 = c;
      break;
    }
  if (!v2.alg()) throw MathError(Err::BadSubfield, "no anisotropic vector in E-perp");
  std::vector<CDElt> egens = E.basis();
  egens.push_back(v2);
  Subspace H2 = subalgebra_generated(o, egens);
  if (H2.dim() != 4) throw MathError(Err::BadSubfield, "E and v2 do not generate a quaternion subalgebra");
  CDElt v3;
  for (const auto& c : orthogonal_complement(H2).basis())
    if (!c.norm().is_zero()) {
      v3 = c;
      break;
    }
  if (!v3.alg()) throw MathError(Err::BadSubfield, "no anisotropic vector in H2-perp");
  CDElt v4 = v2 * v3;
  NormSplitting ns;
  ns.v = {v1, v2, v3, v4};
  for (const auto& v : ns.v) ns.s.push_back(v.norm());
  ns.product = ns.s[0] * ns.s[1] * ns.s[2] * ns.s[3];
  ns.z = -((v2 * v2) * (v3 * v3));
  return ns;
}

Report norm_splitting_check(const CDAlgebra& o, const Subspace& E, long samples, uint64_t seed) {
  Report r;
  r.suite = "norm_splitting";
  r.cite = cite::kNormSplitting;
  r.samples = samples;
  r.seed = seed;
  NormSplitting ns = norm_splitting(o, E);
  bool nonzero = std::all_of(ns.s.begin(), ns.s.end(), [](const Scalar& s) { return !s.is_zero(); });
  r.add("s_i nonzero", cite::kNormSplitting, 4, nonzero);
  r.add("s1 = N(1)", cite::kNormSplitting, 1, ns.s[0].is_one());
  // E-basis: the 8 products v_i * b for b in a K-basis of E are independent
  std::vector<CDElt> prods;
  for (const auto& v : ns.v)
    for (const auto& b : E.basis()) prods.push_back(v * b);
  r.add("E-basis", cite::kNormSplitting, 1, span(o, prods).dim() == 8);
  bool z_in_E = E.contains(ns.z) && ns.z.is_scalar();
  r.add("witness z in K subset E", cite::kNormSplitting, 1, z_in_E, "z = " + ns.z.str());
  r.add("s1 s2 s3 s4 = N(z)", cite::kNormSplitting, 1, ns.z.norm() == ns.product,
        "product = " + ns.product.str());
  Rng rng(seed);
  auto eb = E.basis();
  bool ok = true;
  std::string detail;
  for (long n = 0; n < samples && ok; ++n) {
    CDElt sum = CDElt::zero(o);
    Scalar rhs = Scalar::zero(o->K);
    for (int i = 0; i < 4; ++i) {
      CDElt t = eb[0] * random_scalar(o->K, rng) + eb[1] * random_scalar(o->K, rng);
      sum += ns.v[i] * t;
      rhs += ns.s[i] * t.norm();
    }
    if (sum.norm() != rhs) {
      ok = false;
      detail = "sum = " + sum.str();
    }
  }
  r.add("N(sum v_i t_i) = sum s_i N(t_i)", cite::kNormSplitting, samples, ok, detail);
  return r;
}

// ---------------------------------------------------------------- identity suites

std::vector<std::string> identity_suites() {
  return {"moufang", "flexible", "alternative", "inverse", "minimum_equation", "norm_multiplicative",
          "doubling_rules"};
}

namespace {

struct Sampler {
  const CDAlgebra& a;
  Rng rng;
  long samples;
  Report& r;

  // run pred on `arity` random elements; record the first counterexample
  template <class Pred>
  void check(const std::string& name, const char* cite, int arity, Pred pred, bool invertible_first = false) {
    std::string detail;
    bool ok = true;
    for (long n = 0; n < samples; ++n) {
      std::vector<CDElt> xs;
      for (int k = 0; k < arity; ++k)
        xs.push_back(k == 0 && invertible_first ? random_invertible(a, rng) : random_elt(a, rng));
      if (!pred(xs)) {
        ok = false;
        for (int k = 0; k < arity; ++k) detail += (k ? ", " : "") + std::string(1, "xyz"[k]) + " = " + xs[k].str();
        break;
      }
    }
    r.add(name, cite, samples, ok, detail);
  }
};

}  // namespace

Report verify_identities(const CDAlgebra& a, const std::string& suite, long samples, uint64_t seed) {
  Report r;
  r.suite = (a->name.empty() ? std::string("algebra") : a->name) + "/" + suite;
  r.samples = samples;
  r.seed = seed;
  if (!a->division) r.notes.push_back(a->division_note);
  Sampler s{a, Rng(seed), samples, r};
  using V = std::vector<CDElt>;
  if (suite == "moufang") {
    r.cite = cite::kMoufang;
    s.check("(xyx)z = x(y(xz))", cite::kMoufang, 3,
            [](const V& v) { return ((v[0] * v[1]) * v[0]) * v[2] == v[0] * (v[1] * (v[0] * v[2])); });
    s.check("z(xyx) = ((zx)y)x", cite::kMoufang, 3,
            [](const V& v) { return v[2] * ((v[0] * v[1]) * v[0]) == ((v[2] * v[0]) * v[1]) * v[0]; });
    s.check("(xy)(zx) = x(yz)x", cite::kMoufang, 3,
            [](const V& v) { return (v[0] * v[1]) * (v[2] * v[0]) == (v[0] * (v[1] * v[2])) * v[0]; });
  } else if (suite == "flexible") {
    r.cite = cite::kFlexible;
    s.check("[x,y,x] = 0", cite::kFlexible, 2, [](const V& v) { return associator(v[0], v[1], v[0]).is_zero(); });
  } else if (suite == "alternative") {
    r.cite = cite::kAlternative;
    s.check("[x,x,y] = 0", cite::kAlternative, 2, [](const V& v) { return associator(v[0], v[0], v[1]).is_zero(); });
    s.check("[y,x,x] = 0", cite::kAlternative, 2, [](const V& v) { return associator(v[1], v[0], v[0]).is_zero(); });
  } else if (suite == "inverse") {
    r.cite = cite::kInverse;
    s.check("x x^-1 = 1 = x^-1 x", cite::kInverse, 1,
            [&](const V& v) {
              CDElt i = v[0].inv();
              return v[0] * i == CDElt::one(a) && i * v[0] == CDElt::one(a);
            },
            true);
    s.check("x^-1 (x y) = y", cite::kInverse, 2, [](const V& v) { return v[0].inv() * (v[0] * v[1]) == v[1]; },
            true);
    s.check("(y x) x^-1 = y", cite::kInverse, 2, [](const V& v) { return (v[1] * v[0]) * v[0].inv() == v[1]; },
            true);
  } else if (suite == "minimum_equation") {
    r.cite = cite::kMinimumEquation;
    s.check("x^2 - T(x) x + N(x) = 0", cite::kMinimumEquation, 1, [&](const V& v) {
      const CDElt& x = v[0];
      return (x * x - x * x.trace() + CDElt::scalar(a, x.norm())).is_zero();
    });
    s.check("x conj(x) = N(x)", cite::kMinimumEquation, 1,
            [&](const V& v) { return v[0] * v[0].conj() == CDElt::scalar(a, v[0].norm()); });
    s.check("x + conj(x) = T(x)", cite::kMinimumEquation, 1,
            [&](const V& v) { return v[0] + v[0].conj() == CDElt::scalar(a, v[0].trace()); });
  } else if (suite == "norm_multiplicative") {
    r.cite = cite::kComposition;
    s.check("N(xy) = N(x)N(y)", cite::kComposition, 2,
            [](const V& v) { return (v[0] * v[1]).norm() == v[0].norm() * v[1].norm(); });
    s.check("T(conj x) = T(x)", cite::kComposition, 1, [](const V& v) { return v[0].conj().trace() == v[0].trace(); });
    s.check("conj(conj x) = x", cite::kComposition, 1, [](const V& v) { return v[0].conj().conj() == v[0]; });
    s.check("conj(xy) = conj(y) conj(x)", cite::kComposition, 2,
            [](const V& v) { return (v[0] * v[1]).conj() == v[1].conj() * v[0].conj(); });
  } else if (suite == "doubling_rules") {
    r.cite = cite::kDoubling;
    int L = a->levels();
    if (L < 2) {
      r.notes.push_back("doubling rules need a doubling above the quadratic stage; skipped");
      return r;
    }
    int h = a->dim / 2;
    Scalar u = a->betas[L - 2];
    CDElt e = CDElt::basis(a, h);
    // lower half coordinates form the previous stage
    auto lower = [&](const CDElt& x) {
      Vec c = x.coords();
      for (int i = h; i < a->dim; ++i) c[i] = Scalar::zero(a->K);
      return CDElt(a, c);
    };
    r.add("e^2 = u", cite::kDoubling, 1, e * e == CDElt::scalar(a, u));
    s.check("(e x)(e y) = u (y conj x)", cite::kDoubling, 2, [&](const V& v) {
      CDElt x = lower(v[0]), y = lower(v[1]);
      return (e * x) * (e * y) == (y * x.conj()) * u;
    });
    s.check("(e x) y = e (y x)", cite::kDoubling, 2, [&](const V& v) {
      CDElt x = lower(v[0]), y = lower(v[1]);
      return (e * x) * y == e * (y * x);
    });
    s.check("x (e y) = e (conj(x) y)", cite::kDoubling, 2, [&](const V& v) {
      CDElt x = lower(v[0]), y = lower(v[1]);
      return x * (e * y) == e * (x.conj() * y);
    });
    s.check("e x occupies the upper coordinates", cite::kDoubling, 1, [&](const V& v) {
      CDElt x = lower(v[0]);
      Vec want = zero_vec(a->K, a->dim);
      for (int i = 0; i < h; ++i) want[h + i] = x[i];
      return (e * x).coords() == want;
    });
  } else {
    throw MathError(Err::InvalidInput, "unknown suite '" + suite + "'");
  }
  return r;
}

std::string basis_table(const CDAlgebra& a) {
  std::ostringstream os;
  for (int i = 0; i < a->dim; ++i) {
    for (int j = 0; j < a->dim; ++j) {
      CDElt p = CDElt::basis(a, i) * CDElt::basis(a, j);
      if (j) os << "\t";
      os << p.str();
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace mforge
