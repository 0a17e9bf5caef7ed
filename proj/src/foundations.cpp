#include "mforge/foundations.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <queue>
#include <sstream>

#include "mforge/cite.hpp"

namespace mforge {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

struct Acc {
  bool ok = true;
  std::string detail;
  long n = 0;
  void fail(const std::string& d) {
    if (ok) detail = d;
    ok = false;
  }
};

MathError bad(const std::string& what) { return MathError(Err::InvalidInput, what); }

std::string triple_str(const Foundation& F, const Triple& t) {
  return "(" + F.D.vertices[t[0]] + "," + F.D.vertices[t[1]] + "," + F.D.vertices[t[2]] + ")";
}

std::string edge_str(const Foundation& F, int i, int j) {
  return "(" + F.D.vertices[i] + "," + F.D.vertices[j] + ")";
}

Scalar rebase(const Scalar& s, const Field& f) {
  if (s.field() == f) return s;
  if (f->kind == FieldKind::Rationals) return Scalar::from_rational(f, s.q());
  if (f->kind == FieldKind::Prime) return Scalar::from_int(f, s.residue());
  if (same_field(s.field(), f)) return s;
  throw MathError(Err::CarrierMismatch, "cannot move scalars into " + field_name(f));
}

Vec param_coords(const Param& x) {
  if (auto e = std::get_if<CDElt>(&x)) return e->coords();
  if (auto v = std::get_if<QSVector>(&x)) return v->c;
  const TPoint& p = std::get<TPoint>(x);
  Vec c;
  for (const auto& a : p.a)
    for (const auto& s : a.coords()) c.push_back(s);
  for (const auto& s : p.t.coords()) c.push_back(s);
  return c;
}

bool same_carrier(const Param& a, const Param& b) {
  if (a.index() != b.index()) return false;
  if (auto e = std::get_if<CDElt>(&a)) return e->alg() == std::get<CDElt>(b).alg();
  if (auto v = std::get_if<QSVector>(&a)) return v->S == std::get<QSVector>(b).S;
  return std::get<TPoint>(a).S == std::get<TPoint>(b).S;
}

// move y into the carrier of `like` by coordinates
Param transport(const Param& y, const Param& like) {
  if (same_carrier(y, like)) return y;
  Vec c = param_coords(y);
  if (c.size() != param_coords(like).size()) throw MathError(Err::CarrierMismatch, "glueing carriers differ in size");
  if (auto e = std::get_if<CDElt>(&like)) {
    for (auto& s : c) s = rebase(s, e->alg()->K);
    return CDElt(e->alg(), c);
  }
  if (auto v = std::get_if<QSVector>(&like)) {
    for (auto& s : c) s = rebase(s, v->S->K);
    return qs_vector(v->S, c);
  }
  const TPoint& p = std::get<TPoint>(like);
  const CDAlgebra& K = p.S->K();
  for (auto& s : c) s = rebase(s, K->K);
  size_t k = K->dim;
  PQVec a;
  for (int i = 0; i < p.S->dim; ++i) a.push_back(CDElt(K, Vec(c.begin() + i * k, c.begin() + (i + 1) * k)));
  return t_point(p.S, a, CDElt(K, Vec(c.end() - k, c.end())));
}

// ---------------------------------------------------------------- atoms

const char* atom_name(GAtom::Kind k) {
  switch (k) {
    case GAtom::Identity: return "identity";
    case GAtom::IdOpposite: return "id-opposite";
    case GAtom::StandardInvolution: return "standard-involution";
    case GAtom::ScalarConj: return "scalar-conj";
    case GAtom::FieldIso: return "field-iso";
    case GAtom::Frobenius: return "frobenius";
    case GAtom::Table: return "table";
    case GAtom::Psi: return "psi";
  }
  return "?";
}

std::string mat_key(const Mat& m) {
  std::string s;
  for (const auto& row : m) {
    for (const auto& x : row) s += x.key() + ",";
    s += ";";
  }
  return s;
}

CDElt elt_power(const CDElt& x, mpz_class e) {
  CDElt r = CDElt::one(x.alg()), b = x;
  while (e > 0) {
    if (e % 2 == 1) r = r * b;
    b = b * b;
    e /= 2;
  }
  return r;
}

CDElt apply_atom(const GAtom& a, const CDElt& x) {
  switch (a.kind) {
    case GAtom::Identity:
    case GAtom::IdOpposite: return x;
    case GAtom::StandardInvolution: return x.conj();
    case GAtom::ScalarConj: return (a.w.inv() * x) * a.w;
    case GAtom::FieldIso: return CDElt(x.alg(), mat_vec(a.m, x.coords()));
    case GAtom::Frobenius: {
      int64_t p = characteristic(x.alg()->K);
      if (p == 0) throw bad("Frobenius needs positive characteristic");
      mpz_class e = 1;
      for (int i = 0; i < a.power; ++i) e *= p;
      return elt_power(x, e);
    }
    case GAtom::Table:
      for (const auto& [k, v] : a.table)
        if (k == x) return v;
      throw bad("table glueing has no entry for " + x.str());
    case GAtom::Psi: return jaut_apply(a.psi, x);
  }
  return x;
}

GAtom atom_inverse(const GAtom& a) {
  GAtom b = a;
  switch (a.kind) {
    case GAtom::ScalarConj: b.w = a.w.inv(); break;
    case GAtom::FieldIso: b.m = mat_inverse(a.m, a.m.empty() ? Field() : a.m[0][0].field()); break;
    case GAtom::Frobenius: {
      int period = a.w.alg() ? a.w.alg()->dim : 1;
      b.power = ((period - a.power) % period + period) % period;
      break;
    }
    case GAtom::Table:
      for (auto& [k, v] : b.table) std::swap(k, v);
      break;
    case GAtom::Psi: {
      const JAtom& j = a.psi.atoms.at(0);
      b.psi = jm_psi(j.H, j.e, j.w.inv());
      break;
    }
    default: break;
  }
  return b;
}

}  // namespace


std::string GAtom::str() const {
  switch (kind) {
    case Identity: return "id";
    case IdOpposite: return "id°";
    case StandardInvolution: return "σ_s";
    case ScalarConj: return "conj(" + w.str() + ")";
    case FieldIso: return "iso";
    case Frobenius: return power == 1 ? "frob" : "frob^" + std::to_string(power);
    case Table: return "table";
    case Psi: return "ψ(" + psi.atoms.at(0).w.str() + ")";
  }
  return "?";
}

std::string GAtom::key() const {
  std::string k = atom_name(kind);
  switch (kind) {
    case ScalarConj: k += ":" + w.key(); break;
    case FieldIso: k += ":" + mat_key(m); break;
    case Frobenius: k += ":" + std::to_string(power); break;
    case Table:
      for (const auto& [x, y] : table) k += ":" + x.key() + ">" + y.key();
      break;
    case Psi: k += ":" + psi.atoms.at(0).w.key() + "/" + psi.atoms.at(0).e.key(); break;
    default: break;
  }
  return k;
}

std::string GlueingMap::str() const {
  if (atoms.empty()) return "id";
  std::string s;
  for (size_t i = 0; i < atoms.size(); ++i) s += (i ? " ∘ " : "") + atoms[i].str();
  return s;
}

std::string GlueingMap::key() const {
  std::string s;
  for (const auto& a : atoms) s += a.key() + "|";
  return s;
}

GlueingMap gm_identity() { return {}; }
GlueingMap gm_atom(GAtom a) {
  GlueingMap g;
  if (a.kind != GAtom::Identity) g.atoms.push_back(std::move(a));
  return g;
}

GlueingMap gm_compose(const GlueingMap& outer, const GlueingMap& inner) {
  GlueingMap g = outer;
  g.atoms.insert(g.atoms.end(), inner.atoms.begin(), inner.atoms.end());
  return g;
}

GlueingMap gm_inverse(const GlueingMap& g) {
  GlueingMap r;
  for (auto it = g.atoms.rbegin(); it != g.atoms.rend(); ++it) r.atoms.push_back(atom_inverse(*it));
  return r;
}

GlueingMap gm_simplify(const GlueingMap& g) {
  GlueingMap r;
  for (const auto& a : g.atoms) {
    if (a.kind == GAtom::Identity) continue;
    if (a.kind == GAtom::Frobenius && a.power == 0) continue;
    if (!r.atoms.empty() && atom_inverse(r.atoms.back()).key() == a.key()) {
      r.atoms.pop_back();
      continue;
    }
    r.atoms.push_back(a);
  }
  return r;
}

Param gm_apply(const GlueingMap& g, const Param& x) {
  bool pointwise_id = true;
  for (const auto& a : g.atoms)
    if (a.kind != GAtom::Identity && a.kind != GAtom::IdOpposite) pointwise_id = false;
  if (pointwise_id) return x;
  if (!std::holds_alternative<CDElt>(x)) throw MathError(Err::CarrierMismatch, "ring glueing applied off a ring");
  CDElt y = std::get<CDElt>(x);
  for (auto it = g.atoms.rbegin(); it != g.atoms.rend(); ++it) y = apply_atom(*it, y);
  return y;
}

const char* sign_name(Sign s) {
  switch (s) {
    case Sign::Negative: return "negative";
    case Sign::Positive: return "positive";
    case Sign::Exceptional: return "exceptional";
  }
  return "?";
}

namespace {

struct Structural {
  bool known = true;
  int anti = 0;
};

Structural structural_of(const GlueingMap& g) {
  Structural s;
  for (const auto& a : g.atoms) {
    if (a.kind == GAtom::StandardInvolution) ++s.anti;
    if (a.kind == GAtom::Table || a.kind == GAtom::Psi) s.known = false;
  }
  return s;
}

SignResult sign_core(const std::function<CDElt(const CDElt&)>& f, const CDAlgebra& A, Structural st, bool flipped,
                     long samples, uint64_t seed, const std::string& who) {
  SignResult r;
  r.report.suite = "glueing-sign/" + who;
  r.report.cite = cite::kGlueingSign;
  r.report.seed = seed;
  auto test = [&](const CDElt& x, const CDElt& y) {
    CDElt fxy = f(x * y), fx = f(x), fy = f(y);
    if (!r.not_mult && fxy != fx * fy) {
      r.not_mult = true;
      r.mult_witness = "x = " + x.str() + ", y = " + y.str();
    }
    if (!r.not_anti && fxy != fy * fx) {
      r.not_anti = true;
      r.anti_witness = "x = " + x.str() + ", y = " + y.str();
    }
  };
  long pairs = 0;
  if (is_finite(A->K) && field_order(A->K) <= 4 && A->dim <= 3) {
    auto all = enumerate_elts(A);
    for (const auto& x : all)
      for (const auto& y : all) {
        ++pairs;
        test(x, y);
      }
  } else {
    Rng rng(seed);
    for (long k = 0; k < samples && !(r.not_mult && r.not_anti); ++k) {
      ++pairs;
      test(random_elt(A, rng, 6), random_elt(A, rng, 6));
    }
  }
  r.report.samples = pairs;
  if (flipped) {
    std::swap(r.not_mult, r.not_anti);
    std::swap(r.mult_witness, r.anti_witness);
  }
  if (r.not_mult && r.not_anti) r.sign = Sign::Exceptional;
  else if (r.not_mult) r.sign = Sign::Positive;
  else if (r.not_anti) r.sign = Sign::Negative;
  r.structural_known = st.known;
  if (st.known) {
    r.structural = (st.anti + (flipped ? 1 : 0)) % 2 ? Sign::Positive : Sign::Negative;
    // on a commutative carrier an anti-automorphism is an automorphism
    if ((r.not_mult || r.not_anti) && r.sign != r.structural)
      throw bad("glueing " + who + ": atoms say " + sign_name(r.structural) + " but witnesses say " +
                sign_name(r.sign));
  }
  r.report.add(std::string("sign: ") + sign_name(r.sign), cite::kHuaTheorem, pairs, true,
               r.not_mult ? "not multiplicative at " + r.mult_witness : "");
  if (r.not_anti) r.report.notes.push_back("not anti-multiplicative at " + r.anti_witness);
  return r;
}

// the polygon root-group index carrying the end at vertex `end`
int end_label(const Polygon& P, End e) { return e == End::First ? 1 : P->n; }

int std_index(const Polygon& P, int label) { return P->opposite ? P->n + 1 - label : label; }

}  // namespace

SignResult fnd_glueing_sign(const GlueingMap& g, const CDAlgebra& carrier, long samples, uint64_t seed) {
  auto f = [&](const CDElt& x) { return std::get<CDElt>(gm_apply(g, x)); };
  return sign_core(f, carrier, structural_of(g), false, samples, seed, g.str());
}

// ---------------------------------------------------------------- diagram

int CoxeterDiagram::label(int i, int j) const {
  auto it = m.find({std::min(i, j), std::max(i, j)});
  return it == m.end() ? 2 : it->second;
}

std::vector<int> CoxeterDiagram::neighbors(int i) const {
  std::vector<int> out;
  for (int j = 0; j < size(); ++j)
    if (j != i && edge(i, j)) out.push_back(j);
  return out;
}

bool CoxeterDiagram::connected() const {
  if (vertices.empty()) return true;
  std::vector<bool> seen(size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : neighbors(v))
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == size();
}

bool CoxeterDiagram::is_tree() const { return connected() && static_cast<int>(m.size()) == size() - 1; }

std::string EdgeSpec::label() const {
  std::string s = symbol + (opposite ? "°" : "");
  if (!P) return s;
  auto paren = P->name.find('(');
  return s + P->name.substr(paren);
}

const EdgeSpec& Foundation::edge(int i, int j) const {
  auto it = edges.find({i, j});
  if (it == edges.end()) throw MathError(Err::IndexOutOfRange, "no edge " + edge_str(*this, i, j));
  return it->second;
}

const GlueingMap& Foundation::glueing(int i, int j, int k) const {
  auto it = glue.find({i, j, k});
  if (it == glue.end()) throw MathError(Err::IndexOutOfRange, "no glueing " + triple_str(*this, {i, j, k}));
  return it->second;
}

std::vector<Triple> Foundation::triples() const {
  std::vector<Triple> out;
  for (const auto& [t, g] : glue) out.push_back(t);
  return out;
}

int fnd_vertex(const Foundation& F, const std::string& name) {
  for (int i = 0; i < F.D.size(); ++i)
    if (F.D.vertices[i] == name) return i;
  throw bad("unknown vertex '" + name + "'");
}

// ---------------------------------------------------------------- loading

namespace {

std::string vname(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long>());
  throw bad("vertex names are strings or integers");
}

Scalar parse_scalar(const json& v, const Field& K) {
  if (v.is_number_integer()) return Scalar::from_int(K, v.get<long>());
  if (v.is_string()) {
    try {
      mpq_class q(v.get<std::string>());
      q.canonicalize();
      return Scalar::from_rational(K, q);
    } catch (const std::invalid_argument&) {
      throw bad("bad scalar '" + v.get<std::string>() + "'");
    }
  }
  throw bad("scalars are integers or strings like \"-1/2\"");
}

CDElt parse_elt(const json& v, const CDAlgebra& A) {
  if (!v.is_array() || static_cast<int>(v.size()) != A->dim)
    throw bad("elements of " + A->name + " are arrays of " + std::to_string(A->dim) + " coordinates");
  Vec c;
  for (const auto& x : v) c.push_back(parse_scalar(x, A->K));
  return CDElt(A, c);
}

Field parse_field(const json& v) {
  if (v.is_string() && v.get<std::string>() == "Q") return rationals();
  if (v.is_number_integer()) return prime_field(v.get<long>());
  throw bad("fields are \"Q\" or a prime");
}

struct Loader {
  json scalars = json::object();
  std::map<std::string, CDAlgebra> towers;
  std::map<std::string, QuadSpace> spaces;
  std::map<std::string, Polygon> polys;

  CDAlgebra algebra(const json& params) {
    std::string name;
    if (params.contains("algebra")) name = params["algebra"].get<std::string>();
    else if (scalars.contains("algebra")) name = scalars["algebra"].get<std::string>();
    else throw bad("no algebra given");
    auto it = towers.find(name);
    if (it != towers.end()) return it->second;
    if (scalars.contains("towers") && scalars["towers"].contains(name)) {
      const json& t = scalars["towers"][name];
      Field K = parse_field(t.value("field", json("Q")));
      std::vector<Scalar> betas;
      for (const auto& b : t.value("betas", json::array())) betas.push_back(parse_scalar(b, K));
      CDAlgebra A;
      if (t.contains("stage"))
        A = cd_with_stage(K, parse_scalar(t["stage"].at("t0"), K), parse_scalar(t["stage"].at("n0"), K), betas, name);
      else
        A = cd_from_betas(K, betas, name, t.value("allow_big", false));
      towers[name] = A;
      return A;
    }
    return towers[name] = builtin_algebra(name);
  }

  std::vector<CDElt> elts(const json& arr, const CDAlgebra& A) {
    std::vector<CDElt> out;
    for (const auto& v : arr) out.push_back(parse_elt(v, A));
    return out;
  }

  QuadSpace space(const json& params) {
    std::string key = params.dump();
    auto it = spaces.find(key);
    if (it != spaces.end()) return it->second;
    std::string kind = params.value("space", std::string("norm"));
    QuadSpace S;
    if (kind == "norm") {
      CDAlgebra A = algebra(params);
      S = norm_space(A, params.value("name", A->name));
    } else if (kind == "diagonal") {
      Field K = parse_field(params.value("field", json("Q")));
      Vec q;
      for (const auto& x : params.at("q")) q.push_back(parse_scalar(x, K));
      if (q.empty() || !q[0].is_one()) throw bad("diagonal spaces need q(e_1) = 1 for the basepoint");
      Mat f(q.size(), zero_vec(K, q.size()));
      Vec eps = zero_vec(K, q.size());
      eps[0] = Scalar::one(K);
      S = make_quadspace(K, q, f, eps, params.value("name", std::string("diag")));
    } else {
      throw bad("unknown quadratic space kind '" + kind + "'");
    }
    return spaces[key] = S;
  }

  Polygon polygon(const std::string& symbol, const json& params) {
    std::string key = symbol + params.dump();
    auto it = polys.find(key);
    if (it != polys.end()) return it->second;
    Polygon P;
    if (symbol == "T") {
      P = poly_triangle(algebra(params));
    } else if (symbol == "Q_I") {
      if (params.value("involutory", std::string()) == "hamilton") {
        P = poly_involutory(hamilton_involutory());
      } else {
        CDAlgebra A = algebra(params);
        SigmaKind s = parse_sigma(params.value("sigma", std::string("standard")));
        P = poly_involutory(make_involutory(A, s, elts(params.at("K0"), A), params.value("name", A->name)));
      }
    } else if (symbol == "Q_P") {
      std::string which = params.value("pseudo", std::string());
      if (which == "xi-hamilton") P = poly_pseudo(xi_hamilton());
      else if (which == "xi-f4") P = poly_pseudo(xi_f4());
      else throw bad("unknown pseudo-quadratic space '" + which + "'");
    } else if (symbol == "Q_Q") {
      P = poly_quadratic(space(params));
    } else if (symbol == "Q_D") {
      if (params.empty()) return nullptr;
      CDAlgebra A = algebra(params);
      P = poly_indifferent(make_indifferent(A, elts(params.at("K0"), A), elts(params.at("L0"), A)));
    } else if (symbol == "Q_E" || symbol == "Q_F") {
      return nullptr;
    } else {
      throw bad("unknown polygon symbol '" + symbol + "'");
    }
    return polys[key] = P;
  }
};

Param end_zero(const Foundation& F, int i, int j, End e) {
  const EdgeSpec& s = F.edge(i, j);
  if (!s.P) throw bad("edge " + edge_str(F, i, j) + " has no relation table");
  return rg_zero(s.P, end_label(s.P, e));
}

GAtom parse_atom(const json& a, const Param& carrier_zero) {
  GAtom at;
  std::string kind = a.is_string() ? a.get<std::string>() : a.at("kind").get<std::string>();
  const CDElt* z = std::get_if<CDElt>(&carrier_zero);
  auto ring = [&]() -> const CDAlgebra& {
    if (!z) throw bad("atom '" + kind + "' needs a ring carrier");
    return z->alg();
  };
  if (kind == "identity" || kind == "id") {
    at.kind = GAtom::Identity;
  } else if (kind == "id-opposite") {
    at.kind = GAtom::IdOpposite;
  } else if (kind == "standard-involution") {
    ring();
    at.kind = GAtom::StandardInvolution;
  } else if (kind == "scalar-conj") {
    at.kind = GAtom::ScalarConj;
    at.w = parse_elt(a.at("w"), ring());
    if (at.w.is_zero()) throw MathError(Err::ZeroArgument, "scalar-conj by 0");
  } else if (kind == "field-iso") {
    const CDAlgebra& A = ring();
    at.kind = GAtom::FieldIso;
    for (const auto& row : a.at("matrix")) {
      Vec r;
      for (const auto& x : row) r.push_back(parse_scalar(x, A->K));
      if (static_cast<int>(r.size()) != A->dim) throw bad("field-iso rows need " + std::to_string(A->dim) + " entries");
      at.m.push_back(r);
    }
    if (static_cast<int>(at.m.size()) != A->dim) throw bad("field-iso needs a square matrix");
  } else if (kind == "frobenius") {
    at.kind = GAtom::Frobenius;
    at.w = CDElt::one(ring());
    at.power = a.is_object() ? a.value("power", 1) : 1;
  } else if (kind == "table") {
    const CDAlgebra& A = ring();
    at.kind = GAtom::Table;
    for (const auto& p : a.at("pairs")) at.table.push_back({parse_elt(p.at(0), A), parse_elt(p.at(1), A)});
  } else if (kind == "psi") {
    const CDAlgebra& A = ring();
    if (A->dim != 8) throw bad("psi atoms live on octonion algebras");
    at.kind = GAtom::Psi;
    CDElt w = parse_elt(a.at("w"), A);
    Subspace H = quaternion_containing(w);
    at.psi = jm_psi(H, perp_unit(H), w);
  } else {
    throw bad("unknown atom '" + kind + "'");
  }
  return at;
}

void fill_glueings(Foundation& F) {
  for (int j = 0; j < F.D.size(); ++j) {
    auto nb = F.D.neighbors(j);
    for (int i : nb)
      for (int k : nb) {
        if (i == k) continue;
        Triple t{i, j, k};
        if (F.given.count(t)) continue;
        Triple r{k, j, i};
        if (F.given.count(r)) {
          F.glue[t] = gm_inverse(F.glue.at(r));
        } else {
          F.glue[t] = gm_identity();
          F.notes.push_back("glueing " + triple_str(F, t) + " defaults to id");
        }
      }
  }
}

}  // namespace

CDAlgebra algebra_from_scalars(const json& scalars, const std::string& name) {
  Loader L;
  L.scalars = scalars;
  return L.algebra(json{{"algebra", name}});
}

namespace {

Foundation from_json_impl(const json& j) {
  if (!j.is_object()) throw bad("a foundation description is a JSON object");
  std::string schema = j.value("schema", std::string("mforge-foundation/1"));
  if (schema != "mforge-foundation/1") throw bad("unsupported schema '" + schema + "'");
  Foundation F;
  F.name = j.value("name", std::string("F"));
  Loader L;
  if (j.contains("scalars")) L.scalars = j["scalars"];
  for (const auto& v : j.at("vertices")) F.D.vertices.push_back(vname(v));
  {
    std::set<std::string> seen(F.D.vertices.begin(), F.D.vertices.end());
    if (seen.size() != F.D.vertices.size()) throw bad("duplicate vertex names");
  }
  for (const auto& e : j.at("edges")) {
    int a = fnd_vertex(F, vname(e.at("from"))), b = fnd_vertex(F, vname(e.at("to")));
    if (a == b) throw bad("loop at vertex " + F.D.vertices[a]);
    int m = e.at("m").get<int>();
    std::string symbol = e.at("symbol").get<std::string>();
    if (m != 3 && m != 4) throw bad("edge labels are 3 or 4");
    if ((symbol == "T") != (m == 3)) throw bad("edge " + edge_str(F, a, b) + ": symbol " + symbol + " needs m = " +
                                               (symbol == "T" ? "3" : "4"));
    std::string orient = e.value("orientation", std::string("standard"));
    if (orient != "standard" && orient != "opposite") throw bad("orientation is standard or opposite");
    EdgeSpec s;
    s.symbol = symbol;
    s.opposite = orient == "opposite";
    s.params = e.value("params", ojson::object());
    Polygon base = L.polygon(symbol, s.params);
    s.P = base && s.opposite ? rgs_opposite(base) : base;
    EdgeSpec r = s;
    r.opposite = !s.opposite;
    r.P = s.P ? rgs_opposite(s.P) : nullptr;
    if (F.edges.count({a, b})) throw bad("edge " + edge_str(F, a, b) + " given twice");
    if (F.edges.count({b, a})) {
      // both directions described; they must be opposite to each other
      const EdgeSpec& o = F.edges.at({b, a});
      if (o.symbol != r.symbol || o.opposite != r.opposite || o.params != r.params)
        F.f2_conflicts.push_back(edge_str(F, a, b) + " is not the opposite of " + edge_str(F, b, a));
      if (F.D.label(a, b) != m) F.f2_conflicts.push_back("edge " + edge_str(F, a, b) + " has two labels");
      F.edges[{a, b}] = s;
      F.given_edges.insert({a, b});
      continue;
    }
    F.D.m[{std::min(a, b), std::max(a, b)}] = m;
    F.edges[{a, b}] = s;
    F.edges[{b, a}] = r;
    F.given_edges.insert({a, b});
  }
  for (const auto& g : j.value("glueings", json::array())) {
    const json& tr = g.at("triple");
    if (!tr.is_array() || tr.size() != 3) throw bad("a glueing triple has three vertices");
    Triple t{fnd_vertex(F, vname(tr[0])), fnd_vertex(F, vname(tr[1])), fnd_vertex(F, vname(tr[2]))};
    if (t[0] == t[2] || !F.D.edge(t[0], t[1]) || !F.D.edge(t[1], t[2]))
      throw bad("glueing " + triple_str(F, t) + " does not sit on two edges");
    if (F.given.count(t)) throw bad("glueing " + triple_str(F, t) + " given twice");
    const EdgeSpec& src = F.edge(t[0], t[1]);
    Param zero = src.P ? rg_zero(src.P, src.P->n) : Param(CDElt());
    GlueingMap gm;
    for (const auto& a : g.value("atoms", json::array())) {
      GAtom at = parse_atom(a, zero);
      if (at.kind != GAtom::Identity) gm.atoms.push_back(at);
    }
    F.glue[t] = gm;
    F.given.insert(t);
  }
  for (const Triple& t : F.given) {
    Triple r{t[2], t[1], t[0]};
    if (F.given.count(r)) F.notes.push_back("both " + triple_str(F, t) + " and its reverse are given");
  }
  fill_glueings(F);
  return F;
}

}  // namespace

Foundation fnd_from_json(const json& j) {
  try {
    return from_json_impl(j);
  } catch (const json::exception& e) {
    throw bad(e.what());
  }
}

Foundation fnd_load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bad("cannot read " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw bad(path + ": " + e.what());
  }
  try {
    return fnd_from_json(j);
  } catch (const MathError& e) {
    throw bad(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------- maps and signs

MSet fnd_end_mset(const Foundation& F, int i, int j, End e) {
  const EdgeSpec& s = F.edge(i, j);
  if (!s.P) throw bad("edge " + edge_str(F, i, j) + " has no relation table");
  const Polygon& P = s.P;
  bool odd = std_index(P, end_label(P, e)) % 2 == 1;
  switch (P->symbol) {
    case PolySymbol::T: return ms_linear(P->A);
    case PolySymbol::QI: return odd ? ms_involutory(P->inv) : ms_linear(P->inv.K);
    case PolySymbol::QP: return odd ? ms_pseudo(P->pq) : ms_linear(P->pq->K());
    case PolySymbol::QQ: return odd ? ms_linear(P->A) : ms_quadratic(P->qs);
    case PolySymbol::QD: return odd ? ms_indifferent(P->ind) : ms_indifferent(ind_opposite(P->ind));
  }
  throw bad("unknown polygon");
}

Param fnd_apply(const Foundation& F, const Triple& t, const Param& x) {
  Param y = gm_apply(F.glueing(t[0], t[1], t[2]), x);
  return transport(y, end_zero(F, t[1], t[2], End::First));
}

SignResult fnd_triple_sign(const Foundation& F, const Triple& t, long samples, uint64_t seed) {
  const EdgeSpec& a = F.edge(t[0], t[1]);
  const EdgeSpec& b = F.edge(t[1], t[2]);
  if (a.symbol != "T" || b.symbol != "T") throw bad("signs are defined for glueings between triangles");
  CDAlgebra A = a.P->A;
  auto f = [&](const CDElt& x) { return std::get<CDElt>(fnd_apply(F, t, x)); };
  // the parameter ring of (i,j) is A or its opposite depending on orientation
  bool flipped = a.opposite != b.opposite;
  return sign_core(f, A, structural_of(F.glueing(t[0], t[1], t[2])), flipped, samples, seed, triple_str(F, t));
}

// ---------------------------------------------------------------- check

Report fnd_check(const Foundation& F, long samples, uint64_t seed) {
  Report r;
  r.suite = "foundation/" + F.name;
  r.cite = cite::kFoundation;
  r.samples = samples;
  r.seed = seed;
  for (const auto& n : F.notes) r.notes.push_back(n);
  Rng rng(seed);

  Acc f1;
  for (const auto& [e, s] : F.edges) {
    if (!F.given_edges.count(e) && F.given_edges.count({e.second, e.first})) continue;
    ++f1.n;
    if (!s.P) {
      f1.fail("edge " + edge_str(F, e.first, e.second) + ": no relation table for " + s.symbol);
      continue;
    }
    Report pr = rgs_verify(s.P, std::min<long>(samples, 20), seed);
    if (!pr.pass())
      for (const auto& c : pr.checks)
        if (!c.pass) f1.fail("edge " + edge_str(F, e.first, e.second) + ": " + c.name + " " + c.detail);
  }
  r.add("(F1) every edge carries a parametrized polygon", cite::kFoundation, f1.n, f1.ok, f1.detail);
  r.add("(F2) reversed edges carry opposite polygons", cite::kFoundation, static_cast<long>(F.edges.size()),
        F.f2_conflicts.empty(), F.f2_conflicts.empty() ? "" : F.f2_conflicts[0]);

  Acc unit, add, sym, f4, jordan;
  auto sample_src = [&](const Triple& t) {
    const Polygon& P = F.edge(t[0], t[1]).P;
    int label = P->n;
    std::vector<Param> xs;
    if (poly_finite(P)) {
      auto all = rg_enumerate(P, label);
      if (all.size() <= 256) return all;
    }
    for (long k = 0; k < samples; ++k) xs.push_back(rg_random(P, label, rng, 6));
    return xs;
  };
  bool tables = true;
  for (const auto& [e, s] : F.edges)
    if (!s.P) tables = false;
  if (tables) {
    for (const Triple& t : F.triples()) {
      std::string who = triple_str(F, t);
      try {
        const Polygon& P = F.edge(t[0], t[1]).P;
        const Polygon& Q = F.edge(t[1], t[2]).P;
        ++unit.n;
        if (!param_eq(fnd_apply(F, t, rg_unit(P, P->n)), rg_unit(Q, 1))) unit.fail(who);
        auto xs = sample_src(t);
        Triple rev{t[2], t[1], t[0]};
        for (size_t k = 0; k < xs.size(); ++k) {
          const Param& x = xs[k];
          const Param& y = xs[(k * 7 + 3) % xs.size()];
          ++add.n;
          ++sym.n;
          Param gx = fnd_apply(F, t, x);
          if (!rg_member(Q, 1, gx)) add.fail(who + " leaves the target root group at " + param_str(x));
          if (!param_eq(fnd_apply(F, t, rg_add(P, P->n, x, y)), rg_add(Q, 1, gx, fnd_apply(F, t, y))))
            add.fail(who + " at " + param_str(x) + ", " + param_str(y));
          if (!param_eq(fnd_apply(F, rev, gx), x)) sym.fail(who + " at " + param_str(x));
        }
      } catch (const MathError& ex) {
        unit.fail(who + ": " + ex.what());
      }
    }
    // cocycle at every vertex with three distinct neighbours
    for (int j = 0; j < F.D.size(); ++j) {
      auto nb = F.D.neighbors(j);
      for (int i : nb)
        for (int k : nb)
          for (int l : nb) {
            if (i == k || i == l || k == l) continue;
            Triple t{i, j, k}, a{i, j, l}, b{l, j, k};
            for (const Param& x : sample_src(t)) {
              ++f4.n;
              if (!param_eq(fnd_apply(F, t, x), fnd_apply(F, b, fnd_apply(F, a, x))))
                f4.fail(triple_str(F, t) + " at " + param_str(x));
              if (!f4.ok) break;
            }
          }
    }
    for (const Triple& t : F.triples()) {
      if (t[0] > t[2] && F.glue.count({t[2], t[1], t[0]})) continue;
      ++jordan.n;
      try {
        MSet Ms = fnd_end_mset(F, t[0], t[1], End::Last);
        MSet Mt = fnd_end_mset(F, t[1], t[2], End::First);
        MMap g = [&, t, Mt](const MElt& x) { return MElt{Mt, fnd_apply(F, t, x.v)}; };
        JordanResult jr = ms_jordan_check(g, Ms, Mt, ms_finite(Ms), std::min<long>(samples, 60), seed);
        if (!jr.jordan) {
          std::string d;
          for (const auto& c : jr.report.checks)
            if (!c.pass) {
              d = c.name + " " + c.detail;
              break;
            }
          jordan.fail(triple_str(F, t) + ": " + d);
        }
      } catch (const MathError& ex) {
        jordan.fail(triple_str(F, t) + ": " + ex.what());
      }
    }
  } else {
    unit.fail("some edge has no relation table");
    add = sym = f4 = jordan = unit;
  }
  r.add("(F3) glueings map 1 to 1", cite::kFoundation, unit.n, unit.ok, unit.detail);
  r.add("(F3) glueings are additive isomorphisms", cite::kFoundation, add.n, add.ok, add.detail);
  r.add("(F3) reversed glueings are inverse", cite::kFoundation, sym.n, sym.ok, sym.detail);
  r.add("(F4) cocycle condition", cite::kFoundation, f4.n, f4.ok, f4.detail);
  r.add("glueings are Jordan isomorphisms", cite::kMoufangFoundation, jordan.n, jordan.ok, jordan.detail);
  return r;
}

// ---------------------------------------------------------------- residues

Foundation fnd_residue(const Foundation& F, const std::vector<int>& J0) {
  std::vector<int> J = J0;
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  if (J.size() < 2) throw MathError(Err::TooSmall, "a residue needs at least two vertices");
  std::map<int, int> idx;
  Foundation R;
  for (int v : J) {
    if (v < 0 || v >= F.D.size()) throw MathError(Err::IndexOutOfRange, "vertex " + std::to_string(v));
    idx[v] = R.D.size();
    R.D.vertices.push_back(F.D.vertices[v]);
  }
  std::string names;
  for (const auto& v : R.D.vertices) names += (names.empty() ? "" : ",") + v;
  R.name = F.name + "_{" + names + "}";
  for (const auto& [e, m] : F.D.m)
    if (idx.count(e.first) && idx.count(e.second)) R.D.m[{idx[e.first], idx[e.second]}] = m;
  for (const auto& [e, s] : F.edges)
    if (idx.count(e.first) && idx.count(e.second)) R.edges[{idx[e.first], idx[e.second]}] = s;
  for (const auto& e : F.given_edges)
    if (idx.count(e.first) && idx.count(e.second)) R.given_edges.insert({idx[e.first], idx[e.second]});
  for (const auto& [t, g] : F.glue)
    if (idx.count(t[0]) && idx.count(t[1]) && idx.count(t[2])) {
      Triple u{idx[t[0]], idx[t[1]], idx[t[2]]};
      R.glue[u] = g;
      if (F.given.count(t)) R.given.insert(u);
    }
  R.f2_conflicts = F.f2_conflicts;
  return R;
}

// ---------------------------------------------------------------- reparametrization

Foundation fnd_reparametrize(const Foundation& F, const EdgeMaps& alpha, long samples, uint64_t seed) {
  Foundation G = F;
  auto amap = [&](int a, int b) -> GlueingMap {
    auto it = alpha.find({std::min(a, b), std::max(a, b)});
    return it == alpha.end() ? gm_identity() : it->second;
  };
  for (const auto& [e, g] : alpha) {
    auto [a, b] = e;
    if (!F.D.edge(a, b)) throw bad("no edge " + edge_str(F, a, b));
    if (g.is_identity()) continue;
    const EdgeSpec& s = F.edge(a, b);
    if (s.symbol != "T") throw bad("reparametrizations are supported on triangle edges");
    CDAlgebra A = s.P->A;
    if (std::get<CDElt>(gm_apply(g, CDElt::one(A))) != CDElt::one(A))
      throw MathError(Err::UnitIncompatible, "edge " + edge_str(F, a, b) + ": map moves 1");
    SignResult sr = fnd_glueing_sign(g, A, samples, seed);
    if (sr.sign == Sign::Exceptional) throw bad("edge " + edge_str(F, a, b) + ": map is not a (anti-)automorphism");
    PMap f = [g](const Param& x) { return gm_apply(g, x); };
    PMap nf = [g](const Param& x) { return Param(-std::get<CDElt>(gm_apply(g, x))); };
    // an anti-automorphism carries T(A) onto the opposite orientation
    bool flip = sr.sign == Sign::Positive && !sr.not_anti ? sr.not_mult : false;
    Polygon target = flip ? rgs_opposite(s.P) : s.P;
    Report rr = rgs_reparam_check(s.P, target, {f, flip ? nf : f, f}, samples, seed);
    if (!rr.pass()) throw bad("edge " + edge_str(F, a, b) + ": map does not preserve the commutator relations");
    if (flip) {
      G.edges[{a, b}].opposite = !G.edges[{a, b}].opposite;
      G.edges[{a, b}].P = rgs_opposite(G.edges[{a, b}].P);
      G.edges[{b, a}].opposite = !G.edges[{b, a}].opposite;
      G.edges[{b, a}].P = rgs_opposite(G.edges[{b, a}].P);
      G.notes.push_back("edge " + edge_str(F, a, b) + " reoriented by an anti-automorphism");
    }
  }
  for (auto& [t, g] : G.glue) g = gm_simplify(gm_compose(gm_compose(gm_inverse(amap(t[1], t[2])), g), amap(t[0], t[1])));
  G.name = F.name + "_α";
  return G;
}

Canonical fnd_canonicalize_tree(const Foundation& F, long samples, uint64_t seed) {
  if (!F.D.is_tree()) throw MathError(Err::NotTree, F.name + " is not a tree");
  for (const auto& [e, s] : F.edges)
    if (s.symbol != "T") throw MathError(Err::NotSimplyLaced, "canonical foundations are simply laced");
  for (const Triple& t : F.triples())
    if (fnd_triple_sign(F, t, samples, seed).sign != Sign::Negative)
      throw MathError(Err::NotNegative, "glueing " + triple_str(F, t) + " is not negative");
  Canonical c;
  auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  std::vector<int> parent(F.D.size(), -1);
  std::vector<bool> seen(F.D.size(), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  while (!q.empty()) {
    int j = q.front();
    q.pop();
    auto nb = F.D.neighbors(j);
    std::vector<int> kids;
    for (int k : nb)
      if (!seen[k]) kids.push_back(k);
    for (size_t n = 0; n < kids.size(); ++n) {
      int k = kids[n];
      GlueingMap a;
      if (parent[j] >= 0) a = gm_compose(F.glueing(parent[j], j, k), c.alpha[key(parent[j], j)]);
      else if (n > 0) a = F.glueing(kids[0], j, k);
      c.alpha[key(j, k)] = gm_simplify(a);
      if (!c.alpha[key(j, k)].is_identity()) ++c.pushes;
      parent[k] = j;
      seen[k] = true;
      q.push(k);
    }
  }
  c.F = fnd_reparametrize(F, c.alpha, samples, seed);
  // what remains must be pointwise the identity
  Rng rng(seed);
  for (auto& [t, g] : c.F.glue) {
    if (g.is_identity()) continue;
    const Polygon& P = c.F.edge(t[0], t[1]).P;
    for (long k = 0; k < samples; ++k) {
      Param x = rg_random(P, P->n, rng, 6);
      if (!param_eq(gm_apply(g, x), x))
        throw MathError(Err::NotNegative, "glueing " + triple_str(F, t) + " does not become the identity");
    }
    g = gm_identity();
  }
  c.F.name = F.name + "_canonical";
  return c;
}

// ---------------------------------------------------------------- covers

namespace {

Foundation lift(const Foundation& F, const std::vector<std::string>& names, const std::vector<int>& image,
                const std::vector<std::pair<int, int>>& edges) {
  Foundation C;
  C.D.vertices = names;
  C.base_image = image;
  for (auto [a, b] : edges) {
    C.D.m[{std::min(a, b), std::max(a, b)}] = F.D.label(image[a], image[b]);
    C.edges[{a, b}] = F.edge(image[a], image[b]);
    C.edges[{b, a}] = F.edge(image[b], image[a]);
    if (F.given_edges.count({image[a], image[b]})) C.given_edges.insert({a, b});
    else C.given_edges.insert({b, a});
  }
  for (int j = 0; j < C.D.size(); ++j) {
    auto nb = C.D.neighbors(j);
    for (int i : nb)
      for (int k : nb) {
        if (i == k) continue;
        Triple b{image[i], image[j], image[k]};
        C.glue[{i, j, k}] = F.glueing(b[0], b[1], b[2]);
        if (F.given.count(b)) C.given.insert({i, j, k});
      }
  }
  return C;
}

}  // namespace

Foundation fnd_cover(const Foundation& F, const GraphCover& cover) {
  int n = static_cast<int>(cover.vertices.size());
  if (static_cast<int>(cover.image.size()) != n) throw MathError(Err::NotACover, "one image per vertex");
  std::vector<std::set<int>> nb(n);
  for (auto [a, b] : cover.edges) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw MathError(Err::NotACover, "bad cover edge");
    if (cover.image[a] < 0 || cover.image[a] >= F.D.size() || cover.image[b] < 0 || cover.image[b] >= F.D.size())
      throw MathError(Err::NotACover, "image outside the base");
    if (!F.D.edge(cover.image[a], cover.image[b]))
      throw MathError(Err::NotACover, "edge " + cover.vertices[a] + "-" + cover.vertices[b] + " maps to a non-edge");
    nb[a].insert(b);
    nb[b].insert(a);
  }
  for (int v = 0; v < n; ++v) {
    std::set<int> img;
    for (int w : nb[v]) img.insert(cover.image[w]);
    auto base = F.D.neighbors(cover.image[v]);
    if (img.size() != nb[v].size() || img != std::set<int>(base.begin(), base.end()))
      throw MathError(Err::NotACover, "not a bijection on the neighbourhood of " + cover.vertices[v]);
  }
  Foundation C = lift(F, cover.vertices, cover.image, cover.edges);
  C.name = F.name + "~";
  return C;
}

Foundation fnd_universal_cover(const Foundation& F, int root, int radius) {
  if (root < 0 || root >= F.D.size()) throw MathError(Err::IndexOutOfRange, "root vertex");
  if (radius < 1) throw bad("radius must be positive");
  std::vector<std::string> names{F.D.vertices[root]};
  std::vector<int> image{root}, depth{0}, parent{-1};
  std::vector<std::pair<int, int>> edges;
  bool truncated = false;
  for (size_t q = 0; q < image.size(); ++q) {
    int v = static_cast<int>(q);
    for (int w : F.D.neighbors(image[q])) {
      if (parent[q] >= 0 && image[parent[q]] == w) continue;
      if (depth[q] == radius) {
        truncated = true;
        continue;
      }
      names.push_back(names[q] + "." + F.D.vertices[w]);
      image.push_back(w);
      depth.push_back(depth[q] + 1);
      parent.push_back(v);
      edges.push_back({v, static_cast<int>(image.size()) - 1});
    }
  }
  Foundation C = lift(F, names, image, edges);
  C.name = F.name + "~r" + std::to_string(radius);
  if (truncated) C.notes.push_back("universal cover truncated at radius " + std::to_string(radius));
  return C;
}

// ---------------------------------------------------------------- positive analysis

namespace {

std::map<Triple, Sign> all_signs(const Foundation& F, long samples, uint64_t seed, Report* ev) {
  std::map<Triple, Sign> s;
  for (const Triple& t : F.triples()) {
    if (t[0] > t[2]) continue;
    SignResult r = fnd_triple_sign(F, t, samples, seed);
    s[t] = r.sign;
    s[{t[2], t[1], t[0]}] = r.sign;
    if (ev) ev->notes.push_back("glueing " + triple_str(F, t) + " = " + F.glueing(t[0], t[1], t[2]).str() + " is " +
                                sign_name(r.sign));
  }
  return s;
}

bool induced_connected(const CoxeterDiagram& D, const std::vector<int>& J) {
  if (J.empty()) return false;
  std::set<int> in(J.begin(), J.end()), seen{J[0]};
  std::vector<int> st{J[0]};
  while (!st.empty()) {
    int v = st.back();
    st.pop_back();
    for (int w : D.neighbors(v))
      if (in.count(w) && !seen.count(w)) {
        seen.insert(w);
        st.push_back(w);
      }
  }
  return seen.size() == in.size();
}

std::string vset(const Foundation& F, const std::vector<int>& J) {
  std::string s = "{";
  for (size_t i = 0; i < J.size(); ++i) s += (i ? "," : "") + F.D.vertices[J[i]];
  return s + "}";
}

PositiveAnalysis positive_from_signs(const Foundation& F, const std::map<Triple, Sign>& sg) {
  PositiveAnalysis pa;
  Report& r = pa.report;
  r.suite = "positive/" + F.name;
  r.cite = cite::kMaximalPositive;
  int n = F.D.size();
  if (n > 16) throw bad("positive analysis is limited to 16 vertices");
  std::vector<unsigned> positive;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> J;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) J.push_back(v);
    if (J.size() < 2 || !induced_connected(F.D, J)) continue;
    bool ok = true;
    for (const auto& [t, s] : sg)
      if ((mask >> t[0] & 1) && (mask >> t[1] & 1) && (mask >> t[2] & 1) && s != Sign::Positive) ok = false;
    if (ok) positive.push_back(mask);
  }
  for (unsigned m : positive) {
    bool maximal = true;
    for (unsigned o : positive)
      if (o != m && (o & m) == m) maximal = false;
    if (!maximal) continue;
    std::vector<int> J;
    for (int v = 0; v < n; ++v)
      if (m & (1u << v)) J.push_back(v);
    pa.M.push_back(J);
  }
  std::string ms;
  for (const auto& J : pa.M) ms += (ms.empty() ? "" : " ") + vset(F, J);
  r.notes.push_back("M(F) = " + ms);
  Acc c1, c2, c3, c4;
  for (const auto& J : pa.M)
    for (size_t a = 0; a < J.size(); ++a)
      for (size_t b = a + 1; b < J.size(); ++b)
        if (!F.D.edge(J[a], J[b])) c1.fail(vset(F, J) + " is not complete");
  for (const auto& [e, m] : F.D.m) {
    bool covered = false;
    for (const auto& J : pa.M)
      if (std::count(J.begin(), J.end(), e.first) && std::count(J.begin(), J.end(), e.second)) covered = true;
    if (!covered) c2.fail("edge " + edge_str(F, e.first, e.second));
  }
  for (size_t a = 0; a < pa.M.size(); ++a)
    for (size_t b = a + 1; b < pa.M.size(); ++b) {
      std::vector<int> I;
      std::set_intersection(pa.M[a].begin(), pa.M[a].end(), pa.M[b].begin(), pa.M[b].end(), std::back_inserter(I));
      if (I.size() > 1) c3.fail(vset(F, pa.M[a]) + " and " + vset(F, pa.M[b]) + " share " + vset(F, I));
      if (!I.empty()) pa.gp_edges.push_back({static_cast<int>(a), static_cast<int>(b)});
    }
  for (int v = 0; v < n; ++v) {
    int k = 0;
    for (const auto& J : pa.M) k += static_cast<int>(std::count(J.begin(), J.end(), v));
    if (k > 2) c4.fail("vertex " + F.D.vertices[v] + " lies in " + std::to_string(k) + " residues");
  }
  long nm = static_cast<long>(pa.M.size());
  r.add("(i) maximal positive residues are complete", cite::kMaximalPositive, nm, c1.ok, c1.detail);
  r.add("(ii) they cover every edge", cite::kMaximalPositive, static_cast<long>(F.D.m.size()), c2.ok, c2.detail);
  r.add("(iii) two of them share at most one vertex", cite::kMaximalPositive, nm, c3.ok, c3.detail);
  r.add("(iv) a vertex lies in at most two of them", cite::kMaximalPositive, n, c4.ok, c4.detail);
  pa.conditions[0] = c1.ok;
  pa.conditions[1] = c2.ok;
  pa.conditions[2] = c3.ok;
  pa.conditions[3] = c4.ok;
  // G^P: one node per residue, an edge when two residues meet
  std::vector<int> comp(nm);
  for (int i = 0; i < nm; ++i) comp[i] = i;
  std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  bool cycle = false;
  for (auto [a, b] : pa.gp_edges) {
    int x = find(a), y = find(b);
    if (x == y) cycle = true;
    comp[x] = y;
  }
  int roots = 0;
  for (int i = 0; i < nm; ++i) roots += find(i) == i;
  pa.tree = nm > 0 && !cycle && roots == 1;
  r.notes.push_back(std::string("G^P is ") + (pa.tree ? "a tree" : "not a tree") + " (" + cite::kTreeOfResidues + ")");
  return pa;
}

}  // namespace

PositiveAnalysis fnd_positive_analysis(const Foundation& F, long samples, uint64_t seed) {
  for (const auto& [e, m] : F.D.m)
    if (m != 3) throw MathError(Err::NotSimplyLaced, "positive analysis needs a simply laced foundation");
  Report ev;
  auto sg = all_signs(F, samples, seed, &ev);
  PositiveAnalysis pa = positive_from_signs(F, sg);
  pa.report.notes.insert(pa.report.notes.begin(), ev.notes.begin(), ev.notes.end());
  return pa;
}

// ---------------------------------------------------------------- verdicts

const char* verdict_name(Verdict::Kind k) {
  switch (k) {
    case Verdict::MatchesCase: return "MatchesCase";
    case Verdict::NotIntegrable: return "NotIntegrable";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string Verdict::str() const { return std::string(verdict_name(kind)) + "(" + label + ") [" + cite + "]"; }

ojson Verdict::to_json() const {
  ojson j;
  j["verdict"] = verdict_name(kind);
  j["label"] = label;
  j["cite"] = cite;
  j["evidence"] = evidence.to_json();
  return j;
}

namespace {

Verdict make(Verdict::Kind k, std::string label, std::string cite, Report ev) {
  Verdict v;
  v.kind = k;
  v.label = std::move(label);
  v.cite = std::move(cite);
  v.evidence = std::move(ev);
  return v;
}

bool complete(const CoxeterDiagram& D) { return static_cast<int>(D.m.size()) == D.size() * (D.size() - 1) / 2; }

}  // namespace

Verdict fnd_classify_simply_laced(const Foundation& F, long samples, uint64_t seed) {
  for (const auto& [e, m] : F.D.m)
    if (m != 3) throw MathError(Err::NotSimplyLaced, F.name + " has an edge labelled " + std::to_string(m));
  Report ev;
  ev.suite = "classify/" + F.name;
  ev.cite = cite::kSimplyLaced;
  ev.samples = samples;
  ev.seed = seed;
  using V = Verdict;
  if (!F.D.connected()) return make(V::Inconclusive, "reducible diagram", cite::kSimplyLaced, ev);
  CDAlgebra A;
  for (const auto& [e, s] : F.edges) {
    if (!A) A = s.P->A;
    if (s.P->A != A) {
      ev.add("one defining ring on every edge", cite::kDefiningField, 1, false, s.P->A->name + " vs " + A->name);
      return make(V::Inconclusive, "edges carry different rings; isomorphism not decided", cite::kDefiningField, ev);
    }
  }
  ev.add("one defining ring on every edge", cite::kDefiningField, static_cast<long>(F.D.m.size()), true, A->name);
  std::string kind = A->dim == 8 ? "octonion" : A->dim == 4 ? "quaternion" : "field";
  ev.notes.push_back("defining ring " + A->name + " (" + kind + ")");

  if (kind == "octonion" && F.D.size() == 4 && complete(F.D)) {
    ev.add("diagram is a single edge or a triangle", cite::kTetrahedron, 1, false, "tetrahedron");
    return make(V::NotIntegrable, "tetrahedron over an octonion division algebra", cite::kTetrahedron, ev);
  }
  auto sg = all_signs(F, samples, seed, &ev);
  if (kind == "field") {
    ev.add("glueings between field carriers are isomorphisms", cite::kHuaTheorem, static_cast<long>(sg.size()), true);
    return make(V::MatchesCase, "field: no further restrictions", cite::kSimplyLaced, ev);
  }
  // A3 residues
  Acc a3;
  for (const auto& [t, s] : sg) {
    ++a3.n;
    if (!F.D.edge(t[0], t[2]) && s != Sign::Negative)
      a3.fail("A3 residue " + triple_str(F, t) + " has a " + sign_name(s) + " glueing");
  }
  ev.add("glueings of A3 residues are negative", cite::kA3Negative, a3.n, a3.ok, a3.detail);
  if (!a3.ok) return make(V::NotIntegrable, "A3 residue with a non-negative glueing", cite::kA3Negative, ev);

  if (kind == "octonion") {
    Acc neg;
    for (const auto& [t, s] : sg) {
      ++neg.n;
      if (s != Sign::Negative) neg.fail(triple_str(F, t) + " is " + sign_name(s));
    }
    bool shape = F.D.size() == 2 || (F.D.size() == 3 && complete(F.D));
    ev.add("diagram is a single edge or a triangle", cite::kOctonionFoundations, 1, shape);
    ev.add("all glueings negative", cite::kOctonionFoundations, neg.n, neg.ok, neg.detail);
    if (!shape || !neg.ok) return make(V::NotIntegrable, "octonion foundation outside A2 and affine A2",
                                       cite::kOctonionFoundations, ev);
    return make(V::MatchesCase, F.D.size() == 2 ? "octonion: A2(O)" : "octonion: affine A2(O)",
                cite::kOctonionFoundations, ev);
  }

  // quaternion: stars first
  Acc parity, d4;
  for (int c = 0; c < F.D.size(); ++c) {
    auto nb = F.D.neighbors(c);
    for (size_t x = 0; x < nb.size(); ++x)
      for (size_t y = x + 1; y < nb.size(); ++y)
        for (size_t z = y + 1; z < nb.size(); ++z) {
          int a = nb[x], b = nb[y], d = nb[z];
          int npos = (sg.at({a, c, b}) == Sign::Positive) + (sg.at({b, c, d}) == Sign::Positive) +
                     (sg.at({a, c, d}) == Sign::Positive);
          ++parity.n;
          std::string star = F.D.vertices[c] + ":" + vset(F, {a, b, d});
          if (npos != 1 && npos != 3) parity.fail("star " + star + " has n = " + std::to_string(npos));
          ++d4.n;
          if (!F.D.edge(a, b) && !F.D.edge(b, d) && !F.D.edge(a, d)) d4.fail("D4 residue " + star);
        }
  }
  ev.add("positive glueings at a branch number 1 or 3", cite::kParity, parity.n, parity.ok, parity.detail);
  ev.add("no D4 residue over a skew field", cite::kD4, d4.n, d4.ok, d4.detail);
  if (!d4.ok) return make(V::NotIntegrable, "D4 residue over a non-commutative skew field", cite::kD4, ev);
  if (!parity.ok) return make(V::NotIntegrable, "parity of positive glueings at a branch", cite::kParity, ev);
  PositiveAnalysis pa = positive_from_signs(F, sg);
  for (const auto& c : pa.report.checks) ev.checks.push_back(c);
  for (const auto& n : pa.report.notes) ev.notes.push_back(n);
  if (!pa.report.pass())
    return make(V::NotIntegrable, "maximal positive residues violate the conditions", cite::kMaximalPositive, ev);
  return make(V::MatchesCase, "quaternion: maximal positive residues satisfy (i)-(iv)", cite::kSimplyLaced, ev);
}

// ---------------------------------------------------------------- 443

namespace {

bool atoms_are(const GlueingMap& g, std::initializer_list<GAtom::Kind> kinds) {
  if (g.atoms.size() != kinds.size()) return false;
  size_t i = 0;
  for (auto k : kinds)
    if (g.atoms[i++].kind != k) return false;
  return true;
}

bool is_quaternion(const CDAlgebra& A) { return A->dim == 4 && A->division; }

Verdict classify_443(const Foundation& F, int v1, int v2, int v3, long samples, uint64_t seed) {
  using V = Verdict;
  Report ev;
  ev.suite = "classify443/" + F.name;
  ev.cite = cite::k443;
  ev.samples = samples;
  ev.seed = seed;
  ev.notes.push_back("vertices 1, 2, 3 = " + F.D.vertices[v1] + ", " + F.D.vertices[v2] + ", " + F.D.vertices[v3]);
  const EdgeSpec& b12 = F.edge(v1, v2);
  const EdgeSpec& b23 = F.edge(v2, v3);
  const EdgeSpec& b31 = F.edge(v3, v1);
  const GlueingMap& g1 = F.glueing(v3, v1, v2);
  const GlueingMap& g2 = F.glueing(v1, v2, v3);
  const GlueingMap& g3 = F.glueing(v2, v3, v1);
  ev.notes.push_back("γ1 = " + g1.str() + ", γ2 = " + g2.str() + ", γ3 = " + g3.str());
  for (const auto* s : {&b12, &b23}) {
    if (s->symbol == "Q_E") {
      ev.add("quadrangles not of type E_n", cite::kEn, 1, false, s->label());
      return make(V::NotIntegrable, "quadrangle of type E_n", cite::kEn, ev);
    }
    if (s->symbol == "Q_F") {
      ev.add("quadrangles not of type F4", cite::kF4Type, 1, false, s->label());
      return make(V::NotIntegrable, "quadrangle of type F4", cite::kF4Type, ev);
    }
    if (s->symbol == "Q_D") {
      ev.add("quadrangles not of indifferent type", cite::kIndifferentType, 1, false, s->label());
      return make(V::NotIntegrable, "quadrangle of indifferent type", cite::kIndifferentType, ev);
    }
  }
  ev.add("quadrangles not of type E_n, F4 or indifferent", cite::kIndifferentType, 2, true);
  const CDAlgebra& Kt = b31.P->A;

  // shared panels: every glueing must be a Jordan isomorphism of the end Moufang sets
  auto panels = [&]() {
    Acc j;
    for (const Triple& t : {Triple{v3, v1, v2}, Triple{v1, v2, v3}, Triple{v2, v3, v1}}) {
      ++j.n;
      try {
        MSet Ms = fnd_end_mset(F, t[0], t[1], End::Last);
        MSet Mt = fnd_end_mset(F, t[1], t[2], End::First);
        MMap g = [&, t, Mt](const MElt& x) { return MElt{Mt, fnd_apply(F, t, x.v)}; };
        if (!ms_jordan_check(g, Ms, Mt, ms_finite(Ms), std::min<long>(samples, 60), seed).jordan)
          j.fail(triple_str(F, t));
      } catch (const MathError& e) {
        j.fail(triple_str(F, t) + ": " + e.what());
      }
    }
    ev.add("shared panels carry Jordan isomorphisms", cite::kMoufangFoundation, j.n, j.ok, j.detail);
    return j.ok;
  };

  bool qi = b12.symbol == "Q_I" || b23.symbol == "Q_I";
  bool qp = b12.symbol == "Q_P" || b23.symbol == "Q_P";
  if (qi) {
    bool both = b12.symbol == "Q_I" && b23.symbol == "Q_I";
    ev.add("both quadrangles involutory", cite::kInvolutory443, 2, both);
    if (!both) return make(V::NotIntegrable, "mixed involutory foundation", cite::kInvolutory443, ev);
    const InvolutorySet& X = b23.P->inv;
    bool same = b12.P->inv.K == X.K && b12.P->inv.K0.equals(X.K0) && b12.P->inv.sigma == X.sigma;
    bool quat = is_quaternion(X.K);
    ev.add("one involutory set on both quadrangles", cite::kInvolutory443, 1, same);
    ev.add("K is a quaternion division algebra", cite::kInvolutory443, 1, quat, X.K->name);
    if (!same || !quat) return make(V::NotIntegrable, "involutory data outside case (iii)", cite::kInvolutory443, ev);
    if (!inv_check(X, 20, seed).proper)
      ev.notes.push_back("the involutory set is not proper; the classification assumes proper parameter systems");
    if (!panels()) return make(V::NotIntegrable, "a glueing is not a Jordan isomorphism", cite::kMoufangFoundation, ev);
    bool pattern = b12.opposite && !b23.opposite && Kt == X.K && atoms_are(g1, {GAtom::StandardInvolution}) &&
                   atoms_are(g2, {GAtom::IdOpposite}) && atoms_are(g3, {GAtom::IdOpposite});
    ev.add("glueings (σ_s, id°, id°) on Q_I°(Ξ°), Q_I(Ξ), T(K°)", cite::kInvolutory443, 3, pattern);
    if (!pattern) return make(V::Inconclusive, "glueings differ from the normal form of case (iii)",
                              cite::kInvolutory443, ev);
    return make(V::MatchesCase, "(iii)", cite::k443, ev);
  }
  if (qp) {
    bool both = b12.symbol == "Q_P" && b23.symbol == "Q_P";
    ev.add("both quadrangles pseudo-quadratic", cite::kPseudo443, 2, both);
    if (!both || b12.P->pq != b23.P->pq)
      return make(V::NotIntegrable, "pseudo-quadratic data outside cases (i)-(ii)", cite::kPseudo443, ev);
    const PQSpace& X = b23.P->pq;
    if (X->dim == 1 && field_order(Kt->K) == 2 && Kt->dim == 2) {
      ev.add("side condition: not F4 with dim L0 = 1", cite::kPseudo443, 1, false);
      return make(V::Inconclusive, "triangle over F4 with dim L0 = 1", cite::kPseudo443, ev);
    }
    if (!panels()) return make(V::NotIntegrable, "a glueing is not a Jordan isomorphism", cite::kMoufangFoundation, ev);
    bool orient = b12.opposite && !b23.opposite && Kt == X->K();
    if (is_quaternion(X->K())) {
      bool pattern = orient && atoms_are(g1, {GAtom::StandardInvolution}) && atoms_are(g2, {GAtom::IdOpposite}) &&
                     atoms_are(g3, {GAtom::IdOpposite});
      ev.add("glueings (σ_s, id°_T, id°_K)", cite::kPseudo443, 3, pattern);
      if (pattern) return make(V::MatchesCase, "(i)", cite::k443, ev);
      return make(V::Inconclusive, "glueings differ from the normal form of case (i)", cite::kPseudo443, ev);
    }
    bool type3 = inv_check(X->inv, 20, seed).quad_type == "(iii)";
    ev.add("involutory set quadratic of type (iii)", cite::kPseudo443, 1, type3);
    if (!type3) return make(V::NotIntegrable, "K neither quaternion nor of type (iii)", cite::kPseudo443, ev);
    bool pattern = orient && atoms_are(g2, {GAtom::IdOpposite}) && g3.is_identity() &&
                   fnd_glueing_sign(g1, Kt, samples, seed).sign == Sign::Negative;
    ev.add("glueings (γ ∈ Aut(K), id°_T, id_K)", cite::kPseudo443, 3, pattern);
    if (pattern) return make(V::MatchesCase, "(ii)", cite::k443, ev);
    return make(V::Inconclusive, "glueings differ from the normal form of case (ii)", cite::kPseudo443, ev);
  }
  // quadratic form type on both sides
  bool both = b12.symbol == "Q_Q" && b23.symbol == "Q_Q";
  ev.add("both quadrangles of quadratic form type", cite::kQuadratic443, 2, both);
  if (!both) return make(V::Inconclusive, "quadrangle pair not covered", cite::k443, ev);
  const QuadSpace& S1 = b12.P->qs;
  const QuadSpace& S2 = b23.P->qs;
  bool same = S1 == S2;
  ev.notes.push_back("dim L0 = " + std::to_string(S1->dim) + ", " + std::to_string(S2->dim));
  if ((S1->dim >= 3 || S2->dim >= 3)) {
    ev.add("Ξ2 = Ξ1 when the dimension is at least 3", cite::kSameSpace, 1, same);
    if (!same) return make(V::NotIntegrable, "two different spaces of dimension at least 3", cite::kSameSpace, ev);
  }
  if (!panels()) return make(V::NotIntegrable, "a glueing is not a Jordan isomorphism", cite::kMoufangFoundation, ev);
  if (Kt->dim == S1->dim && Kt->dim == S2->dim) {
    // both spaces are norm forms of the triangle's ring
    Report co = ms_coincide(ms_quadratic(S1), ms_linear(Kt), std::min<long>(samples, 60), seed);
    ev.add("M(A, F, N) = M(A)", cite::kNormCoincide, co.samples, co.pass());
    if (co.pass()) return make(V::MatchesCase, "(iv)", cite::k443, ev);
    return make(V::Inconclusive, "norm-space panels do not coincide", cite::kNormCoincide, ev);
  }
  if (Kt->dim == 1 && same_field(Kt->K, S1->K) && same) {
    if (S1->dim >= 3) return make(V::MatchesCase, "(vi)", cite::k443, ev);
    return make(V::MatchesCase, "(vii)", cite::k443, ev);
  }
  return make(V::Inconclusive, "case (v) needs field isomorphism data", cite::kQuadratic443, ev);
}

}  // namespace

Verdict fnd_check_443(const Foundation& F, long samples, uint64_t seed) {
  if (F.D.size() != 3 || F.D.m.size() != 3) throw MathError(Err::NotA443Shape, "a 443 diagram is a triangle");
  int threes = 0, tri = -1;
  for (const auto& [e, m] : F.D.m)
    if (m == 3) ++threes;
  if (threes != 1) throw MathError(Err::NotA443Shape, "a 443 diagram has exactly one edge labelled 3");
  for (int v = 0; v < 3; ++v)
    if (F.D.label((v + 1) % 3, (v + 2) % 3) == 3) tri = v;  // the vertex off the triangle edge
  int a = (tri + 1) % 3, b = (tri + 2) % 3;
  Verdict first = classify_443(F, a, tri, b, samples, seed);
  if (first.kind == Verdict::MatchesCase) return first;
  Verdict second = classify_443(F, b, tri, a, samples, seed);
  if (second.kind == Verdict::MatchesCase) return second;
  return first;
}

Verdict fnd_classify(const Foundation& F, long samples, uint64_t seed) {
  for (const auto& [e, m] : F.D.m)
    if (m == 4) return fnd_check_443(F, samples, seed);
  return fnd_classify_simply_laced(F, samples, seed);
}

// ---------------------------------------------------------------- DOT

std::string fnd_to_dot(const Foundation& F) {
  auto q = [](const std::string& s) {
    std::string o = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') o += '\\';
      o += c;
    }
    return o + "\"";
  };
  std::ostringstream os;
  os << "digraph " << q(F.name) << " {\n";
  os << "  node [shape=circle];\n";
  for (const auto& v : F.D.vertices) os << "  " << q(v) << ";\n";
  for (const auto& [e, s] : F.edges) {
    if (!F.given_edges.count(e)) continue;
    if (F.given_edges.count({e.second, e.first}) && e.first > e.second) continue;
    os << "  " << q(F.D.vertices[e.first]) << " -> " << q(F.D.vertices[e.second]) << " [label=" << q(s.label())
       << "];\n";
  }
  for (const auto& [t, g] : F.glue) {
    Triple r{t[2], t[1], t[0]};
    bool rep = F.given.count(t) ? !(F.given.count(r) && t[0] > t[2]) : (!F.given.count(r) && t[0] < t[2]);
    if (!rep) continue;
    os << "  " << q(F.D.vertices[t[0]]) << " -> " << q(F.D.vertices[t[2]]) << " [style=dashed, constraint=false, label="
       << q("γ(" + F.D.vertices[t[0]] + "," + F.D.vertices[t[1]] + "," + F.D.vertices[t[2]] + ") = " + g.str())
       << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace mforge
