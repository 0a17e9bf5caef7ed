#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "mforge/cd.hpp"
#include "mforge/cite.hpp"
#include "mforge/error.hpp"
#include "mforge/foundations.hpp"
#include "mforge/polygons.hpp"
#include "mforge/pseudoquad.hpp"

using namespace mforge;
using json = nlohmann::json;

namespace {

struct Options {
  long samples = -1;
  uint64_t seed = 1;
  bool seed_given = false;
  bool json = false;
};

uint64_t resolve_seed(const Options& o) {
  if (o.seed_given) return o.seed;
  if (const char* env = std::getenv("MFORGE_SEED")) {
    try {
      size_t used = 0;
      unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw MathError(Err::InvalidInput, "MFORGE_SEED must be a non-negative integer");
  }
  return 1;
}

using Clock = std::chrono::steady_clock;

// reports go out as JSON lines or as text; wall time only in text
void emit(const Options& o, const Report& r, Clock::time_point start) {
  if (o.json) {
    std::cout << r.to_json().dump() << "\n";
    return;
  }
  std::cout << r.to_text();
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  std::ostringstream t;
  t.precision(1);
  t << std::fixed << ms;
  std::cout << "  wall " << t.str() << " ms\n";
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MathError(Err::InvalidInput, "cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw MathError(Err::InvalidInput, path + ": " + e.what());
  }
}

long default_samples(const CDAlgebra& A) { return A->dim >= 8 ? 1000 : 10000; }

// ---------------------------------------------------------------- polygons

Polygon make_polygon(const std::string& symbol, const std::string& instance) {
  if (symbol == "T") return poly_triangle(builtin_algebra(instance));
  if (symbol == "Q_Q") return poly_quadratic(norm_space(builtin_algebra(instance)));
  if (symbol == "Q_I") {
    if (instance == "hamilton") return poly_involutory(hamilton_involutory());
    throw MathError(Err::InvalidInput, "Q_I instances: hamilton");
  }
  if (symbol == "Q_P") {
    if (instance == "xi-hamilton") return poly_pseudo(xi_hamilton());
    if (instance == "xi-f4") return poly_pseudo(xi_f4());
    throw MathError(Err::InvalidInput, "Q_P instances: xi-hamilton, xi-f4");
  }
  if (symbol == "Q_D") {
    if (instance == "F4") {
      CDAlgebra F = builtin_algebra("F4");
      std::vector<CDElt> g{CDElt::one(F), CDElt::basis(F, 1)};
      return poly_indifferent(make_indifferent(F, g, g));
    }
    throw MathError(Err::InvalidInput, "Q_D instances: F4");
  }
  throw MathError(Err::InvalidInput, "unknown polygon symbol '" + symbol + "'");
}

std::string default_instance(const std::string& symbol) {
  if (symbol == "T") return "octonion-Q";
  if (symbol == "Q_Q") return "quaternion-Q";
  if (symbol == "Q_I") return "hamilton";
  if (symbol == "Q_P") return "xi-hamilton";
  return "F4";
}

std::vector<Scalar> parse_coords(const std::string& s, const Field& K) {
  std::vector<Scalar> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(Scalar::from_rational(K, mpq_class(tok)));
    } catch (const std::invalid_argument&) {
      throw MathError(Err::InvalidInput, "bad coordinate '" + tok + "'");
    }
  }
  return out;
}

// anchor for a Hua action: ring coordinates, or "a|t" for the pseudo-quadratic group
Param parse_anchor(const Polygon& P, int i, const std::string& s) {
  Param z = rg_zero(P, i);
  if (auto e = std::get_if<CDElt>(&z)) {
    const CDAlgebra& A = e->alg();
    auto c = parse_coords(s, A->K);
    if (static_cast<int>(c.size()) != A->dim)
      throw MathError(Err::InvalidInput, "anchor needs " + std::to_string(A->dim) + " coordinates");
    return CDElt(A, Vec(c.begin(), c.end()));
  }
  if (auto v = std::get_if<QSVector>(&z)) {
    auto c = parse_coords(s, v->S->K);
    if (c.size() != v->c.size()) throw MathError(Err::InvalidInput, "anchor needs " + std::to_string(v->c.size()) + " coordinates");
    return qs_vector(v->S, Vec(c.begin(), c.end()));
  }
  const TPoint& p = std::get<TPoint>(z);
  auto bar = s.find('|');
  if (bar == std::string::npos) throw MathError(Err::InvalidInput, "pseudo-quadratic anchors are written a|t");
  const CDAlgebra& K = p.t.alg();
  auto a = parse_coords(s.substr(0, bar), K->K);
  auto t = parse_coords(s.substr(bar + 1), K->K);
  if (static_cast<int>(t.size()) != K->dim || a.size() % K->dim != 0 || a.size() / K->dim != p.a.size())
    throw MathError(Err::InvalidInput, "anchor coordinates do not fit the space");
  PQVec av = pq_zero(p.S);
  for (size_t k = 0; k < av.size(); ++k)
    av[k] = CDElt(K, Vec(a.begin() + k * K->dim, a.begin() + (k + 1) * K->dim));
  return t_point(p.S, av, CDElt(K, Vec(t.begin(), t.end())));
}

Report hua_report(const Polygon& P, End end, const Param& s, long samples, uint64_t seed) {
  EndAction h = rgs_hua_end_action(P, end, s);
  Report r;
  r.suite = "polygon-hua/" + P->name + (end == End::First ? "/first" : "/last");
  r.cite = P->symbol == PolySymbol::T ? cite::kTriangleHua : cite::kHuaTheorem;
  r.samples = samples;
  r.seed = seed;
  Rng rng(seed);
  bool ok = true;
  std::string det;
  for (long k = 0; k < samples && ok; ++k) {
    RootWord a = rgs_random(P, rng), b = rgs_random(P, rng);
    RootWord lhs = apply_action(h, rgs_multiply(a, b));
    RootWord rhs = rgs_multiply(apply_action(h, a), apply_action(h, b));
    if (lhs != rhs) {
      ok = false;
      det = "a = " + a.str() + ", b = " + b.str();
    }
  }
  r.add("end action is a homomorphism", r.cite, samples, ok, det);
  for (int i = 1; i <= P->n; ++i) r.notes.push_back("U" + std::to_string(i) + ": 1 -> " + param_str(h.maps[i - 1](rg_unit(P, i))));
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mforge: exact checks for composition algebras, Moufang polygons and foundations"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--samples", o.samples, "sample budget per check")->check(CLI::NonNegativeNumber);
  auto seed_opt = app.add_option("--seed", o.seed, "random seed (falls back to MFORGE_SEED)");
  app.add_flag("--json", o.json, "machine-readable JSON lines");

  std::string algebra = "octonion-Q", suite = "all", config;
  auto* verify = app.add_subcommand("verify", "identity suites on a composition algebra");
  verify->add_option("--algebra", algebra, "built-in name or a tower from --config");
  verify->add_option("--suite", suite, "suite name or all");
  verify->add_option("--config", config, "JSON file with a scalars block defining towers")->check(CLI::ExistingFile);

  app.add_subcommand("f4-census", "the Hamilton-like group over F4");

  std::string symbol, instance, end_name, anchor;
  bool opposite = false;
  auto* polygon = app.add_subcommand("polygon", "root group sequences");
  polygon->require_subcommand(1);
  auto* exhaustive = polygon->add_subcommand("exhaustive", "group axioms and Hua actions on a finite polygon");
  exhaustive->add_option("symbol", symbol)->required();
  exhaustive->add_option("instance", instance)->required();
  exhaustive->add_flag("--opposite", opposite);
  auto* hua = polygon->add_subcommand("hua", "Hua action anchored at an end root group");
  hua->add_option("symbol", symbol)->required();
  hua->add_option("end", end_name)->required()->check(CLI::IsMember({"first", "last"}));
  hua->add_option("s", anchor, "comma-separated coordinates, a|t for Q_P")->required();
  hua->add_option("--instance", instance);
  hua->add_flag("--opposite", opposite);

  std::string file, out;
  auto* foundation = app.add_subcommand("foundation", "foundations from JSON descriptions");
  foundation->require_subcommand(1);
  auto* fcheck = foundation->add_subcommand("check", "axioms F1-F4 and the Jordan condition");
  fcheck->add_option("file", file)->required();
  auto* fclass = foundation->add_subcommand("classify", "necessary conditions for integrability");
  fclass->add_option("file", file)->required();
  auto* fdot = foundation->add_subcommand("dot", "graphviz rendering");
  fdot->add_option("file", file)->required();
  fdot->add_option("-o", out, "output path");

  int radius = 0;
  std::string root;
  auto* cover = app.add_subcommand("cover", "covers of foundations");
  cover->require_subcommand(1);
  auto* unfold = cover->add_subcommand("unfold", "universal cover truncated at a radius");
  unfold->add_option("file", file)->required();
  unfold->add_option("--radius", radius)->required()->check(CLI::NonNegativeNumber);
  unfold->add_option("--root", root, "root vertex (default: the first)");
  unfold->add_option("-o", out, "write the cover as DOT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  o.seed_given = seed_opt->count() > 0;

  try {
    uint64_t seed = resolve_seed(o);
    auto start = Clock::now();

    if (*verify) {
      CDAlgebra A = config.empty() ? builtin_algebra(algebra)
                                   : algebra_from_scalars(load_json(config).value("scalars", json::object()), algebra);
      long n = o.samples >= 0 ? o.samples : default_samples(A);
      std::vector<std::string> suites = suite == "all" ? identity_suites() : std::vector<std::string>{suite};
      std::sort(suites.begin(), suites.end());
      bool ok = true;
      for (const auto& s : suites) {
        Report r = verify_identities(A, s, n, seed);
        emit(o, r, start);
        ok = ok && r.pass();
      }
      return ok ? 0 : 1;
    }

    if (app.got_subcommand("f4-census")) {
      F4Census c = f4_census();
      emit(o, c.report, start);
      return c.report.pass() ? 0 : 1;
    }

    if (*polygon) {
      if (*exhaustive) {
        Polygon P = make_polygon(symbol, instance);
        if (opposite) P = rgs_opposite(P);
        if (!poly_finite(P)) throw MathError(Err::InvalidInput, P->name + " is infinite; exhaustive runs need a finite instance");
        Report a = rgs_verify(P, 0, seed);
        Report b = rgs_hua_consistency(P, 0, seed);
        emit(o, a, start);
        emit(o, b, start);
        return a.pass() && b.pass() ? 0 : 1;
      }
      Polygon P = make_polygon(symbol, instance.empty() ? default_instance(symbol) : instance);
      if (opposite) P = rgs_opposite(P);
      End end = end_name == "first" ? End::First : End::Last;
      Param s = parse_anchor(P, end == End::First ? 1 : P->n, anchor);
      Report r = hua_report(P, end, s, o.samples >= 0 ? o.samples : 1000, seed);
      emit(o, r, start);
      return r.pass() ? 0 : 1;
    }

    if (*foundation) {
      Foundation F = fnd_load(file);
      if (*fcheck) {
        Report r = fnd_check(F, o.samples >= 0 ? o.samples : 200, seed);
        emit(o, r, start);
        return r.pass() ? 0 : 1;
      }
      if (*fclass) {
        Verdict v = fnd_classify(F, o.samples >= 0 ? o.samples : 200, seed);
        if (o.json) {
          std::cout << v.to_json().dump() << "\n";
        } else {
          std::cout << F.name << ": " << v.str() << "\n";
          emit(o, v.evidence, start);
        }
        return v.kind == Verdict::NotIntegrable ? 1 : 0;
      }
      std::string dot = fnd_to_dot(F);
      if (out.empty()) {
        std::cout << dot;
      } else {
        std::ofstream f(out);
        if (!(f << dot)) throw MathError(Err::InvalidInput, "cannot write " + out);
      }
      return 0;
    }

    if (*unfold) {
      Foundation F = fnd_load(file);
      int r0 = root.empty() ? 0 : fnd_vertex(F, root);
      Foundation U = fnd_universal_cover(F, r0, radius);
      if (!out.empty()) {
        std::ofstream f(out);
        if (!(f << fnd_to_dot(U))) throw MathError(Err::InvalidInput, "cannot write " + out);
      }
      nlohmann::ordered_json j;
      j["cover"] = U.name;
      j["radius"] = radius;
      j["vertices"] = U.D.vertices;
      auto edges = nlohmann::ordered_json::array();
      for (const auto& [e, m] : U.D.m) edges.push_back({U.D.vertices[e.first], U.D.vertices[e.second], m});
      j["edges"] = edges;
      auto image = nlohmann::ordered_json::array();
      for (int b : U.base_image) image.push_back(F.D.vertices[b]);
      j["image"] = image;
      j["notes"] = U.notes;
      if (o.json) {
        std::cout << j.dump() << "\n";
      } else {
        std::cout << U.name << ": " << U.D.size() << " vertices, " << U.D.m.size() << " edges\n";
        for (int v = 0; v < U.D.size(); ++v)
          std::cout << "  " << U.D.vertices[v] << " -> " << F.D.vertices[U.base_image[v]] << "\n";
        for (const auto& n : U.notes) std::cout << "  note: " << n << "\n";
      }
      return 0;
    }
  } catch (const MathError& e) {
    std::cerr << "mforge: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
