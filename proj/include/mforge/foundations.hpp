#pragma once

#include <array>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mforge/moufang.hpp"
#include "mforge/octonion_aut.hpp"
#include "mforge/polygons.hpp"
#include "mforge/report.hpp"

namespace mforge {

// ---------------------------------------------------------------- glueing maps

struct GAtom {
  enum Kind { Identity, IdOpposite, StandardInvolution, ScalarConj, FieldIso, Frobenius, Table, Psi } kind = Identity;
  CDElt w;        // ScalarConj: x -> w^-1 x w
  Mat m;          // FieldIso: coordinates map by m * x
  int power = 1;  // Frobenius: x -> x^(p^power)
  std::vector<std::pair<CDElt, CDElt>> table;
  JordanMap psi;
  std::string str() const;
  std::string key() const;
};

// atoms[0] is applied last, as in a written composite
struct GlueingMap {
  std::vector<GAtom> atoms;
  std::string str() const;
  std::string key() const;
  bool is_identity() const { return atoms.empty(); }
};

GlueingMap gm_identity();
GlueingMap gm_atom(GAtom a);
GlueingMap gm_compose(const GlueingMap& outer, const GlueingMap& inner);
GlueingMap gm_inverse(const GlueingMap& g);
// drops identity atoms and cancels adjacent inverse pairs
GlueingMap gm_simplify(const GlueingMap& g);
Param gm_apply(const GlueingMap& g, const Param& x);

enum class Sign { Negative, Positive, Exceptional };
const char* sign_name(Sign s);

struct SignResult {
  Sign sign = Sign::Negative;
  bool structural_known = false;
  Sign structural = Sign::Negative;
  bool not_mult = false;  // g(xy) != g(x) g(y) for some witness
  bool not_anti = false;  // g(xy) != g(y) g(x) for some witness
  std::string mult_witness, anti_witness;
  Report report;
};
// structural parity of the atoms, confirmed by witnesses; throws InvalidInput
// when the two disagree
SignResult fnd_glueing_sign(const GlueingMap& g, const CDAlgebra& carrier, long samples = 200, uint64_t seed = 1);

// ---------------------------------------------------------------- foundations

struct CoxeterDiagram {
  std::vector<std::string> vertices;
  std::map<std::pair<int, int>, int> m;  // i < j, present edges only

  int size() const { return static_cast<int>(vertices.size()); }
  int label(int i, int j) const;  // 2 when absent
  bool edge(int i, int j) const { return label(i, j) != 2; }
  std::vector<int> neighbors(int i) const;
  bool connected() const;
  bool is_tree() const;
};

using Triple = std::array<int, 3>;

struct EdgeSpec {
  std::string symbol;  // T, Q_I, Q_P, Q_Q, Q_D, or the tag-only Q_E, Q_F
  bool opposite = false;
  Polygon P;  // null for tag-only symbols
  nlohmann::ordered_json params;
  std::string label() const;
};

struct Foundation {
  std::string name;
  CoxeterDiagram D;
  std::map<std::pair<int, int>, EdgeSpec> edges;  // both directions
  std::set<std::pair<int, int>> given_edges;
  std::map<Triple, GlueingMap> glue;  // every ordered triple
  std::set<Triple> given;             // triples supplied by the description
  std::vector<int> base_image;        // set on covers
  std::vector<std::string> f2_conflicts;
  std::vector<std::string> notes;

  const EdgeSpec& edge(int i, int j) const;
  const GlueingMap& glueing(int i, int j, int k) const;
  std::vector<Triple> triples() const;
};

int fnd_vertex(const Foundation& F, const std::string& name);

// algebra named in a "scalars" block: a tower defined there or a built-in name
CDAlgebra algebra_from_scalars(const nlohmann::json& scalars, const std::string& name);

Foundation fnd_from_json(const nlohmann::json& j);
Foundation fnd_load(const std::string& path);

// end Moufang set of a directed edge: End::First at i, End::Last at j
MSet fnd_end_mset(const Foundation& F, int i, int j, End end);
// gamma_(i,j,k) applied to an element of the U_n of (i,j), landing in U_1 of (j,k)
Param fnd_apply(const Foundation& F, const Triple& t, const Param& x);
// sign relative to the ring structures of the two triangle parameter rings
SignResult fnd_triple_sign(const Foundation& F, const Triple& t, long samples = 200, uint64_t seed = 1);

Report fnd_check(const Foundation& F, long samples, uint64_t seed);

Foundation fnd_residue(const Foundation& F, const std::vector<int>& J);

// one ring automorphism per undirected triangle edge, keyed by (min, max)
using EdgeMaps = std::map<std::pair<int, int>, GlueingMap>;
Foundation fnd_reparametrize(const Foundation& F, const EdgeMaps& alpha, long samples = 30, uint64_t seed = 1);

struct Canonical {
  Foundation F;
  EdgeMaps alpha;
  int pushes = 0;
};
Canonical fnd_canonicalize_tree(const Foundation& F, long samples = 30, uint64_t seed = 1);

struct GraphCover {
  std::vector<std::string> vertices;
  std::vector<int> image;  // cover vertex -> base vertex
  std::vector<std::pair<int, int>> edges;
};
Foundation fnd_cover(const Foundation& F, const GraphCover& cover);
// non-backtracking walks from root of length at most radius
Foundation fnd_universal_cover(const Foundation& F, int root, int radius);

struct PositiveAnalysis {
  Report report;
  std::vector<std::vector<int>> M;          // maximal positive residues
  std::vector<std::pair<int, int>> gp_edges;  // residues sharing a vertex
  bool conditions[4] = {false, false, false, false};
  bool tree = false;
};
PositiveAnalysis fnd_positive_analysis(const Foundation& F, long samples = 200, uint64_t seed = 1);

struct Verdict {
  enum Kind { MatchesCase, NotIntegrable, Inconclusive } kind = Inconclusive;
  std::string label;  // case name or reason
  std::string cite;
  Report evidence;
  std::string str() const;
  nlohmann::ordered_json to_json() const;
};
const char* verdict_name(Verdict::Kind k);

Verdict fnd_classify_simply_laced(const Foundation& F, long samples = 200, uint64_t seed = 1);
Verdict fnd_check_443(const Foundation& F, long samples = 200, uint64_t seed = 1);
// dispatches on the diagram
Verdict fnd_classify(const Foundation& F, long samples = 200, uint64_t seed = 1);

std::string fnd_to_dot(const Foundation& F);

}  // namespace mforge
