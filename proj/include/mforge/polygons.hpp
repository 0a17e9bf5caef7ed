#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "mforge/cd.hpp"
#include "mforge/pseudoquad.hpp"
#include "mforge/quadspace.hpp"
#include "mforge/report.hpp"
#include "mforge/unitary.hpp"

namespace mforge {

enum class PolySymbol { T, QI, QP, QQ, QD };
const char* symbol_name(PolySymbol s);

using Param = std::variant<CDElt, QSVector, TPoint>;
std::string param_str(const Param& p);
std::string param_key(const Param& p);
bool param_eq(const Param& a, const Param& b);

struct PolygonDesc {
  PolySymbol symbol = PolySymbol::T;
  bool opposite = false;
  int n = 3;
  CDAlgebra A;  // T: the alternative ring, QI/QD: K, QQ: the scalar field as a 1-dim algebra
  InvolutorySet inv;
  IndifferentSet ind;
  QuadSpace qs;
  PQSpace pq;
  std::string name;
  std::vector<std::string> notes;
};
using Polygon = std::shared_ptr<const PolygonDesc>;

Polygon poly_triangle(const CDAlgebra& A);
Polygon poly_involutory(const InvolutorySet& S);
Polygon poly_pseudo(const PQSpace& S);
Polygon poly_quadratic(const QuadSpace& S);
Polygon poly_indifferent(const IndifferentSet& S);
// reversed root sequence over the opposite parameter system; parameters keep
// their values, only the labels i -> n + 1 - i change
Polygon rgs_opposite(const Polygon& P);
bool same_polygon_type(const Polygon& a, const Polygon& b);

// root group U_i in the polygon's own labels, 1-based
Param rg_zero(const Polygon& P, int i);
Param rg_unit(const Polygon& P, int i);
Param rg_add(const Polygon& P, int i, const Param& a, const Param& b);
Param rg_neg(const Polygon& P, int i, const Param& a);
bool rg_is_zero(const Param& a);
bool rg_member(const Polygon& P, int i, const Param& a);
Param rg_random(const Polygon& P, int i, Rng& rng, int height = 8);
std::vector<Param> rg_enumerate(const Polygon& P, int i);
bool poly_finite(const Polygon& P);

struct RootFactor {
  int i;
  Param p;
};

struct RootWord {
  Polygon P;
  std::vector<RootFactor> f;  // strictly increasing indices, no zero parameters
  bool operator==(const RootWord& o) const { return P == o.P && key() == o.key(); }
  bool operator!=(const RootWord& o) const { return !(*this == o); }
  bool is_identity() const { return f.empty(); }
  std::string str() const;
  std::string key() const;
};

RootWord rgs_identity(const Polygon& P);
RootWord rgs_root(const Polygon& P, int i, const Param& p);
// product of an arbitrary factor sequence, in normal form
RootWord rgs_word(const Polygon& P, const std::vector<RootFactor>& factors);
RootWord rgs_multiply(const RootWord& a, const RootWord& b);
RootWord rgs_inverse(const RootWord& a);
// [x_i(a), x_j(b)] = x_i(a)^-1 x_j(b)^-1 x_i(a) x_j(b), i < j
RootWord rgs_commutator(const Polygon& P, int i, const Param& a, int j, const Param& b);
RootWord rgs_random(const Polygon& P, Rng& rng, int height = 8);
std::vector<RootWord> rgs_enumerate(const Polygon& P);

using PMap = std::function<Param(const Param&)>;
struct EndAction {
  std::vector<PMap> maps;  // one per root group, maps[0] acts on U_1
  PMap first() const { return maps.front(); }
  PMap last() const { return maps.back(); }
};
enum class End { First, Last };
// Hua automorphism anchored at s in the first or last root group, with the
// induced maps on the middle groups
EndAction rgs_hua_end_action(const Polygon& P, End end, const Param& s);
RootWord apply_action(const EndAction& a, const RootWord& w);

Report rgs_verify(const Polygon& P, long samples, uint64_t seed);
Report rgs_hua_consistency(const Polygon& P, long samples, uint64_t seed);
// maps[i] : U_i(src) -> U_i(dst) preserves every commutator relation
Report rgs_reparam_check(const Polygon& src, const Polygon& dst, const std::vector<PMap>& maps, long samples,
                         uint64_t seed);

}  // namespace mforge
