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

enum class Family { Linear, Involutory, Indifferent, Quadratic, Pseudo };
const char* family_name(Family f);

struct MElt;
struct MoufangSetDesc;
using MSet = std::shared_ptr<const MoufangSetDesc>;
using HuaFn = std::function<MElt(const MElt&, const MElt&)>;

struct MoufangSetDesc {
  Family family = Family::Linear;
  std::string name;
  CDAlgebra A;  // linear carrier, or the ring K of an involutory/indifferent set
  InvolutorySet inv;
  IndifferentSet ind;
  QuadSpace qs;
  PQSpace pq;
  HuaFn hua_override;  // mutation hook for tests
};

struct MElt {
  MSet M;
  std::variant<CDElt, QSVector, TPoint> v;

  const CDElt& elt() const { return std::get<CDElt>(v); }
  const QSVector& vec() const { return std::get<QSVector>(v); }
  const TPoint& point() const { return std::get<TPoint>(v); }
  bool operator==(const MElt& o) const;
  bool operator!=(const MElt& o) const { return !(*this == o); }
  std::string str() const;
  std::string key() const;
};

MSet ms_linear(const CDAlgebra& A);
MSet ms_involutory(const InvolutorySet& S);
MSet ms_indifferent(const IndifferentSet& S);
MSet ms_quadratic(const QuadSpace& S);
MSet ms_pseudo(const PQSpace& S);
MSet ms_with_hua(const MSet& M, HuaFn h, const std::string& name);

bool ms_finite(const MSet& M);
MElt ms_zero(const MSet& M);
MElt ms_unit(const MSet& M);
MElt ms_add(const MElt& x, const MElt& y);  // the group operation of U
MElt ms_neg(const MElt& x);
bool ms_is_zero(const MElt& x);
bool ms_member(const MElt& x);
MElt ms_random(const MSet& M, Rng& rng, int height = 20);
std::vector<MElt> ms_enumerate(const MSet& M);

// coordinates in the ambient representation; pseudo-quadratic points
// concatenate a and t
Vec ms_coords(const MElt& x);
MElt ms_from_coords(const MSet& M, const Vec& c);

MElt ms_tau(const MElt& x);
MElt ms_hua(const MElt& a, const MElt& x);

Report ms_verify(const MSet& M, long samples, uint64_t seed);

using MMap = std::function<MElt(const MElt&)>;
// carriers identified by coordinates unless a bijection is given
Report ms_coincide(const MSet& M1, const MSet& M2, long samples, uint64_t seed, MMap bijection = nullptr);

struct JordanResult {
  Report report;
  bool jordan = false;
  bool moufang_iso = false;  // also commutes with tau
  std::string tag;           // automorphism / anti-automorphism / neither
};
JordanResult ms_jordan_check(const MMap& g, const MSet& M, const MSet& Mt, bool exhaustive, long samples,
                             uint64_t seed);

}  // namespace mforge
