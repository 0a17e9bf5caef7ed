#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mforge/cd.hpp"
#include "mforge/quadspace.hpp"
#include "mforge/report.hpp"
#include "mforge/unitary.hpp"

namespace mforge {

// Right pseudo-quadratic space over an associative algebra K of dim <= 4.
// It is fixed by q_i = q(b_i) and f(b_i, b_j) for i < j:
//   f(a, b) = sum a_i^sigma F_ij b_j      F_ii = q_i - q_i^sigma, F_ji = -F_ij^sigma
//   q(a)    = sum a_i^sigma q_i a_i + sum_{i<j} a_i^sigma F_ij a_j
struct PQSpaceDesc {
  InvolutorySet inv;
  int dim = 0;
  std::vector<CDElt> q;
  std::vector<std::vector<CDElt>> F;
  std::string name;
  Anisotropy aniso = Anisotropy::Attested;
  const CDAlgebra& K() const { return inv.K; }
};
using PQSpace = std::shared_ptr<const PQSpaceDesc>;
using PQVec = std::vector<CDElt>;

PQSpace make_pqspace(const InvolutorySet& inv, const std::vector<CDElt>& q,
                     const std::vector<std::vector<CDElt>>& f_upper, const std::string& name = "");

// q(b) = b^sigma (i/2) b over the Hamilton quaternions, K0 = Q
PQSpace xi_hamilton();
// q(b) = omega N(b) over F4, K0 = F2
PQSpace xi_f4();

PQVec pq_zero(const PQSpace& s);
PQVec pq_basis(const PQSpace& s, int i);
PQVec pq_add(const PQVec& a, const PQVec& b);
PQVec pq_neg(const PQVec& a);
PQVec pq_scale(const PQVec& a, const CDElt& s);  // right multiplication a * s
bool pq_is_zero(const PQVec& a);
CDElt pq_f(const PQSpace& s, const PQVec& a, const PQVec& b);
CDElt pq_q(const PQSpace& s, const PQVec& a);
PQVec pq_random(const PQSpace& s, Rng& rng, int height = 20);
std::vector<PQVec> pq_enumerate(const PQSpace& s);

struct TPoint {
  PQSpace S;
  PQVec a;
  CDElt t;

  bool operator==(const TPoint& o) const { return S == o.S && a == o.a && t == o.t; }
  bool operator!=(const TPoint& o) const { return !(*this == o); }
  bool is_identity() const { return pq_is_zero(a) && t.is_zero(); }
  std::string str() const;
  std::string key() const;
};

bool t_member(const PQSpace& s, const PQVec& a, const CDElt& t);
TPoint t_point(const PQSpace& s, const PQVec& a, const CDElt& t);  // throws InvalidInput off T
TPoint t_identity(const PQSpace& s);
TPoint t_unit(const PQSpace& s);  // (0, 1)
TPoint t_mul(const TPoint& x, const TPoint& y);
TPoint t_inv(const TPoint& x);
TPoint t_hua(const TPoint& anchor, const TPoint& x);
TPoint t_tau(const TPoint& x);
TPoint t_random(const PQSpace& s, Rng& rng, int height = 20);
TPoint t_random_nonzero(const PQSpace& s, Rng& rng, int height = 20);
std::vector<TPoint> t_enumerate(const PQSpace& s);

Report pq_verify(const PQSpace& s, long samples, uint64_t seed);

using TMap = std::function<TPoint(const TPoint&)>;
// group homomorphism, unit, Hua preservation; exhaustive runs also check bijectivity
Report t_jordan_check(const PQSpace& src, const PQSpace& dst, const TMap& g, bool exhaustive, long samples,
                      uint64_t seed);

// Finite group with elements indexed 0..n-1
struct FiniteGroup {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> mul;
  int identity = 0;

  int size() const { return static_cast<int>(mul.size()); }
  int inv(int x) const;
  int order(int x) const;
  bool check_axioms(std::string* detail = nullptr) const;
  bool is_hom(const std::vector<int>& perm) const;
  std::vector<std::vector<int>> automorphisms() const;  // brute force over identity-fixing bijections
  std::vector<std::vector<int>> inner_automorphisms() const;
  std::vector<int> center() const;
};

FiniteGroup q8_group();  // from the sign table of {1, i, j, k}
FiniteGroup group_from_points(const std::vector<TPoint>& pts);
// closure of a set of permutations under composition
std::vector<std::vector<int>> perm_closure(const std::vector<std::vector<int>>& gens, int n);

struct F4Census {
  Report report;
  int order = 0;
  int automorphisms = 0;
  int inner = 0;
  int outer_quotient = 0;
  std::vector<int> q8_iso;  // T index -> Q8 index
};
F4Census f4_census();

struct DimSwitch {
  PQSpace src, dst;
  TMap gamma;
  Report report;
};
// Xi over a quaternion algebra, dim 1 -> Xi over E_a, dim 2
DimSwitch dim_switch_up(const PQSpace& xi, const PQVec& a, const CDElt& e, long samples, uint64_t seed);
// Xi over a quadratic field, dim 2 with orthogonal basis b_0, b_1 -> Xi over (E/F, beta), dim 1;
// gamma runs from the new space to xi
DimSwitch dim_switch_down(const PQSpace& xi, long samples, uint64_t seed);
// dim_switch_up then dim_switch_down, compared on q-values and point images
Report dim_switch_round_trip(const PQSpace& xi_h, long samples, uint64_t seed);

}  // namespace mforge
