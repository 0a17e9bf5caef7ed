#pragma once

#include <string>
#include <vector>

#include "mforge/cd.hpp"
#include "mforge/linalg.hpp"
#include "mforge/report.hpp"

namespace mforge {

struct JAtom {
  enum Kind { StandardInvolution, Psi, Phi, Conj, Linear } kind = Linear;
  Subspace H;
  CDElt e, w, p;
  Mat m;  // Linear: coordinates map by m * x
  std::string str() const;
};

// atoms[0] is applied last
struct JordanMap {
  CDAlgebra O;
  std::vector<JAtom> atoms;
  std::string str() const;
};

JordanMap jm_identity(const CDAlgebra& O);
JordanMap jm_sigma(const CDAlgebra& O);
// x + e y -> x + e (w^-1 y w)
JordanMap jm_psi(const Subspace& H, const CDElt& e, const CDElt& w);
// x + e y -> w^-1 x w + e (w^-1 y w p), N(p) = 1
JordanMap jm_phi(const Subspace& H, const CDElt& e, const CDElt& w, const CDElt& p);
// x -> w^-1 x w
JordanMap jm_conj(const CDElt& w);
JordanMap jm_linear(const CDAlgebra& O, const Mat& m);
JordanMap jm_compose(const JordanMap& outer, const JordanMap& inner);

CDElt jaut_apply(const JordanMap& j, const CDElt& x);

// a quaternion subalgebra containing w
Subspace quaternion_containing(const CDElt& w);
// first basis vector of H-perp with nonzero norm
CDElt perp_unit(const Subspace& H);

struct JautResult {
  Report report;
  bool jordan = false;
  bool norm_isometry = false;
  bool auto_witness = false;  // found s, t with g(st) != g(s) g(t)
  bool anti_witness = false;  // found s, t with g(st) != g(t) g(s)
};
JautResult jaut_verify(const JordanMap& j, long samples, uint64_t seed, long budget = 10000);

Report psi_product_rule_check(const JordanMap& psi, long samples, uint64_t seed);

struct GammaDecomp {
  JordanMap phi, psi;
  Subspace H;
  CDElt e;
  Report report;
};
GammaDecomp gamma_w_decompose(const CDElt& w, long samples, uint64_t seed);

Report sigma_s_central_check(const JordanMap& j, long samples, uint64_t seed);

struct SpecialPair {
  Report report;
  bool is_special = false;
  Scalar lambda, mu;
};
SpecialPair special_pair_check(const CDElt& e1, const CDElt& e2);

}  // namespace mforge
