#pragma once

#include <string>
#include <vector>

#include "mforge/cd.hpp"
#include "mforge/report.hpp"

namespace mforge {

enum class SigmaKind { Identity, Standard, Galois };
const char* sigma_name(SigmaKind s);
SigmaKind parse_sigma(const std::string& s);

// (K, K0, sigma) with K a Cayley-Dickson algebra and K0 a span over its
// base field
struct InvolutorySet {
  CDAlgebra K;
  SigmaKind sigma = SigmaKind::Standard;
  Subspace K0;
  std::string name;

  CDElt apply(const CDElt& x) const;
  bool in_K0(const CDElt& x) const { return K0.contains(x); }
};

InvolutorySet make_involutory(const CDAlgebra& K, SigmaKind sigma, const std::vector<CDElt>& K0gens,
                              const std::string& name = "");
// (H, Q, sigma_s) over the rational Hamilton quaternions
InvolutorySet hamilton_involutory();

enum class Closure { Generating, NonGenerating, Inconclusive };
const char* closure_name(Closure c);
// bounded span-closure of the ring generated by a span
Closure ring_closure(const Subspace& gens, const Subspace& target, Subspace* out = nullptr, int rounds = 8);

struct InvCheck {
  Report report;
  bool axioms = false;
  bool proper = false;
  std::string quad_type;  // "(i)".."(v)" or "none"
};
InvCheck inv_check(const InvolutorySet& S, long samples, uint64_t seed);

// (K, K0, L0) in characteristic 2.  K is a subring of the ambient algebra,
// K0 and L0 are spans over the prime field.
struct IndifferentSet {
  CDAlgebra ambient;
  Subspace K;
  std::vector<CDElt> K0gens, L0gens;
  Subspace K0() const { return span(ambient, K0gens); }
  Subspace L0() const { return span(ambient, L0gens); }
};

IndifferentSet make_indifferent(const CDAlgebra& ambient, const std::vector<CDElt>& K0gens,
                                const std::vector<CDElt>& L0gens);

struct IndCheck {
  Report report;
  bool axioms = false;
  bool proper = false;
};
IndCheck ind_check(const IndifferentSet& S);
IndifferentSet ind_opposite(const IndifferentSet& S);

}  // namespace mforge
