#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mforge/linalg.hpp"
#include "mforge/report.hpp"
#include "mforge/scalar.hpp"

namespace mforge {

// Cayley-Dickson tower over a field K.  Level 1 is a quadratic stage with
// generator w, w^2 = t0*w - n0; every further level doubles with a constant
// beta.  The usual "betas" description corresponds to t0 = 0, n0 = -beta_1.
struct CDDesc {
  Field K;
  int dim = 1;
  Scalar t0, n0;
  std::vector<Scalar> betas;  // doubling constants above the quadratic stage
  std::string name;
  bool division = false;
  std::string division_note;
  // structure constants: basis product e_i e_j = sum of coeff * e_k
  std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> table;
  int levels() const;
};
using CDAlgebra = std::shared_ptr<const CDDesc>;

// betas.size() doublings; more than three needs allow_big (sedenion-style
// towers exist only as negative controls)
CDAlgebra cd_from_betas(const Field& K, const std::vector<Scalar>& betas, const std::string& name = "",
                        bool allow_big = false);
CDAlgebra cd_with_stage(const Field& K, const Scalar& t0, const Scalar& n0,
                        const std::vector<Scalar>& betas, const std::string& name = "");
CDAlgebra cd_field(const Field& K, const std::string& name = "");

// named algebras: octonion-Q, quaternion-Q, Qi, F4, F2, F5, sedenion-Q
CDAlgebra builtin_algebra(const std::string& name);
std::vector<std::string> builtin_names();

class CDElt {
 public:
  CDElt() = default;
  CDElt(CDAlgebra a, Vec c);

  static CDElt zero(const CDAlgebra& a);
  static CDElt one(const CDAlgebra& a);
  static CDElt scalar(const CDAlgebra& a, const Scalar& s);
  static CDElt from_int(const CDAlgebra& a, long n);
  static CDElt basis(const CDAlgebra& a, int i);

  const CDAlgebra& alg() const { return a_; }
  const Vec& coords() const { return c_; }
  const Scalar& operator[](size_t i) const { return c_[i]; }
  int dim() const { return a_->dim; }

  CDElt operator+(const CDElt& o) const;
  CDElt operator-(const CDElt& o) const;
  CDElt operator-() const;
  CDElt operator*(const CDElt& o) const;
  CDElt operator*(const Scalar& s) const;
  CDElt& operator+=(const CDElt& o) { return *this = *this + o; }
  bool operator==(const CDElt& o) const;
  bool operator!=(const CDElt& o) const { return !(*this == o); }

  bool is_zero() const { return is_zero_vec(c_); }
  // element of the base field times 1
  bool is_scalar() const;
  Scalar scalar_part() const { return c_[0]; }

  CDElt conj() const;
  Scalar norm() const;
  Scalar trace() const;
  CDElt inv() const;  // throws NotInvertible

  std::string str() const;
  std::string key() const;

 private:
  void check_same(const CDElt& o) const;
  CDAlgebra a_;
  Vec c_;
};

// reference implementation of the doubling rule, used to build and audit the
// structure-constant table
Vec cd_mul_recursive(const CDDesc& a, const Vec& x, const Vec& y);
Vec cd_conj_recursive(const CDDesc& a, const Vec& x);

CDElt random_elt(const CDAlgebra& a, Rng& rng, int height = 20);
CDElt random_invertible(const CDAlgebra& a, Rng& rng, int height = 20);
std::vector<CDElt> enumerate_elts(const CDAlgebra& a);

CDElt commutator(const CDElt& x, const CDElt& y);
CDElt associator(const CDElt& x, const CDElt& y, const CDElt& z);
Scalar bilinear(const CDElt& x, const CDElt& y);  // <x, y> = T(x conj(y))

struct Subspace {
  CDAlgebra alg;
  Mat rows;  // reduced row-echelon basis
  std::vector<size_t> pivots;

  size_t dim() const { return rows.size(); }
  std::vector<CDElt> basis() const;
  bool contains(const CDElt& x) const;
  bool equals(const Subspace& o) const;
};

Subspace span(const CDAlgebra& a, const std::vector<CDElt>& gens);
Subspace whole(const CDAlgebra& a);
Subspace orthogonal_complement(const Subspace& s);
Subspace center(const CDAlgebra& a);
Subspace subalgebra_generated(const CDAlgebra& a, const std::vector<CDElt>& gens);
bool is_subalgebra(const Subspace& s);

struct DoublingCoords {
  CDElt h, y;
};
DoublingCoords doubling_coordinates(const CDElt& x, const Subspace& A, const CDElt& e);

struct NormSplitting {
  std::vector<CDElt> v;  // E-basis v1..v4
  std::vector<Scalar> s; // s_i = N(v_i)
  CDElt z;               // z in E with N(z) = s1 s2 s3 s4
  Scalar product;
};
NormSplitting norm_splitting(const CDAlgebra& o, const Subspace& E);
// N(sum v_i t_i) = sum s_i N(t_i) for sampled t_i in E
Report norm_splitting_check(const CDAlgebra& o, const Subspace& E, long samples, uint64_t seed);

std::vector<std::string> identity_suites();
Report verify_identities(const CDAlgebra& a, const std::string& suite, long samples, uint64_t seed);

// printable basis product table e_i e_j
std::string basis_table(const CDAlgebra& a);

}  // namespace mforge
