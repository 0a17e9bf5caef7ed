#pragma once

#include <memory>
#include <string>

#include "mforge/cd.hpp"
#include "mforge/linalg.hpp"
#include "mforge/report.hpp"
#include "mforge/scalar.hpp"

namespace mforge {

enum class Anisotropy { Exhaustive, Structural, Attested };
const char* anisotropy_name(Anisotropy a);

// Unital quadratic space (L0, K, q) with basepoint eps.  The polar form is
// kept as a full symmetric matrix whose diagonal is 2 q(b_i).
struct QuadSpaceDesc {
  Field K;
  int dim = 0;
  Vec q_basis;
  Mat f;
  Vec eps;
  std::string name;
  Anisotropy aniso = Anisotropy::Attested;
};
using QuadSpace = std::shared_ptr<const QuadSpaceDesc>;

// f_upper[i][j] for i < j is read; other entries are ignored.  attested
// spaces over infinite fields get a sampled anisotropy check.
QuadSpace make_quadspace(const Field& K, const Vec& q_basis, const Mat& f_upper, const Vec& eps,
                         const std::string& name = "", bool structural = false);
// the norm form of a composition algebra, basepoint 1
QuadSpace norm_space(const CDAlgebra& a, const std::string& name = "");

struct QSVector {
  QuadSpace S;
  Vec c;

  QSVector operator+(const QSVector& o) const;
  QSVector operator-(const QSVector& o) const;
  QSVector operator-() const;
  QSVector operator*(const Scalar& s) const;
  bool operator==(const QSVector& o) const { return S == o.S && c == o.c; }
  bool operator!=(const QSVector& o) const { return !(*this == o); }
  bool is_zero() const { return is_zero_vec(c); }
  std::string str() const;
  std::string key() const;
};

QSVector qs_vector(const QuadSpace& s, const Vec& c);
QSVector qs_zero(const QuadSpace& s);
QSVector qs_eps(const QuadSpace& s);
QSVector qs_basis(const QuadSpace& s, int i);
QSVector qs_random(const QuadSpace& s, Rng& rng, int height = 20);
std::vector<QSVector> qs_enumerate(const QuadSpace& s);

Scalar qs_q(const QSVector& x);
Scalar qs_f(const QSVector& x, const QSVector& y);
Scalar qs_trace(const QSVector& x);
QSVector qs_sigma(const QSVector& x);

// closed form a f(a, v^sigma) - v^sigma q(a)
QSVector qs_hua(const QSVector& a, const QSVector& v);
// pi_a pi_eps (v) q(a) with pi_a(v) = v - a f(a, v)/q(a)
QSVector qs_hua_pi(const QSVector& a, const QSVector& v);

struct Defect {
  Mat radical;  // basis of Def(q) in coordinates
  bool proper = false;
};
Defect qs_defect(const QuadSpace& s);

// Field structure on a space of dimension <= 2: the coordinates (s, t) of
// eps*s + x*t multiply like the quadratic stage w^2 = T(x) w - q(x).
struct SmallDimField {
  CDAlgebra F;   // dim 1 or 2 over K
  QSVector xt;   // the complement vector x (dim 2 only)
  Mat to_F;      // space coordinates -> F coordinates
  Mat from_F;
  std::string type_tag;  // "(i)", "(ii)" or "(iii)"
  CDElt embed(const QSVector& v) const;
  QSVector back(const CDElt& x, const QuadSpace& s) const;
};
SmallDimField qs_small_dim_field(const QuadSpace& s);

Report qs_verify(const QuadSpace& s, long samples, uint64_t seed);

}  // namespace mforge
