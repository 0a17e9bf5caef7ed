#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "mforge/error.hpp"

namespace mforge {

using Rng = std::mt19937_64;

// Portable bounded draw; std distributions differ between standard libraries
// and reports must be byte-stable.
inline uint64_t draw_below(Rng& rng, uint64_t n) { return n == 0 ? 0 : rng() % n; }
inline int64_t draw_range(Rng& rng, int64_t lo, int64_t hi) {
  return lo + static_cast<int64_t>(draw_below(rng, static_cast<uint64_t>(hi - lo + 1)));
}

enum class FieldKind { Rationals, Prime, QuadExt };

struct FieldDesc;
using Field = std::shared_ptr<const FieldDesc>;

class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long n);
  static Scalar from_rational(const Field& f, const mpq_class& q);
  // u + v*w in a quadratic extension, u and v in the base field
  static Scalar make_pair(const Field& f, const Scalar& u, const Scalar& v);
  static Scalar embed(const Field& f, const Scalar& base_elt) {
    return make_pair(f, base_elt, zero_of_base(f));
  }

  const Field& field() const { return f_; }
  bool valid() const { return static_cast<bool>(f_); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_one() const;
  Scalar inv() const;
  Scalar square() const { return *this * *this; }

  // quadratic-extension data
  Scalar u() const;  // base-field component
  Scalar v() const;  // coefficient of the generator
  Scalar conj() const;
  Scalar norm() const;   // element of the base field
  Scalar trace() const;  // element of the base field

  // representation access
  const mpq_class& q() const { return q_[0]; }
  int64_t residue() const { return r_[0]; }

  std::string str() const;
  // stable ordering key, used for hashing and deterministic containers
  std::string key() const;

 private:
  static Scalar zero_of_base(const Field& f);
  void check_same(const Scalar& o) const;

  Field f_;
  mpq_class q_[2];
  int64_t r_[2] = {0, 0};

  friend struct ScalarAccess;
};

struct FieldDesc {
  FieldKind kind = FieldKind::Rationals;
  int64_t p = 0;  // characteristic for Prime, and for QuadExt over F_p; 0 over Q
  Field base;     // QuadExt only
  Scalar t0, n0;  // generator satisfies w^2 = t0*w - n0
  std::string gen = "w";
  std::string name;
};

Field rationals();
Field prime_field(int64_t p);
Field quad_ext(const Field& base, const Scalar& t0, const Scalar& n0, const std::string& gen = "w",
               const std::string& name = "");

bool same_field(const Field& a, const Field& b);
int64_t characteristic(const Field& f);
bool is_finite(const Field& f);
// number of elements, 0 for infinite fields
int64_t field_order(const Field& f);
std::vector<Scalar> enumerate(const Field& f);
Scalar random_scalar(const Field& f, Rng& rng, int height = 20);
Scalar random_nonzero(const Field& f, Rng& rng, int height = 20);
Field base_of(const Field& f);  // the field itself unless QuadExt
std::string field_name(const Field& f);

bool is_prime(int64_t p);
int64_t mod_inverse(int64_t a, int64_t p);

}  // namespace mforge
