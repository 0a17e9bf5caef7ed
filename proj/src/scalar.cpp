#include "mforge/scalar.hpp"

#include <sstream>

namespace mforge {

const char* err_name(Err e) {
  switch (e) {
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::DescriptorMismatch: return "DescriptorMismatch";
    case Err::NotQuadExt: return "NotQuadExt";
    case Err::Reducible: return "Reducible";
    case Err::NotPrime: return "NotPrime";
    case Err::AlgebraMismatch: return "AlgebraMismatch";
    case Err::NotInvertible: return "NotInvertible";
    case Err::NotInSpan: return "NotInSpan";
    case Err::BadDoublingUnit: return "BadDoublingUnit";
    case Err::BadSubfield: return "BadSubfield";
    case Err::ZeroAnchor: return "ZeroAnchor";
    case Err::DimensionTooLarge: return "DimensionTooLarge";
    case Err::UnrepresentableClosure: return "UnrepresentableClosure";
    case Err::SpaceMismatch: return "SpaceMismatch";
    case Err::BadOrthogonalUnit: return "BadOrthogonalUnit";
    case Err::BasisNotOrthogonal: return "BasisNotOrthogonal";
    case Err::ZeroArgument: return "ZeroArgument";
    case Err::CarrierMismatch: return "CarrierMismatch";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::ZeroParameter: return "ZeroParameter";
    case Err::TooSmall: return "TooSmall";
    case Err::UnitIncompatible: return "UnitIncompatible";
    case Err::NotACover: return "NotACover";
    case Err::NotTree: return "NotTree";
    case Err::NotNegative: return "NotNegative";
    case Err::NotSimplyLaced: return "NotSimplyLaced";
    case Err::NotA443Shape: return "NotA443Shape";
    case Err::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

static int64_t mod(int64_t a, int64_t p) {
  int64_t r = a % p;
  return r < 0 ? r + p : r;
}

static int64_t mulmod(int64_t a, int64_t b, int64_t p) {
  return static_cast<int64_t>((static_cast<__int128>(a) * b) % p);
}

int64_t mod_inverse(int64_t a, int64_t p) {
  int64_t t = 0, nt = 1, r = p, nr = mod(a, p);
  while (nr != 0) {
    int64_t qq = r / nr;
    int64_t tmp = t - qq * nt;
    t = nt;
    nt = tmp;
    tmp = r - qq * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw MathError(Err::DivisionByZero, "residue not invertible");
  return mod(t, p);
}

Field rationals() {
  static const Field q = [] {
    auto d = std::make_shared<FieldDesc>();
    d->kind = FieldKind::Rationals;
    d->name = "Q";
    return Field(d);
  }();
  return q;
}

Field prime_field(int64_t p) {
  if (!is_prime(p)) throw MathError(Err::NotPrime, std::to_string(p) + " is not prime");
  auto d = std::make_shared<FieldDesc>();
  d->kind = FieldKind::Prime;
  d->p = p;
  d->name = "F" + std::to_string(p);
  return d;
}

bool same_field(const Field& a, const Field& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->p != b->p) return false;
  if (a->kind != FieldKind::QuadExt) return true;
  return same_field(a->base, b->base) && a->t0 == b->t0 && a->n0 == b->n0;
}

Field base_of(const Field& f) { return f->kind == FieldKind::QuadExt ? f->base : f; }

int64_t characteristic(const Field& f) { return f->p; }

bool is_finite(const Field& f) { return f->p != 0; }

int64_t field_order(const Field& f) {
  switch (f->kind) {
    case FieldKind::Rationals: return 0;
    case FieldKind::Prime: return f->p;
    case FieldKind::QuadExt: return f->p == 0 ? 0 : f->p * f->p;
  }
  return 0;
}

std::string field_name(const Field& f) {
  if (!f->name.empty()) return f->name;
  if (f->kind == FieldKind::QuadExt)
    return field_name(f->base) + "(" + f->gen + ")";
  return "?";
}

static bool rational_square(const mpq_class& d) {
  if (sgn(d) < 0) return false;
  return mpz_perfect_square_p(d.get_num_mpz_t()) && mpz_perfect_square_p(d.get_den_mpz_t());
}

Field quad_ext(const Field& base, const Scalar& t0, const Scalar& n0, const std::string& gen,
               const std::string& name) {
  if (base->kind == FieldKind::QuadExt)
    throw MathError(Err::InvalidInput, "towers of quadratic extensions are not supported");
  if (!same_field(t0.field(), base) || !same_field(n0.field(), base))
    throw MathError(Err::DescriptorMismatch, "extension constants must lie in the base field");
  // y^2 - t0 y + n0 must have no root in the base field
  if (base->kind == FieldKind::Prime) {
    for (int64_t y = 0; y < base->p; ++y) {
      Scalar ys = Scalar::from_int(base, y);
      if ((ys * ys - t0 * ys + n0).is_zero())
        throw MathError(Err::Reducible, "polynomial has the root " + std::to_string(y));
    }
  } else {
    mpq_class disc = t0.q() * t0.q() - 4 * n0.q();
    if (rational_square(disc)) throw MathError(Err::Reducible, "discriminant is a square");
  }
  auto d = std::make_shared<FieldDesc>();
  d->kind = FieldKind::QuadExt;
  d->p = base->p;
  d->base = base;
  d->t0 = t0;
  d->n0 = n0;
  d->gen = gen;
  d->name = name;
  return d;
}

Scalar Scalar::zero(const Field& f) {
  Scalar s;
  s.f_ = f;
  return s;
}

Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long n) {
  Scalar s = zero(f);
  if (f->p == 0)
    s.q_[0] = n;
  else
    s.r_[0] = mod(n, f->p);
  return s;
}

Scalar Scalar::from_rational(const Field& f, const mpq_class& q) {
  Scalar s = zero(f);
  if (f->p == 0) {
    s.q_[0] = q;
    s.q_[0].canonicalize();
    return s;
  }
  mpz_class num = q.get_num() % f->p;
  mpz_class den = q.get_den() % f->p;
  int64_t n = mod(num.get_si(), f->p);
  int64_t d = mod(den.get_si(), f->p);
  if (d == 0) throw MathError(Err::DivisionByZero, "denominator vanishes mod p");
  s.r_[0] = mulmod(n, mod_inverse(d, f->p), f->p);
  return s;
}

Scalar Scalar::zero_of_base(const Field& f) { return zero(base_of(f)); }

Scalar Scalar::make_pair(const Field& f, const Scalar& u, const Scalar& v) {
  if (f->kind != FieldKind::QuadExt) {
    if (!v.is_zero()) throw MathError(Err::NotQuadExt, "generator coefficient in a prime field");
    if (!same_field(u.field(), f)) throw MathError(Err::DescriptorMismatch, "make_pair");
    return u;
  }
  if (!same_field(u.field(), f->base) || !same_field(v.field(), f->base))
    throw MathError(Err::DescriptorMismatch, "components must lie in the base field");
  Scalar s = zero(f);
  if (f->p == 0) {
    s.q_[0] = u.q_[0];
    s.q_[1] = v.q_[0];
  } else {
    s.r_[0] = u.r_[0];
    s.r_[1] = v.r_[0];
  }
  return s;
}

void Scalar::check_same(const Scalar& o) const {
  if (f_ != o.f_ && !same_field(f_, o.f_))
    throw MathError(Err::DescriptorMismatch, field_name(f_) + " vs " + field_name(o.f_));
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s = zero(f_);
  if (f_->p == 0) {
    s.q_[0] = q_[0] + o.q_[0];
    if (f_->kind == FieldKind::QuadExt) s.q_[1] = q_[1] + o.q_[1];
  } else {
    s.r_[0] = (r_[0] + o.r_[0]) % f_->p;
    s.r_[1] = (r_[1] + o.r_[1]) % f_->p;
  }
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = zero(f_);
  if (f_->p == 0) {
    s.q_[0] = -q_[0];
    s.q_[1] = -q_[1];
  } else {
    s.r_[0] = mod(-r_[0], f_->p);
    s.r_[1] = mod(-r_[1], f_->p);
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s = zero(f_);
  if (f_->kind != FieldKind::QuadExt) {
    if (f_->p == 0)
      s.q_[0] = q_[0] * o.q_[0];
    else
      s.r_[0] = mulmod(r_[0], o.r_[0], f_->p);
    return s;
  }
  // (u + v w)(u' + v' w) = (uu' - n0 vv') + (uv' + vu' + t0 vv') w
  if (f_->p == 0) {
    const mpq_class& t0 = f_->t0.q_[0];
    const mpq_class& n0 = f_->n0.q_[0];
    mpq_class vv = q_[1] * o.q_[1];
    s.q_[0] = q_[0] * o.q_[0] - n0 * vv;
    s.q_[1] = q_[0] * o.q_[1] + q_[1] * o.q_[0] + t0 * vv;
  } else {
    int64_t p = f_->p;
    int64_t vv = mulmod(r_[1], o.r_[1], p);
    s.r_[0] = mod(mulmod(r_[0], o.r_[0], p) - mulmod(f_->n0.r_[0], vv, p), p);
    s.r_[1] = (mulmod(r_[0], o.r_[1], p) + mulmod(r_[1], o.r_[0], p) + mulmod(f_->t0.r_[0], vv, p)) % p;
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  if (f_->p == 0) return q_[0] == o.q_[0] && q_[1] == o.q_[1];
  return r_[0] == o.r_[0] && r_[1] == o.r_[1];
}

bool Scalar::is_zero() const {
  if (f_->p == 0) return sgn(q_[0]) == 0 && sgn(q_[1]) == 0;
  return r_[0] == 0 && r_[1] == 0;
}

bool Scalar::is_one() const {
  if (f_->p == 0) return q_[0] == 1 && sgn(q_[1]) == 0;
  return r_[0] == 1 && r_[1] == 0;
}

Scalar Scalar::u() const {
  if (f_->kind != FieldKind::QuadExt) return *this;
  Scalar s = zero(f_->base);
  s.q_[0] = q_[0];
  s.r_[0] = r_[0];
  return s;
}

Scalar Scalar::v() const {
  if (f_->kind != FieldKind::QuadExt) return zero(f_);
  Scalar s = zero(f_->base);
  s.q_[0] = q_[1];
  s.r_[0] = r_[1];
  return s;
}

Scalar Scalar::conj() const {
  if (f_->kind != FieldKind::QuadExt) throw MathError(Err::NotQuadExt, "conj");
  // conj(u + v w) = (u + v t0) - v w
  Scalar uu = u(), vv = v();
  return make_pair(f_, uu + vv * f_->t0, -vv);
}

Scalar Scalar::norm() const {
  if (f_->kind != FieldKind::QuadExt) throw MathError(Err::NotQuadExt, "norm");
  Scalar prod = *this * conj();
  if (!prod.v().is_zero()) throw MathError(Err::NotQuadExt, "norm left the base field");
  return prod.u();
}

Scalar Scalar::trace() const {
  if (f_->kind != FieldKind::QuadExt) throw MathError(Err::NotQuadExt, "trace");
  Scalar sum = *this + conj();
  if (!sum.v().is_zero()) throw MathError(Err::NotQuadExt, "trace left the base field");
  return sum.u();
}

Scalar Scalar::inv() const {
  if (is_zero()) throw MathError(Err::DivisionByZero, "inverse of zero");
  if (f_->kind == FieldKind::QuadExt) {
    Scalar n = norm().inv();
    return conj() * embed(f_, n);
  }
  Scalar s = zero(f_);
  if (f_->p == 0)
    s.q_[0] = 1 / q_[0];
  else
    s.r_[0] = mod_inverse(r_[0], f_->p);
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  if (o.is_zero()) throw MathError(Err::DivisionByZero, "division by zero");
  return *this * o.inv();
}

static std::string base_str(const Scalar& s) {
  if (s.field()->p == 0) return s.q().get_str();
  return std::to_string(s.residue());
}

std::string Scalar::str() const {
  if (f_->kind != FieldKind::QuadExt) return base_str(*this);
  Scalar a = u(), b = v();
  if (b.is_zero()) return base_str(a);
  std::string gen = f_->gen;
  std::string coeff;
  bool negative = false;
  if (f_->p == 0 && sgn(b.q()) < 0) {
    negative = true;
    b = -b;
  }
  coeff = b.is_one() ? gen : base_str(b) + "*" + gen;
  if (a.is_zero()) return negative ? "-" + coeff : coeff;
  return base_str(a) + (negative ? " - " : " + ") + coeff;
}

std::string Scalar::key() const {
  std::ostringstream os;
  if (f_->p == 0)
    os << q_[0].get_str() << ',' << q_[1].get_str();
  else
    os << r_[0] << ',' << r_[1];
  return os.str();
}

std::vector<Scalar> enumerate(const Field& f) {
  std::vector<Scalar> out;
  if (f->p == 0) throw MathError(Err::InvalidInput, "cannot enumerate an infinite field");
  if (f->kind == FieldKind::Prime) {
    for (int64_t i = 0; i < f->p; ++i) out.push_back(Scalar::from_int(f, i));
    return out;
  }
  for (int64_t v = 0; v < f->p; ++v)
    for (int64_t u = 0; u < f->p; ++u)
      out.push_back(Scalar::make_pair(f, Scalar::from_int(f->base, u), Scalar::from_int(f->base, v)));
  return out;
}

static Scalar random_base(const Field& b, Rng& rng, int height) {
  if (b->p != 0) return Scalar::from_int(b, static_cast<long>(draw_below(rng, b->p)));
  long num = static_cast<long>(draw_range(rng, -height, height));
  long den = static_cast<long>(draw_range(rng, 1, height));
  return Scalar::from_rational(b, mpq_class(num, den));
}

Scalar random_scalar(const Field& f, Rng& rng, int height) {
  if (f->kind != FieldKind::QuadExt) return random_base(f, rng, height);
  Scalar u = random_base(f->base, rng, height);
  Scalar v = random_base(f->base, rng, height);
  return Scalar::make_pair(f, u, v);
}

Scalar random_nonzero(const Field& f, Rng& rng, int height) {
  for (;;) {
    Scalar s = random_scalar(f, rng, height);
    if (!s.is_zero()) return s;
  }
}

}  // namespace mforge
