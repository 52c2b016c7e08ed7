#include "birat/field.hpp"

namespace birat {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// residue of a mod p with a possibly negative
std::uint64_t mod_of_long(long v, std::uint32_t p) {
  long r = v % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint32_t p) {
  // extended euclid on signed 64-bit; p < 2^31 keeps everything in range
  std::int64_t t = 0, newt = 1;
  std::int64_t r = p, newr = static_cast<std::int64_t>(a);
  while (newr != 0) {
    std::int64_t q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  if (r != 1) throw Error("division by zero in GF(p)");
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::rationals() { return Field(FieldKind::rationals, 0); }

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31)) throw ValidationError("prime field characteristic must be < 2^31");
  if (!is_prime_u32(p)) throw ValidationError("GF(p) requires p prime, got " + std::to_string(p));
  return Field(FieldKind::prime, p);
}

Scalar Field::zero() const {
  if (kind_ == FieldKind::prime) return Scalar(std::uint64_t{0});
  return Scalar(mpq_class(0));
}

Scalar Field::one() const {
  if (kind_ == FieldKind::prime) return Scalar(std::uint64_t{1});
  return Scalar(mpq_class(1));
}

Scalar Field::from_int(long v) const {
  if (kind_ == FieldKind::prime) return Scalar(mod_of_long(v, p_));
  return Scalar(mpq_class(v));
}

Scalar Field::from_mpq(const mpq_class& q) const {
  if (kind_ == FieldKind::prime) {
    // reduce numerator and denominator separately
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class pz(static_cast<unsigned long>(p_));
    mpz_class nr = num % pz;
    if (nr < 0) nr += pz;
    mpz_class dr = den % pz;
    if (dr < 0) dr += pz;
    std::uint64_t n = nr.get_ui(), d = dr.get_ui();
    if (d == 0) throw Error("denominator divisible by p in GF(p)");
    return Scalar((n * mod_inverse(d, p_)) % p_);
  }
  mpq_class c = q;
  c.canonicalize();
  return Scalar(std::move(c));
}

bool Field::is_zero(const Scalar& a) const {
  if (kind_ == FieldKind::prime) return a.residue() == 0;
  return sgn(a.rat()) == 0;
}

bool Field::is_one(const Scalar& a) const {
  if (kind_ == FieldKind::prime) return a.residue() == 1;
  return a.rat() == 1;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == FieldKind::prime) {
    std::uint64_t s = a.residue() + b.residue();
    if (s >= p_) s -= p_;
    return Scalar(s);
  }
  return Scalar(mpq_class(a.rat() + b.rat()));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == FieldKind::prime) {
    std::uint64_t s = a.residue() + p_ - b.residue();
    if (s >= p_) s -= p_;
    return Scalar(s);
  }
  return Scalar(mpq_class(a.rat() - b.rat()));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == FieldKind::prime) return Scalar((a.residue() * b.residue()) % p_);
  return Scalar(mpq_class(a.rat() * b.rat()));
}

Scalar Field::neg(const Scalar& a) const {
  if (kind_ == FieldKind::prime) {
    std::uint64_t r = a.residue();
    return Scalar(r == 0 ? 0 : p_ - r);
  }
  return Scalar(mpq_class(-a.rat()));
}

Scalar Field::inv(const Scalar& a) const {
  if (kind_ == FieldKind::prime) {
    if (a.residue() == 0) throw Error("division by zero in GF(p)");
    return Scalar(mod_inverse(a.residue(), p_));
  }
  if (sgn(a.rat()) == 0) throw Error("division by zero in QQ");
  return Scalar(mpq_class(1 / a.rat()));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::pow(const Scalar& a, unsigned long e) const {
  Scalar r = one(), base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::string Field::to_string(const Scalar& a) const {
  if (kind_ == FieldKind::prime) return std::to_string(a.residue());
  return a.rat().get_str();
}

std::string Field::describe() const {
  if (kind_ == FieldKind::prime) return "GF(" + std::to_string(p_) + ")";
  return "QQ";
}

}  // namespace birat
