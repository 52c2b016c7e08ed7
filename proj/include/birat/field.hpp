#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace birat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RingMismatchError : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};
struct NotBirationalError : Error {
  using Error::Error;
};
struct StepLimitError : Error {
  using Error::Error;
};

enum class FieldKind { rationals, prime };

// One exact field element. For GF(p) this is the least nonnegative residue,
// for the rationals an arbitrary-precision fraction. Arithmetic goes through
// Field so the element itself stays a dumb value.
class Scalar {
public:
  Scalar() : v_(static_cast<std::uint64_t>(0)) {}
  explicit Scalar(std::uint64_t residue) : v_(residue) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}

  bool is_residue() const { return std::holds_alternative<std::uint64_t>(v_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(v_); }
  const mpq_class& rat() const { return std::get<mpq_class>(v_); }

  bool operator==(const Scalar& o) const { return v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

private:
  std::variant<std::uint64_t, mpq_class> v_;
};

class Field {
public:
  static Field rationals();
  static Field prime(std::uint32_t p);  // p must be prime and < 2^31

  FieldKind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }  // 0 for the rationals

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar from_mpq(const mpq_class& q) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar pow(const Scalar& a, unsigned long e) const;

  std::string to_string(const Scalar& a) const;
  std::string describe() const;  // "QQ" or "GF(p)"

private:
  Field(FieldKind k, std::uint32_t p) : kind_(k), p_(p) {}

  FieldKind kind_;
  std::uint32_t p_;
};

}  // namespace birat
