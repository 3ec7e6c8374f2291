#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace zinbiel {

// Error taxonomy shared by every module. Each carries a human-readable
// message; the CLI maps them to exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimError : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct FieldError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

class Scalar;

// The base field: Q or GF(p). GF(2) and GF(3) need an explicit override and
// are then marked non-conforming.
class Field {
 public:
  enum class Kind { Rationals, PrimeField };

  static Field rationals() { return Field(Kind::Rationals, 0); }
  static Field prime(std::uint32_t p, bool allow_small_char = false);
  // Accepts "q" or "gf<p>".
  static Field parse(std::string_view name, bool allow_small_char = false);

  Kind kind() const { return kind_; }
  std::uint32_t p() const { return p_; }
  bool is_prime() const { return kind_ == Kind::PrimeField; }
  bool conforming() const { return !(is_prime() && p_ <= 3); }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  // "a" or "a/b" with integer a, b; canonicalised into this field.
  Scalar parse_scalar(std::string_view text) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  friend class Scalar;
  Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

// Exact field element. A residue in [0, p) for GF(p), a reduced fraction for Q.
// Mixing elements of different fields throws FieldError.
class Scalar {
 public:
  Scalar() : p_(0), v_(mpq_class(0)) {}

  static Scalar residue(std::uint64_t v, std::uint32_t p) {
    return Scalar(p, static_cast<std::uint32_t>(v % p));
  }
  static Scalar rational(mpq_class q) {
    q.canonicalize();
    return Scalar(std::move(q));
  }

  Field field() const {
    return p_ == 0 ? Field::rationals() : Field(Field::Kind::PrimeField, p_);
  }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const;
  bool is_one() const;
  std::string to_string() const;

  // Residue value; only meaningful for GF(p).
  std::uint32_t residue_value() const { return std::get<std::uint32_t>(v_); }
  const mpq_class& rational_value() const { return std::get<mpq_class>(v_); }

  Scalar operator-() const;
  Scalar inv() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  // Total order used only for canonical serialisation and sorting.
  friend bool operator<(const Scalar& a, const Scalar& b);

 private:
  Scalar(std::uint32_t p, std::uint32_t r) : p_(p), v_(r) {}
  explicit Scalar(mpq_class q) : p_(0), v_(std::move(q)) {}
  void same_field(const Scalar& b) const;

  std::uint32_t p_;  // 0 for Q
  std::variant<std::uint32_t, mpq_class> v_;
};

bool is_prime(std::uint64_t n);

}  // namespace zinbiel
