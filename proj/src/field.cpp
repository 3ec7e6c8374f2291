#include "zinbiel/field.hpp"

#include <charconv>

namespace zinbiel {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p, bool allow_small_char) {
  if (!zinbiel::is_prime(p)) throw FieldError("gf" + std::to_string(p) + ": modulus is not prime");
  if (p <= 3 && !allow_small_char)
    throw FieldError("gf" + std::to_string(p) +
                     ": characteristic 2 and 3 require --allow-small-char");
  return Field(Kind::PrimeField, p);
}

Field Field::parse(std::string_view name, bool allow_small_char) {
  if (name == "q" || name == "Q") return rationals();
  if (name.size() > 2 && name.substr(0, 2) == "gf") {
    std::uint32_t p = 0;
    auto rest = name.substr(2);
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p);
    if (ec == std::errc() && ptr == rest.data() + rest.size()) return prime(p, allow_small_char);
  }
  throw FieldError("unknown field '" + std::string(name) + "' (expected q or gf<p>)");
}

std::string Field::name() const { return is_prime() ? "gf" + std::to_string(p_) : "q"; }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  if (!is_prime()) return Scalar::rational(mpq_class(static_cast<long>(v)));
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Scalar::residue(static_cast<std::uint64_t>(r), p_);
}

Scalar Field::parse_scalar(std::string_view text) const {
  auto is_int = [](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("malformed scalar '" + std::string(text) + "'");
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num));
  mpz_class d{std::string(den)};
  if (d == 0) throw ParseError("scalar '" + std::string(text) + "' has zero denominator");
  if (!is_prime()) return Scalar::rational(mpq_class(n, d));
  mpz_class pm(p_);
  mpz_class nr = n % pm, dr = d % pm;
  if (nr < 0) nr += pm;
  if (dr == 0)
    throw ParseError("scalar '" + std::string(text) + "' has denominator divisible by " +
                     std::to_string(p_));
  Scalar a = Scalar::residue(nr.get_ui(), p_), b = Scalar::residue(dr.get_ui(), p_);
  return a / b;
}

void Scalar::same_field(const Scalar& b) const {
  if (p_ != b.p_) throw FieldError("arithmetic between scalars of different fields");
}

bool Scalar::is_zero() const {
  return p_ ? std::get<std::uint32_t>(v_) == 0 : sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
  return p_ ? std::get<std::uint32_t>(v_) == 1 : std::get<mpq_class>(v_) == 1;
}

std::string Scalar::to_string() const {
  if (p_) return std::to_string(std::get<std::uint32_t>(v_));
  return std::get<mpq_class>(v_).get_str();
}

Scalar Scalar::operator-() const {
  if (p_) {
    auto r = std::get<std::uint32_t>(v_);
    return Scalar(p_, r == 0 ? 0 : p_ - r);
  }
  return Scalar(mpq_class(-std::get<mpq_class>(v_)));
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (p_) {
    // Fermat: a^(p-2).
    std::uint64_t base = std::get<std::uint32_t>(v_), result = 1, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return Scalar(p_, static_cast<std::uint32_t>(result));
  }
  return Scalar(mpq_class(1 / std::get<mpq_class>(v_)));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  a.same_field(b);
  if (a.p_) {
    std::uint64_t s = std::uint64_t(std::get<std::uint32_t>(a.v_)) + std::get<std::uint32_t>(b.v_);
    return Scalar(a.p_, static_cast<std::uint32_t>(s % a.p_));
  }
  return Scalar(mpq_class(std::get<mpq_class>(a.v_) + std::get<mpq_class>(b.v_)));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  a.same_field(b);
  if (a.p_) {
    std::uint64_t s = std::uint64_t(std::get<std::uint32_t>(a.v_)) * std::get<std::uint32_t>(b.v_);
    return Scalar(a.p_, static_cast<std::uint32_t>(s % a.p_));
  }
  return Scalar(mpq_class(std::get<mpq_class>(a.v_) * std::get<mpq_class>(b.v_)));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  if (a.p_) return std::get<std::uint32_t>(a.v_) == std::get<std::uint32_t>(b.v_);
  return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return a.p_ < b.p_;
  if (a.p_) return std::get<std::uint32_t>(a.v_) < std::get<std::uint32_t>(b.v_);
  return std::get<mpq_class>(a.v_) < std::get<mpq_class>(b.v_);
}

}  // namespace zinbiel
