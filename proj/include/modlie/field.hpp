#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "modlie/error.hpp"

namespace modlie {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Scalar;

/// Coefficient field: either the prime field F_p or the rationals.
///
/// Residues are multiplied in 64-bit arithmetic, so p must stay below 2^31.
class Field {
 public:
  enum class Kind { Prime, Rationals };

  static constexpr std::uint32_t kMaxPrime = (1u << 31) - 1;

  static Field prime(std::uint64_t p) {
    if (p < 2 || p > kMaxPrime || !is_prime_number(p)) {
      throw Error(ErrorKind::BadParameters, "field characteristic " + std::to_string(p) +
                                                " is not a prime below 2^31");
    }
    return Field(Kind::Prime, static_cast<std::uint32_t>(p));
  }
  static Field rationals() { return Field(Kind::Rationals, 0); }

  Kind kind() const noexcept { return kind_; }
  bool is_prime() const noexcept { return kind_ == Kind::Prime; }
  std::uint32_t characteristic() const noexcept { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_integer(const Integer& v) const;
  Scalar from_rational(const Rational& v) const;
  /// Integers (`-3`) and fractions (`2/5`); over F_p a fraction means a * b^-1.
  Scalar parse(std::string_view text) const;

  std::string name() const { return is_prime() ? "F_" + std::to_string(p_) : "Q"; }

  friend bool operator==(const Field&, const Field&) = default;

  static bool is_prime_number(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  }

 private:
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

/// An immutable element of a Field. F_p residues live in [0, p); rationals are
/// kept in lowest terms with a positive denominator by cpp_rational.
class Scalar {
 public:
  Scalar(Field field, std::uint32_t residue) : field_(field), value_(residue) {}
  Scalar(Field field, Rational q) : field_(field), value_(std::move(q)) {}

  const Field& field() const noexcept { return field_; }

  bool is_zero() const {
    if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
    return std::get<Rational>(value_) == 0;
  }
  bool is_one() const {
    if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
    return std::get<Rational>(value_) == 1;
  }

  std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }

  Scalar operator+(const Scalar& o) const {
    check_same(o);
    if (field_.is_prime()) {
      const std::uint64_t s = std::uint64_t(residue()) + o.residue();
      return Scalar(field_, static_cast<std::uint32_t>(s % field_.characteristic()));
    }
    return Scalar(field_, Rational(rational() + o.rational()));
  }
  Scalar operator-(const Scalar& o) const {
    check_same(o);
    if (field_.is_prime()) {
      const std::uint64_t p = field_.characteristic();
      return Scalar(field_, static_cast<std::uint32_t>((residue() + p - o.residue()) % p));
    }
    return Scalar(field_, Rational(rational() - o.rational()));
  }
  Scalar operator*(const Scalar& o) const {
    check_same(o);
    if (field_.is_prime()) {
      const std::uint64_t m = std::uint64_t(residue()) * o.residue();
      return Scalar(field_, static_cast<std::uint32_t>(m % field_.characteristic()));
    }
    return Scalar(field_, Rational(rational() * o.rational()));
  }
  Scalar operator/(const Scalar& o) const {
    check_same(o);
    return *this * o.inv();
  }
  Scalar operator-() const {
    if (field_.is_prime()) {
      const std::uint32_t p = field_.characteristic();
      return Scalar(field_, residue() == 0 ? 0u : p - residue());
    }
    return Scalar(field_, Rational(-rational()));
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inv() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    if (field_.is_prime()) {
      // Fermat: a^(p-2) = a^-1.
      return pow(field_.characteristic() - 2);
    }
    return Scalar(field_, Rational(1 / rational()));
  }

  Scalar pow(std::uint64_t e) const {
    Scalar result = field_.one();
    Scalar base = *this;
    while (e > 0) {
      if (e & 1u) result *= base;
      base *= base;
      e >>= 1u;
    }
    return result;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

  /// Total order used for sorted outputs: residues for F_p, values for Q.
  friend std::strong_ordering compare(const Scalar& a, const Scalar& b) {
    a.check_same(b);
    if (a.field_.is_prime()) return a.residue() <=> b.residue();
    if (a.rational() < b.rational()) return std::strong_ordering::less;
    if (b.rational() < a.rational()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend bool operator<(const Scalar& a, const Scalar& b) { return compare(a, b) < 0; }

  std::string to_string() const {
    if (field_.is_prime()) return std::to_string(residue());
    return rational().str();
  }

 private:
  void check_same(const Scalar& o) const {
    if (!(field_ == o.field_)) {
      throw Error(ErrorKind::MixedFields, field_.name() + " vs " + o.field_.name());
    }
  }

  Field field_;
  std::variant<std::uint32_t, Rational> value_;
};

inline Scalar Field::zero() const {
  return is_prime() ? Scalar(*this, 0u) : Scalar(*this, Rational(0));
}
inline Scalar Field::one() const {
  return is_prime() ? Scalar(*this, 1u) : Scalar(*this, Rational(1));
}
inline Scalar Field::from_integer(const Integer& v) const {
  if (is_prime()) {
    Integer r = v % p_;
    if (r < 0) r += p_;
    return Scalar(*this, static_cast<std::uint32_t>(r));
  }
  return Scalar(*this, Rational(v));
}
inline Scalar Field::from_int(long long v) const { return from_integer(Integer(v)); }
inline Scalar Field::from_rational(const Rational& v) const {
  if (is_prime()) {
    return from_integer(boost::multiprecision::numerator(v)) /
           from_integer(boost::multiprecision::denominator(v));
  }
  return Scalar(*this, v);
}

namespace detail {
inline Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
  if (i == text.size()) {
    throw Error(ErrorKind::ParseError, "malformed scalar '" + std::string(whole) + "'");
  }
  Integer value = 0;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw Error(ErrorKind::ParseError, "malformed scalar '" + std::string(whole) + "'");
    }
    value = value * 10 + (text[i] - '0');
  }
  return negative ? Integer(-value) : value;
}
}  // namespace detail

inline Scalar Field::parse(std::string_view text) const {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_integer(detail::parse_integer(text, text));
  const Integer num = detail::parse_integer(text.substr(0, slash), text);
  const Integer den = detail::parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  return from_integer(num) / from_integer(den);
}

/// a^p. Over F_p this is the identity map; over Q there is no Frobenius.
inline Scalar frobenius(const Scalar& a) {
  if (!a.field().is_prime()) {
    throw Error(ErrorKind::UnsupportedField, "frobenius needs a prime field");
  }
  return a.pow(a.field().characteristic());
}

}  // namespace modlie
