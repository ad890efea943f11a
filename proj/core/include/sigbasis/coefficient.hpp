#ifndef SIGBASIS_COEFFICIENT_HPP
#define SIGBASIS_COEFFICIENT_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace sigbasis {

/// Element of Z/pZ. The modulus travels with the value so arithmetic is
/// self-contained; mixing moduli is a structural error.
struct Residue {
  std::uint32_t value = 0;
  std::uint32_t modulus = 0;
};

/// Exact field element, either a GMP rational or a residue mod a prime below 2^31.
class Coefficient {
public:
  Coefficient() : value_(mpq_class(0)) {}
  explicit Coefficient(mpq_class q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }
  explicit Coefficient(Residue r) : value_(r) {}

  bool is_zero() const;
  bool is_one() const;
  /// True when the value prints with a leading minus sign.
  bool is_negative() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }

  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  Residue residue() const { return std::get<Residue>(value_); }

  Coefficient operator-() const;
  Coefficient operator+(const Coefficient& o) const;
  Coefficient operator-(const Coefficient& o) const;
  Coefficient operator*(const Coefficient& o) const;
  Coefficient operator/(const Coefficient& o) const;
  Coefficient inverse() const;
  /// this - a*b, the inner step of every reduction.
  Coefficient minus_product(const Coefficient& a, const Coefficient& b) const;

  bool operator==(const Coefficient& o) const;

  std::string to_string() const;

private:
  std::variant<mpq_class, Residue> value_;
};

class Field {
public:
  enum class Kind { rationals, prime };

  static Field rationals() { return Field(Kind::rationals, 0); }
  /// p must be a prime below 2^31.
  static Field prime(std::uint32_t p);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }

  Coefficient zero() const;
  Coefficient one() const;
  Coefficient from_integer(long v) const;
  /// Maps a rational into the field; a denominator divisible by p is an error.
  Coefficient from_rational(const mpq_class& q) const;
  /// Checks that c lives in this field.
  bool owns(const Coefficient& c) const;

  std::string name() const;
  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }

private:
  Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

} // namespace sigbasis

#endif
