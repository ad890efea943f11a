#include "sigbasis/coefficient.hpp"

#include "sigbasis/error.hpp"

namespace sigbasis {
namespace {

std::uint32_t check_same(const Residue& a, const Residue& b) {
  if (a.modulus != b.modulus)
    throw StructuralError("coefficients from different prime fields");
  return a.modulus;
}

std::uint32_t inverse_mod(std::uint32_t v, std::uint32_t p) {
  if (v == 0)
    throw ContractError("division by zero in prime field");
  // extended Euclid on signed 64-bit values
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = v;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0)
    t += p;
  return static_cast<std::uint32_t>(t);
}

bool is_prime(std::uint32_t p) {
  if (p < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

template <class R, class Q>
Coefficient dispatch(const Coefficient& a, const Coefficient& b, R onResidue, Q onRational) {
  if (a.is_rational() != b.is_rational())
    throw StructuralError("mixing rational and prime-field coefficients");
  if (a.is_rational())
    return Coefficient(onRational(a.rational(), b.rational()));
  Residue x = a.residue(), y = b.residue();
  std::uint32_t p = check_same(x, y);
  return Coefficient(Residue{onResidue(x.value, y.value, p), p});
}

} // namespace

bool Coefficient::is_zero() const {
  if (is_rational())
    return sgn(rational()) == 0;
  return residue().value == 0;
}

bool Coefficient::is_one() const {
  if (is_rational())
    return rational() == 1;
  return residue().value == 1;
}

bool Coefficient::is_negative() const {
  return is_rational() && sgn(rational()) < 0;
}

Coefficient Coefficient::operator-() const {
  if (is_rational())
    return Coefficient(mpq_class(-rational()));
  Residue r = residue();
  return Coefficient(Residue{r.value == 0 ? 0 : r.modulus - r.value, r.modulus});
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
  return dispatch(
      *this, o,
      [](std::uint64_t a, std::uint64_t b, std::uint64_t p) { return static_cast<std::uint32_t>((a + b) % p); },
      [](const mpq_class& a, const mpq_class& b) { return mpq_class(a + b); });
}

Coefficient Coefficient::operator-(const Coefficient& o) const {
  return dispatch(
      *this, o,
      [](std::uint64_t a, std::uint64_t b, std::uint64_t p) { return static_cast<std::uint32_t>((a + p - b) % p); },
      [](const mpq_class& a, const mpq_class& b) { return mpq_class(a - b); });
}

Coefficient Coefficient::operator*(const Coefficient& o) const {
  return dispatch(
      *this, o,
      [](std::uint64_t a, std::uint64_t b, std::uint64_t p) { return static_cast<std::uint32_t>((a * b) % p); },
      [](const mpq_class& a, const mpq_class& b) { return mpq_class(a * b); });
}

Coefficient Coefficient::operator/(const Coefficient& o) const {
  return *this * o.inverse();
}

Coefficient Coefficient::inverse() const {
  if (is_rational()) {
    if (sgn(rational()) == 0)
      throw ContractError("division by zero");
    return Coefficient(mpq_class(1 / rational()));
  }
  Residue r = residue();
  return Coefficient(Residue{inverse_mod(r.value, r.modulus), r.modulus});
}

Coefficient Coefficient::minus_product(const Coefficient& a, const Coefficient& b) const {
  if (is_rational() && a.is_rational() && b.is_rational()) {
    mpq_class t = a.rational() * b.rational();
    return Coefficient(mpq_class(rational() - t));
  }
  return *this - a * b;
}

bool Coefficient::operator==(const Coefficient& o) const {
  if (is_rational() != o.is_rational())
    return false;
  if (is_rational())
    return rational() == o.rational();
  return residue().value == o.residue().value && residue().modulus == o.residue().modulus;
}

std::string Coefficient::to_string() const {
  if (is_rational())
    return rational().get_str();
  return std::to_string(residue().value);
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw ContractError("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  return Field(Kind::prime, p);
}

Coefficient Field::zero() const { return from_integer(0); }
Coefficient Field::one() const { return from_integer(1); }

Coefficient Field::from_integer(long v) const {
  if (kind_ == Kind::rationals)
    return Coefficient(mpq_class(v));
  long r = v % static_cast<long>(p_);
  if (r < 0)
    r += p_;
  return Coefficient(Residue{static_cast<std::uint32_t>(r), p_});
}

Coefficient Field::from_rational(const mpq_class& q) const {
  if (kind_ == Kind::rationals)
    return Coefficient(q);
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (num < 0)
    num += p_;
  if (den == 0)
    throw ContractError("denominator " + q.get_den().get_str() + " vanishes modulo " + std::to_string(p_));
  Coefficient n(Residue{static_cast<std::uint32_t>(num.get_ui()), p_});
  Coefficient d(Residue{static_cast<std::uint32_t>(den.get_ui()), p_});
  return n / d;
}

bool Field::owns(const Coefficient& c) const {
  if (kind_ == Kind::rationals)
    return c.is_rational();
  return !c.is_rational() && c.residue().modulus == p_;
}

std::string Field::name() const {
  if (kind_ == Kind::rationals)
    return "Q";
  return "GF " + std::to_string(p_);
}

} // namespace sigbasis
