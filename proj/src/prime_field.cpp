#include "ybsys/prime_field.hpp"

#include "ybsys/errors.hpp"

namespace ybsys {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t modulus) : p_(modulus) {
  if (modulus > kMaxModulus) throw std::invalid_argument("modulus too large: " + std::to_string(modulus));
  if (!is_prime(modulus)) throw std::invalid_argument("modulus is not prime: " + std::to_string(modulus));
}

Fp::Fp(std::int64_t value, PrimeField field) : field_(field) {
  const auto p = static_cast<std::int64_t>(field.modulus());
  std::int64_t r = value % p;
  if (r < 0) r += p;
  value_ = static_cast<std::uint64_t>(r);
}

Fp Fp::from_integer(const mpz_class& value, PrimeField field) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), field.modulus());
  return Fp(Raw{}, r.get_ui(), field);
}

Fp Fp::from_rational(const Rational& value, PrimeField field) {
  return from_integer(value.numerator(), field) / from_integer(value.denominator(), field);
}

Fp Fp::variable(std::string_view name, PrimeField) {
  throw ParseError("unknown identifier '" + std::string(name) + "' in a prime field");
}

void Fp::check_field(const Fp& other) const {
  if (field_ != other.field_) {
    throw FieldMismatch("F_" + std::to_string(field_.modulus()) + " vs F_" +
                        std::to_string(other.field_.modulus()));
  }
}

Fp Fp::inverse() const {
  if (value_ == 0) throw DivisionByZero();
  return pow(static_cast<unsigned>(field_.modulus() - 2));
}

Fp Fp::pow(unsigned exponent) const {
  const std::uint64_t p = field_.modulus();
  std::uint64_t base = value_;
  std::uint64_t acc = 1 % p;
  while (exponent != 0) {
    if (exponent & 1U) acc = acc * base % p;
    base = base * base % p;
    exponent >>= 1U;
  }
  return Fp(Raw{}, acc, field_);
}

Fp Fp::operator-() const {
  return Fp(Raw{}, value_ == 0 ? 0 : field_.modulus() - value_, field_);
}

Fp& Fp::operator+=(const Fp& rhs) {
  check_field(rhs);
  value_ = (value_ + rhs.value_) % field_.modulus();
  return *this;
}

Fp& Fp::operator-=(const Fp& rhs) {
  check_field(rhs);
  value_ = (value_ + field_.modulus() - rhs.value_) % field_.modulus();
  return *this;
}

Fp& Fp::operator*=(const Fp& rhs) {
  check_field(rhs);
  value_ = value_ * rhs.value_ % field_.modulus();
  return *this;
}

Fp& Fp::operator/=(const Fp& rhs) {
  check_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Fp& a, const Fp& b) {
  a.check_field(b);
  return a.value_ == b.value_;
}

}  // namespace ybsys
