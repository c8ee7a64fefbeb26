#pragma once

#include "ybsys/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace ybsys {

// The field F_p. The modulus is checked for primality on construction.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

  explicit PrimeField(std::uint64_t modulus);

  std::uint64_t modulus() const { return p_; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

class Fp {
 public:
  using Context = PrimeField;

  // Reduces `value` into [0, p).
  Fp(std::int64_t value, PrimeField field);

  static Fp zero(PrimeField field) { return Fp(0, field); }
  static Fp one(PrimeField field) { return Fp(1, field); }
  static Fp from_integer(const mpz_class& value, PrimeField field);
  // Throws DivisionByZero when p divides the denominator.
  static Fp from_rational(const Rational& value, PrimeField field);
  [[noreturn]] static Fp variable(std::string_view name, PrimeField field);

  PrimeField context() const { return field_; }
  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return field_.modulus(); }

  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  Fp inverse() const;
  Fp pow(unsigned exponent) const;

  Fp operator-() const;
  Fp& operator+=(const Fp& rhs);
  Fp& operator-=(const Fp& rhs);
  Fp& operator*=(const Fp& rhs);
  Fp& operator/=(const Fp& rhs);

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }

  friend bool operator==(const Fp& a, const Fp& b);

  std::string to_string() const { return std::to_string(value_); }

 private:
  struct Raw {};
  Fp(Raw, std::uint64_t value, PrimeField field) : value_(value), field_(field) {}
  void check_field(const Fp& other) const;

  std::uint64_t value_;
  PrimeField field_;
};

}  // namespace ybsys
