#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace ybsys {

// Descriptor of the field Q. Carries no state.
struct RationalField {
  friend bool operator==(RationalField, RationalField) { return true; }
};

// Arbitrary-precision rational, always in lowest terms with positive denominator.
class Rational {
 public:
  using Context = RationalField;

  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& value) : q_(value) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class value);

  static Rational zero(RationalField = {}) { return Rational(); }
  static Rational one(RationalField = {}) { return Rational(1); }
  static Rational from_integer(const mpz_class& value, RationalField = {}) { return Rational(value); }
  static Rational from_rational(const Rational& value, RationalField = {}) { return value; }
  // Q has no indeterminates; always throws ParseError.
  [[noreturn]] static Rational variable(std::string_view name, RationalField = {});

  RationalField context() const { return {}; }

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational inverse() const;
  Rational pow(unsigned exponent) const;
  Rational pow(int exponent) const;
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // "n" or "n/d"; valid input for parse_scalar.
  std::string to_string() const;

 private:
  mpq_class q_;
};

// Exact rational g-th root if one exists (g >= 1).
bool rational_root(const Rational& value, unsigned degree, Rational& root);

}  // namespace ybsys
