#pragma once

#include "ybsys/polynomial.hpp"

#include <string>
#include <string_view>

namespace ybsys {

// Descriptor of Q(t1, ..., tk). Variables are carried by the elements.
struct FunctionField {
  friend bool operator==(FunctionField, FunctionField) { return true; }
};

// Quotient of polynomials. Not reduced by a gcd: numerator and denominator
// are only stripped of common monomials, integer content and exact quotients,
// and the denominator's leading coefficient is kept positive.
class RationalFunction {
 public:
  using Context = FunctionField;

  RationalFunction() : den_(1) {}
  RationalFunction(Polynomial numerator);  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& value) : RationalFunction(Polynomial(value)) {}  // NOLINT
  RationalFunction(long value) : RationalFunction(Polynomial(value)) {}  // NOLINT
  RationalFunction(Polynomial numerator, Polynomial denominator);

  static RationalFunction zero(FunctionField = {}) { return {}; }
  static RationalFunction one(FunctionField = {}) { return RationalFunction(1); }
  static RationalFunction from_integer(const mpz_class& value, FunctionField = {}) {
    return RationalFunction(Rational(value));
  }
  static RationalFunction from_rational(const Rational& value, FunctionField = {}) { return RationalFunction(value); }
  static RationalFunction variable(std::string_view name, FunctionField = {}) {
    return RationalFunction(Polynomial::variable(name));
  }

  FunctionField context() const { return {}; }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RationalFunction inverse() const;
  RationalFunction pow(unsigned exponent) const;
  // Exact value at a rational point; throws DivisionByZero on a pole.
  Rational substitute(const std::map<std::string, Rational>& bindings) const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b);
  friend bool rf_equal(const RationalFunction& a, const RationalFunction& b);

  std::string to_string() const;

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

// a.num * b.den == b.num * a.den.
bool rf_equal(const RationalFunction& a, const RationalFunction& b);

}  // namespace ybsys
