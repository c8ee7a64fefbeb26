#include "ybsys/rational.hpp"

#include "ybsys/errors.hpp"

#include <utility>

namespace ybsys {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class value) : q_(std::move(value)) {
  if (q_.get_den() == 0) throw DivisionByZero();
  q_.canonicalize();
}

Rational Rational::variable(std::string_view name, RationalField) {
  throw ParseError("unknown identifier '" + std::string(name) + "' in a field without variables");
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(unsigned exponent) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), exponent);
  return Rational(num, den);
}

Rational Rational::pow(int exponent) const {
  if (exponent >= 0) return pow(static_cast<unsigned>(exponent));
  return inverse().pow(static_cast<unsigned>(-exponent));
}

Rational& Rational::operator+=(const Rational& rhs) {
  q_ += rhs.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  q_ -= rhs.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  q_ *= rhs.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  q_ /= rhs.q_;
  return *this;
}

std::string Rational::to_string() const { return q_.get_str(); }

namespace {

bool integer_root(const mpz_class& value, unsigned degree, mpz_class& root) {
  if (value < 0) {
    if (degree % 2 == 0) return false;
    mpz_class positive = -value;
    if (!integer_root(positive, degree, root)) return false;
    root = -root;
    return true;
  }
  return mpz_root(root.get_mpz_t(), value.get_mpz_t(), degree) != 0;
}

}  // namespace

bool rational_root(const Rational& value, unsigned degree, Rational& root) {
  if (degree == 0) return false;
  mpz_class num, den;
  if (!integer_root(value.numerator(), degree, num)) return false;
  if (!integer_root(value.denominator(), degree, den)) return false;
  root = Rational(num, den);
  return true;
}

}  // namespace ybsys
