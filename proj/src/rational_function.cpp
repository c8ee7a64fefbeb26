#include "ybsys/rational_function.hpp"

#include <algorithm>
#include <utility>

namespace ybsys {

namespace {

// Per-variable minimum exponent of the monomial contents of a and b.
Polynomial common_monomial(const Polynomial& a, const Polynomial& b) {
  const Polynomial ma = a.monomial_content();
  const Polynomial mb = b.monomial_content();
  if (ma.is_one() || mb.is_one()) return Polynomial(1);
  const Exponents& ea = ma.leading_exponents();
  const Exponents& eb = mb.leading_exponents();
  std::vector<std::string> vars;
  Exponents exps;
  for (std::size_t i = 0; i < ea.size(); ++i) {
    for (std::size_t j = 0; j < eb.size(); ++j) {
      if (ma.variables()[i] != mb.variables()[j]) continue;
      const std::uint32_t m = std::min(ea[i], eb[j]);
      if (m != 0) {
        vars.push_back(ma.variables()[i]);
        exps.push_back(m);
      }
    }
  }
  if (vars.empty()) return Polynomial(1);
  return Polynomial::monomial(Rational(1), vars, exps);
}

}  // namespace

RationalFunction::RationalFunction(Polynomial numerator) : num_(std::move(numerator)), den_(1) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (den_.is_constant()) {
    if (!den_.is_one()) {
      num_ = num_.scaled(den_.constant_value().inverse());
      den_ = Polynomial(1);
    }
    return;
  }
  const Polynomial g = common_monomial(num_, den_);
  if (!g.is_one()) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  if (num_.term_count() >= den_.term_count()) {
    if (auto q = num_.divide_exact(den_)) {
      num_ = std::move(*q);
      den_ = Polynomial(1);
      return;
    }
  } else if (auto q = den_.divide_exact(num_)) {
    num_ = Polynomial(1);
    den_ = std::move(*q);
    if (den_.is_constant()) {
      num_ = Polynomial(den_.constant_value().inverse());
      den_ = Polynomial(1);
      return;
    }
  }
  Rational c = den_.content();
  if (den_.leading_coefficient().sign() < 0) c = -c;
  if (!c.is_one()) {
    const Rational inv = c.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(unsigned exponent) const {
  if (is_polynomial()) return RationalFunction(num_.pow(exponent));
  return RationalFunction(num_.pow(exponent), den_.pow(exponent));
}

Rational RationalFunction::substitute(const std::map<std::string, Rational>& bindings) const {
  return num_.substitute(bindings) / den_.substitute(bindings);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (rhs.is_zero()) return *this;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
    if (!den_.is_one()) normalize();
    if (num_.is_zero()) den_ = Polynomial(1);
    return *this;
  }
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  if (is_polynomial() && rhs.is_polynomial()) {
    num_ *= rhs.num_;
    return *this;
  }
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

bool rf_equal(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) { return rf_equal(a, b); }

std::string RationalFunction::to_string() const {
  // "a*t/x" needs no parentheses on top, but the bottom must be one atom.
  const bool simple_num = num_.term_count() == 1 && (num_.is_constant() ? num_.constant_value().is_integer()
                                                                         : num_.leading_coefficient().is_one());
  const bool simple_den = den_.term_count() == 1 && (den_.is_constant() ? den_.constant_value().is_integer()
                                                                         : den_.leading_coefficient().is_one() &&
                                                                               den_.variables().size() == 1);
  const auto wrap = [](const Polynomial& p, bool simple) {
    return simple ? p.to_string() : "(" + p.to_string() + ")";
  };
  if (den_.is_one()) return num_.to_string();
  return wrap(num_, simple_num) + "/" + wrap(den_, simple_den);
}

}  // namespace ybsys
