#pragma once

#include "ybsys/errors.hpp"
#include "ybsys/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ybsys {

// Variable names compare with digit runs read as numbers, so c2 < c10.
bool natural_less(std::string_view a, std::string_view b);

using Exponents = std::vector<std::uint32_t>;

// Graded lexicographic order; the greatest monomial is the leading one.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

struct PolynomialRing {
  friend bool operator==(PolynomialRing, PolynomialRing) { return true; }
};

// Sparse multivariate polynomial with rational coefficients.
//
// Canonical form: variables are exactly those occurring with a positive
// exponent, kept in natural_less order; no zero coefficients are stored.
class Polynomial {
 public:
  using Context = PolynomialRing;
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  Polynomial();
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT

  static Polynomial zero(PolynomialRing = {}) { return Polynomial(); }
  static Polynomial one(PolynomialRing = {}) { return Polynomial(1); }
  static Polynomial from_integer(const mpz_class& value, PolynomialRing = {}) {
    return Polynomial(Rational(value));
  }
  static Polynomial from_rational(const Rational& value, PolynomialRing = {}) { return Polynomial(value); }
  static Polynomial variable(std::string_view name, PolynomialRing = {});
  static Polynomial monomial(const Rational& coefficient, const std::vector<std::string>& vars,
                             const Exponents& exponents);
  // `vars` need not be sorted or minimal; the result is canonicalized.
  static Polynomial from_terms(std::vector<std::string> vars, const TermMap& terms);

  PolynomialRing context() const { return {}; }

  const std::vector<std::string>& variables() const { return *vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_->empty(); }
  bool is_one() const;
  // Requires is_constant().
  Rational constant_value() const;
  unsigned total_degree() const;
  bool is_homogeneous() const;

  const Exponents& leading_exponents() const;
  const Rational& leading_coefficient() const;

  // Positive rational c such that *this / c has coprime integer coefficients.
  Rational content() const;
  // Divided by content, leading coefficient made positive.
  Polynomial primitive_part() const;
  // Greatest monomial dividing every term, restricted to `only` when given.
  Polynomial monomial_content(const std::vector<std::string>* only = nullptr) const;

  Polynomial pow(unsigned exponent) const;
  Polynomial scaled(const Rational& factor) const;
  // Quotient when `divisor` divides *this exactly in Q[vars].
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;
  // Throws std::domain_error when the division is not exact.
  Polynomial exact_div(const Polynomial& divisor) const;

  // Exact evaluation; every variable must be bound.
  Rational substitute(const std::map<std::string, Rational>& bindings) const;

  template <class T>
  T evaluate(const std::function<T(const std::string&)>& lookup, const typename T::Context& ctx) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // Terms in descending grlex order, in parse_scalar grammar.
  std::string to_string() const;

 private:
  using VarList = std::shared_ptr<const std::vector<std::string>>;

  Polynomial(VarList vars, TermMap terms);
  void canonicalize();
  TermMap aligned_terms(const std::vector<std::string>& target) const;
  static VarList merge(const VarList& a, const VarList& b);
  static const VarList& empty_vars();

  VarList vars_;
  TermMap terms_;

  friend int grlex_compare(const Polynomial& a, const Polynomial& b);
};

// Total order on polynomials: term-by-term from the leading term, grlex on
// monomials then coefficient value.
int grlex_compare(const Polynomial& a, const Polynomial& b);

template <class T>
T Polynomial::evaluate(const std::function<T(const std::string&)>& lookup,
                       const typename T::Context& ctx) const {
  std::vector<T> values;
  values.reserve(vars_->size());
  for (const auto& name : *vars_) values.push_back(lookup(name));
  T acc = T::zero(ctx);
  for (const auto& [exps, coefficient] : terms_) {
    T term = T::from_rational(coefficient, ctx);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] != 0) term *= values[i].pow(exps[i]);
    }
    acc += term;
  }
  return acc;
}

}  // namespace ybsys
