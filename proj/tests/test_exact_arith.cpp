#include "doctest.h"
#include "generators.hpp"
#include "ybsys/expression.hpp"

using namespace ybsys;

TEST_CASE("rational normal form") {
  const Rational a(6, -4);
  CHECK(a.numerator() == -3);
  CHECK(a.denominator() == 2);
  CHECK(a.to_string() == "-3/2");
  CHECK(Rational(0, 7).to_string() == "0");
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK(Rational(10, 5).to_string() == "2");
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(-2, 3) < Rational(1, 5));
}

TEST_CASE("rational roots") {
  Rational r;
  CHECK(rational_root(Rational(9, 4), 2, r));
  CHECK(r == Rational(3, 2));
  CHECK(rational_root(Rational(-8, 27), 3, r));
  CHECK(r == Rational(-2, 3));
  CHECK_FALSE(rational_root(Rational(2), 2, r));
  CHECK_FALSE(rational_root(Rational(-1), 2, r));
}

TEST_CASE("prime field") {
  const PrimeField f7(7);
  CHECK((Fp(3, f7) * Fp(5, f7)).value() == 1);
  CHECK(Fp(-1, f7).value() == 6);
  CHECK((Fp(3, f7).inverse() * Fp(3, f7)).is_one());
  CHECK(Fp::from_rational(Rational(1, 2), f7).value() == 4);
  CHECK_THROWS_AS(Fp::from_rational(Rational(1, 7), f7), DivisionByZero);
  CHECK_THROWS_AS(PrimeField(9), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField((std::uint64_t{1} << 31) + 11), std::invalid_argument);
  CHECK(PrimeField(2147483647).modulus() == 2147483647);
  CHECK_THROWS_AS(Fp(1, f7) + Fp(1, PrimeField(5)), FieldMismatch);
  const PrimeField big(2147483647);
  CHECK((Fp(2147483646, big) * Fp(2147483646, big)).is_one());
}

TEST_CASE("parse_scalar examples") {
  const auto p = parse_scalar<RationalFunction>("1-t");
  CHECK(p.is_polynomial());
  CHECK(p.numerator() == Polynomial(1) - Polynomial::variable("t"));
  CHECK(parse_scalar<Rational>("-1") == Rational(-1));
  CHECK(parse_scalar<RationalFunction>("q*t").numerator() ==
        Polynomial::variable("q") * Polynomial::variable("t"));
  CHECK(parse_scalar<Rational>("-2^2") == Rational(-4));
  CHECK(parse_scalar<Rational>("(1+2)*3/4 - 1") == Rational(5, 4));
  CHECK(parse_scalar<Fp>("1/2", PrimeField(5)).value() == 3);
}

TEST_CASE("parse_scalar errors") {
  CHECK_THROWS_AS(parse_scalar<Rational>("1+*t"), ParseError);
  CHECK_THROWS_AS(parse_scalar<Rational>("(1"), ParseError);
  CHECK_THROWS_AS(parse_scalar<Rational>("t"), ParseError);
  CHECK_THROWS_AS(parse_scalar<Fp>("x", PrimeField(3)), ParseError);
  CHECK_THROWS_AS(parse_scalar<Rational>("1/(2-2)"), DivisionByZero);
  CHECK_THROWS_AS(parse_scalar<Fp>("1/3", PrimeField(3)), DivisionByZero);
  CHECK_THROWS_AS(parse_scalar<RationalFunction>("1/(t-t)"), DivisionByZero);
  const std::map<std::string, Rational> b{{"t", Rational(3, 4)}};
  CHECK(parse_scalar<Rational>("1-t", {}, &b) == Rational(1, 4));
}

TEST_CASE("polynomial serialization is graded lex") {
  const auto x = Polynomial::variable("alpha");
  const auto y = Polynomial::variable("beta");
  CHECK((y * (y * y - x * x)).to_string() == "-alpha^2*beta + beta^3");
  CHECK((Polynomial(Rational(3, 4)) * Polynomial::variable("x")).to_string() == "3/4*x");
  CHECK((x + 1).pow(2).to_string() == "alpha^2 + 2*alpha + 1");
  CHECK(Polynomial().to_string() == "0");
  // c10 sorts after c9
  CHECK((Polynomial::variable("c10") + Polynomial::variable("c9")).to_string() == "c9 + c10");
}

TEST_CASE("polynomial division and content") {
  const auto t = Polynomial::variable("t");
  const auto q = Polynomial::variable("q");
  const Polynomial p = (t - q) * (t + q * 2);
  CHECK(p.exact_div(t - q) == t + q * 2);
  CHECK_FALSE(p.divide_exact(t + 1).has_value());
  CHECK_THROWS_AS(p.exact_div(t + 1), std::domain_error);
  const Polynomial c = Polynomial(Rational(6)) * t * t + Polynomial(Rational(4)) * t;
  CHECK(c.content() == Rational(2));
  CHECK(c.primitive_part() == Polynomial(3) * t * t + Polynomial(2) * t);
  CHECK(c.monomial_content() == t);
}

TEST_CASE("poly_substitute") {
  const auto p = parse_scalar<RationalFunction>("t^2 - 2*t*s + 1").numerator();
  CHECK(p.substitute({{"t", Rational(3)}, {"s", Rational(1, 2)}}) == Rational(7));
  // beta*(beta^2 - alpha^2) at alpha = 1, beta = 3 is 3 * 8
  const auto cubic = parse_scalar<RationalFunction>("beta*(beta^2-alpha^2)").numerator();
  CHECK(cubic.substitute({{"alpha", 1}, {"beta", 3}}) == Rational(24));
  CHECK_THROWS_AS(p.substitute({{"t", Rational(1)}}), UnboundVariable);
}

TEST_CASE("rf_equal examples") {
  const auto a = parse_scalar<RationalFunction>("t/t^2");
  const auto b = parse_scalar<RationalFunction>("1/t");
  CHECK(rf_equal(a, b));
  CHECK(rf_equal(parse_scalar<RationalFunction>("(1-t^2)/(1-t)"), parse_scalar<RationalFunction>("1+t")));
  CHECK_FALSE(rf_equal(b, parse_scalar<RationalFunction>("1/(t+1)")));
  CHECK(parse_scalar<RationalFunction>("(1-t^2)/(1-t)").to_string() == "t + 1");
  // denominator has positive leading coefficient
  const auto c = parse_scalar<RationalFunction>("1/(1-t)");
  CHECK(c.denominator().leading_coefficient() > Rational(0));
  CHECK(rf_equal(c, parse_scalar<RationalFunction>("-1/(t-1)")));
}

TEST_CASE("rational function output re-parses") {
  gen::Source src(11);
  const std::vector<std::string> vars{"t", "a", "x1"};
  for (int i = 0; i < gen::kCases; ++i) {
    const auto f = src.rational_function(vars);
    CHECK(rf_equal(parse_scalar<RationalFunction>(f.to_string()), f));
  }
}

TEST_CASE("property: field axioms over Q") {
  gen::Source src(1);
  for (int i = 0; i < gen::kCases; ++i) {
    const Rational a = src.rational(), b = src.rational(), c = src.rational();
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("property: F_p agrees with Q reduced mod p") {
  gen::Source src(2);
  const PrimeField f(101);
  for (int i = 0; i < gen::kCases; ++i) {
    const Rational a = src.rational(), b = src.nonzero_rational();
    const Fp fa = Fp::from_rational(a, f), fb = Fp::from_rational(b, f);
    CHECK(Fp::from_rational(a * b, f) == fa * fb);
    CHECK(Fp::from_rational(a - b, f) == fa - fb);
    CHECK(Fp::from_rational(a / b, f) == fa / fb);
  }
}

TEST_CASE("property: polynomial ring laws and evaluation") {
  gen::Source src(3);
  const std::vector<std::string> vars{"t", "q", "c2", "c10"};
  for (int i = 0; i < gen::kCases; ++i) {
    const auto p = src.polynomial(vars), q = src.polynomial(vars), r = src.polynomial(vars);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p - p == Polynomial());
    if (!q.is_zero()) CHECK((p * q).exact_div(q) == p);
    std::map<std::string, Rational> at;
    for (const auto& v : vars) at[v] = src.rational();
    CHECK((p * q + r).substitute(at) == p.substitute(at) * q.substitute(at) + r.substitute(at));
  }
}

TEST_CASE("property: rational function field laws") {
  gen::Source src(4);
  const std::vector<std::string> vars{"t", "s"};
  for (int i = 0; i < gen::kCases; ++i) {
    const auto a = src.rational_function(vars), b = src.rational_function(vars), c = src.rational_function(vars);
    CHECK(rf_equal((a + b) * c, a * c + b * c));
    CHECK(rf_equal(a - a, RationalFunction()));
    if (!b.is_zero()) CHECK(rf_equal((a / b) * b, a));
  }
}
