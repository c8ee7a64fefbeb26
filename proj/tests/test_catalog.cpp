#include "doctest.h"
#include "generators.hpp"
#include "ybsys/catalog.hpp"
#include "ybsys/q_solver.hpp"

#include <set>

using namespace ybsys;
using M = Matrix<Rational>;
using RF = RationalFunction;

namespace {

bool proportional(const M& a, const M& b) {
  // a = c b for some nonzero c
  std::optional<Rational> c;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    const Rational& x = a.entries()[k];
    const Rational& y = b.entries()[k];
    if (x.is_zero() != y.is_zero()) return false;
    if (x.is_zero()) continue;
    if (!c) c = x / y;
    if (x / y != *c) return false;
  }
  return true;
}

std::vector<const CatalogEntry*> group(const std::string& name) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog_entries()) {
    if (e.group == name) out.push_back(&e);
  }
  return out;
}

}  // namespace

TEST_CASE("catalog layout") {
  CHECK(catalog_entries().size() == 13);
  CHECK(group("exceptional").size() == 4);
  CHECK(group("diagonal").size() == 3);
  CHECK(group("sign-diagonal").size() == 6);
  std::set<std::string> names;
  for (const auto& e : catalog_entries()) names.insert(e.name);
  CHECK(names.size() == 13);
  CHECK_THROWS_AS(find_entry("no-such"), UnknownEntry);
}

TEST_CASE("H1.4/antidiag has antidiagonal R and Q") {
  const auto& e = find_entry("H1.4/antidiag");
  const auto pair = materialize_symbolic(e);
  const auto t = RF::variable("t");
  const auto a = RF::variable("a");
  CHECK(pair.r(0, 3).is_one());
  CHECK(pair.r(1, 2) == t);
  CHECK(pair.r(2, 1) == t);
  CHECK(pair.q(1, 2) == a);
  CHECK(pair.q(3, 0).is_one());
  CHECK(pair.q(0, 0).is_zero());
}

TEST_CASE("templates parse, are 4x4 and use declared parameters only") {
  for (const auto& e : catalog_entries()) {
    CHECK(e.r_template.size() == 16);
    CHECK(e.q_template.size() == 16);
    const auto pair = materialize_symbolic(e);
    for (const auto* m : {&pair.r, &pair.q}) {
      for (const auto& x : m->entries()) {
        for (const auto& v : x.numerator().variables()) {
          CHECK_MESSAGE(std::find(e.params.begin(), e.params.end(), v) != e.params.end(), e.name << " uses " << v);
        }
      }
    }
  }
}

TEST_CASE("Pythagorean parametrization at m = 2") {
  const Rational m = 2;
  const Rational t = (m * m - 1) / (m * 2);
  const Rational s = (m * m + 1) / (m * 2);
  CHECK(t == Rational(3, 4));
  CHECK(s == Rational(5, 4));
  const auto& e = find_entry("signdiag/Q2");
  ParameterBinding b{{"x", 1}, {"y", -1}, {"z", 1}, {"s", s}, {"t", t}};
  CHECK(binding_admissible(e, b));
  CHECK(is_solution(instantiate_with(e, b)).solves);
  b["s"] = Rational(1);
  CHECK_FALSE(binding_admissible(e, b));
  CHECK_THROWS_AS(instantiate_with(e, b), InstantiationFailure);
}

TEST_CASE("diag/diag-Q with all parameters 1 is (I, I)") {
  const auto& e = find_entry("diag/diag-Q");
  ParameterBinding b;
  for (const auto& p : e.params) b[p] = 1;
  const auto pair = instantiate_with(e, b);
  CHECK(pair.r == M::identity(4));
  CHECK(pair.q == M::identity(4));
}

TEST_CASE("H2.3/gh at g = 1, h = 2") {
  const auto& e = find_entry("H2.3/gh");
  const auto pair = instantiate_with(e, {{"x", 1}, {"y", 2}, {"z", 3}, {"g", 1}, {"h", 2}});
  CHECK(pair.q == M(4, 4, {1, 0, 0, 0, -1, 1, 0, 0, 1, 0, 1, 0, -2, 2, -2, 1}));
  CHECK(is_solution(pair).solves);
  CHECK(is_invertible(pair.q));
  CHECK(e.notes.find("invertible") != std::string::npos);
}

TEST_CASE("instantiations satisfy their constraints and are reproducible") {
  for (const auto& e : catalog_entries()) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto inst = instantiate(e, seed);
      CHECK(binding_admissible(e, inst.binding));
      for (const auto& c : e.constraints) CHECK(c.relation().substitute(inst.binding).is_zero());
      const auto again = instantiate(e, seed);
      CHECK(again.binding == inst.binding);
      for (const auto& [name, value] : inst.binding) {
        // numerators and denominators come from [-9, 9]; constrained values derive from them
        if (std::find_if(e.constraints.begin(), e.constraints.end(), [&](const ParameterConstraint& c) {
              return std::find(c.vars.begin(), c.vars.end(), name) != c.vars.end();
            }) == e.constraints.end()) {
          CHECK(abs(value.numerator()) <= 9);
          CHECK(value.denominator() <= 9);
        }
      }
    }
  }
}

TEST_CASE("symbolic instances cover every constraint branch") {
  CHECK(symbolic_instances(find_entry("H1.4/antidiag")).size() == 1);
  CHECK(symbolic_instances(find_entry("signdiag/Q1")).size() == 8);
  CHECK(symbolic_instances(find_entry("signdiag/Q2")).size() == 16);
  CHECK(symbolic_instances(find_entry("signdiag/Q6")).size() == 16);
  for (const auto& e : catalog_entries()) {
    for (const auto& si : symbolic_instances(e)) {
      CHECK_MESSAGE(system_residuals(si.pair).all_zero(), e.name << " " << si.label);
    }
  }
}

TEST_CASE("exceptional Q are not proportional to P, R or P R^-1 P") {
  for (const auto* e : group("exceptional")) {
    const auto pair = instantiate(*e, 5).pair;
    for (const auto& trivial : builtin_triples(pair.r)) {
      CHECK_MESSAGE(!proportional(pair.q, trivial.q), e->name);
    }
  }
}

TEST_CASE("diagonal-R lemma") {
  SUBCASE("scalar R with any YBE solution Q") {
    for (const auto& e : catalog_entries()) {
      const auto pair = instantiate(e, 9).pair;
      for (const Rational lambda : {Rational(1), Rational(-3, 2)}) {
        CHECK(is_solution(YBPair<Rational>(M::identity(4) * lambda, pair.q)).solves);
      }
    }
  }
  SUBCASE("sign-diagonal R with the eight-vertex Q") {
    for (const auto* e : group("sign-diagonal")) {
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto pair = instantiate(*e, seed).pair;
        for (std::size_t i = 0; i < 4; ++i) CHECK((pair.r(i, i) * pair.r(i, i)).is_one());
        CHECK(is_solution(pair).solves);
      }
    }
  }
  SUBCASE("general diagonal R with six-vertex Q") {
    for (const std::string name : {"diag/six-vertex-q", "diag/six-vertex-qt"}) {
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto pair = instantiate(find_entry(name), seed).pair;
        CHECK(pair.q(0, 3).is_zero());
        CHECK(pair.q(3, 0).is_zero());
        CHECK(is_solution(pair).solves);
      }
    }
  }
}

TEST_CASE("reference R and cross references") {
  CHECK(reference_rs().size() == 4);
  for (const auto& ref : reference_rs()) {
    const auto r = materialize_template<RF>(ref.r_template, {});
    CHECK(ybe_residual(r, 2).is_zero());
  }
  CHECK_THROWS_AS(find_reference_r("H9"), UnknownEntry);
  for (const auto& x : cross_references()) {
    CHECK(x.status == "unverified-mapping");
    CHECK_NOTHROW(find_entry(x.linked_entry));
    // each cross-referenced Q solves the YBE on its own
    const auto q = materialize_template<RF>(x.q_template, {});
    CHECK(ybe_residual(q, 2).is_zero());
  }
}
