#include "ybsys/catalog.hpp"

#include <algorithm>
#include <random>

namespace ybsys {

namespace {

using Grid = std::vector<std::string>;

Grid grid(std::initializer_list<const char*> entries) { return {entries.begin(), entries.end()}; }

const Grid kSignDiagonalR = grid({"1", "0", "0", "0",  //
                                  "0", "x", "0", "0",  //
                                  "0", "0", "y", "0",  //
                                  "0", "0", "0", "z"});

const Grid kH12SpecialR = grid({"1", "0", "0", "0",  //
                                "0", "1", "0", "0",  //
                                "0", "0", "1", "0",  //
                                "1", "0", "0", "-1"});

const Grid kH14R = grid({"0", "0", "0", "1",  //
                         "0", "0", "t", "0",  //
                         "0", "t", "0", "0",  //
                         "1", "0", "0", "0"});

const Grid kH23R = grid({"1", "0", "0", "0",  //
                         "x", "1", "0", "0",  //
                         "y", "0", "1", "0",  //
                         "z", "y", "x", "1"});

const Grid kH02 = grid({"1", "0", "0", "1",  //
                        "0", "1", "1", "0",  //
                        "0", "1", "-1", "0",  //
                        "-1", "0", "0", "1"});

std::vector<ParameterConstraint> signs(std::initializer_list<const char*> vars) {
  std::vector<ParameterConstraint> out;
  for (const char* v : vars) out.push_back({ConstraintKind::Sign, {v}});
  return out;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;

  c.push_back({"H1.2-special/Q-tr", "exceptional", kH12SpecialR,
               grid({"1", "0", "0", "0",      //
                     "0", "1", "0", "0",      //
                     "0", "1-t", "t", "0",    //
                     "r", "0", "0", "-t"}),
               {"t", "r"}, {}, {"t"}, "final list, first exceptional pair (R_H1.2 special case)",
               "Q is proportional neither to R nor to P R^-1 P for generic t."});

  c.push_back({"H1.4/antidiag", "exceptional", kH14R,
               grid({"0", "0", "0", "1",  //
                     "0", "0", "a", "0",  //
                     "0", "a", "0", "0",  //
                     "1", "0", "0", "0"}),
               {"t", "a"}, {}, {"t", "a"}, "final list, second exceptional pair (R_H1.4)",
               "Q has the shape of R with an independent parameter a."});

  c.push_back({"H2.3/abc", "exceptional", kH23R,
               grid({"1", "0", "0", "0",  //
                     "a", "1", "0", "0",  //
                     "b", "0", "1", "0",  //
                     "c", "b", "a", "1"}),
               {"x", "y", "z", "a", "b", "c"}, {}, {}, "final list, third exceptional pair (R_H2.3)",
               "The derivation calls this Q 'nonivertible', yet it is unit lower triangular and hence "
               "invertible; it is listed among the invertible solutions and treated as invertible here."});

  c.push_back({"H2.3/gh", "exceptional", kH23R,
               grid({"1", "0", "0", "0",     //
                     "-g", "1", "0", "0",    //
                     "g", "0", "1", "0",     //
                     "-g*h", "h", "-h", "1"}),
               {"x", "y", "z", "g", "h"}, {}, {}, "final list, fourth exceptional pair (R_H2.3)",
               "Same 'nonivertible' wording as H2.3/abc; unit lower triangular, so invertible."});

  c.push_back({"diag/six-vertex-q", "diagonal", kSignDiagonalR,
               grid({"q", "0", "0", "0",        //
                     "0", "1", "0", "0",        //
                     "0", "q-t", "q*t", "0",    //
                     "0", "0", "0", "q"}),
               {"x", "y", "z", "q", "t"}, {}, {"x", "y", "z", "q", "t"},
               "final list, general diagonal R with six-vertex Q (last entry q)", ""});

  c.push_back({"diag/six-vertex-qt", "diagonal", kSignDiagonalR,
               grid({"q", "0", "0", "0",        //
                     "0", "1", "0", "0",        //
                     "0", "q-t", "q*t", "0",    //
                     "0", "0", "0", "-t"}),
               {"x", "y", "z", "q", "t"}, {}, {"x", "y", "z", "q", "t"},
               "final list, general diagonal R with six-vertex Q (last entry -t)", ""});

  c.push_back({"diag/diag-Q", "diagonal", kSignDiagonalR,
               grid({"1", "0", "0", "0",  //
                     "0", "a", "0", "0",  //
                     "0", "0", "b", "0",  //
                     "0", "0", "0", "c"}),
               {"x", "y", "z", "a", "b", "c"}, {}, {"x", "y", "z", "a", "b", "c"},
               "final list, general diagonal R with diagonal Q", ""});

  c.push_back({"signdiag/Q1", "sign-diagonal", kSignDiagonalR, kH02, {"x", "y", "z"}, signs({"x", "y", "z"}), {},
               "final list, sign-diagonal R list, first Q", "Q is the matrix R_H0.2."});

  {
    auto cs = signs({"x", "y", "z"});
    cs.push_back({ConstraintKind::Pythagorean, {"s", "t"}});
    c.push_back({"signdiag/Q2", "sign-diagonal", kSignDiagonalR,
                 grid({"1+t", "0", "0", "1",  //
                       "0", "s", "1", "0",    //
                       "0", "1", "s", "0",    //
                       "1", "0", "0", "1-t"}),
                 {"x", "y", "z", "s", "t"}, cs, {"t"}, "final list, sign-diagonal R list, second Q (s^2 = 1 + t^2)",
                 "No parametrization of s^2 = 1 + t^2 is given; instances use t = (m^2-1)/(2m), s = +-(m^2+1)/(2m)."});
  }

  c.push_back({"signdiag/Q3", "sign-diagonal", kSignDiagonalR,
               grid({"1", "0", "0", "0",    //
                     "0", "1", "0", "0",    //
                     "0", "1-t", "t", "0",  //
                     "1", "0", "0", "-t"}),
               {"x", "y", "z", "t"}, signs({"x", "y", "z"}), {"t"}, "final list, sign-diagonal R list, third Q", ""});

  c.push_back({"signdiag/Q4", "sign-diagonal", kSignDiagonalR,
               grid({"1", "0", "0", "0",   //
                     "0", "-1", "0", "0",  //
                     "0", "0", "-1", "0",  //
                     "1", "0", "0", "1"}),
               {"x", "y", "z"}, signs({"x", "y", "z"}), {}, "final list, sign-diagonal R list, fourth Q", ""});

  c.push_back({"signdiag/Q5", "sign-diagonal", kSignDiagonalR, kH14R, {"x", "y", "z", "t"}, signs({"x", "y", "z"}),
               {"t"}, "final list, sign-diagonal R list, fifth Q", "Q has the shape of R_H1.4."});

  {
    auto cs = signs({"x", "y", "z"});
    cs.push_back({ConstraintKind::SquareEqual, {"b", "a"}});
    c.push_back({"signdiag/Q6", "sign-diagonal", kSignDiagonalR,
                 grid({"a", "0", "0", "1",  //
                       "0", "b", "1", "0",  //
                       "0", "1", "b", "0",  //
                       "1", "0", "0", "a"}),
                 {"x", "y", "z", "a", "b"}, cs, {"a^2-1"}, "final list, sign-diagonal R list, sixth Q (b^2 = a^2)",
                 "Related to the eight-vertex family with x, a != 0 of the diagonal-R discussion; the "
                 "correspondence is not spelled out and is recorded as an unverified cross reference."});
  }
  return c;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-9, 8);
  const auto draw = [&] {
    const int v = dist(rng);
    return v >= 0 ? v + 1 : v;  // [-9, 9] without 0
  };
  const int num = draw();
  const int den = draw();
  return Rational(mpz_class(num), mpz_class(den));
}

bool random_sign(std::mt19937_64& rng) { return (rng() & 1U) != 0; }

}  // namespace

Polynomial ParameterConstraint::relation() const {
  const auto var = [&](std::size_t i) { return Polynomial::variable(vars.at(i)); };
  switch (kind) {
    case ConstraintKind::Sign:
      return var(0).pow(2) - Polynomial(1);
    case ConstraintKind::Pythagorean:
      return var(0).pow(2) - Polynomial(1) - var(1).pow(2);
    case ConstraintKind::SquareEqual:
      return var(0).pow(2) - var(1).pow(2);
  }
  throw std::logic_error("bad constraint kind");
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& find_entry(const std::string& name) {
  for (const auto& e : catalog_entries()) {
    if (e.name == name) return e;
  }
  throw UnknownEntry(name);
}

YBPair<RationalFunction> materialize_symbolic(const CatalogEntry& entry) {
  return materialize<RationalFunction>(entry, {});
}

bool binding_admissible(const CatalogEntry& entry, const ParameterBinding& binding) {
  for (const auto& p : entry.params) {
    if (binding.find(p) == binding.end()) return false;
  }
  for (const auto& c : entry.constraints) {
    if (!c.relation().substitute(binding).is_zero()) return false;
  }
  for (const auto& expr : entry.nondegeneracy) {
    if (parse_scalar<Rational>(expr, {}, &binding).is_zero()) return false;
  }
  const YBPair<Rational> pair = materialize<Rational>(entry, binding);
  return is_invertible(pair.r) && is_invertible(pair.q);
}

YBPair<Rational> instantiate_with(const CatalogEntry& entry, const ParameterBinding& binding) {
  if (!binding_admissible(entry, binding)) {
    throw InstantiationFailure("binding is not admissible for '" + entry.name + "'");
  }
  return materialize<Rational>(entry, binding);
}

Instantiation instantiate(const CatalogEntry& entry, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  constexpr int kBudget = 1000;
  for (int attempt = 0; attempt < kBudget; ++attempt) {
    ParameterBinding b;
    for (const auto& c : entry.constraints) {
      switch (c.kind) {
        case ConstraintKind::Sign:
          b[c.vars[0]] = Rational(random_sign(rng) ? 1 : -1);
          break;
        case ConstraintKind::Pythagorean: {
          const Rational m = random_rational(rng);
          const Rational m2 = m * m;
          b[c.vars[1]] = (m2 - Rational(1)) / (Rational(2) * m);
          const Rational s = (m2 + Rational(1)) / (Rational(2) * m);
          b[c.vars[0]] = random_sign(rng) ? s : -s;
          break;
        }
        case ConstraintKind::SquareEqual:
          break;
      }
    }
    for (const auto& p : entry.params) {
      if (b.find(p) == b.end()) {
        bool dependent = false;
        for (const auto& c : entry.constraints) {
          dependent = dependent || (c.kind == ConstraintKind::SquareEqual && c.vars[0] == p);
        }
        if (!dependent) b[p] = random_rational(rng);
      }
    }
    for (const auto& c : entry.constraints) {
      if (c.kind != ConstraintKind::SquareEqual) continue;
      const Rational& a = b.at(c.vars[1]);
      b[c.vars[0]] = random_sign(rng) ? a : -a;
    }
    if (binding_admissible(entry, b)) return {materialize<Rational>(entry, b), b};
  }
  throw InstantiationFailure("rejection budget exhausted for '" + entry.name + "'");
}

std::vector<SymbolicInstance> symbolic_instances(const CatalogEntry& entry) {
  // Each constraint contributes a list of (label, substitutions) branches.
  using Branch = std::pair<std::string, std::map<std::string, RationalFunction>>;
  std::vector<Branch> branches{{"", {}}};
  for (const auto& c : entry.constraints) {
    std::vector<Branch> options;
    switch (c.kind) {
      case ConstraintKind::Sign:
        options.push_back({c.vars[0] + "=1", {{c.vars[0], RationalFunction(1)}}});
        options.push_back({c.vars[0] + "=-1", {{c.vars[0], RationalFunction(-1)}}});
        break;
      case ConstraintKind::Pythagorean: {
        const RationalFunction m = RationalFunction::variable("m");
        const RationalFunction two_m = RationalFunction(2) * m;
        const RationalFunction t = (m * m - RationalFunction(1)) / two_m;
        const RationalFunction s = (m * m + RationalFunction(1)) / two_m;
        const std::string tl = c.vars[1] + "=(m^2-1)/(2*m)";
        options.push_back({c.vars[0] + "=(m^2+1)/(2*m)," + tl, {{c.vars[0], s}, {c.vars[1], t}}});
        options.push_back({c.vars[0] + "=-(m^2+1)/(2*m)," + tl, {{c.vars[0], -s}, {c.vars[1], t}}});
        break;
      }
      case ConstraintKind::SquareEqual: {
        const RationalFunction a = RationalFunction::variable(c.vars[1]);
        options.push_back({c.vars[0] + "=" + c.vars[1], {{c.vars[0], a}}});
        options.push_back({c.vars[0] + "=-" + c.vars[1], {{c.vars[0], -a}}});
        break;
      }
    }
    std::vector<Branch> next;
    for (const auto& [label, subs] : branches) {
      for (const auto& [olabel, osubs] : options) {
        auto merged = subs;
        merged.insert(osubs.begin(), osubs.end());
        next.push_back({label.empty() ? olabel : label + "," + olabel, std::move(merged)});
      }
    }
    branches = std::move(next);
  }
  std::vector<SymbolicInstance> out;
  for (auto& [label, subs] : branches) {
    out.push_back({label.empty() ? "generic" : label, materialize<RationalFunction>(entry, subs)});
  }
  return out;
}

const std::vector<ReferenceR>& reference_rs() {
  static const std::vector<ReferenceR> refs = {
      {"H0.2", kH02, {}, "generic case example R_H0.2"},
      {"H1.2-special", kH12SpecialR, {}, "special case of R_H1.2"},
      {"H1.4", kH14R, {"t"}, "R_H1.4"},
      {"H2.3", kH23R, {"x", "y", "z"}, "R_H2.3"},
  };
  return refs;
}

const ReferenceR& find_reference_r(const std::string& name) {
  for (const auto& r : reference_rs()) {
    if (r.name == name) return r;
  }
  throw UnknownEntry(name);
}

const std::vector<DisplayGauge>& display_gauges() {
  static const std::vector<DisplayGauge> gauges = {
      {"H0.2",
       {"alpha", "beta"},
       {grid({"1", "0", "0", "0", "0", "0", "1", "0", "0", "1", "0", "0", "0", "0", "0", "1"}),
        grid({"0", "0", "0", "1", "0", "1", "0", "0", "0", "0", "-1", "0", "-1", "0", "0", "0"})},
       {"beta*(beta^2-alpha^2)"},
       "generic case, Q = alpha*P + beta*B"},
      {"H1.2-special",
       {"alpha", "beta", "gamma", "delta"},
       {grid({"1", "0", "0", "0", "0", "1", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0"}),
        grid({"1", "0", "0", "0", "0", "0", "1", "0", "0", "0", "1", "0", "0", "0", "0", "0"}),
        grid({"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0"}),
        grid({"0", "0", "0", "0", "0", "-1", "1", "0", "0", "0", "0", "0", "0", "0", "0", "1"})},
       {"alpha*gamma*(beta+delta)", "alpha*beta*(beta+delta)", "alpha*(alpha-delta)*(beta+delta)"},
       "first special case, four-dimensional solution space"},
      {"H1.4",
       {"alpha", "beta", "gamma"},
       {grid({"1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1"}),
        grid({"0", "0", "0", "0", "0", "0", "1", "0", "0", "1", "0", "0", "0", "0", "0", "0"}),
        grid({"0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0"})},
       {"alpha^2*gamma", "alpha*(gamma^2+alpha*beta-beta^2)"},
       "second special case, three-dimensional solution space"},
      {"H2.3",
       {"alpha1", "alpha2", "beta1", "beta2", "gamma", "delta1"},
       {grid({"1", "0", "0", "0", "0", "0", "1", "0", "0", "1", "0", "0", "0", "0", "0", "1"}),
        grid({"0", "0", "0", "0", "0", "1", "-1", "0", "0", "-1", "1", "0", "0", "0", "0", "0"}),
        grid({"0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0"}),
        grid({"0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0", "0", "0", "1", "0"}),
        grid({"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0", "0"}),
        grid({"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "-1", "0"})},
       {},
       "third special case, six-dimensional solution space"},
  };
  return gauges;
}

const DisplayGauge& find_display_gauge(const std::string& r_name) {
  for (const auto& g : display_gauges()) {
    if (g.r_name == r_name) return g;
  }
  throw UnknownEntry(r_name);
}

const std::vector<CrossReference>& cross_references() {
  static const std::vector<CrossReference> refs = {
      {"eight-vertex/plus",
       grid({"a", "0", "0", "x", "0", "a", "x", "0", "0", "x", "a", "0", "x", "0", "0", "a"}),
       {"a", "x"},
       "signdiag/Q6",
       "unverified-mapping",
       "diagonal-R discussion, eight-vertex YBE solutions with x, a != 0 (upper sign)"},
      {"eight-vertex/minus",
       grid({"a", "0", "0", "x", "0", "-a", "x", "0", "0", "x", "-a", "0", "x", "0", "0", "a"}),
       {"a", "x"},
       "signdiag/Q6",
       "unverified-mapping",
       "diagonal-R discussion, eight-vertex YBE solutions with x, a != 0 (lower sign)"},
  };
  return refs;
}

}  // namespace ybsys
