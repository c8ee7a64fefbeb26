#pragma once

#include "ybsys/expression.hpp"
#include "ybsys/rational_function.hpp"
#include "ybsys/yb_system.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ybsys {

using ParameterBinding = std::map<std::string, Rational>;

enum class ConstraintKind {
  Sign,         // v^2 = 1
  Pythagorean,  // s^2 = 1 + t^2, vars {s, t}
  SquareEqual,  // b^2 = a^2,     vars {b, a}
};

struct ParameterConstraint {
  ConstraintKind kind;
  std::vector<std::string> vars;

  // The relation as a polynomial that must vanish.
  Polynomial relation() const;
};

// One (R, Q) family: entry expressions of 4x4 templates in row-major order.
struct CatalogEntry {
  std::string name;
  std::string group;  // "exceptional", "diagonal" or "sign-diagonal"
  std::vector<std::string> r_template;
  std::vector<std::string> q_template;
  std::vector<std::string> params;
  std::vector<ParameterConstraint> constraints;
  std::vector<std::string> nondegeneracy;  // expressions that must not vanish
  std::string anchor;
  std::string notes;

  bool has_constraints() const { return !constraints.empty(); }
};

struct UnknownEntry : std::invalid_argument {
  explicit UnknownEntry(const std::string& name) : std::invalid_argument("unknown catalog entry '" + name + "'") {}
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& find_entry(const std::string& name);

template <class T>
Matrix<T> materialize_template(const std::vector<std::string>& entries, const std::map<std::string, T>& bindings,
                               const typename T::Context& ctx = {}) {
  std::vector<T> values;
  values.reserve(entries.size());
  for (const auto& e : entries) values.push_back(parse_scalar<T>(e, ctx, &bindings));
  std::size_t n = 1;
  while (n * n < entries.size()) ++n;
  return Matrix<T>(n, n, std::move(values), ctx);
}

template <class T>
YBPair<T> materialize(const CatalogEntry& entry, const std::map<std::string, T>& bindings,
                      const typename T::Context& ctx = {}) {
  return YBPair<T>(materialize_template(entry.r_template, bindings, ctx),
                   materialize_template(entry.q_template, bindings, ctx), 2);
}

// Parameters as indeterminates of Q(params).
YBPair<RationalFunction> materialize_symbolic(const CatalogEntry& entry);

// True when `binding` covers the parameters, satisfies every constraint and
// nondegeneracy condition, and yields invertible R and Q.
bool binding_admissible(const CatalogEntry& entry, const ParameterBinding& binding);

struct Instantiation {
  YBPair<Rational> pair;
  ParameterBinding binding;
};

struct InstantiationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Seeded exact instantiation. Free parameters are small random rationals;
// s^2 = 1 + t^2 uses t = (m^2-1)/(2m), s = +-(m^2+1)/(2m); b^2 = a^2 uses
// b = +-a; v^2 = 1 uses v = +-1. Degenerate draws are rejected.
Instantiation instantiate(const CatalogEntry& entry, std::uint64_t seed);
// Uses `binding` as given; throws InstantiationFailure when inadmissible.
YBPair<Rational> instantiate_with(const CatalogEntry& entry, const ParameterBinding& binding);

struct SymbolicInstance {
  std::string label;  // which discrete choices were made
  YBPair<RationalFunction> pair;
};

// Instances over Q(free params) covering every branch of the constraints:
// each sign choice, b = +-a, and the rational parametrization of
// s^2 = 1 + t^2 in a fresh variable m.
std::vector<SymbolicInstance> symbolic_instances(const CatalogEntry& entry);

// (R, P), (R, R), (R, P R^{-1} P).
template <class T>
std::vector<YBPair<T>> builtin_triples(const Matrix<T>& r, std::size_t d = 2) {
  if (!ybe_residual(r, d).is_zero()) throw std::invalid_argument("R does not solve the Yang-Baxter equation");
  const Matrix<T> r_inv = inverse(r);
  const Matrix<T> p = permutation_matrix<T>(d, r.context());
  return {YBPair<T>(r, p, d), YBPair<T>(r, r, d), YBPair<T>(r, p * r_inv * p, d)};
}

// R matrices displayed in the derivation, by name: "H0.2", "H1.2-special",
// "H1.4" (parameter t) and "H2.3" (parameters x, y, z).
struct ReferenceR {
  std::string name;
  std::vector<std::string> r_template;
  std::vector<std::string> params;
  std::string anchor;
};

const std::vector<ReferenceR>& reference_rs();
const ReferenceR& find_reference_r(const std::string& name);

// Displayed basis of the solution space of the linear equations for one
// reference R, with the cubic constraints printed for that basis.
struct DisplayGauge {
  std::string r_name;
  std::vector<std::string> coords;
  std::vector<std::vector<std::string>> basis;  // one 16-entry template per coordinate
  std::vector<std::string> expected_constraints;
  std::string anchor;
};

const std::vector<DisplayGauge>& display_gauges();
const DisplayGauge& find_display_gauge(const std::string& r_name);

// Families kept only as cross references, not verified as catalog data.
struct CrossReference {
  std::string name;
  std::vector<std::string> q_template;
  std::vector<std::string> params;
  std::string linked_entry;
  std::string status;
  std::string anchor;
};

const std::vector<CrossReference>& cross_references();

// The scalar-R case is a rule rather than a family.
inline constexpr const char* kScalarRRule =
    "R = lambda*I with lambda != 0: Q may be any solution of the Yang-Baxter equation";

}  // namespace ybsys
