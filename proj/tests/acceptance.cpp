// Acceptance run: one line per criterion, exit status 1 when any fails.

#include "oracles.hpp"
#include "ybsys/catalog.hpp"
#include "ybsys/q_solver.hpp"
#include "ybsys/symmetry.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace ybsys;
using M = Matrix<Rational>;
using RF = RationalFunction;
using Key = std::vector<std::uint64_t>;

namespace {

int failures = 0;
auto last_report = std::chrono::steady_clock::now();

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int n, const std::string& title, bool ok, const std::string& detail) {
  std::ostringstream took;
  took.precision(2);
  took << std::fixed << seconds_since(last_report);
  std::cout << "criterion " << n << " [" << title << "]: " << (ok ? "PASS" : "FAIL") << " - " << detail << " ("
            << took.str() << " s)" << std::endl;
  if (!ok) ++failures;
  last_report = std::chrono::steady_clock::now();
}

Matrix<Fp> reduce(const M& m, const PrimeField& f) {
  return m.map([&](const Rational& x) { return Fp::from_rational(x, f); });
}

Key key_of(const Matrix<Fp>& m) {
  Key k;
  for (const auto& x : m.entries()) k.push_back(x.value());
  return k;
}

std::string flat(const M& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.entries().size(); ++i) out += (i ? " " : "") + m.entries()[i].to_string();
  return out + "]";
}

std::string key_string(const Key& k) {
  std::string out = "[";
  for (std::size_t i = 0; i < k.size(); ++i) out += (i ? " " : "") + std::to_string(k[i]);
  return out + "]";
}

const M kRH02(4, 4, {1, 0, 0, 1, 0, 1, 1, 0, 0, 1, -1, 0, -1, 0, 0, 1});

// Small seeded draws, independent of the library's own sampler.
struct Draw {
  std::mt19937_64 rng;
  explicit Draw(std::uint64_t seed) : rng(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  Rational nonzero_rational() {
    long n = 0;
    while (n == 0) n = integer(-7, 7);
    return Rational(mpz_class(n), mpz_class(integer(1, 5)));
  }
  Rational rational() { return Rational(mpz_class(integer(-7, 7)), mpz_class(integer(1, 5))); }
  M matrix(std::size_t n) {
    M m(n, n);
    for (auto& x : m.entries()) x = rational();
    return m;
  }
  M invertible(std::size_t n) {
    for (;;) {
      M m = matrix(n);
      if (is_invertible(m)) return m;
    }
  }
};

// 1
void catalog_verification() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t passed = 0;
  std::string first_failure;
  for (const auto& e : catalog_entries()) {
    const auto rep = verify_family(e, 20, 1);
    if (rep.passed()) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = e.name + ": " + rep.failure;
    }
  }
  const double t = seconds_since(t0);
  std::ostringstream d;
  d << passed << "/" << catalog_entries().size() << " families, 20 seeds each plus symbolic branches, limit 30 s";
  if (!first_failure.empty()) d << "; " << first_failure;
  report(1, "catalog verification", passed == catalog_entries().size() && t < 30.0, d.str());
}

// 2
void null_space_regression() {
  const std::map<std::string, std::size_t> expected = {{"H0.2", 2}, {"H1.2-special", 4}, {"H1.4", 3}, {"H2.3", 6}};
  bool ok = true;
  std::ostringstream d;
  for (const auto& [name, dim] : expected) {
    const auto r = materialize_template<RF>(find_reference_r(name).r_template, {});
    const std::size_t k = null_space(linear_operator_for_Q(r, 2)).dimension();
    d << name << "=" << k << " ";
    ok = ok && k == dim;
  }
  const std::size_t k_id = null_space(linear_operator_for_Q(M::identity(4), 2)).dimension();
  d << "I=" << k_id;
  ok = ok && k_id == 16;
  report(2, "null-space regression", ok, d.str());
}

// 3
void constraint_regression() {
  bool ok = true;
  std::ostringstream d;
  for (const auto& g : display_gauges()) {
    if (g.expected_constraints.empty()) continue;
    const auto r = materialize_template<RF>(find_reference_r(g.r_name).r_template, {});
    NullSpaceBasis<RF> b;
    b.coords = g.coords;
    for (const auto& grid : g.basis) b.basis.push_back(materialize_template<RF>(grid, {}));
    std::vector<Polynomial> polys;
    for (const auto& e : g.expected_constraints) polys.push_back(parse_scalar<RF>(e).numerator());
    const auto expected = make_constraint_system(polys, g.coords);
    const auto raw = cubic_constraints(r, b, 2);
    const auto indep = independent_constraints(raw);
    const bool same = same_constraint_sets(indep, expected) && same_constraint_span(raw, expected);
    d << g.r_name << ": " << indep.polynomials.size() << " independent of " << raw.polynomials.size()
      << " distinct entries " << (same ? "match" : "differ") << "; ";
    ok = ok && same;
  }
  report(3, "constraint-set regression", ok, d.str() + "equality up to scalars and order");
}

// 4
void generic_case_fp() {
  bool ok = true;
  std::ostringstream d;
  for (const std::uint64_t p : {5, 7}) {
    const PrimeField f(p);
    const auto r = reduce(kRH02, f);
    const auto res = enumerate_fp(r, 2, 1000);
    std::set<Key> found;
    for (const auto& s : res.solutions) {
      if (s.invertible) found.insert(key_of(s.q));
    }
    std::set<Key> lines;
    for (const auto& pair : builtin_triples(kRH02)) {
      const auto q = reduce(pair.q, f);
      for (std::uint64_t l = 1; l < p; ++l) lines.insert(key_of(q * Fp(static_cast<std::int64_t>(l), f)));
    }
    // brute force over the kernel coordinates with the index oracle
    std::size_t oracle_solutions = 0;
    std::size_t oracle_invertible = 0;
    for (std::uint64_t a = 0; a < p; ++a) {
      for (std::uint64_t b = 0; b < p; ++b) {
        const auto q = res.basis.combine({Fp(static_cast<std::int64_t>(a), f), Fp(static_cast<std::int64_t>(b), f)});
        if (!oracle::system_holds(r, q)) continue;
        ++oracle_solutions;
        if (is_invertible(q)) ++oracle_invertible;
      }
    }
    const bool here = found == lines && res.solutions.size() == oracle_solutions &&
                      res.invertible_count() == oracle_invertible;
    d << "F_" << p << ": " << res.invertible_count() << " invertible of " << res.solutions.size()
      << " (oracle " << oracle_invertible << " of " << oracle_solutions << "), three lines "
      << (found == lines ? "exact" : "differ") << "; ";
    ok = ok && here;
  }
  report(4, "generic case at F_p", ok, d.str() + "R = R_H0.2");
}

// 5. Images of catalog family members mod p under S in GL(2, F_p), flip, kappa
// and lambda, restricted to those whose R lands on the target, plus the three
// built-in lines.
struct FamilyUnion {
  std::set<Key> qs;
  std::size_t members = 0;
};

FamilyUnion family_union(const Matrix<Fp>& target, const PrimeField& f) {
  const std::uint64_t p = f.modulus();
  const auto pm = permutation_matrix<Fp>(2, f);
  struct G {
    Matrix<Fp> t, t_inv;
    bool flip;
  };
  std::vector<G> gs;
  std::map<Key, std::vector<std::size_t>> preimages;  // candidate family R -> elements mapping it to target
  for (std::uint64_t a = 0; a < p * p * p * p; ++a) {
    const auto fp = [&](std::uint64_t v) { return Fp(static_cast<std::int64_t>(v), f); };
    const Matrix<Fp> s(2, 2, {fp(a % p), fp(a / p % p), fp(a / (p * p) % p), fp(a / (p * p * p))}, f);
    if (determinant(s).is_zero()) continue;
    const auto t = kron(s, s);
    const auto t_inv = inverse(t);
    for (const bool flip : {false, true}) {
      gs.push_back({t, t_inv, flip});
      const auto base = t_inv * (flip ? pm * target * pm : target) * t;
      for (std::uint64_t mu = 1; mu < p; ++mu) {
        preimages[key_of(base * fp(mu))].push_back(gs.size() - 1);
      }
    }
  }
  FamilyUnion u;
  for (const auto& e : catalog_entries()) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < e.params.size(); ++i) total *= p;
    std::set<std::pair<Key, std::size_t>> done;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::map<std::string, Fp> b;
      std::uint64_t rest = idx;
      for (const auto& name : e.params) {
        b.emplace(name, Fp(static_cast<std::int64_t>(rest % p), f));
        rest /= p;
      }
      bool ok = true;
      for (const auto& c : e.constraints) {
        if (!c.relation().evaluate<Fp>([&](const std::string& n) { return b.at(n); }, f).is_zero()) ok = false;
      }
      for (const auto& nz : e.nondegeneracy) {
        if (parse_scalar<Fp>(nz, f, &b).is_zero()) ok = false;
      }
      if (!ok) continue;
      const auto re = materialize_template<Fp>(e.r_template, b, f);
      const auto qe = materialize_template<Fp>(e.q_template, b, f);
      if (!is_invertible(re) || !is_invertible(qe)) continue;
      const auto it = preimages.find(key_of(re));
      if (it == preimages.end()) continue;
      for (const std::size_t gi : it->second) {
        if (!done.insert({key_of(qe), gi}).second) continue;
        ++u.members;
        auto q = gs[gi].t * qe * gs[gi].t_inv;
        if (gs[gi].flip) q = pm * q * pm;
        for (std::uint64_t l = 1; l < p; ++l) u.qs.insert(key_of(q * Fp(static_cast<std::int64_t>(l), f)));
      }
    }
  }
  for (const auto& pair : builtin_triples(target)) {
    for (std::uint64_t l = 1; l < p; ++l) u.qs.insert(key_of(pair.q * Fp(static_cast<std::int64_t>(l), f)));
  }
  return u;
}

void exceptional_case_fp() {
  bool ok = true;
  std::ostringstream d;
  for (const std::uint64_t p : {3, 5}) {
    const PrimeField f(p);
    const auto r = materialize_template<Fp>(find_reference_r("H1.4").r_template, {{"t", Fp(1, f)}}, f);
    const auto u = family_union(r, f);
    const auto res = enumerate_fp(r, 2, 10000000);
    std::set<Key> all;
    std::size_t outside = 0;
    Key example;
    for (const auto& s : res.solutions) {
      const Key k = key_of(s.q);
      all.insert(k);
      if (s.invertible && !u.qs.count(k)) {
        if (outside++ == 0) example = k;
      }
    }
    std::size_t missing = 0;
    for (const auto& k : u.qs) missing += all.count(k) ? 0 : 1;
    d << "F_" << p << ": kernel " << res.basis.dimension() << ", " << u.qs.size() << " family points, " << missing
      << " not enumerated, " << outside << " of " << res.invertible_count() << " invertible solutions outside";
    if (outside) d << " (e.g. Q = " << key_string(example) << ")";
    d << "; ";
    ok = ok && missing == 0 && outside == 0;
  }
  report(5, "exceptional case at F_p", ok, d.str() + "R = R_H1.4(t=1)");
}

// 6
void diagonal_lemma() {
  std::size_t checked = 0;
  bool ok = true;
  for (const auto& e : catalog_entries()) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto q = instantiate(e, seed).pair.q;
      for (const Rational& lambda : {Rational(1), Rational(-5, 3)}) {
        ok = ok && is_solution(YBPair<Rational>(M::identity(4) * lambda, q)).solves;
        ++checked;
      }
    }
  }
  std::size_t sign_families = 0;
  for (const auto& e : catalog_entries()) {
    if (e.group != "sign-diagonal") continue;
    ++sign_families;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto pair = instantiate(e, seed).pair;
      for (std::size_t i = 0; i < 4; ++i) ok = ok && (pair.r(i, i) * pair.r(i, i)).is_one();
      ok = ok && is_solution(pair).solves;
      ++checked;
    }
  }
  for (const std::string name : {"diag/six-vertex-q", "diag/six-vertex-qt"}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto pair = instantiate(find_entry(name), seed).pair;
      ok = ok && pair.q(0, 3).is_zero() && pair.q(3, 0).is_zero() && is_solution(pair).solves;
      ++checked;
    }
  }
  ok = ok && sign_families == 6;
  report(6, "diagonal-R lemma", ok,
         std::to_string(checked) + " pairs: scalar R, " + std::to_string(sign_families) +
             " sign-diagonal families, 2 six-vertex families, 20 seeds each");
}

// 7
void symmetry_invariance() {
  Draw draw(7);
  bool ok = true;
  std::size_t checked = 0;
  std::size_t flips = 0;
  for (int i = 0; i < 100; ++i) {
    const SymmetryElement<Rational> g(draw.invertible(2), draw.nonzero_rational(), draw.nonzero_rational(),
                                      draw.integer(0, 1) == 1);
    flips += g.flip ? 1 : 0;
    for (const auto& e : catalog_entries()) {
      const auto pair = instantiate(e, static_cast<std::uint64_t>(i)).pair;
      const auto image = apply_symmetry(pair, g);
      ok = ok && system_residuals(image).all_zero() && fingerprint(image) == fingerprint(pair);
      ++checked;
    }
  }
  report(7, "symmetry invariance", ok,
         std::to_string(checked) + " images (100 elements, " + std::to_string(flips) +
             " with flip), residuals zero and fingerprints unchanged");
}

// 8
void implication_property() {
  std::vector<std::pair<std::string, YBPair<Rational>>> pairs;
  for (const auto& e : catalog_entries()) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) pairs.emplace_back(e.name, instantiate(e, seed).pair);
  }
  const char* triple_names[] = {"Q = P", "Q = R", "Q = P R^-1 P"};
  for (const auto& ref : reference_rs()) {
    std::map<std::string, Rational> at;
    Rational v = 2;
    for (const auto& p : ref.params) at[p] = (v += 1);
    const auto triples = builtin_triples(materialize_template<Rational>(ref.r_template, at));
    for (std::size_t i = 0; i < triples.size(); ++i) {
      pairs.emplace_back("R_" + ref.name + " with " + triple_names[i], triples[i]);
    }
  }
  std::size_t verified = 0;
  std::vector<std::string> failed;
  for (const auto& [name, pair] : pairs) {
    if (!is_solution(pair).solves) continue;
    ++verified;
    const auto ex = extended_residuals(pair.q, qbar(pair), pair.r, 2);
    for (std::size_t k = 0; k < ex.size(); ++k) {
      if (!ex[k].is_zero()) failed.push_back(name + " (extended equation " + std::to_string(k + 1) + ")");
    }
  }
  std::string detail = std::to_string(verified) + " verified pairs, Qbar = P R P Q R^-1";
  if (failed.empty()) {
    detail += ", all four extended residuals zero";
  } else {
    detail += ", nonzero for";
    for (const auto& f : failed) detail += " " + f + ";";
  }
  report(8, "implication property", failed.empty() && verified == pairs.size(), detail);
}

// 9
void restricted_negative_control() {
  const M r(4, 4, {1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1});
  // a = 1, x = 1, upper sign
  const M q(4, 4, {1, 0, 0, 1, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 0, 1});
  const M h(2, 2, {1, 1, 1, -1});
  const M hh = kron(h, h);
  const M standard = hh * q * inverse(hh);
  const YBPair<Rational> a(r, q), b(r, standard);
  const bool solves = is_solution(a).solves && is_solution(b).solves;
  const auto res = restricted_equivalence(a, b);
  const bool none = res.outcome == RestrictedEquivalence::Outcome::NoneFound;
  report(9, "restricted-equivalence negative control", solves && none,
         std::string("both pairs solve: ") + (solves ? "yes" : "no") + ", standard form " + flat(standard) +
             " via S = [[1, 1], [1, -1]], restricted search: " + res.to_string());
}

// 10
void property_suites() {
  Draw draw(10);
  const M p = permutation_matrix<Rational>(2);
  std::size_t mixed = 0, multiplicative = 0, involution = 0, round_trip = 0;
  for (int i = 0; i < 100; ++i) {
    const M a = draw.matrix(2), b = draw.matrix(2), c = draw.matrix(2), d = draw.matrix(2);
    if (kron(a, b) * kron(c, d) == kron(a * c, b * d)) ++mixed;
    const M x = draw.matrix(4), y = draw.matrix(4);
    bool emb = true;
    for (const auto legs : {LegIndex::L12, LegIndex::L13, LegIndex::L23}) {
      emb = emb && embed(x * y, legs, 2) == embed(x, legs, 2) * embed(y, legs, 2);
    }
    if (emb) ++multiplicative;
    if (p * p == M::identity(4) && p * kron(a, b) * p == kron(b, a)) ++involution;
    const M z = draw.invertible(4);
    if (z * inverse(z) == M::identity(4) && inverse(z) * z == M::identity(4)) ++round_trip;
  }
  const bool ok = mixed == 100 && multiplicative == 100 && involution == 100 && round_trip == 100;
  report(10, "property suites", ok,
         "mixed product " + std::to_string(mixed) + "/100, embed " + std::to_string(multiplicative) +
             "/100, P involution " + std::to_string(involution) + "/100, inverse round trip " +
             std::to_string(round_trip) + "/100");
}

}  // namespace

int main() {
  catalog_verification();
  null_space_regression();
  constraint_regression();
  generic_case_fp();
  exceptional_case_fp();
  diagonal_lemma();
  symmetry_invariance();
  implication_property();
  restricted_negative_control();
  property_suites();
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
