#include "ybsys/q_solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <thread>

namespace ybsys {

namespace {

template <class T>
void check_in_kernel(const Matrix<T>& r, const NullSpaceBasis<T>& basis, std::size_t d) {
  if (basis.basis.empty()) return;
  const LinearOperator<T> op = linear_operator_for_Q(r, d);
  for (std::size_t k = 0; k < basis.basis.size(); ++k) {
    if (!op.annihilates(basis.basis[k])) {
      throw NotInKernel("basis element " + std::to_string(k + 1) + " (" + basis.coords.at(k) +
                        ") does not solve the linear equations for R");
    }
  }
}

void check_coordinate_names(const std::vector<std::string>& coords, const std::vector<std::string>& params) {
  for (const auto& c : coords) {
    if (std::find(params.begin(), params.end(), c) != params.end()) {
      throw std::invalid_argument("coordinate name '" + c + "' collides with a parameter of R");
    }
  }
}

// Residual of Q12 Q13 Q23 = Q23 Q13 Q12 at Q = sum_k c_k B_k, where the
// basis has already been scaled to polynomial entries.
ConstraintSystem constraints_from_polynomial_basis(const std::vector<Matrix<Polynomial>>& basis,
                                                   const std::vector<std::string>& coords, std::size_t d) {
  const std::size_t n = d * d;
  Matrix<Polynomial> q(n, n);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    q += basis[k] * Polynomial::variable(coords.at(k));
  }
  const Legs<Polynomial> l(q, d);
  const Matrix<Polynomial> res = l.m12 * l.m13 * l.m23 - l.m23 * l.m13 * l.m12;
  std::vector<Polynomial> polys(res.entries().begin(), res.entries().end());
  return make_constraint_system(polys, coords);
}

std::vector<std::string> variables_of(const Matrix<RationalFunction>& m) {
  std::set<std::string> names;
  for (const auto& x : m.entries()) {
    for (const auto& v : x.numerator().variables()) names.insert(v);
    for (const auto& v : x.denominator().variables()) names.insert(v);
  }
  return {names.begin(), names.end()};
}

}  // namespace

std::string ConstraintSystem::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < polynomials.size(); ++i) {
    if (i != 0) out << '\n';
    out << polynomials[i].to_string();
  }
  return out.str();
}

Polynomial normalize_constraint(const Polynomial& p, const std::vector<std::string>& coords) {
  if (p.is_zero()) return p;
  std::vector<std::string> params;
  for (const auto& v : p.variables()) {
    if (std::find(coords.begin(), coords.end(), v) == coords.end()) params.push_back(v);
  }
  Polynomial out = p;
  if (!params.empty()) {
    const Polynomial m = p.monomial_content(&params);
    if (!m.is_one()) out = out.exact_div(m);
  }
  return out.primitive_part();
}

ConstraintSystem make_constraint_system(const std::vector<Polynomial>& polys, std::vector<std::string> coords) {
  std::vector<Polynomial> out;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    Polynomial n = normalize_constraint(p, coords);
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(std::move(n));
  }
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) { return grlex_compare(a, b) > 0; });
  return {std::move(out), std::move(coords)};
}

ConstraintSystem cubic_constraints(const Matrix<Rational>& r, const NullSpaceBasis<Rational>& basis, std::size_t d) {
  check_in_kernel(r, basis, d);
  if (basis.basis.empty()) return {{}, basis.coords};
  std::vector<Matrix<Polynomial>> poly_basis;
  for (const auto& b : basis.basis) {
    poly_basis.push_back(b.map([](const Rational& x) { return Polynomial(x); }));
  }
  return constraints_from_polynomial_basis(poly_basis, basis.coords, d);
}

ConstraintSystem cubic_constraints(const Matrix<RationalFunction>& r, const NullSpaceBasis<RationalFunction>& basis,
                                   std::size_t d) {
  check_in_kernel(r, basis, d);
  if (basis.basis.empty()) return {{}, basis.coords};
  std::vector<std::string> params = variables_of(r);
  for (const auto& b : basis.basis) {
    for (const auto& v : variables_of(b)) params.push_back(v);
  }
  check_coordinate_names(basis.coords, params);
  // Scaling Q by a nonzero function of the parameters only scales the
  // residual, so clear all denominators at once.
  std::vector<Polynomial> dens;
  Polynomial common(1);
  for (const auto& b : basis.basis) {
    for (const auto& x : b.entries()) {
      if (x.is_polynomial() || std::find(dens.begin(), dens.end(), x.denominator()) != dens.end()) continue;
      dens.push_back(x.denominator());
      common *= x.denominator();
    }
  }
  std::vector<Matrix<Polynomial>> poly_basis;
  for (const auto& b : basis.basis) {
    poly_basis.push_back(b.map([&](const RationalFunction& x) {
      return x.is_polynomial() ? x.numerator() * common : x.numerator() * common.exact_div(x.denominator());
    }));
  }
  return constraints_from_polynomial_basis(poly_basis, basis.coords, d);
}

bool same_constraint_sets(const ConstraintSystem& a, const ConstraintSystem& b) {
  const ConstraintSystem na = make_constraint_system(a.polynomials, a.coords);
  const ConstraintSystem nb = make_constraint_system(b.polynomials, b.coords);
  return na.polynomials == nb.polynomials;
}

namespace {

// Rank of the coefficient vectors over the union of all monomials.
std::size_t coefficient_rank(const std::vector<const Polynomial*>& polys) {
  using Key = std::vector<std::pair<std::string, std::uint32_t>>;
  const auto key_of = [](const Polynomial& p, const Exponents& e) {
    Key k;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) k.emplace_back(p.variables()[i], e[i]);
    }
    return k;
  };
  std::map<Key, std::size_t> monomial_index;
  for (const auto* p : polys) {
    for (const auto& [e, c] : p->terms()) monomial_index.emplace(key_of(*p, e), monomial_index.size());
  }
  if (polys.empty() || monomial_index.empty()) return 0;
  Matrix<Rational> m(polys.size(), monomial_index.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (const auto& [e, c] : polys[i]->terms()) m(i, monomial_index.at(key_of(*polys[i], e))) = c;
  }
  return rank(m);
}

}  // namespace

bool same_constraint_span(const ConstraintSystem& a, const ConstraintSystem& b) {
  std::vector<const Polynomial*> pa;
  std::vector<const Polynomial*> pb;
  for (const auto& p : a.polynomials) pa.push_back(&p);
  for (const auto& p : b.polynomials) pb.push_back(&p);
  std::vector<const Polynomial*> both = pa;
  both.insert(both.end(), pb.begin(), pb.end());
  const std::size_t ra = coefficient_rank(pa);
  return ra == coefficient_rank(pb) && coefficient_rank(both) == ra;
}

ConstraintSystem independent_constraints(const ConstraintSystem& cs) {
  std::vector<const Polynomial*> order;
  for (const auto& p : cs.polynomials) order.push_back(&p);
  std::stable_sort(order.begin(), order.end(),
                   [](const Polynomial* a, const Polynomial* b) { return a->term_count() < b->term_count(); });
  std::vector<const Polynomial*> kept;
  for (const auto* p : order) {
    kept.push_back(p);
    if (coefficient_rank(kept) < kept.size()) kept.pop_back();
  }
  std::vector<Polynomial> out;
  for (const auto* p : kept) out.push_back(*p);
  return make_constraint_system(out, cs.coords);
}

std::uint64_t default_enumeration_bound() {
  if (const char* env = std::getenv("YBSYS_ENUM_BOUND")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultEnumerationBound;
}

std::size_t EnumerationResult::invertible_count() const {
  return static_cast<std::size_t>(
      std::count_if(solutions.begin(), solutions.end(), [](const EnumeratedSolution& s) { return s.invertible; }));
}

bool satisfies_ybe_mod_p(const std::vector<std::uint64_t>& q, std::size_t d, std::uint64_t p) {
  const std::size_t n = d * d;
  const std::size_t big = n * d;
  const auto at = [&](std::size_t row, std::size_t col) { return q[row * n + col]; };
  std::vector<std::uint64_t> q13(big * big, 0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t i2 = 0; i2 < d; ++i2) {
          for (std::size_t k2 = 0; k2 < d; ++k2) {
            q13[((i * d + j) * d + k) * big + (i2 * d + j) * d + k2] = at(i * d + k, i2 * d + k2);
          }
        }
      }
    }
  }
  std::vector<std::uint64_t> x(big);
  std::vector<std::uint64_t> y(big);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        // Row (i,j,k) of Q12 Q13 and of Q23 Q13.
        std::fill(x.begin(), x.end(), 0);
        std::fill(y.begin(), y.end(), 0);
        for (std::size_t a = 0; a < d; ++a) {
          for (std::size_t b = 0; b < d; ++b) {
            const std::uint64_t qx = at(i * d + j, a * d + b);
            const std::uint64_t qy = at(j * d + k, a * d + b);
            const std::uint64_t* rx = &q13[((a * d + b) * d + k) * big];
            const std::uint64_t* ry = &q13[((i * d + a) * d + b) * big];
            for (std::size_t c = 0; c < big; ++c) {
              if (qx != 0) x[c] = (x[c] + qx * rx[c]) % p;
              if (qy != 0) y[c] = (y[c] + qy * ry[c]) % p;
            }
          }
        }
        for (std::size_t a = 0; a < d; ++a) {
          for (std::size_t b = 0; b < d; ++b) {
            for (std::size_t e = 0; e < d; ++e) {
              std::uint64_t lhs = 0;
              std::uint64_t rhs = 0;
              for (std::size_t u = 0; u < d; ++u) {
                for (std::size_t v = 0; v < d; ++v) {
                  lhs = (lhs + x[(a * d + u) * d + v] * at(u * d + v, b * d + e)) % p;
                  rhs = (rhs + y[(u * d + v) * d + e] * at(u * d + v, a * d + b)) % p;
                }
              }
              if (lhs != rhs) return false;
            }
          }
        }
      }
    }
  }
  return true;
}

EnumerationResult enumerate_fp(const Matrix<Fp>& r, std::size_t d, std::uint64_t bound, unsigned workers) {
  checked_dimension(r.rows(), r.cols(), d);
  const PrimeField field = r.context();
  const std::uint64_t p = field.modulus();
  EnumerationResult result;
  result.basis = null_space(linear_operator_for_Q(r, d));
  const std::size_t k = result.basis.dimension();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > bound / p) {
      // Report the exact requirement when it fits in 64 bits.
      std::uint64_t required = 1;
      bool overflow = false;
      for (std::size_t j = 0; j < k; ++j) {
        if (required > UINT64_MAX / p) {
          overflow = true;
          break;
        }
        required *= p;
      }
      throw BoundExceeded(overflow ? UINT64_MAX : required, bound);
    }
    total *= p;
  }
  result.points = total;
  result.r_solves_ybe = ybe_residual(r, d).is_zero();
  if (!result.r_solves_ybe) return result;

  const std::size_t n = d * d;
  std::vector<std::vector<std::uint64_t>> basis(k, std::vector<std::uint64_t>(n * n));
  for (std::size_t b = 0; b < k; ++b) {
    for (std::size_t e = 0; e < n * n; ++e) basis[b][e] = result.basis.basis[b].entries()[e].value();
  }

  struct Hit {
    std::vector<std::uint64_t> coords;
    std::vector<std::uint64_t> q;
  };
  const auto scan = [&](std::uint64_t lo, std::uint64_t hi, std::vector<Hit>& hits) {
    std::vector<std::uint64_t> coords(k);
    std::vector<std::uint64_t> q(n * n);
    for (std::uint64_t index = lo; index < hi; ++index) {
      std::uint64_t rest = index;
      for (std::size_t b = k; b-- > 0;) {
        coords[b] = rest % p;
        rest /= p;
      }
      std::fill(q.begin(), q.end(), 0);
      for (std::size_t b = 0; b < k; ++b) {
        if (coords[b] == 0) continue;
        for (std::size_t e = 0; e < n * n; ++e) q[e] = (q[e] + coords[b] * basis[b][e]) % p;
      }
      if (satisfies_ybe_mod_p(q, d, p)) hits.push_back({coords, q});
    }
  };

  unsigned threads = workers != 0 ? workers : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, total / 4096)));
  std::vector<std::vector<Hit>> partial(threads);
  if (threads == 1) {
    scan(0, total, partial[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t lo = total * t / threads;
      const std::uint64_t hi = total * (t + 1) / threads;
      pool.emplace_back([&, lo, hi, t] { scan(lo, hi, partial[t]); });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<Hit> hits;
  for (auto& part : partial) {
    for (auto& h : part) hits.push_back(std::move(h));
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.q < b.q; });
  for (auto& h : hits) {
    std::vector<Fp> entries;
    entries.reserve(h.q.size());
    for (std::uint64_t v : h.q) entries.emplace_back(static_cast<std::int64_t>(v), field);
    Matrix<Fp> qm(n, n, std::move(entries), field);
    const bool inv = is_invertible(qm);
    result.solutions.push_back({std::move(h.coords), std::move(qm), inv});
  }
  return result;
}

std::uint64_t sample_seed(std::uint64_t seed, std::size_t i) {
  // splitmix64 step
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(i) + 1);
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

FamilyReport verify_family(const CatalogEntry& entry, std::size_t samples, std::uint64_t seed) {
  FamilyReport report;
  report.entry = entry.name;
  report.samples = samples;
  for (std::size_t i = 0; i < samples; ++i) {
    Instantiation inst{YBPair<Rational>(Matrix<Rational>::identity(4), Matrix<Rational>::identity(4)), {}};
    try {
      inst = instantiate(entry, sample_seed(seed, i));
    } catch (const InstantiationFailure& e) {
      report.failure = e.what();
      return report;
    }
    const SolutionReport rep = is_solution(inst.pair);
    if (!rep.solves || !rep.invertible_r || !rep.invertible_q) {
      report.failing_binding = inst.binding;
      std::string why;
      for (std::size_t k = 0; k < kSystemEquations.size(); ++k) {
        if (!rep.equation_holds[k]) why += std::string(why.empty() ? "" : "; ") + equation_label(kSystemEquations[k]) + " fails";
      }
      if (!rep.invertible_r) why += std::string(why.empty() ? "" : "; ") + "R singular";
      if (!rep.invertible_q) why += std::string(why.empty() ? "" : "; ") + "Q singular";
      report.failure = why;
      return report;
    }
    ++report.samples_passed;
  }
  report.symbolic_attempted = true;
  report.symbolic_passed = true;
  for (const auto& si : symbolic_instances(entry)) {
    ++report.symbolic_instances;
    const bool ok = system_residuals(si.pair).all_zero() && !determinant(si.pair.r).is_zero() &&
                    !determinant(si.pair.q).is_zero();
    if (!ok) {
      report.symbolic_passed = false;
      report.failure = "symbolic verification failed for branch " + si.label;
      break;
    }
  }
  return report;
}

}  // namespace ybsys
