#pragma once

#include "ybsys/catalog.hpp"
#include "ybsys/linalg.hpp"
#include "ybsys/prime_field.hpp"
#include "ybsys/yb_system.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ybsys {

// Linear map vec(Q) -> (residual of Q12 R13 R23 = R23 R13 Q12,
//                       residual of R12 R13 Q23 = Q23 R13 R12), stacked.
// Size 2 d^6 x d^4; column j is the image of the j-th elementary matrix.
template <class T>
struct LinearOperator {
  Matrix<T> matrix;
  std::size_t d;

  std::vector<T> apply(const Matrix<T>& q) const {
    const auto v = vec(q);
    std::vector<T> out(matrix.rows(), T::zero(matrix.context()));
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
      for (std::size_t j = 0; j < matrix.cols(); ++j) {
        if (!matrix(i, j).is_zero() && !v[j].is_zero()) out[i] += matrix(i, j) * v[j];
      }
    }
    return out;
  }

  bool annihilates(const Matrix<T>& q) const {
    for (const auto& x : apply(q)) {
      if (!x.is_zero()) return false;
    }
    return true;
  }
};

template <class T>
LinearOperator<T> linear_operator_for_Q(const Matrix<T>& r, std::size_t d) {
  checked_dimension(r.rows(), r.cols(), d);
  const auto& ctx = r.context();
  const Legs<T> lr(r, d);
  const Matrix<T> r13r23 = lr.m13 * lr.m23;
  const Matrix<T> r23r13 = lr.m23 * lr.m13;
  const Matrix<T> r12r13 = lr.m12 * lr.m13;
  const Matrix<T> r13r12 = lr.m13 * lr.m12;
  const std::size_t n = d * d;
  const std::size_t big = n * d;
  Matrix<T> op(2 * big * big, n * n, ctx);
  for (std::size_t j = 0; j < n * n; ++j) {
    Matrix<T> e(n, n, ctx);
    e(j / n, j % n) = T::one(ctx);
    const Matrix<T> e12 = embed(e, LegIndex::L12, d);
    const Matrix<T> e23 = embed(e, LegIndex::L23, d);
    const Matrix<T> first = e12 * r13r23 - r23r13 * e12;
    const Matrix<T> second = r12r13 * e23 - e23 * r13r12;
    for (std::size_t k = 0; k < big * big; ++k) {
      op(k, j) = first.entries()[k];
      op(big * big + k, j) = second.entries()[k];
    }
  }
  return {std::move(op), d};
}

template <class T>
struct NullSpaceBasis {
  std::vector<Matrix<T>> basis;
  std::vector<std::string> coords;  // c1, c2, ... unless a display gauge names them

  std::size_t dimension() const { return basis.size(); }

  // sum_k coordinates[k] * basis[k]
  Matrix<T> combine(const std::vector<T>& coordinates) const {
    if (coordinates.size() != basis.size()) throw DimensionMismatch("coordinate count");
    Matrix<T> q = basis.front() * coordinates.front();
    for (std::size_t k = 1; k < basis.size(); ++k) q += basis[k] * coordinates[k];
    return q;
  }
};

inline std::vector<std::string> default_coordinate_names(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= k; ++i) names.push_back("c" + std::to_string(i));
  return names;
}

// Reduced echelon basis of the kernel, ordered by free column of vec(Q).
template <class T>
NullSpaceBasis<T> null_space(const LinearOperator<T>& op) {
  const std::size_t n = op.d * op.d;
  NullSpaceBasis<T> out;
  for (auto& v : kernel_basis(op.matrix)) out.basis.emplace_back(n, n, std::move(v), op.matrix.context());
  out.coords = default_coordinate_names(out.basis.size());
  return out;
}

// Homogeneous cubic polynomials in the coordinates whose common zeros are
// the Q = sum c_k B_k solving Q12 Q13 Q23 = Q23 Q13 Q12.
struct ConstraintSystem {
  std::vector<Polynomial> polynomials;
  std::vector<std::string> coords;

  std::string to_string() const;
};

// Primitive part with monomial factors in non-coordinate variables removed.
Polynomial normalize_constraint(const Polynomial& p, const std::vector<std::string>& coords);
// Normalize, drop zeros and duplicates, sort in descending grlex order.
ConstraintSystem make_constraint_system(const std::vector<Polynomial>& polys, std::vector<std::string> coords);

// Throws NotInKernel when a basis element violates the linear equations.
ConstraintSystem cubic_constraints(const Matrix<Rational>& r, const NullSpaceBasis<Rational>& basis, std::size_t d);
ConstraintSystem cubic_constraints(const Matrix<RationalFunction>& r, const NullSpaceBasis<RationalFunction>& basis,
                                   std::size_t d);

// Same polynomial sets after normalization.
bool same_constraint_sets(const ConstraintSystem& a, const ConstraintSystem& b);
// Same Q-linear span (compared by rank of coefficient vectors).
bool same_constraint_span(const ConstraintSystem& a, const ConstraintSystem& b);
// Drops polynomials that are linear combinations of sparser ones kept
// before them (fewest terms first, ties in grlex order). Same span.
ConstraintSystem independent_constraints(const ConstraintSystem& cs);

inline constexpr std::uint64_t kDefaultEnumerationBound = 10'000'000;
// kDefaultEnumerationBound unless YBSYS_ENUM_BOUND holds a positive integer.
std::uint64_t default_enumeration_bound();

struct EnumeratedSolution {
  std::vector<std::uint64_t> coords;  // in the null-space basis
  Matrix<Fp> q;
  bool invertible = false;
};

struct EnumerationResult {
  NullSpaceBasis<Fp> basis;
  std::uint64_t points = 0;
  bool r_solves_ybe = false;
  std::vector<EnumeratedSolution> solutions;  // sorted by vec(Q)

  std::size_t invertible_count() const;
};

// Every Q over F_p solving the full system for this R, by visiting all p^k
// coordinate vectors of the kernel. Throws BoundExceeded when p^k > bound.
// The result does not depend on `workers` (0 = hardware concurrency).
EnumerationResult enumerate_fp(const Matrix<Fp>& r, std::size_t d, std::uint64_t bound = kDefaultEnumerationBound,
                               unsigned workers = 0);

// Q12 Q13 Q23 == Q23 Q13 Q12 over F_p for a d^2 x d^2 matrix given row-major.
bool satisfies_ybe_mod_p(const std::vector<std::uint64_t>& q, std::size_t d, std::uint64_t p);

struct FamilyReport {
  std::string entry;
  std::size_t samples = 0;
  std::size_t samples_passed = 0;
  std::optional<ParameterBinding> failing_binding;
  std::string failure;
  bool symbolic_attempted = false;
  bool symbolic_passed = false;
  std::size_t symbolic_instances = 0;

  bool passed() const { return samples_passed == samples && (!symbolic_attempted || symbolic_passed); }
};

// Checks `samples` seeded instantiations exactly (residuals zero, R and Q
// invertible), then every symbolic instance over Q(params).
FamilyReport verify_family(const CatalogEntry& entry, std::size_t samples, std::uint64_t seed);

// Seed for sample i of a run seeded with `seed`.
std::uint64_t sample_seed(std::uint64_t seed, std::size_t i);

}  // namespace ybsys
