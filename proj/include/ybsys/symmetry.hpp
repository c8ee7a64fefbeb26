#pragma once

#include "ybsys/q_solver.hpp"
#include "ybsys/yb_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ybsys {

// Q -> lambda (S (x) S) Q (S (x) S)^{-1}, R -> kappa (S (x) S) R (S (x) S)^{-1},
// then both conjugated by P when flip is set.
template <class T>
struct SymmetryElement {
  Matrix<T> s;
  T lambda;
  T kappa;
  bool flip = false;

  SymmetryElement(Matrix<T> s_, T lambda_, T kappa_, bool flip_ = false)
      : s(std::move(s_)), lambda(std::move(lambda_)), kappa(std::move(kappa_)), flip(flip_) {
    if (lambda.is_zero() || kappa.is_zero()) throw std::invalid_argument("lambda and kappa must be nonzero");
  }

  static SymmetryElement identity(std::size_t d = 2, const typename T::Context& ctx = {}) {
    return {Matrix<T>::identity(d, ctx), T::one(ctx), T::one(ctx), false};
  }

  std::string to_string() const {
    return "S = " + s.to_string() + ", lambda = " + lambda.to_string() + ", kappa = " + kappa.to_string() +
           ", flip = " + (flip ? "true" : "false");
  }
};

// Throws SingularMatrix for singular S.
template <class T>
YBPair<T> apply_symmetry(const YBPair<T>& pair, const SymmetryElement<T>& g) {
  if (g.s.rows() != pair.d || g.s.cols() != pair.d) throw DimensionMismatch("S must be d x d");
  const Matrix<T> ss = kron(g.s, g.s);
  const Matrix<T> ss_inv = inverse(ss);
  Matrix<T> q = ss * pair.q * ss_inv * g.lambda;
  Matrix<T> r = ss * pair.r * ss_inv * g.kappa;
  if (g.flip) {
    const Matrix<T> p = permutation_matrix<T>(pair.d, pair.r.context());
    q = p * q * p;
    r = p * r * p;
  }
  return YBPair<T>(std::move(r), std::move(q), pair.d);
}

// apply(apply(pair, first), second) == apply(pair, compose(first, second)).
// P commutes with S (x) S, so flips simply add up.
template <class T>
SymmetryElement<T> compose(const SymmetryElement<T>& first, const SymmetryElement<T>& second) {
  return {second.s * first.s, first.lambda * second.lambda, first.kappa * second.kappa, first.flip != second.flip};
}

// tr(R) tr(R^-1), tr(Q) tr(Q^-1), tr(RQ) tr(Q^-1 R^-1), tr(RQ^-1) tr(Q R^-1),
// dim ker of the linear equations for R. Unequal fingerprints prove two
// pairs inequivalent; equal ones prove nothing.
template <class T>
struct Fingerprint {
  std::vector<T> traces;
  std::size_t kernel_dimension = 0;

  bool operator==(const Fingerprint& other) const {
    return traces == other.traces && kernel_dimension == other.kernel_dimension;
  }

  std::string to_string() const {
    std::string out = "(";
    for (const auto& t : traces) out += t.to_string() + ", ";
    return out + std::to_string(kernel_dimension) + ")";
  }
};

// Throws SingularMatrix when R or Q is singular.
template <class T>
Fingerprint<T> fingerprint(const YBPair<T>& pair) {
  const Matrix<T> r_inv = inverse(pair.r);
  const Matrix<T> q_inv = inverse(pair.q);
  Fingerprint<T> f;
  f.traces.push_back(pair.r.trace() * r_inv.trace());
  f.traces.push_back(pair.q.trace() * q_inv.trace());
  f.traces.push_back((pair.r * pair.q).trace() * (q_inv * r_inv).trace());
  f.traces.push_back((pair.r * q_inv).trace() * (pair.q * r_inv).trace());
  f.kernel_dimension = null_space(linear_operator_for_Q(pair.r, pair.d)).dimension();
  return f;
}

enum class RestrictedShape { Diagonal, Antidiagonal };

inline const char* to_string(RestrictedShape shape) {
  return shape == RestrictedShape::Diagonal ? "diagonal" : "antidiagonal";
}

// diag(1, s) or [[0, 1], [s, 0]].
Matrix<Rational> restricted_s(RestrictedShape shape, const Rational& s);

struct RestrictedEquivalence {
  enum class Outcome {
    Witness,        // a rational witness maps pair A onto pair B
    NoneFound,      // no (anti)diagonal S over C, any lambda, kappa, flip
    AlgebraicOnly,  // only s with s^degree = value, none of them rational
  };

  Outcome outcome = Outcome::NoneFound;
  std::optional<SymmetryElement<Rational>> witness;
  // Set for AlgebraicOnly: the branch and the binomial equation on s.
  RestrictedShape shape = RestrictedShape::Diagonal;
  bool flip = false;
  unsigned degree = 0;
  Rational value;

  std::string to_string() const;
};

// Decides whether some S in {diag(1,s), [[0,1],[s,0]]}, s != 0, together with
// nonzero lambda, kappa and an optional flip, maps pair A exactly onto pair B.
// Requires d = 2.
RestrictedEquivalence restricted_equivalence(const YBPair<Rational>& a, const YBPair<Rational>& b);

}  // namespace ybsys
