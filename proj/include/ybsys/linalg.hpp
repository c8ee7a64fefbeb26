#pragma once

#include "ybsys/matrix.hpp"
#include "ybsys/rational_function.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

namespace ybsys {

// Maps a field T onto the integral domain used by fraction-free elimination.
// For Q and F_p the domain is the field itself.
template <class T>
struct Elimination {
  using Domain = T;

  static Domain one(const typename T::Context& ctx) { return T::one(ctx); }
  static Domain zero(const typename T::Context& ctx) { return T::zero(ctx); }
  static std::vector<Domain> clear_row(std::span<const T> row, T& multiplier) {
    multiplier = T::one(row.front().context());
    return {row.begin(), row.end()};
  }
  static Domain exact_div(const Domain& a, const Domain& b) { return a / b; }
  static T quotient(const Domain& num, const Domain& den) { return num / den; }
  static T lift(const Domain& x) { return x; }
  static std::size_t cost(const Domain&) { return 0; }
};

// Q(t...) is eliminated over Q[t...]: each row is multiplied by the product of
// its distinct denominators.
template <>
struct Elimination<RationalFunction> {
  using Domain = Polynomial;

  static Domain one(const FunctionField&) { return Polynomial(1); }
  static Domain zero(const FunctionField&) { return Polynomial(); }
  static std::vector<Domain> clear_row(std::span<const RationalFunction> row, RationalFunction& multiplier) {
    std::vector<Polynomial> dens;
    Polynomial m(1);
    for (const auto& x : row) {
      if (x.is_polynomial()) continue;
      if (std::find(dens.begin(), dens.end(), x.denominator()) != dens.end()) continue;
      dens.push_back(x.denominator());
      m *= x.denominator();
    }
    std::vector<Polynomial> out;
    out.reserve(row.size());
    for (const auto& x : row) {
      out.push_back(x.is_polynomial() ? x.numerator() * m : x.numerator() * m.exact_div(x.denominator()));
    }
    multiplier = RationalFunction(m);
    return out;
  }
  static Domain exact_div(const Domain& a, const Domain& b) { return a.exact_div(b); }
  static RationalFunction quotient(const Domain& num, const Domain& den) { return RationalFunction(num, den); }
  static RationalFunction lift(const Domain& x) { return RationalFunction(x); }
  static std::size_t cost(const Domain& x) { return x.total_degree() * 4096 + x.term_count(); }
};

// Fraction-free Gauss-Jordan elimination. After run(), the first rank() rows
// hold the reduced form scaled by pivot(): pivot columns are pivot() on the
// diagonal and zero elsewhere. Every intermediate entry is a minor of the
// input, so all divisions are exact.
template <class T>
class FractionFreeElimination {
 public:
  using Traits = Elimination<T>;
  using Domain = typename Traits::Domain;

  FractionFreeElimination(const Matrix<T>& a, std::size_t extra_identity_cols = 0)
      : ctx_(a.context()), cols_(a.cols() + extra_identity_cols), pivot_(Traits::one(a.context())) {
    rows_.reserve(a.rows());
    multipliers_.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      T m = T::one(ctx_);
      auto row = Traits::clear_row(a.entries().subspan(i * a.cols(), a.cols()), m);
      row.reserve(cols_);
      for (std::size_t j = 0; j < extra_identity_cols; ++j) {
        row.push_back(j == i ? Traits::one(ctx_) : Traits::zero(ctx_));
      }
      rows_.push_back(std::move(row));
      original_multipliers_.push_back(m);
      multipliers_.push_back(std::move(m));
    }
  }

  // Eliminates using pivots drawn from the first `pivot_limit` columns.
  void run(std::size_t pivot_limit) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_limit && r < rows_.size(); ++c) {
      std::size_t best = rows_.size();
      std::size_t best_cost = std::numeric_limits<std::size_t>::max();
      for (std::size_t i = r; i < rows_.size(); ++i) {
        if (rows_[i][c].is_zero()) continue;
        const std::size_t cost = Traits::cost(rows_[i][c]);
        if (cost < best_cost) {
          best = i;
          best_cost = cost;
        }
      }
      if (best == rows_.size()) continue;
      if (best != r) {
        std::swap(rows_[best], rows_[r]);
        std::swap(multipliers_[best], multipliers_[r]);
        sign_ = -sign_;
      }
      const Domain piv = rows_[r][c];
      const bool trivial_prev = pivot_ == Traits::one(ctx_);
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i == r) continue;
        auto& row = rows_[i];
        const Domain factor = row[c];
        const bool has_factor = !factor.is_zero();
        for (std::size_t j = 0; j < cols_; ++j) {
          Domain v = row[j].is_zero() ? row[j] : Domain(piv * row[j]);
          if (has_factor && !rows_[r][j].is_zero()) v -= factor * rows_[r][j];
          if (!trivial_prev && !v.is_zero()) v = Traits::exact_div(v, pivot_);
          row[j] = std::move(v);
        }
      }
      pivot_ = piv;
      pivots_.push_back(c);
      ++r;
    }
  }

  std::size_t rank() const { return pivots_.size(); }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }
  const Domain& pivot() const { return pivot_; }
  const Domain& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const T& multiplier(std::size_t i) const { return multipliers_[i]; }
  // Multiplier applied to input row i (input order, unaffected by swaps).
  const T& original_multiplier(std::size_t i) const { return original_multipliers_[i]; }
  int sign() const { return sign_; }
  std::size_t rows() const { return rows_.size(); }

 private:
  typename T::Context ctx_;
  std::size_t cols_;
  std::vector<std::vector<Domain>> rows_;
  std::vector<T> multipliers_;
  std::vector<T> original_multipliers_;
  std::vector<std::size_t> pivots_;
  Domain pivot_;
  int sign_ = 1;
};

template <class T>
struct RowEchelon {
  Matrix<T> reduced;  // reduced row echelon form; rows past rank() are zero
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

template <class T>
RowEchelon<T> rref(const Matrix<T>& a) {
  using Traits = Elimination<T>;
  FractionFreeElimination<T> ff(a);
  ff.run(a.cols());
  Matrix<T> out(a.rows(), a.cols(), a.context());
  for (std::size_t i = 0; i < ff.rank(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& x = ff.at(i, j);
      if (!x.is_zero()) out(i, j) = Traits::quotient(x, ff.pivot());
    }
  }
  return {std::move(out), ff.pivot_columns()};
}

template <class T>
std::size_t rank(const Matrix<T>& a) {
  FractionFreeElimination<T> ff(a);
  ff.run(a.cols());
  return ff.rank();
}

// Kernel basis in reduced echelon gauge: one vector per free column, in
// increasing column order, with 1 at its free column and 0 at the others.
template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& a) {
  const RowEchelon<T> e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(a.cols(), T::zero(a.context()));
    v[f] = T::one(a.context());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
T determinant(const Matrix<T>& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  using Traits = Elimination<T>;
  FractionFreeElimination<T> ff(a);
  ff.run(a.cols());
  if (ff.rank() < a.rows()) return T::zero(a.context());
  T det = Traits::lift(ff.pivot());
  if (ff.sign() < 0) det = -det;
  for (std::size_t i = 0; i < ff.rows(); ++i) det /= ff.multiplier(i);
  return det;
}

template <class T>
bool is_invertible(const Matrix<T>& a) {
  return a.is_square() && rank(a) == a.rows();
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  using Traits = Elimination<T>;
  const std::size_t n = a.rows();
  FractionFreeElimination<T> ff(a, n);
  ff.run(n);
  if (ff.rank() < n) throw SingularMatrix();
  // Rows of A were scaled by m_i, so A^{-1} = (D A)^{-1} D.
  Matrix<T> out(n, n, a.context());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& x = ff.at(i, n + j);
      if (x.is_zero()) continue;
      out(i, j) = Traits::quotient(x, ff.pivot());
      if (!ff.original_multiplier(j).is_one()) out(i, j) *= ff.original_multiplier(j);
    }
  }
  return out;
}

}  // namespace ybsys
