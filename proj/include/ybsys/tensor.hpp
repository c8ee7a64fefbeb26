#pragma once

#include "ybsys/matrix.hpp"

#include <string>

namespace ybsys {

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  if (!(a.context() == b.context())) throw FieldMismatch("kron of matrices over different fields");
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols(), a.context());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

// Flip on V (x) V with dim V = d: e_i (x) e_j -> e_j (x) e_i.
template <class T>
Matrix<T> permutation_matrix(std::size_t d, const typename T::Context& ctx = {}) {
  if (d == 0) throw DimensionMismatch("dimension must be positive");
  Matrix<T> p(d * d, d * d, ctx);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) p(j * d + i, i * d + j) = T::one(ctx);
  }
  return p;
}

enum class LegIndex { L12, L13, L23 };

inline std::string to_string(LegIndex legs) {
  switch (legs) {
    case LegIndex::L12:
      return "12";
    case LegIndex::L13:
      return "13";
    case LegIndex::L23:
      return "23";
  }
  return "?";
}

inline std::size_t checked_dimension(std::size_t rows, std::size_t cols, std::size_t d) {
  if (rows != d * d || cols != d * d) {
    throw DimensionMismatch("expected a " + std::to_string(d * d) + "x" + std::to_string(d * d) + " matrix, got " +
                            std::to_string(rows) + "x" + std::to_string(cols));
  }
  return d;
}

// Operator on V (x) V placed on two legs of V (x) V (x) V. Legs (1,3) are
// obtained by conjugating the (1,2) embedding with P_23 = I (x) P.
template <class T>
Matrix<T> embed(const Matrix<T>& m, LegIndex legs, std::size_t d) {
  checked_dimension(m.rows(), m.cols(), d);
  const auto& ctx = m.context();
  const Matrix<T> id = Matrix<T>::identity(d, ctx);
  switch (legs) {
    case LegIndex::L12:
      return kron(m, id);
    case LegIndex::L23:
      return kron(id, m);
    case LegIndex::L13: {
      const Matrix<T> p23 = kron(id, permutation_matrix<T>(d, ctx));
      return p23 * kron(m, id) * p23;
    }
  }
  throw std::logic_error("bad leg index");
}

// (R^{t1})[(i,k),(j,l)] = R[(j,k),(i,l)].
template <class T>
Matrix<T> partial_transpose_t1(const Matrix<T>& r, std::size_t d) {
  checked_dimension(r.rows(), r.cols(), d);
  Matrix<T> out(d * d, d * d, r.context());
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t l = 0; l < d; ++l) out(i * d + k, j * d + l) = r(j * d + k, i * d + l);
      }
    }
  }
  return out;
}

}  // namespace ybsys
