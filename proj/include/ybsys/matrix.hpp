#pragma once

#include "ybsys/errors.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace ybsys {

// Dense row-major matrix over a ring or field T. Every entry shares the
// matrix's context (field descriptor).
template <class T>
class Matrix {
 public:
  using value_type = T;
  using Context = typename T::Context;

  Matrix(std::size_t rows, std::size_t cols, Context ctx = {})
      : rows_(rows), cols_(cols), ctx_(ctx), data_(rows * cols, T::zero(ctx)) {
    if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
  }

  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries, Context ctx = {})
      : rows_(rows), cols_(cols), ctx_(ctx), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
    if (data_.size() != rows * cols) {
      throw DimensionMismatch("expected " + std::to_string(rows * cols) + " entries, got " +
                              std::to_string(data_.size()));
    }
  }

  static Matrix identity(std::size_t n, Context ctx = {}) {
    Matrix m(n, n, ctx);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T::one(ctx);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const Context& context() const { return ctx_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> entries() const { return data_; }
  std::span<T> entries() { return data_; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  T trace() const {
    if (!is_square()) throw DimensionMismatch("trace of a non-square matrix");
    T acc = T::zero(ctx_);
    for (std::size_t i = 0; i < rows_; ++i) acc += (*this)(i, i);
    return acc;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, ctx_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<std::invoke_result_t<F, const T&>> {
    using U = std::invoke_result_t<F, const T&>;
    std::vector<U> out;
    out.reserve(data_.size());
    for (const auto& x : data_) out.push_back(f(x));
    const auto ctx = out.front().context();
    return Matrix<U>(rows_, cols_, std::move(out), ctx);
  }

  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }

  Matrix& operator+=(const Matrix& rhs) {
    check_same_shape(rhs, "+");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
  }

  Matrix& operator-=(const Matrix& rhs) {
    check_same_shape(rhs, "-");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
  }

  Matrix& operator*=(const T& scalar) {
    for (auto& x : data_) x *= scalar;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionMismatch("cannot multiply " + a.shape() + " by " + b.shape());
    }
    Matrix c(a.rows_, b.cols_, a.ctx_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (!bkj.is_zero()) c(i, j) += aik * bkj;
        }
      }
    }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  // One row per line, entries separated by two spaces.
  std::string to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j != 0) out << "  ";
        out << (*this)(i, j).to_string();
      }
      out << '\n';
    }
    return out.str();
  }

 private:
  void check_same_shape(const Matrix& rhs, const char* op) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
      throw DimensionMismatch(std::string("shape mismatch in '") + op + "': " + shape() + " vs " + rhs.shape());
    }
  }

  std::size_t rows_;
  std::size_t cols_;
  Context ctx_;
  std::vector<T> data_;
};

// Row-major vec: entry (i, j) lands at i * cols + j.
template <class T>
std::vector<T> vec(const Matrix<T>& m) {
  return {m.entries().begin(), m.entries().end()};
}

template <class T>
Matrix<T> unvec(const std::vector<T>& v, std::size_t rows, std::size_t cols, const typename T::Context& ctx) {
  return Matrix<T>(rows, cols, v, ctx);
}

}  // namespace ybsys
