#pragma once

#include "ybsys/linalg.hpp"
#include "ybsys/tensor.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ybsys {

// A candidate solution (R, Q) of the Yang-Baxter system on V (x) V, dim V = d.
template <class T>
struct YBPair {
  Matrix<T> r;
  Matrix<T> q;
  std::size_t d = 2;

  YBPair(Matrix<T> r_, Matrix<T> q_, std::size_t d_ = 2) : r(std::move(r_)), q(std::move(q_)), d(d_) {
    checked_dimension(r.rows(), r.cols(), d);
    checked_dimension(q.rows(), q.cols(), d);
    if (!(r.context() == q.context())) throw FieldMismatch("R and Q over different fields");
  }
};

// The three leg embeddings of one operator.
template <class T>
struct Legs {
  Matrix<T> m12;
  Matrix<T> m13;
  Matrix<T> m23;

  Legs(const Matrix<T>& m, std::size_t d)
      : m12(embed(m, LegIndex::L12, d)), m13(embed(m, LegIndex::L13, d)), m23(embed(m, LegIndex::L23, d)) {}
};

// R12 R13 R23 - R23 R13 R12.
template <class T>
Matrix<T> ybe_residual(const Matrix<T>& r, std::size_t d) {
  const Legs<T> l(r, d);
  return l.m12 * l.m13 * l.m23 - l.m23 * l.m13 * l.m12;
}

enum class SystemEquation { QQQ, RRR, QRR, RRQ };

inline const char* equation_label(SystemEquation e) {
  switch (e) {
    case SystemEquation::QQQ:
      return "Q12 Q13 Q23 = Q23 Q13 Q12";
    case SystemEquation::RRR:
      return "R12 R13 R23 = R23 R13 R12";
    case SystemEquation::QRR:
      return "Q12 R13 R23 = R23 R13 Q12";
    case SystemEquation::RRQ:
      return "R12 R13 Q23 = Q23 R13 R12";
  }
  return "?";
}

inline constexpr std::array<SystemEquation, 4> kSystemEquations = {SystemEquation::QQQ, SystemEquation::RRR,
                                                                   SystemEquation::QRR, SystemEquation::RRQ};

template <class T>
struct SystemResiduals {
  Matrix<T> qqq;  // YBE for Q
  Matrix<T> rrr;  // YBE for R
  Matrix<T> qrr;  // Q12 R13 R23 - R23 R13 Q12
  Matrix<T> rrq;  // R12 R13 Q23 - Q23 R13 R12

  const Matrix<T>& get(SystemEquation e) const {
    switch (e) {
      case SystemEquation::QQQ:
        return qqq;
      case SystemEquation::RRR:
        return rrr;
      case SystemEquation::QRR:
        return qrr;
      case SystemEquation::RRQ:
        return rrq;
    }
    return qqq;
  }

  bool all_zero() const { return qqq.is_zero() && rrr.is_zero() && qrr.is_zero() && rrq.is_zero(); }
};

template <class T>
SystemResiduals<T> system_residuals(const YBPair<T>& pair) {
  const Legs<T> q(pair.q, pair.d);
  const Legs<T> r(pair.r, pair.d);
  return {q.m12 * q.m13 * q.m23 - q.m23 * q.m13 * q.m12, r.m12 * r.m13 * r.m23 - r.m23 * r.m13 * r.m12,
          q.m12 * r.m13 * r.m23 - r.m23 * r.m13 * q.m12, r.m12 * r.m13 * q.m23 - q.m23 * r.m13 * r.m12};
}

struct SolutionReport {
  bool solves = false;
  bool invertible_r = false;
  bool invertible_q = false;
  std::array<bool, 4> equation_holds{};  // indexed like kSystemEquations
};

template <class T>
SolutionReport is_solution(const YBPair<T>& pair) {
  const SystemResiduals<T> res = system_residuals(pair);
  SolutionReport report;
  for (std::size_t k = 0; k < kSystemEquations.size(); ++k) {
    report.equation_holds[k] = res.get(kSystemEquations[k]).is_zero();
  }
  report.solves = res.all_zero();
  report.invertible_r = is_invertible(pair.r);
  report.invertible_q = is_invertible(pair.q);
  return report;
}

// First nonzero entry of a residual, row-major.
template <class T>
std::optional<std::pair<std::size_t, std::size_t>> first_nonzero(const Matrix<T>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

// Qbar = P R P Q R^{-1}. Throws SingularMatrix when R is singular.
template <class T>
Matrix<T> qbar(const YBPair<T>& pair) {
  const Matrix<T> p = permutation_matrix<T>(pair.d, pair.r.context());
  return p * pair.r * p * pair.q * inverse(pair.r);
}

// Residuals of the extended system, in order: YBE(Q), YBE(Qbar),
// Qbar12 R13 R23 - R23 R13 Qbar12, R12 R13 Q23 - Q23 R13 R12.
template <class T>
std::vector<Matrix<T>> extended_residuals(const Matrix<T>& q, const Matrix<T>& q_bar, const Matrix<T>& r,
                                          std::size_t d) {
  checked_dimension(q.rows(), q.cols(), d);
  checked_dimension(q_bar.rows(), q_bar.cols(), d);
  checked_dimension(r.rows(), r.cols(), d);
  const Legs<T> lq(q, d);
  const Legs<T> lb(q_bar, d);
  const Legs<T> lr(r, d);
  std::vector<Matrix<T>> out;
  out.push_back(lq.m12 * lq.m13 * lq.m23 - lq.m23 * lq.m13 * lq.m12);
  out.push_back(lb.m12 * lb.m13 * lb.m23 - lb.m23 * lb.m13 * lb.m12);
  out.push_back(lb.m12 * lr.m13 * lr.m23 - lr.m23 * lr.m13 * lb.m12);
  out.push_back(lr.m12 * lr.m13 * lq.m23 - lq.m23 * lr.m13 * lr.m12);
  return out;
}

}  // namespace ybsys
