#include "ybsys/symmetry.hpp"

#include <numeric>

namespace ybsys {

namespace {

// S (x) S for S = restricted_s(shape, s) is a monomial matrix: it sends
// basis vector j to s^exponent[j] times basis vector image[j].
struct MonomialAction {
  std::array<std::size_t, 4> image{};
  std::array<int, 4> exponent{};
};

MonomialAction monomial_action(RestrictedShape shape, bool flip) {
  // Single factor: diag sends e0->e0, e1->s e1; antidiag sends e0->s e1, e1->e0.
  const std::array<std::size_t, 2> img = shape == RestrictedShape::Diagonal ? std::array<std::size_t, 2>{0, 1}
                                                                             : std::array<std::size_t, 2>{1, 0};
  const std::array<int, 2> ex = shape == RestrictedShape::Diagonal ? std::array<int, 2>{0, 1}
                                                                    : std::array<int, 2>{1, 0};
  MonomialAction out;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      std::size_t a = img[i];
      std::size_t b = img[j];
      if (flip) std::swap(a, b);
      out.image[i * 2 + j] = a * 2 + b;
      out.exponent[i * 2 + j] = ex[i] + ex[j];
    }
  }
  return out;
}

// Equations scale * s^k = value collected from one matrix.
struct ScaledEquations {
  bool consistent = true;
  // s^m = r, m may be negative or zero
  std::vector<std::pair<int, Rational>> powers;
  // scale = base * s^(-base_exponent) from the first nonzero entry
  std::optional<std::pair<int, Rational>> base;
};

ScaledEquations match_matrix(const Matrix<Rational>& a, const Matrix<Rational>& b, const MonomialAction& act) {
  ScaledEquations eq;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const Rational& source = a(i, j);
      const Rational& target = b(act.image[i], act.image[j]);
      if (source.is_zero() || target.is_zero()) {
        if (!source.is_zero() || !target.is_zero()) eq.consistent = false;
        continue;
      }
      const int k = act.exponent[i] - act.exponent[j];
      const Rational ratio = target / source;
      if (!eq.base) {
        eq.base = {k, ratio};
      } else {
        eq.powers.emplace_back(k - eq.base->first, ratio / eq.base->second);
      }
    }
  }
  return eq;
}

struct Binomial {
  bool consistent = true;
  unsigned degree = 0;  // 0: s unconstrained
  Rational value = 1;
};

// Reduces {s^m_i = r_i} to a single s^g = z with g = gcd(m_i), or finds it
// inconsistent, by the Euclidean algorithm on exponents (s is nonzero).
Binomial reduce_binomials(const std::vector<std::pair<int, Rational>>& powers) {
  Binomial out;
  for (auto [m, r] : powers) {
    if (m < 0) {
      m = -m;
      r = r.inverse();
    }
    if (m == 0) {
      if (!r.is_one()) out.consistent = false;
      continue;
    }
    unsigned a = out.degree;
    Rational x = out.value;
    unsigned b = static_cast<unsigned>(m);
    Rational y = r;
    // invariant: s^a = x and s^b = y
    while (b != 0) {
      if (a == 0) {
        std::swap(a, b);
        std::swap(x, y);
        continue;
      }
      const unsigned q = a / b;
      const Rational reduced = x / y.pow(q);
      a -= q * b;
      x = reduced;
      std::swap(a, b);
      std::swap(x, y);
    }
    // now s^0 = y must hold
    if (!y.is_one()) out.consistent = false;
    out.degree = a;
    out.value = x;
  }
  return out;
}

}  // namespace

Matrix<Rational> restricted_s(RestrictedShape shape, const Rational& s) {
  if (shape == RestrictedShape::Diagonal) return Matrix<Rational>(2, 2, {1, 0, 0, s});
  return Matrix<Rational>(2, 2, {0, 1, s, 0});
}

std::string RestrictedEquivalence::to_string() const {
  switch (outcome) {
    case Outcome::Witness:
      return "witness: " + witness->to_string();
    case Outcome::AlgebraicOnly:
      return std::string("algebraic only: ") + ybsys::to_string(shape) + " S" + (flip ? " with flip" : "") +
             " needs s^" + std::to_string(degree) + " = " + value.to_string() + ", no rational s";
    case Outcome::NoneFound:
      break;
  }
  return "none found";
}

RestrictedEquivalence restricted_equivalence(const YBPair<Rational>& a, const YBPair<Rational>& b) {
  if (a.d != 2 || b.d != 2) throw DimensionMismatch("restricted equivalence needs d = 2");
  RestrictedEquivalence result;
  bool have_algebraic = false;
  for (const bool flip : {false, true}) {
    for (const auto shape : {RestrictedShape::Diagonal, RestrictedShape::Antidiagonal}) {
      const MonomialAction act = monomial_action(shape, flip);
      const ScaledEquations qe = match_matrix(a.q, b.q, act);
      const ScaledEquations re = match_matrix(a.r, b.r, act);
      if (!qe.consistent || !re.consistent) continue;
      std::vector<std::pair<int, Rational>> powers = qe.powers;
      powers.insert(powers.end(), re.powers.begin(), re.powers.end());
      const Binomial bin = reduce_binomials(powers);
      if (!bin.consistent) continue;
      Rational s = 1;
      if (bin.degree != 0 && !rational_root(bin.value, bin.degree, s)) {
        if (!have_algebraic) {
          have_algebraic = true;
          result.outcome = RestrictedEquivalence::Outcome::AlgebraicOnly;
          result.shape = shape;
          result.flip = flip;
          result.degree = bin.degree;
          result.value = bin.value;
        }
        continue;
      }
      const auto scale = [&](const ScaledEquations& e) {
        return e.base ? e.base->second * s.pow(-e.base->first) : Rational(1);
      };
      SymmetryElement<Rational> g(restricted_s(shape, s), scale(qe), scale(re), flip);
      const YBPair<Rational> image = apply_symmetry(a, g);
      if (image.q == b.q && image.r == b.r) {
        RestrictedEquivalence found;
        found.outcome = RestrictedEquivalence::Outcome::Witness;
        found.witness = std::move(g);
        found.shape = shape;
        found.flip = flip;
        return found;
      }
    }
  }
  return result;
}

}  // namespace ybsys
