#include "ybsys/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <utility>

namespace ybsys {

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      // Strip leading zeros, then longer run is larger.
      std::size_t is = i;
      std::size_t js = j;
      while (is + 1 < ie && a[is] == '0') ++is;
      while (js + 1 < je && b[js] == '0') ++js;
      if (ie - is != je - js) return ie - is < je - js;
      const int c = a.substr(is, ie - is).compare(b.substr(js, je - js));
      if (c != 0) return c < 0;
      if (ie - i != je - j) return ie - i < je - j;
      i = ie;
      j = je;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j];
    ++i;
    ++j;
  }
  return a.size() - i < b.size() - j;
}

namespace {

unsigned degree_of(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0U);
}

}  // namespace

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = degree_of(a);
  const unsigned db = degree_of(b);
  if (da != db) return da < db;
  return a < b;
}

const Polynomial::VarList& Polynomial::empty_vars() {
  static const VarList empty = std::make_shared<const std::vector<std::string>>();
  return empty;
}

Polynomial::Polynomial() : vars_(empty_vars()) {}

Polynomial::Polynomial(const Rational& constant) : vars_(empty_vars()) {
  if (!constant.is_zero()) terms_.emplace(Exponents{}, constant);
}

Polynomial::Polynomial(VarList vars, TermMap terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
  canonicalize();
}

Polynomial Polynomial::variable(std::string_view name, PolynomialRing) {
  if (name.empty()) throw ParseError("empty variable name");
  TermMap terms;
  terms.emplace(Exponents{1}, Rational(1));
  return Polynomial(std::make_shared<const std::vector<std::string>>(1, std::string(name)), std::move(terms));
}

Polynomial Polynomial::monomial(const Rational& coefficient, const std::vector<std::string>& vars,
                                const Exponents& exponents) {
  if (vars.size() != exponents.size()) throw DimensionMismatch("monomial exponent length");
  TermMap terms;
  terms.emplace(exponents, coefficient);
  return from_terms(vars, terms);
}

Polynomial Polynomial::from_terms(std::vector<std::string> vars, const TermMap& terms) {
  std::vector<std::size_t> order(vars.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return natural_less(vars[x], vars[y]); });
  std::vector<std::string> sorted;
  std::vector<std::size_t> slot(vars.size());
  for (std::size_t k : order) {
    if (!sorted.empty() && sorted.back() == vars[k]) {
      slot[k] = sorted.size() - 1;
    } else {
      sorted.push_back(vars[k]);
      slot[k] = sorted.size() - 1;
    }
  }
  TermMap out;
  for (const auto& [exps, c] : terms) {
    if (exps.size() != vars.size()) throw DimensionMismatch("term exponent length");
    if (c.is_zero()) continue;
    Exponents e(sorted.size(), 0);
    for (std::size_t k = 0; k < exps.size(); ++k) e[slot[k]] += exps[k];
    auto [it, inserted] = out.emplace(std::move(e), c);
    if (!inserted) it->second += c;
  }
  return Polynomial(std::make_shared<const std::vector<std::string>>(std::move(sorted)), std::move(out));
}

void Polynomial::canonicalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  const std::size_t n = vars_->size();
  if (n == 0) return;
  std::vector<bool> used(n, false);
  for (const auto& [exps, c] : terms_) {
    for (std::size_t i = 0; i < n; ++i) used[i] = used[i] || exps[i] != 0;
  }
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i]) kept.push_back((*vars_)[i]);
  }
  TermMap compact;
  for (const auto& [exps, c] : terms_) {
    Exponents e;
    e.reserve(kept.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) e.push_back(exps[i]);
    }
    compact.emplace(std::move(e), c);
  }
  vars_ = kept.empty() ? empty_vars() : std::make_shared<const std::vector<std::string>>(std::move(kept));
  terms_ = std::move(compact);
}

Polynomial::VarList Polynomial::merge(const VarList& a, const VarList& b) {
  if (a == b || *a == *b) return a;
  if (b->empty()) return a;
  if (a->empty()) return b;
  std::vector<std::string> out;
  out.reserve(a->size() + b->size());
  std::merge(a->begin(), a->end(), b->begin(), b->end(), std::back_inserter(out),
             [](const std::string& x, const std::string& y) { return natural_less(x, y); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return std::make_shared<const std::vector<std::string>>(std::move(out));
}

Polynomial::TermMap Polynomial::aligned_terms(const std::vector<std::string>& target) const {
  if (*vars_ == target) return terms_;
  std::vector<std::size_t> slot(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    const auto it = std::lower_bound(target.begin(), target.end(), (*vars_)[i],
                                     [](const std::string& x, const std::string& y) { return natural_less(x, y); });
    slot[i] = static_cast<std::size_t>(it - target.begin());
  }
  TermMap out;
  for (const auto& [exps, c] : terms_) {
    Exponents e(target.size(), 0);
    for (std::size_t i = 0; i < exps.size(); ++i) e[slot[i]] = exps[i];
    out.emplace(std::move(e), c);
  }
  return out;
}

bool Polynomial::is_one() const {
  return vars_->empty() && terms_.size() == 1 && terms_.begin()->second.is_one();
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant: " + to_string());
  return terms_.empty() ? Rational() : terms_.begin()->second;
}

unsigned Polynomial::total_degree() const {
  return terms_.empty() ? 0 : degree_of(terms_.rbegin()->first);
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return degree_of(terms_.begin()->first) == degree_of(terms_.rbegin()->first);
}

const Exponents& Polynomial::leading_exponents() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

Rational Polynomial::content() const {
  if (terms_.empty()) return Rational(1);
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& [exps, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.value().get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.value().get_den_mpz_t());
  }
  return Rational(num_gcd, den_lcm);
}

Polynomial Polynomial::primitive_part() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  if (leading_coefficient().sign() < 0) c = -c;
  return scaled(c.inverse());
}

Polynomial Polynomial::monomial_content(const std::vector<std::string>* only) const {
  if (terms_.empty() || vars_->empty()) return Polynomial(1);
  Exponents lo = terms_.begin()->first;
  for (const auto& [exps, c] : terms_) {
    for (std::size_t i = 0; i < lo.size(); ++i) lo[i] = std::min(lo[i], exps[i]);
  }
  if (only != nullptr) {
    for (std::size_t i = 0; i < lo.size(); ++i) {
      if (std::find(only->begin(), only->end(), (*vars_)[i]) == only->end()) lo[i] = 0;
    }
  }
  TermMap t;
  t.emplace(std::move(lo), Rational(1));
  return Polynomial(vars_, std::move(t));
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial acc(1);
  Polynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1U) acc *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return acc;
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  if (factor.is_zero()) return Polynomial();
  TermMap t = terms_;
  for (auto& [exps, c] : t) c *= factor;
  return Polynomial(vars_, std::move(t));
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  if (is_zero()) return Polynomial();
  if (divisor.is_constant()) return scaled(divisor.constant_value().inverse());
  const VarList vars = merge(vars_, divisor.vars_);
  TermMap rem = aligned_terms(*vars);
  const TermMap div = divisor.aligned_terms(*vars);
  const auto& [lead_e, lead_c] = *div.rbegin();
  const Rational lead_inv = lead_c.inverse();
  TermMap quot;
  while (!rem.empty()) {
    const auto& [re, rc] = *rem.rbegin();
    Exponents qe(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
      if (re[i] < lead_e[i]) return std::nullopt;
      qe[i] = re[i] - lead_e[i];
    }
    const Rational qc = rc * lead_inv;
    for (const auto& [de, dc] : div) {
      Exponents e(de.size());
      for (std::size_t i = 0; i < de.size(); ++i) e[i] = de[i] + qe[i];
      auto it = rem.find(e);
      if (it == rem.end()) {
        rem.emplace(std::move(e), -(qc * dc));
      } else {
        it->second -= qc * dc;
        if (it->second.is_zero()) rem.erase(it);
      }
    }
    quot.emplace(std::move(qe), qc);
  }
  return Polynomial(vars, std::move(quot));
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
  auto q = divide_exact(divisor);
  if (!q) throw std::domain_error("inexact polynomial division: (" + to_string() + ") / (" + divisor.to_string() + ")");
  return std::move(*q);
}

Rational Polynomial::substitute(const std::map<std::string, Rational>& bindings) const {
  return evaluate<Rational>(
      [&](const std::string& name) {
        const auto it = bindings.find(name);
        if (it == bindings.end()) throw UnboundVariable(name);
        return it->second;
      },
      RationalField{});
}

Polynomial Polynomial::operator-() const {
  TermMap t = terms_;
  for (auto& [exps, c] : t) c = -c;
  return Polynomial(vars_, std::move(t));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.is_zero()) return *this;
  const VarList vars = merge(vars_, rhs.vars_);
  if (vars != vars_) {
    terms_ = aligned_terms(*vars);
    vars_ = vars;
  }
  const TermMap other = rhs.aligned_terms(*vars_);
  for (const auto& [exps, c] : other) {
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) it->second += c;
  }
  canonicalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  if (a.is_constant()) return b.scaled(a.constant_value());
  if (b.is_constant()) return a.scaled(b.constant_value());
  const Polynomial::VarList vars = Polynomial::merge(a.vars_, b.vars_);
  const Polynomial::TermMap ta = a.aligned_terms(*vars);
  const Polynomial::TermMap tb = b.aligned_terms(*vars);
  Polynomial::TermMap out;
  Exponents e(vars->size());
  for (const auto& [ea, ca] : ta) {
    for (const auto& [eb, cb] : tb) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto it = out.find(e);
      if (it == out.end()) {
        out.emplace(e, ca * cb);
      } else {
        it->second += ca * cb;
      }
    }
  }
  return Polynomial(vars, std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

bool operator==(const Polynomial& a, const Polynomial& b) {
  return (a.vars_ == b.vars_ || *a.vars_ == *b.vars_) && a.terms_ == b.terms_;
}

int grlex_compare(const Polynomial& a, const Polynomial& b) {
  const Polynomial::VarList vars = Polynomial::merge(a.vars_, b.vars_);
  const Polynomial::TermMap ta = a.aligned_terms(*vars);
  const Polynomial::TermMap tb = b.aligned_terms(*vars);
  auto ia = ta.rbegin();
  auto ib = tb.rbegin();
  const GrlexLess less;
  for (; ia != ta.rend() && ib != tb.rend(); ++ia, ++ib) {
    if (less(ia->first, ib->first)) return -1;
    if (less(ib->first, ia->first)) return 1;
    if (ia->second < ib->second) return -1;
    if (ib->second < ia->second) return 1;
  }
  if (ia == ta.rend() && ib == tb.rend()) return 0;
  return ia == ta.rend() ? -1 : 1;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exps, c] = *it;
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool has_vars = std::any_of(exps.begin(), exps.end(), [](std::uint32_t e) { return e != 0; });
    bool wrote = false;
    if (!mag.is_one() || !has_vars) {
      out << mag.to_string();
      wrote = true;
    }
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (wrote) out << '*';
      out << (*vars_)[i];
      if (exps[i] > 1) out << '^' << exps[i];
      wrote = true;
    }
  }
  return out.str();
}

}  // namespace ybsys
