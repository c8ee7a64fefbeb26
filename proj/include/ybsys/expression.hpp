#pragma once

#include "ybsys/errors.hpp"
#include "ybsys/rational.hpp"

#include <cctype>
#include <map>
#include <string>
#include <string_view>

namespace ybsys {

// Recursive-descent parser for matrix-entry expressions:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ['-'] atom ['^' uint]      ("-a^2" is -(a^2))
//   atom   := int | ident | '(' expr ')'
//
// Identifiers resolve through `bindings` first, then T::variable, which
// throws ParseError for fields without indeterminates.
template <class T>
class ExpressionParser {
 public:
  using Context = typename T::Context;

  ExpressionParser(std::string_view text, Context ctx, const std::map<std::string, T>* bindings)
      : text_(text), ctx_(ctx), bindings_(bindings) {}

  T parse() {
    T value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  T expr() {
    T acc = term();
    for (;;) {
      skip_space();
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  T term() {
    T acc = factor();
    for (;;) {
      skip_space();
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        const T divisor = factor();
        if (divisor.is_zero()) throw DivisionByZero("division by zero in '" + std::string(text_) + "'");
        acc /= divisor;
      } else {
        return acc;
      }
    }
  }

  T factor() {
    skip_space();
    const bool negate = accept('-');
    T value = atom();
    skip_space();
    if (accept('^')) {
      skip_space();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected a nonnegative integer exponent");
      }
      unsigned long exponent = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        exponent = exponent * 10 + static_cast<unsigned long>(text_[pos_++] - '0');
        if (exponent > 10000) fail("exponent too large");
      }
      value = value.pow(static_cast<unsigned>(exponent));
    }
    return negate ? -value : value;
  }

  T atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return T::from_integer(mpz_class(std::string(text_.substr(start, pos_ - start))), ctx_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      if (bindings_ != nullptr) {
        const auto it = bindings_->find(name);
        if (it != bindings_->end()) return it->second;
      }
      return T::variable(name, ctx_);
    }
    if (accept('(')) {
      T inner = expr();
      skip_space();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("syntax error at column " + std::to_string(pos_ + 1) + " of '" + std::string(text_) +
                     "': " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Context ctx_;
  const std::map<std::string, T>* bindings_;
};

template <class T>
T parse_scalar(std::string_view text, const typename T::Context& ctx = {},
               const std::map<std::string, T>* bindings = nullptr) {
  return ExpressionParser<T>(text, ctx, bindings).parse();
}

}  // namespace ybsys
