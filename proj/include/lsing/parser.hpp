#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "lsing/errors.hpp"
#include "lsing/polynomial.hpp"

namespace lsing {

// Grammar:
//   expr     := term (('+' | '-') term)*
//   term     := '-'? factor ('*'? factor)*
//   factor   := base ('^' INT)?
//   base     := RATIONAL | IDENT | '(' expr ')'
//   RATIONAL := INT ('/' INT)?
class PolynomialParser {
 public:
  PolynomialParser(std::string_view src, const std::vector<std::string>& vars) : src_(src), vars_(vars) {
    if (vars_.empty()) throw std::invalid_argument("no variables declared");
    if (vars_.size() > kMaxVars) throw std::invalid_argument("too many variables");
  }

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }
  bool starts_base(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
           c == '(';
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    bool negate = false;
    if (peek() == '-') {
      ++pos_;
      negate = true;
    }
    Polynomial acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (starts_base(c)) {
        acc *= factor();
      } else {
        break;
      }
    }
    return negate ? -acc : acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (peek() != '^') return b;
    ++pos_;
    skip_ws();
    std::size_t at = pos_;
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      fail("exponent must be a positive integer");
    std::string digits = integer();
    if (digits.size() > 4 || std::stoi(digits) < 1) throw ParseError("exponent must be a positive integer", at);
    int e = std::stoi(digits);
    Polynomial r = Polynomial::constant(vars_.size(), Rational(1));
    for (int i = 0; i < e; ++i) r *= b;
    return r;
  }

  std::string integer() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  Polynomial base() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = integer();
      std::size_t save = pos_;
      skip_ws();
      if (pos_ < src_.size() && src_[pos_] == '/') {
        ++pos_;
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
          fail("expected denominator");
        std::size_t at = pos_;
        std::string den = integer();
        if (mpz_class(den) == 0) throw ParseError("zero denominator", at);
        num += "/" + den;
      } else {
        pos_ = save;
      }
      return Polynomial::constant(vars_.size(), parse_rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      std::string_view id = src_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == id) return Polynomial::variable(vars_.size(), i);
      throw ParseError("unknown identifier '" + std::string(id) + "'", start);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character");
  }

  std::string_view src_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

inline Polynomial parse_polynomial(std::string_view src, const std::vector<std::string>& vars) {
  return PolynomialParser(src, vars).parse();
}

}  // namespace lsing
