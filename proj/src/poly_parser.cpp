#include <cctype>

#include "homfac/laurent_poly.hpp"

namespace homfac {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarList& vars) : text_(text), vars_(vars) {}

  LaurentPoly parse() {
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    LaurentPoly p = expr();
    skip_space();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return at_end() ? '\0' : text_[pos_];
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '(' || c == '_';
  }

  LaurentPoly expr() {
    LaurentPoly acc(vars_);
    bool first = true;
    while (true) {
      char c = peek();
      int sign = 1;
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      first = false;
      LaurentPoly t = term();
      if (sign < 0) {
        acc -= t;
      } else {
        acc += t;
      }
      c = peek();
      if (c != '+' && c != '-') break;
    }
    return acc;
  }

  LaurentPoly term() {
    LaurentPoly acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor(c)) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  LaurentPoly factor() {
    std::size_t start = pos_;
    LaurentPoly base = primary();
    if (peek() != '^') return base;
    ++pos_;
    long e = exponent();
    if (e >= 0) return base.pow(static_cast<unsigned>(e));
    auto unit = base.as_unit();
    if (!unit) throw ParseError("negative power of a non-monomial", start);
    return LaurentPoly::from_monomial(vars_, unit->inverse()).pow(static_cast<unsigned>(-e));
  }

  long exponent() {
    bool paren = false;
    if (peek() == '(') {
      paren = true;
      ++pos_;
    }
    long sign = 1;
    char c = peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++pos_;
    }
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer exponent", start);
    if (pos_ - start > 6) throw ParseError("exponent out of range", start);
    long v = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (paren) {
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
    }
    return sign * v;
  }

  LaurentPoly primary() {
    char c = peek();
    std::size_t start = pos_;
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = expr();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Integer v(std::string(text_.substr(start, pos_ - start)));
      return LaurentPoly::constant(vars_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      LaurentPoly probe(vars_);
      if (probe.index_of(name) < 0) throw ParseError("unknown variable '" + name + "'", start);
      return LaurentPoly::variable(vars_, name);
    }
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  VarList vars_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, const VarList& vars) {
  return Parser(text, vars).parse();
}

}  // namespace homfac
