#include "godeaux/expr_parser.hpp"

#include <cctype>

#include "godeaux/error.hpp"

namespace godeaux {

namespace {

using Poly = Polynomial<NumberFieldElement>;

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& variables) : text_(text), vars_(variables) {}

  Poly parse() {
    Poly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  static bool starts_factor(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
           c == '(';
  }

  Poly constant(const NumberFieldElement& c) const { return Poly::constant(vars_, c); }

  Poly expression() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (c == '/') {
        ++pos_;
        const std::size_t at = pos_;
        const Poly d = unary();
        if (d.total_degree() > 0) throw ParseError("division by a non-constant", at);
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc *= d.terms().begin()->second.inverse();
      } else if (starts_factor(c)) {
        acc = acc * unary();
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    const mpz_class e = integer();
    if (e > 1000) throw ParseError("exponent too large", at);
    return base.pow(static_cast<int>(e.get_si()));
  }

  mpz_class integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Poly primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(Rational(integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return Poly::variable(vars_, i);
      if (name == "u") return constant(NumberFieldElement::generator());
      throw UnknownVariable("unknown identifier '" + name + "' at offset " + std::to_string(start));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial<NumberFieldElement> parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  return Parser(text, variables).parse();
}

}  // namespace godeaux
