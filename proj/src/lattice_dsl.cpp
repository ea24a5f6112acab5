#include "godeaux/lattice_dsl.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "godeaux/error.hpp"

namespace godeaux {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class ExpressionParser {
 public:
  ExpressionParser(const LatticeEnvironment& env, std::string_view text) : env_(env), text_(text) {}

  LatticeValue parse() {
    LatticeValue v = expression();
    if (peek() != '\0') fail("unexpected '" + std::string(1, peek()) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  char peek() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  LatticeValue add(const LatticeValue& a, const LatticeValue& b, bool subtract) {
    if (a.index() != b.index()) fail("cannot add a number and a class");
    if (const auto* x = std::get_if<Rational>(&a)) {
      const Rational& y = std::get<Rational>(b);
      return subtract ? *x - y : *x + y;
    }
    const auto& x = std::get<DivisorClass>(a);
    const auto& y = std::get<DivisorClass>(b);
    return subtract ? x - y : x + y;
  }

  LatticeValue multiply(const LatticeValue& a, const LatticeValue& b) {
    const auto* ra = std::get_if<Rational>(&a);
    const auto* rb = std::get_if<Rational>(&b);
    if (ra && rb) return *ra * *rb;
    if (ra) return std::get<DivisorClass>(b) * *ra;
    if (rb) return std::get<DivisorClass>(a) * *rb;
    fail("product of two classes; use '.' for the pairing");
  }

  LatticeValue negate(const LatticeValue& a) {
    if (const auto* r = std::get_if<Rational>(&a)) return -*r;
    return -std::get<DivisorClass>(a);
  }

  const DivisorClass& as_class(const LatticeValue& v) {
    if (const auto* d = std::get_if<DivisorClass>(&v)) return *d;
    fail("expected a class, got a number");
  }

  LatticeValue expression() {
    LatticeValue acc = term();
    for (;;) {
      if (accept('+')) {
        acc = add(acc, term(), false);
      } else if (accept('-')) {
        acc = add(acc, term(), true);
      } else {
        return acc;
      }
    }
  }

  LatticeValue term() {
    LatticeValue acc = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = multiply(acc, factor());
      } else if (c == '.') {
        ++pos_;
        const DivisorClass& lhs = as_class(acc);
        const LatticeValue rhs = factor();
        acc = pair(lhs, as_class(rhs));
      } else if (c == '/') {
        ++pos_;
        const LatticeValue d = factor();
        const auto* r = std::get_if<Rational>(&d);
        if (!r) fail("division by a class");
        if (r->is_zero()) fail("division by zero");
        acc = multiply(acc, r->inverse());
      } else if (std::isdigit(static_cast<unsigned char>(c)) || ident_start(c) || c == '(') {
        acc = multiply(acc, factor());
      } else {
        return acc;
      }
    }
  }

  LatticeValue factor() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return negate(factor());
    }
    if (c == '+') {
      ++pos_;
      return factor();
    }
    if (c == '(') {
      ++pos_;
      LatticeValue v = expression();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Rational::parse(text_.substr(start, pos_ - start));
    }
    if (ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "genus" && peek() == '(') {
        ++pos_;
        const LatticeValue arg = expression();
        if (!accept(')')) fail("expected ')'");
        return adjunction_genus(as_class(arg));
      }
      if (const auto it = env_.names.find(name); it != env_.names.end()) return it->second;
      if (env_.lattice->has(name)) return DivisorClass::basis(env_.lattice, name);
      if (name == "K" && env_.lattice->canonical()) return canonical_class(env_.lattice);
      throw ParseError("unknown class '" + name + "'", start);
    }
    if (c == '\0') fail("unexpected end of expression");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const LatticeEnvironment& env_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

struct Statement {
  std::size_t line = 0;
  std::string keyword;
  std::string rest;
};

[[noreturn]] void fail_at(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what, 0);
}

}  // namespace

LatticeEnvironment parse_lattice_declarations(std::string_view text) {
  std::vector<Statement> statements;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream words(line);
      Statement s;
      s.line = number;
      if (!(words >> s.keyword)) continue;
      std::getline(words, s.rest);
      statements.push_back(std::move(s));
    }
  }

  std::vector<std::string> basis;
  for (const auto& s : statements) {
    if (s.keyword != "basis") continue;
    if (!basis.empty()) fail_at(s.line, "basis declared twice");
    std::istringstream names(s.rest);
    for (std::string n; names >> n;) basis.push_back(n);
    if (basis.empty()) fail_at(s.line, "empty basis");
  }
  if (basis.empty()) throw ParseError("no basis declaration", 0);

  const auto n = static_cast<Eigen::Index>(basis.size());
  RationalMatrix gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) gram(i, j) = Rational(0);
  auto plain = std::make_shared<const Lattice>(basis, gram);
  for (const auto& s : statements) {
    if (s.keyword != "gram") continue;
    std::istringstream words(s.rest);
    std::string a, b, value;
    if (!(words >> a >> b >> value)) fail_at(s.line, "expected 'gram NAME NAME VALUE'");
    try {
      const auto i = static_cast<Eigen::Index>(plain->index(a)), j = static_cast<Eigen::Index>(plain->index(b));
      gram(i, j) = gram(j, i) = Rational::parse(value);
    } catch (const Error& e) {
      fail_at(s.line, e.what());
    }
  }

  LatticeEnvironment env;
  env.lattice = std::make_shared<const Lattice>(basis, gram);
  std::optional<RationalVector> canonical;
  for (const auto& s : statements) {
    if (s.keyword != "canonical") continue;
    if (canonical) fail_at(s.line, "canonical class declared twice");
    try {
      const auto v = evaluate_lattice_expression(env, s.rest);
      const auto* d = std::get_if<DivisorClass>(&v);
      if (!d) fail_at(s.line, "canonical class must be a class");
      canonical = d->coefficients();
    } catch (const ParseError& e) {
      fail_at(s.line, e.what());
    }
  }
  if (canonical) env.lattice = std::make_shared<const Lattice>(basis, gram, canonical);

  for (const auto& s : statements) {
    if (s.keyword == "basis" || s.keyword == "gram" || s.keyword == "canonical") continue;
    if (s.keyword != "let") fail_at(s.line, "unknown statement '" + s.keyword + "'");
    const auto eq = s.rest.find('=');
    if (eq == std::string::npos) fail_at(s.line, "expected 'let NAME = EXPR'");
    std::istringstream lhs(s.rest.substr(0, eq));
    std::string name, extra;
    lhs >> name;
    if (name.empty() || (lhs >> extra) || !ident_start(name[0])) fail_at(s.line, "bad name in let");
    if (env.lattice->has(name)) fail_at(s.line, "'" + name + "' is a basis name");
    try {
      const auto v = evaluate_lattice_expression(env, s.rest.substr(eq + 1));
      const auto* d = std::get_if<DivisorClass>(&v);
      if (!d) fail_at(s.line, "let binds classes only");
      env.names.insert_or_assign(name, *d);
    } catch (const ParseError& e) {
      fail_at(s.line, e.what());
    }
  }
  return env;
}

LatticeValue evaluate_lattice_expression(const LatticeEnvironment& env, std::string_view text) {
  return ExpressionParser(env, text).parse();
}

std::string to_string(const LatticeValue& value) {
  if (const auto* r = std::get_if<Rational>(&value)) return r->to_string();
  return std::get<DivisorClass>(value).to_string();
}

}  // namespace godeaux
