#include "godeaux/number_field.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "godeaux/error.hpp"
#include "godeaux/expr_parser.hpp"
#include "godeaux/upoly.hpp"

namespace godeaux {

namespace {

using QPoly = UPoly<Rational>;

const QPoly& minimal_polynomial() {
  static const QPoly m(std::vector<Rational>{Rational(-1), Rational(0), Rational(1), Rational(1)});
  return m;
}

QPoly as_qpoly(const NumberFieldElement& x) {
  return QPoly(std::vector<Rational>(x.coefficients().begin(), x.coefficients().end()));
}

mpz_class power_of_ten(int exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
  return p;
}

// Fixed-point rendering of scaled / 10^places, trailing zeros trimmed.
std::string decimal_string(const mpz_class& scaled, int places) {
  const bool negative = scaled < 0;
  std::string digits = mpz_class(abs(scaled)).get_str();
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  }
  std::string int_part = digits.substr(0, digits.size() - static_cast<std::size_t>(places));
  std::string frac_part = digits.substr(digits.size() - static_cast<std::size_t>(places));
  while (!frac_part.empty() && frac_part.back() == '0') frac_part.pop_back();
  std::string out = negative ? "-" : "";
  out += int_part;
  if (!frac_part.empty()) out += "." + frac_part;
  if (out == "-0") out = "0";
  return out;
}

Rational cubic_at(const Rational& t) { return t * t * t + t * t - Rational(1); }

}  // namespace

bool minimal_polynomial_is_irreducible() {
  // A reducible cubic over Q has a rational root, and by the rational root
  // test any root of a monic integer cubic with constant term -1 is +1 or -1.
  static const bool irreducible = [] {
    const auto& m = minimal_polynomial();
    return !m(Rational(1)).is_zero() && !m(Rational(-1)).is_zero();
  }();
  return irreducible;
}

NumberFieldElement& NumberFieldElement::operator+=(const NumberFieldElement& rhs) {
  for (std::size_t i = 0; i < 3; ++i) c_[i] += rhs.c_[i];
  return *this;
}

NumberFieldElement& NumberFieldElement::operator-=(const NumberFieldElement& rhs) {
  for (std::size_t i = 0; i < 3; ++i) c_[i] -= rhs.c_[i];
  return *this;
}

NumberFieldElement& NumberFieldElement::operator*=(const NumberFieldElement& rhs) {
  const auto& a = c_;
  const auto& b = rhs.c_;
  // Schoolbook product in Q[u], degrees 0..4.
  const Rational p0 = a[0] * b[0];
  const Rational p1 = a[0] * b[1] + a[1] * b[0];
  const Rational p2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0];
  const Rational p3 = a[1] * b[2] + a[2] * b[1];
  const Rational p4 = a[2] * b[2];
  // u^3 = 1 - u^2, u^4 = u - 1 + u^2.
  c_[0] = p0 + p3 - p4;
  c_[1] = p1 + p4;
  c_[2] = p2 - p3 + p4;
  return *this;
}

NumberFieldElement NumberFieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (!minimal_polynomial_is_irreducible()) throw InternalError("minimal polynomial is reducible");
  // s*x + t*m = 1 in Q[u], so s is the inverse of x modulo m.
  const auto eg = extended_gcd(as_qpoly(*this), minimal_polynomial());
  if (eg.gcd.degree() != 0) throw InternalError("element shares a factor with the minimal polynomial");
  const auto s = divrem(eg.s, minimal_polynomial()).second;
  return {s.coefficient(0), s.coefficient(1), s.coefficient(2)};
}

NumberFieldElement NumberFieldElement::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  NumberFieldElement result(1);
  NumberFieldElement base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

std::string NumberFieldElement::to_string() const {
  static const char* const kMonomials[] = {"", "u", "u^2"};
  std::string out;
  for (std::size_t i = 0; i < 3; ++i) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.to_string();
    } else if (mag == Rational(1)) {
      out += kMonomials[i];
    } else {
      out += mag.to_string() + "*" + kMonomials[i];
    }
  }
  return out.empty() ? "0" : out;
}

NumberFieldElement NumberFieldElement::parse(std::string_view text) {
  const auto p = parse_polynomial(text, {});
  if (p.is_zero()) return NumberFieldElement();
  return p.terms().begin()->second;
}

std::ostream& operator<<(std::ostream& os, const NumberFieldElement& x) { return os << x.to_string(); }

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return {a.lower + b.lower, a.upper + b.upper};
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  const Rational p[] = {a.lower * b.lower, a.lower * b.upper, a.upper * b.lower, a.upper * b.upper};
  return {*std::min_element(std::begin(p), std::end(p)), *std::max_element(std::begin(p), std::end(p))};
}

RationalInterval real_root_enclosure(const Rational& width) {
  Rational lo(0), hi(1);
  if (!(cubic_at(lo).sign() < 0 && cubic_at(hi).sign() > 0)) {
    throw InternalError("u^3 + u^2 - 1 has no sign change on [0, 1]");
  }
  while (hi - lo > width) {
    const Rational mid = (lo + hi) * Rational(1, 2);
    const int s = cubic_at(mid).sign();
    if (s == 0) return {mid, mid};
    (s < 0 ? lo : hi) = mid;
  }
  return {lo, hi};
}

DecimalInterval embed_real(const NumberFieldElement& x, int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be positive");
  const Rational tolerance(mpz_class(1), power_of_ten(digits));

  RationalInterval value{x[0], x[0]};
  if (!x.is_rational()) {
    // |x(s) - x(t)| <= (|c1| + 2|c2|) |s - t| for s, t in [0, 1].
    const Rational lipschitz = x[1].abs() + Rational(2) * x[2].abs() + Rational(1);
    const auto u = real_root_enclosure(tolerance / (Rational(4) * lipschitz));
    const RationalInterval c1{x[1], x[1]}, c2{x[2], x[2]};
    value = value + c1 * u + c2 * (u * u);
  }

  const int places = digits + 2;
  const mpz_class scale = power_of_ten(places);
  const mpz_class lo = (value.lower * Rational(scale)).floor();
  const mpz_class hi = (value.upper * Rational(scale)).ceil();

  DecimalInterval out;
  out.bounds = {Rational(lo, scale), Rational(hi, scale)};
  out.lower = decimal_string(lo, places);
  out.upper = decimal_string(hi, places);
  out.digits = digits;
  return out;
}

}  // namespace godeaux
