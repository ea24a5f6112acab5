#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>

#include "godeaux/rational.hpp"

namespace godeaux {

/// Element c0 + c1*u + c2*u^2 of the cubic field K = Q[u]/(u^3 + u^2 - 1).
///
/// The representation is unique: every product is reduced with
/// u^3 = 1 - u^2 and u^4 = u - 1 + u^2, so equality is coefficientwise.
class NumberFieldElement {
 public:
  NumberFieldElement() = default;
  NumberFieldElement(long value) : c_{Rational(value), Rational(0), Rational(0)} {}  // NOLINT
  NumberFieldElement(const Rational& value) : c_{value, Rational(0), Rational(0)} {}  // NOLINT
  NumberFieldElement(Rational c0, Rational c1, Rational c2) : c_{std::move(c0), std::move(c1), std::move(c2)} {}

  /// The class of u.
  static NumberFieldElement generator() { return {Rational(0), Rational(1), Rational(0)}; }

  /// Parses the rendering produced by to_string() (and any other sum of
  /// rational multiples of 1, u, u^2).
  static NumberFieldElement parse(std::string_view text);

  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const std::array<Rational, 3>& coefficients() const { return c_; }

  bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero(); }
  bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero(); }

  /// Multiplicative inverse via the extended Euclidean algorithm over Q[u].
  NumberFieldElement inverse() const;
  NumberFieldElement pow(int exponent) const;

  /// "c0 + c1*u + c2*u^2", zero terms omitted, unit coefficients elided.
  std::string to_string() const;

  NumberFieldElement& operator+=(const NumberFieldElement& rhs);
  NumberFieldElement& operator-=(const NumberFieldElement& rhs);
  NumberFieldElement& operator*=(const NumberFieldElement& rhs);
  NumberFieldElement& operator/=(const NumberFieldElement& rhs) { return *this *= rhs.inverse(); }

  friend NumberFieldElement operator+(NumberFieldElement a, const NumberFieldElement& b) { return a += b; }
  friend NumberFieldElement operator-(NumberFieldElement a, const NumberFieldElement& b) { return a -= b; }
  friend NumberFieldElement operator*(NumberFieldElement a, const NumberFieldElement& b) { return a *= b; }
  friend NumberFieldElement operator/(NumberFieldElement a, const NumberFieldElement& b) { return a /= b; }
  friend NumberFieldElement operator-(const NumberFieldElement& a) { return {-a.c_[0], -a.c_[1], -a.c_[2]}; }
  friend bool operator==(const NumberFieldElement& a, const NumberFieldElement& b) { return a.c_ == b.c_; }

 private:
  std::array<Rational, 3> c_;
};

using K = NumberFieldElement;

inline bool is_zero(const NumberFieldElement& x) { return x.is_zero(); }

std::ostream& operator<<(std::ostream& os, const NumberFieldElement& x);

/// True iff u^3 + u^2 - 1 has no rational root (equivalently, is irreducible
/// over Q, being a cubic). Evaluated once and cached.
bool minimal_polynomial_is_irreducible();

/// Closed interval with exact rational endpoints.
struct RationalInterval {
  Rational lower;
  Rational upper;

  Rational width() const { return upper - lower; }
  bool contains(const Rational& x) const { return lower <= x && x <= upper; }
  bool intersects(const RationalInterval& other) const {
    return !(upper < other.lower || other.upper < lower);
  }
};

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);

/// Certified enclosure of the image of an element under the real embedding
/// u -> 0.75487..., rendered as decimal strings rounded outward.
struct DecimalInterval {
  RationalInterval bounds;  // endpoints are exactly the decimal strings below
  std::string lower;
  std::string upper;
  int digits = 0;

  std::string to_string() const { return "[" + lower + ", " + upper + "]"; }
};

/// Width of the result is strictly below 10^-digits. Throws std::invalid_argument
/// for digits < 1.
DecimalInterval embed_real(const NumberFieldElement& x, int digits);

/// Enclosure of the real root of u^3 + u^2 - 1 of width at most `width`.
RationalInterval real_root_enclosure(const Rational& width);

}  // namespace godeaux
