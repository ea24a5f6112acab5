#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "godeaux/error.hpp"

namespace godeaux {

/// Dense univariate polynomial over an exact field, coefficients stored in
/// ascending degree. The zero polynomial has degree -1.
template <typename Scalar>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

  static UPoly constant(const Scalar& c) { return UPoly(std::vector<Scalar>{c}); }
  static UPoly monomial(int degree, const Scalar& c) {
    std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1, Scalar(0));
    v.back() = c;
    return UPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  Scalar coefficient(int i) const {
    return (i >= 0 && i <= degree()) ? coeffs_[static_cast<std::size_t>(i)] : Scalar(0);
  }
  const Scalar& leading() const {
    if (is_zero()) throw ZeroForm("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UPoly derivative() const {
    std::vector<Scalar> d;
    for (int i = 1; i <= degree(); ++i) d.push_back(Scalar(static_cast<long>(i)) * coeffs_[i]);
    return UPoly(std::move(d));
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    const Scalar inv = Scalar(1) / leading();
    return *this * inv;
  }

  UPoly& operator+=(const UPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& rhs) { return *this += -rhs; }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(const UPoly& a) {
    UPoly r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const UPoly& a, const Scalar& s) {
    std::vector<Scalar> r = a.coeffs_;
    for (auto& c : r) c *= s;
    return UPoly(std::move(r));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && is_zero_scalar(coeffs_.back())) coeffs_.pop_back();
  }
  static bool is_zero_scalar(const Scalar& s) { return s == Scalar(0); }

  std::vector<Scalar> coeffs_;
};

/// Euclidean division: a = q*b + r with deg r < deg b.
template <typename Scalar>
std::pair<UPoly<Scalar>, UPoly<Scalar>> divrem(const UPoly<Scalar>& a, const UPoly<Scalar>& b) {
  if (b.is_zero()) throw DivisionByZero();
  UPoly<Scalar> q;
  UPoly<Scalar> r = a;
  const Scalar lead_inv = Scalar(1) / b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const auto term = UPoly<Scalar>::monomial(r.degree() - b.degree(), r.leading() * lead_inv);
    q += term;
    r -= term * b;
  }
  return {q, r};
}

/// Monic greatest common divisor (zero if both inputs are zero).
template <typename Scalar>
UPoly<Scalar> gcd(UPoly<Scalar> a, UPoly<Scalar> b) {
  while (!b.is_zero()) {
    auto r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <typename Scalar>
struct ExtendedGcd {
  UPoly<Scalar> gcd;  // monic
  UPoly<Scalar> s;
  UPoly<Scalar> t;
};

/// Bezout coefficients with s*a + t*b = gcd(a, b).
template <typename Scalar>
ExtendedGcd<Scalar> extended_gcd(const UPoly<Scalar>& a, const UPoly<Scalar>& b) {
  UPoly<Scalar> r0 = a, r1 = b;
  UPoly<Scalar> s0 = UPoly<Scalar>::constant(Scalar(1)), s1;
  UPoly<Scalar> t0, t1 = UPoly<Scalar>::constant(Scalar(1));
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Scalar inv = Scalar(1) / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// Resultant by the Euclidean remainder sequence; zero iff a common root exists
/// (for non-constant inputs).
template <typename Scalar>
Scalar resultant(UPoly<Scalar> a, UPoly<Scalar> b) {
  if (a.is_zero() || b.is_zero()) return Scalar(0);
  Scalar acc(1);
  while (true) {
    const int m = a.degree();
    const int n = b.degree();
    if (n == 0) {
      Scalar p(1);
      for (int i = 0; i < m; ++i) p *= b.leading();
      return acc * p;
    }
    if (m < n) {
      if ((m * n) % 2 == 1) acc = -acc;
      std::swap(a, b);
      continue;
    }
    // res(a, b) = (-1)^{mn} lc(b)^{m-k} res(b, r) with r = a mod b of degree k.
    auto r = divrem(a, b).second;
    if (r.is_zero()) return Scalar(0);
    const int k = r.degree();
    if ((m * n) % 2 == 1) acc = -acc;
    for (int i = 0; i < m - k; ++i) acc *= b.leading();
    a = std::move(b);
    b = std::move(r);
  }
}

}  // namespace godeaux
