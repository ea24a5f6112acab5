#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "godeaux/error.hpp"
#include "godeaux/exact_linalg.hpp"
#include "godeaux/upoly.hpp"

namespace godeaux {

inline constexpr std::size_t kMaxVariables = 8;

/// Exponent vector of a monomial in a fixed number of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t variables) : size_(static_cast<std::uint8_t>(variables)) {
    if (variables > kMaxVariables) throw ArityMismatch("too many variables");
  }
  Monomial(std::initializer_list<int> exponents) : Monomial(exponents.size()) {
    std::size_t i = 0;
    for (int e : exponents) set(i++, e);
  }

  static Monomial unit(std::size_t variables, std::size_t index, int power = 1) {
    Monomial m(variables);
    m.set(index, power);
    return m;
  }

  std::size_t size() const { return size_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, int exponent) { exps_[i] = static_cast<std::int16_t>(exponent); }

  int degree() const {
    int d = 0;
    for (std::size_t i = 0; i < size_; ++i) d += exps_[i];
    return d;
  }
  int weighted_degree(std::span<const int> weights) const {
    int d = 0;
    for (std::size_t i = 0; i < size_; ++i) d += weights[i] * exps_[i];
    return d;
  }

  /// Drops variable `index`, keeping the others in order.
  Monomial without(std::size_t index) const {
    Monomial m(size_ - 1);
    for (std::size_t i = 0, j = 0; i < size_; ++i)
      if (i != index) m.exps_[j++] = exps_[i];
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) m.exps_[i] = static_cast<std::int16_t>(a.exps_[i] + b.exps_[i]);
    return m;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  bool lex_greater(const Monomial& other) const {
    for (std::size_t i = 0; i < size_; ++i)
      if (exps_[i] != other.exps_[i]) return exps_[i] > other.exps_[i];
    return false;
  }

 private:
  std::array<std::int16_t, kMaxVariables> exps_{};
  std::uint8_t size_ = 0;
};

/// Graded-lex order, largest first.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.lex_greater(b);
  }
};

template <typename Scalar>
std::string scalar_to_string(const Scalar& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

/// Sparse polynomial in named variables; zero coefficients are never stored.
template <typename Scalar>
class Polynomial {
 public:
  using Terms = std::map<Monomial, Scalar, GradedLexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {
    if (vars_.size() > kMaxVariables) throw ArityMismatch("too many variables");
  }

  static Polynomial constant(std::vector<std::string> variables, const Scalar& c) {
    Polynomial p(std::move(variables));
    p.add_term(Monomial(p.vars_.size()), c);
    return p;
  }
  static Polynomial variable(std::vector<std::string> variables, std::size_t index) {
    Polynomial p(std::move(variables));
    p.add_term(Monomial::unit(p.vars_.size(), index), Scalar(1));
    return p;
  }
  static Polynomial variable(std::vector<std::string> variables, std::string_view name) {
    Polynomial p(std::move(variables));
    p.add_term(Monomial::unit(p.vars_.size(), p.variable_index(name)), Scalar(1));
    return p;
  }
  static Polynomial term(std::vector<std::string> variables, const Monomial& m, const Scalar& c) {
    Polynomial p(std::move(variables));
    if (m.size() != p.vars_.size()) throw ArityMismatch("monomial arity does not match variables");
    p.add_term(m, c);
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t num_variables() const { return vars_.size(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  std::size_t variable_index(std::string_view name) const {
    const auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw UnknownVariable("unknown variable '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - vars_.begin());
  }

  Scalar coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// Accumulates c * m, erasing the entry if it cancels.
  void add_term(const Monomial& m, const Scalar& c) {
    if (c == Scalar(0)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Scalar(0)) terms_.erase(it);
    }
  }

  /// Largest total degree; -1 for the zero polynomial.
  int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }
  /// Smallest total degree (order at the origin); -1 for the zero polynomial.
  int order() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

  bool is_homogeneous() const { return terms_.empty() || total_degree() == order(); }

  template <typename Predicate>
  Polynomial filtered(Predicate keep) const {
    Polynomial p(vars_);
    for (const auto& [m, c] : terms_)
      if (keep(m)) p.terms_.emplace_hint(p.terms_.end(), m, c);
    return p;
  }
  Polynomial homogeneous_part(int degree) const {
    return filtered([degree](const Monomial& m) { return m.degree() == degree; });
  }
  Polynomial truncated(int max_degree) const {
    return filtered([max_degree](const Monomial& m) { return m.degree() <= max_degree; });
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    require_same_variables(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& rhs) {
    require_same_variables(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Scalar& s) {
    if (s == Scalar(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Product, optionally discarding every monomial above `max_degree`.
  friend Polynomial multiply(const Polynomial& a, const Polynomial& b, std::optional<int> max_degree = {}) {
    a.require_same_variables(b);
    Polynomial out(a.vars_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        if (max_degree && ma.degree() + mb.degree() > *max_degree) continue;
        out.add_term(ma * mb, ca * cb);
      }
    }
    return out;
  }

  Polynomial pow(int exponent, std::optional<int> max_degree = {}) const {
    Polynomial result = constant(vars_, Scalar(1));
    Polynomial base = *this;
    while (exponent > 0) {
      if (exponent & 1) result = multiply(result, base, max_degree);
      exponent >>= 1;
      if (exponent > 0) base = multiply(base, base, max_degree);
    }
    return result;
  }

  void require_same_variables(const Polynomial& other) const {
    if (vars_ != other.vars_) throw VariableMismatch("polynomials have different variable lists");
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      std::string coeff = scalar_to_string(c);
      const bool composite = coeff.find(' ') != std::string::npos;
      const bool negative = !composite && !coeff.empty() && coeff[0] == '-';
      if (negative) coeff.erase(0, 1);
      if (composite) coeff = "(" + coeff + ")";
      std::string mono;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (m[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (m[i] > 1) mono += "^" + std::to_string(m[i]);
      }
      std::string piece;
      if (mono.empty()) {
        piece = coeff;
      } else if (coeff == "1") {
        piece = mono;
      } else {
        piece = coeff + "*" + mono;
      }
      if (out.empty()) {
        out = (negative ? "-" : "") + piece;
      } else {
        out += (negative ? " - " : " + ") + piece;
      }
    }
    return out;
  }

 private:
  std::vector<std::string> vars_;
  Terms terms_;
};

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const Polynomial<Scalar>& p) {
  return os << p.to_string();
}

/// Exact value at a point; coordinates are matched to variables by position.
template <typename Scalar>
Scalar evaluate(const Polynomial<Scalar>& f, std::span<const Scalar> point) {
  if (point.size() != f.num_variables()) throw ArityMismatch("point has the wrong number of coordinates");
  const int deg = std::max(f.total_degree(), 0);
  std::vector<std::vector<Scalar>> powers(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    powers[i].push_back(Scalar(1));
    for (int k = 1; k <= deg; ++k) powers[i].push_back(powers[i].back() * point[i]);
  }
  Scalar acc(0);
  for (const auto& [m, c] : f.terms()) {
    Scalar t = c;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (m[i] != 0) t *= powers[i][static_cast<std::size_t>(m[i])];
    acc += t;
  }
  return acc;
}

template <typename Scalar, typename Derived>
Scalar evaluate(const Polynomial<Scalar>& f, const Eigen::MatrixBase<Derived>& point) {
  std::vector<Scalar> coords(point.derived().data(), point.derived().data() + point.size());
  return evaluate(f, std::span<const Scalar>(coords));
}

template <typename Scalar>
Polynomial<Scalar> partial(const Polynomial<Scalar>& f, std::string_view variable) {
  const std::size_t v = f.variable_index(variable);
  Polynomial<Scalar> out(f.variables());
  for (const auto& [m, c] : f.terms()) {
    if (m[v] == 0) continue;
    Monomial d = m;
    d.set(v, m[v] - 1);
    out.add_term(d, c * Scalar(static_cast<long>(m[v])));
  }
  return out;
}

namespace detail {

template <typename Scalar>
using TermList = std::vector<std::pair<Monomial, Scalar>>;

template <typename Scalar>
class HornerSubstitution {
 public:
  HornerSubstitution(std::span<const Polynomial<Scalar>> images, std::optional<int> max_degree)
      : images_(images), max_degree_(max_degree), powers_(images.size()) {}

  // Terms in `terms` agree on the exponents of variables before `v`.
  Polynomial<Scalar> run(const TermList<Scalar>& terms, std::size_t v) {
    const auto& target = images_.front().variables();
    if (v == images_.size()) {
      Scalar c(0);
      for (const auto& t : terms) c += t.second;
      return Polynomial<Scalar>::constant(target, c);
    }
    std::map<int, TermList<Scalar>, std::greater<>> groups;
    for (const auto& t : terms) groups[t.first[v]].push_back(t);

    Polynomial<Scalar> acc(target);
    int previous = groups.begin()->first;
    for (const auto& [k, group] : groups) {
      if (!acc.is_zero()) acc = multiply(acc, power(v, previous - k), max_degree_);
      acc += run(group, v + 1);
      previous = k;
    }
    if (previous > 0) acc = multiply(acc, power(v, previous), max_degree_);
    return acc;
  }

 private:
  const Polynomial<Scalar>& power(std::size_t v, int k) {
    auto& table = powers_[v];
    if (table.empty()) table.push_back(Polynomial<Scalar>::constant(images_.front().variables(), Scalar(1)));
    while (static_cast<int>(table.size()) <= k) table.push_back(multiply(table.back(), images_[v], max_degree_));
    return table[static_cast<std::size_t>(k)];
  }

  std::span<const Polynomial<Scalar>> images_;
  std::optional<int> max_degree_;
  std::vector<std::vector<Polynomial<Scalar>>> powers_;
};

}  // namespace detail

/// f(images[0], ..., images[n-1]), expanded by Horner's scheme one variable at
/// a time. With `max_degree`, monomials above it are dropped as they appear;
/// this is exact up to that degree only when no image has a constant term.
template <typename Scalar>
Polynomial<Scalar> substitute(const Polynomial<Scalar>& f, std::span<const Polynomial<Scalar>> images,
                              std::optional<int> max_degree = {}) {
  if (images.size() != f.num_variables()) throw ArityMismatch("one image per variable is required");
  if (images.empty()) return f;
  for (const auto& img : images) {
    img.require_same_variables(images.front());
    if (max_degree && img.coefficient(Monomial(img.num_variables())) != Scalar(0)) {
      throw InternalError("truncated substitution needs images without constant term");
    }
  }
  if (f.is_zero()) return Polynomial<Scalar>(images.front().variables());
  detail::TermList<Scalar> terms(f.terms().begin(), f.terms().end());
  auto out = detail::HornerSubstitution<Scalar>(images, max_degree).run(terms, 0);
  return max_degree ? out.truncated(*max_degree) : out;
}

template <typename Scalar>
Polynomial<Scalar> substitute(const Polynomial<Scalar>& f, const std::vector<Polynomial<Scalar>>& images,
                              std::optional<int> max_degree = {}) {
  return substitute(f, std::span<const Polynomial<Scalar>>(images), max_degree);
}

/// Linear forms sum_j m(i, j) * x_j over the given variables, one per row.
template <typename Derived>
std::vector<Polynomial<typename Derived::Scalar>> linear_forms(const Eigen::MatrixBase<Derived>& m,
                                                               const std::vector<std::string>& variables) {
  using Scalar = typename Derived::Scalar;
  if (static_cast<std::size_t>(m.cols()) != variables.size()) throw ArityMismatch("matrix width != variables");
  std::vector<Polynomial<Scalar>> forms;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Polynomial<Scalar> form(variables);
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      form.add_term(Monomial::unit(variables.size(), static_cast<std::size_t>(j)), m(i, j));
    forms.push_back(std::move(form));
  }
  return forms;
}

/// f(M x): variable i is replaced by row i of M.
template <typename Derived>
Polynomial<typename Derived::Scalar> substitute_linear(const Polynomial<typename Derived::Scalar>& f,
                                                       const Eigen::MatrixBase<Derived>& m,
                                                       std::optional<int> max_degree = {}) {
  if (static_cast<std::size_t>(m.rows()) != f.num_variables() || m.rows() != m.cols()) {
    throw ArityMismatch("linear map size does not match the variable count");
  }
  return substitute(f, linear_forms(m, f.variables()), max_degree);
}

/// Sets `variable` = 1 in a homogeneous polynomial.
template <typename Scalar>
Polynomial<Scalar> dehomogenize(const Polynomial<Scalar>& f, std::string_view variable) {
  if (!f.is_homogeneous()) throw NotHomogeneous("dehomogenize needs a homogeneous polynomial");
  const std::size_t v = f.variable_index(variable);
  std::vector<std::string> rest = f.variables();
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(v));
  Polynomial<Scalar> out(rest);
  for (const auto& [m, c] : f.terms()) out.add_term(m.without(v), c);
  return out;
}

/// Same terms, new variable names (positionally).
template <typename Scalar>
Polynomial<Scalar> rename_variables(const Polynomial<Scalar>& f, std::vector<std::string> names) {
  if (names.size() != f.num_variables()) throw ArityMismatch("rename needs one name per variable");
  Polynomial<Scalar> out(std::move(names));
  for (const auto& [m, c] : f.terms()) out.add_term(m, c);
  return out;
}

/// True iff a and b span the same point: every 2x2 minor vanishes and neither
/// vector is zero.
template <typename DerivedA, typename DerivedB>
bool projectively_equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  if (a.size() != b.size()) return false;
  bool a_zero = true, b_zero = true;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    a_zero = a_zero && a(i) == Scalar(0);
    b_zero = b_zero && b(i) == Scalar(0);
  }
  if (a_zero || b_zero) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    for (Eigen::Index j = i + 1; j < a.size(); ++j)
      if (!(a(i) * b(j) - a(j) * b(i) == Scalar(0))) return false;
  return true;
}

/// Point of projective space; never the zero vector.
template <typename Scalar, int N>
class ProjectivePoint {
 public:
  using Coordinates = Eigen::Matrix<Scalar, N, 1>;

  explicit ProjectivePoint(Coordinates coords) : coords_(std::move(coords)) {
    bool all_zero = true;
    for (Eigen::Index i = 0; i < coords_.size(); ++i) all_zero = all_zero && coords_(i) == Scalar(0);
    if (all_zero) throw Error("projective point with all coordinates zero");
  }

  const Coordinates& coordinates() const { return coords_; }

  template <typename Derived>
  ProjectivePoint mapped(const Eigen::MatrixBase<Derived>& m) const {
    return ProjectivePoint(Coordinates(m * coords_));
  }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return projectively_equal(a.coords_, b.coords_);
  }

  std::string to_string() const {
    std::string out = "(";
    for (Eigen::Index i = 0; i < coords_.size(); ++i) {
      if (i) out += ", ";
      out += scalar_to_string(coords_(i));
    }
    return out + ")";
  }

 private:
  Coordinates coords_;
};

/// Binary form sum_i c_i s^(d-i) t^i of degree d.
template <typename Scalar>
class BinaryForm {
 public:
  BinaryForm(int degree, std::vector<Scalar> coefficients) : degree_(degree), coeffs_(std::move(coefficients)) {
    if (static_cast<int>(coeffs_.size()) != degree + 1) throw ArityMismatch("binary form needs degree + 1 coefficients");
  }

  /// Reads a homogeneous polynomial in two variables (s first).
  static BinaryForm from_polynomial(const Polynomial<Scalar>& p, int degree) {
    if (p.num_variables() != 2) throw ArityMismatch("binary forms have two variables");
    std::vector<Scalar> c(static_cast<std::size_t>(degree) + 1, Scalar(0));
    for (const auto& [m, coeff] : p.terms()) {
      if (m.degree() != degree) throw NotHomogeneous("binary form is not homogeneous of the stated degree");
      c[static_cast<std::size_t>(m[1])] = coeff;
    }
    return BinaryForm(degree, std::move(c));
  }

  int degree() const { return degree_; }
  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c == Scalar(0); });
  }
  /// Coefficient of s^(d-i) t^i.
  const Scalar& coefficient(int t_power) const { return coeffs_[static_cast<std::size_t>(t_power)]; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  Scalar operator()(const Scalar& s, const Scalar& t) const {
    Scalar acc(0);
    for (int i = 0; i <= degree_; ++i) {
      Scalar term = coeffs_[static_cast<std::size_t>(i)];
      for (int k = 0; k < degree_ - i; ++k) term *= s;
      for (int k = 0; k < i; ++k) term *= t;
      acc += term;
    }
    return acc;
  }

  Polynomial<Scalar> to_polynomial() const {
    Polynomial<Scalar> p({"s", "t"});
    for (int i = 0; i <= degree_; ++i) p.add_term(Monomial{degree_ - i, i}, coeffs_[static_cast<std::size_t>(i)]);
    return p;
  }

  /// b(s, t + c*s).
  BinaryForm sheared(const Scalar& c) const {
    const auto s = Polynomial<Scalar>::variable({"s", "t"}, 0);
    const auto t = Polynomial<Scalar>::variable({"s", "t"}, 1);
    const std::vector<Polynomial<Scalar>> images{s, t + s * c};
    return from_polynomial(substitute(to_polynomial(), images), degree_);
  }

  /// b(s, 1) as a univariate polynomial in s.
  UPoly<Scalar> dehomogenized() const {
    std::vector<Scalar> asc(coeffs_.rbegin(), coeffs_.rend());
    return UPoly<Scalar>(std::move(asc));
  }

  std::string to_string() const { return to_polynomial().to_string(); }

 private:
  int degree_;
  std::vector<Scalar> coeffs_;
};

/// f(s*p + t*q): the restriction of a form to the line through p and q.
template <typename Scalar, typename DerivedP, typename DerivedQ>
BinaryForm<Scalar> restrict_to_line(const Polynomial<Scalar>& f, const Eigen::MatrixBase<DerivedP>& p,
                                    const Eigen::MatrixBase<DerivedQ>& q) {
  if (static_cast<std::size_t>(p.size()) != f.num_variables() || p.size() != q.size()) {
    throw ArityMismatch("line points must have one coordinate per variable");
  }
  if (projectively_equal(p, q)) throw CoincidentPoints("line needs two distinct points");
  if (!f.is_homogeneous()) throw NotHomogeneous("restriction to a line needs a form");
  const std::vector<std::string> st{"s", "t"};
  std::vector<Polynomial<Scalar>> images;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    Polynomial<Scalar> img(st);
    img.add_term(Monomial{1, 0}, p(i));
    img.add_term(Monomial{0, 1}, q(i));
    images.push_back(std::move(img));
  }
  const int degree = std::max(f.total_degree(), 0);
  const auto restricted = substitute(f, images);
  if (restricted.is_zero()) return BinaryForm<Scalar>(degree, std::vector<Scalar>(static_cast<std::size_t>(degree) + 1, Scalar(0)));
  return BinaryForm<Scalar>::from_polynomial(restricted, degree);
}

template <typename Scalar>
struct SquarefreeWitness {
  bool squarefree = false;
  /// Res(f, f') for f = b'(s, 1), where b' = b(s, t + shear*s) has b'(1, 0) != 0.
  Scalar resultant;
  long shear = 0;
  int gcd_degree = 0;
};

/// A binary form of degree d is squarefree iff, in a chart where it keeps
/// degree d, gcd(f, f') is constant; the resultant Res(f, f') is the witness.
template <typename Scalar>
SquarefreeWitness<Scalar> binary_form_squarefree(const BinaryForm<Scalar>& b) {
  if (b.is_zero()) throw ZeroForm("squarefree test of the zero form");
  SquarefreeWitness<Scalar> w;
  BinaryForm<Scalar> chart = b;
  // b'(1, 0) = b(1, shear); a form of degree d has at most d roots on t = shear*s.
  for (long c = 0; c <= b.degree(); ++c) {
    chart = b.sheared(Scalar(c));
    if (!(chart.coefficient(0) == Scalar(0))) {
      w.shear = c;
      break;
    }
  }
  const auto f = chart.dehomogenized();
  const auto df = f.derivative();
  w.gcd_degree = gcd(f, df).degree();
  w.resultant = resultant(f, df);
  w.squarefree = w.gcd_degree == 0;
  return w;
}

/// Symmetric matrix M of a quadratic form q, with q(x) = x^T M x.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> quadratic_form_matrix(const Polynomial<Scalar>& q) {
  const auto n = static_cast<Eigen::Index>(q.num_variables());
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Scalar(0);
  const Scalar half = Scalar(1) / Scalar(2);
  for (const auto& [mono, c] : q.terms()) {
    if (mono.degree() != 2) throw NotHomogeneous("quadratic form has a term of degree " + std::to_string(mono.degree()));
    std::vector<Eigen::Index> idx;
    for (std::size_t v = 0; v < q.num_variables(); ++v)
      for (int k = 0; k < mono[v]; ++k) idx.push_back(static_cast<Eigen::Index>(v));
    if (idx[0] == idx[1]) {
      m(idx[0], idx[0]) += c;
    } else {
      m(idx[0], idx[1]) += c * half;
      m(idx[1], idx[0]) += c * half;
    }
  }
  return m;
}

/// q = scale * L^2 when the form has rank one; `rank` is always filled in.
template <typename Scalar>
struct SquareSplit {
  Eigen::Index rank = 0;
  std::optional<Polynomial<Scalar>> linear_form;
  Scalar scale;
};

/// For a rank-one symmetric M = c v v^T some diagonal entry M_kk is nonzero;
/// then L = sum_j (M_kj / M_kk) x_j and c = M_kk.
template <typename Scalar>
SquareSplit<Scalar> split_rank_one_square(const Polynomial<Scalar>& q) {
  const auto m = quadratic_form_matrix(q);
  SquareSplit<Scalar> out;
  out.rank = exact_rank(m);
  if (out.rank != 1) return out;
  Eigen::Index k = 0;
  while (m(k, k) == Scalar(0)) ++k;
  out.scale = m(k, k);
  Polynomial<Scalar> l(q.variables());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    l.add_term(Monomial::unit(q.num_variables(), static_cast<std::size_t>(j)), m(k, j) / out.scale);
  out.linear_form = std::move(l);
  return out;
}

}  // namespace godeaux
