#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "godeaux/eigen_support.hpp"
#include "godeaux/mpoly.hpp"
#include "godeaux/number_field.hpp"

namespace godeaux {

/// Coefficients a..f of the sigma-invariant quintic.
struct Parameters {
  K a, b, c, d, e, f;
};

/// One parameter as a quotient of polynomials in u (text in the expression grammar).
struct ParameterFormula {
  std::string name;
  std::string numerator;
  std::string denominator;
};

/// The six defining quotients, in the order a, b, c, d, e, f.
const std::vector<ParameterFormula>& parameter_formulas();

/// Evaluates the quotients in K. Throws InternalError if a denominator is zero.
Parameters build_parameters();

/// Projective coordinates, in order.
inline const std::vector<std::string>& projective_variables() {
  static const std::vector<std::string> vars{"X", "Y", "Z", "T"};
  return vars;
}

/// (aT+bZ+Y)^2 X^3 + its three cyclic images + the c, d, e, f orbit blocks.
Polynomial<K> build_quintic_form(const Parameters& p);

/// sigma: (X, Y, Z, T) -> (T, X, Y, Z) as a substitution matrix, so that
/// F(sigma x) is substitute_linear(F, cyclic_shift()).
LinearMap4 cyclic_shift();

Point4 make_point(long x, long y, long z, long t);

struct SurfaceBundle {
  Parameters parameters;
  Polynomial<K> F5;
  LinearMap4 sigma;
  std::array<Point4, 4> reference_points;  // a1..a4, the coordinate points
  Point4 P0;                               // (1, 1, 1, 1)
  Point4 Q0;                               // (1, -1, 1, -1)
  std::array<Point4, 2> line_r;            // spans {X + Z = Y + T = 0}
  std::array<Point4, 2> line_r_prime;      // spans {X - Z = Y - T = 0}
};

SurfaceBundle build_quintic(const Parameters& p);
SurfaceBundle build_quintic(const Parameters& p, const LinearMap4& sigma);

struct InvarianceResult {
  bool strict = false;
  /// Set when f(m x) = lambda f(x) with lambda != 1.
  std::optional<K> scalar;
  /// f(m x) - f(x); zero iff strict.
  Polynomial<K> difference;

  bool holds() const { return strict || scalar.has_value(); }
};

InvarianceResult check_invariance(const Polynomial<K>& f, const LinearMap4& m);
inline InvarianceResult check_sigma_invariance(const SurfaceBundle& s) { return check_invariance(s.F5, s.sigma); }

/// True iff m(p) is a nonzero multiple of p.
bool is_fixed(const LinearMap4& m, const Point4& p);

struct FixedPointReport {
  bool p0_fixed = false;
  bool q0_fixed = false;
  bool r_fixed_pointwise = false;
  bool r_prime_fixed_pointwise = false;
  /// The combination p + c*q used as the third point on each line.
  K combination;

  bool all() const { return p0_fixed && q0_fixed && r_fixed_pointwise && r_prime_fixed_pointwise; }
};

/// sigma fixes P0 and Q0; sigma^2 fixes both spanning points of r and r' and
/// one further combination on each line (three fixed points of a line under a
/// linear map force it to be fixed pointwise).
FixedPointReport check_fixed_points(const SurfaceBundle& s, const K& combination = K(Rational(3, 7), 2, -1));

struct LineReport {
  BinaryForm<K> on_r;
  BinaryForm<K> on_r_prime;
  SquarefreeWitness<K> r_prime_squarefree;
  /// F5 restricted to r' at the parameter (1, -1) of Q0.
  K value_at_q0;

  bool r_contained() const { return on_r.is_zero(); }
  bool r_prime_ok() const {
    return !on_r_prime.is_zero() && on_r_prime.degree() == 5 &&
           r_prime_squarefree.squarefree && value_at_q0.is_zero();
  }
};

LineReport check_line_containment(const SurfaceBundle& s);

Point4 gradient(const Polynomial<K>& f, const Point4& p);
/// f(p) = 0 and every partial vanishes at p.
bool is_critical_point(const Polynomial<K>& f, const Point4& p);

struct CriticalPointReport {
  int index = 0;  // 1..4
  K value;
  Point4 gradient;
  /// Chart variables (the three coordinates other than the chart one).
  Polynomial<K> quadratic_part;
  Eigen::Index hessian_rank = 0;
  Polynomial<K> linear_form;
  K scale;
};

/// For each a_i: F5(a_i) = 0, the gradient vanishes, and the quadratic part in
/// the chart at a_i is scale * L^2. Throws CheckFailed naming the point and the
/// witness otherwise.
std::vector<CriticalPointReport> check_critical_points(const SurfaceBundle& s);

/// Both generators YT and XZ of the quadric pencil vanish at every a_i.
bool check_quadric_base_points(const SurfaceBundle& s);

/// Determinant of the matrix with columns a1..a4 (nonzero: not coplanar).
K reference_point_determinant(const SurfaceBundle& s);

/// sigma^4 is exactly the identity matrix.
bool sigma_has_order_four(const LinearMap4& sigma);

/// Parameters and F5 in the expression grammar; with `real_digits`, each
/// coefficient is followed by its certified decimal enclosure.
std::string dump_quintic(const SurfaceBundle& s, std::optional<int> real_digits = {});

}  // namespace godeaux
