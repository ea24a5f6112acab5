#include "godeaux/quintic.hpp"

#include <sstream>

#include "godeaux/error.hpp"
#include "godeaux/exact_linalg.hpp"
#include "godeaux/expr_parser.hpp"

namespace godeaux {

namespace {

using Poly = Polynomial<K>;

Poly parse4(std::string_view text) { return parse_polynomial(text, projective_variables()); }

K parse_scalar(const std::string& text) { return K::parse(text); }

}  // namespace

const std::vector<ParameterFormula>& parameter_formulas() {
  static const std::vector<ParameterFormula> formulas{
      {"a", "u^2", "1"},
      {"b", "-(u^2 - u + 1)", "2u^2 - 4u + 1"},
      {"c", "-(34u^2 - 18u - 7)", "29u^2 + 22u - 33"},
      {"d", "7u^2 + 4u - 6", "3u - 2"},
      {"e", "-(3u^2 + 6u - 8)", "3u^2 + u - 2"},
      {"f", "-(225u^2 - 156u - 10)", "5u^2 + 212u - 163"},
  };
  return formulas;
}

Parameters build_parameters() {
  std::vector<K> values;
  for (const auto& formula : parameter_formulas()) {
    const K den = parse_scalar(formula.denominator);
    if (den.is_zero()) throw InternalError("denominator of " + formula.name + " vanishes in K");
    values.push_back(parse_scalar(formula.numerator) / den);
  }
  return {values[0], values[1], values[2], values[3], values[4], values[5]};
}

Poly build_quintic_form(const Parameters& p) {
  const auto& vars = projective_variables();
  const Poly X = Poly::variable(vars, 0), Y = Poly::variable(vars, 1), Z = Poly::variable(vars, 2),
             T = Poly::variable(vars, 3);
  auto square_cube = [&](const Poly& l1, const Poly& l2, const Poly& l3, const Poly& cube) {
    const Poly l = l1 * p.a + l2 * p.b + l3;
    return l.pow(2) * cube.pow(3);
  };
  Poly f = square_cube(T, Z, Y, X) + square_cube(X, T, Z, Y) + square_cube(Y, X, T, Z) + square_cube(Z, Y, X, T);
  f += parse4("X^2*Y*Z*T + X*Y^2*Z*T + X*Y*Z^2*T + X*Y*Z*T^2") * p.c;
  f += parse4("X^2*Y^2*Z + X^2*Y*T^2 + X*Z^2*T^2 + Y^2*Z^2*T") * p.d;
  f += parse4("X^2*Y^2*T + X^2*Z*T^2 + X*Y^2*Z^2 + Y*Z^2*T^2") * p.e;
  f += parse4("X^2*Y*Z^2 + X^2*Z^2*T + X*Y^2*T^2 + Y^2*Z*T^2") * p.f;
  return f;
}

LinearMap4 cyclic_shift() {
  LinearMap4 m = LinearMap4::Zero();
  m(0, 3) = K(1);  // X -> T
  m(1, 0) = K(1);  // Y -> X
  m(2, 1) = K(1);  // Z -> Y
  m(3, 2) = K(1);  // T -> Z
  return m;
}

Point4 make_point(long x, long y, long z, long t) {
  Point4 p;
  p << K(x), K(y), K(z), K(t);
  return p;
}

SurfaceBundle build_quintic(const Parameters& p) { return build_quintic(p, cyclic_shift()); }

SurfaceBundle build_quintic(const Parameters& p, const LinearMap4& sigma) {
  SurfaceBundle s;
  s.parameters = p;
  s.F5 = build_quintic_form(p);
  s.sigma = sigma;
  s.reference_points = {make_point(1, 0, 0, 0), make_point(0, 1, 0, 0), make_point(0, 0, 1, 0),
                        make_point(0, 0, 0, 1)};
  s.P0 = make_point(1, 1, 1, 1);
  s.Q0 = make_point(1, -1, 1, -1);
  s.line_r = {make_point(1, 0, -1, 0), make_point(0, 1, 0, -1)};
  s.line_r_prime = {make_point(1, 0, 1, 0), make_point(0, 1, 0, 1)};
  return s;
}

InvarianceResult check_invariance(const Poly& f, const LinearMap4& m) {
  InvarianceResult out;
  const Poly image = substitute_linear(f, m);
  out.difference = image - f;
  out.strict = out.difference.is_zero();
  if (out.strict || f.is_zero() || image.is_zero()) return out;
  const auto& [mono, lead] = *f.terms().begin();
  const K lambda = image.coefficient(mono) / lead;
  if (!lambda.is_zero() && image == f * lambda) out.scalar = lambda;
  return out;
}

bool is_fixed(const LinearMap4& m, const Point4& p) { return projectively_equal(Point4(m * p), p); }

FixedPointReport check_fixed_points(const SurfaceBundle& s, const K& combination) {
  FixedPointReport out;
  out.combination = combination;
  const LinearMap4 sigma2 = s.sigma * s.sigma;
  out.p0_fixed = is_fixed(s.sigma, s.P0);
  out.q0_fixed = is_fixed(s.sigma, s.Q0);
  auto line_fixed = [&](const std::array<Point4, 2>& line) {
    const Point4 third = line[0] + line[1] * combination;
    return is_fixed(sigma2, line[0]) && is_fixed(sigma2, line[1]) && is_fixed(sigma2, third);
  };
  out.r_fixed_pointwise = line_fixed(s.line_r);
  out.r_prime_fixed_pointwise = line_fixed(s.line_r_prime);
  return out;
}

LineReport check_line_containment(const SurfaceBundle& s) {
  auto on_r = restrict_to_line(s.F5, s.line_r[0], s.line_r[1]);
  auto on_r_prime = restrict_to_line(s.F5, s.line_r_prime[0], s.line_r_prime[1]);
  SquarefreeWitness<K> sq;
  if (!on_r_prime.is_zero()) sq = binary_form_squarefree(on_r_prime);
  const K at_q0 = on_r_prime(K(1), K(-1));
  return {std::move(on_r), std::move(on_r_prime), sq, at_q0};
}

Point4 gradient(const Poly& f, const Point4& p) {
  Point4 g;
  for (int i = 0; i < 4; ++i) g(i) = evaluate(partial(f, f.variables()[static_cast<std::size_t>(i)]), p);
  return g;
}

bool is_critical_point(const Poly& f, const Point4& p) {
  if (!evaluate(f, p).is_zero()) return false;
  const Point4 g = gradient(f, p);
  for (int i = 0; i < 4; ++i)
    if (!g(i).is_zero()) return false;
  return true;
}

std::vector<CriticalPointReport> check_critical_points(const SurfaceBundle& s) {
  std::vector<CriticalPointReport> out;
  for (int i = 0; i < 4; ++i) {
    const Point4& a = s.reference_points[static_cast<std::size_t>(i)];
    const std::string where = "a" + std::to_string(i + 1);
    CriticalPointReport r;
    r.index = i + 1;
    r.value = evaluate(s.F5, a);
    if (!r.value.is_zero()) throw CheckFailed(where + ": F5 = " + r.value.to_string());
    r.gradient = gradient(s.F5, a);
    for (int k = 0; k < 4; ++k) {
      if (!r.gradient(k).is_zero()) {
        throw CheckFailed(where + ": dF5/d" + projective_variables()[static_cast<std::size_t>(k)] + " = " +
                          r.gradient(k).to_string());
      }
    }
    const Poly local = dehomogenize(s.F5, projective_variables()[static_cast<std::size_t>(i)]);
    r.quadratic_part = local.homogeneous_part(2);
    const auto split = split_rank_one_square(r.quadratic_part);
    r.hessian_rank = split.rank;
    if (!split.linear_form) {
      throw CheckFailed(where + ": quadratic part " + r.quadratic_part.to_string() + " has rank " +
                        std::to_string(split.rank));
    }
    r.linear_form = *split.linear_form;
    r.scale = split.scale;
    out.push_back(std::move(r));
  }
  return out;
}

bool check_quadric_base_points(const SurfaceBundle& s) {
  const Poly yt = parse4("Y*T"), xz = parse4("X*Z");
  for (const auto& a : s.reference_points)
    if (!evaluate(yt, a).is_zero() || !evaluate(xz, a).is_zero()) return false;
  return true;
}

K reference_point_determinant(const SurfaceBundle& s) {
  LinearMap4 m;
  for (int j = 0; j < 4; ++j) m.col(j) = s.reference_points[static_cast<std::size_t>(j)];
  return exact_determinant(m);
}

bool sigma_has_order_four(const LinearMap4& sigma) {
  const LinearMap4 s2 = sigma * sigma;
  return LinearMap4(s2 * s2) == LinearMap4::Identity();
}

std::string dump_quintic(const SurfaceBundle& s, std::optional<int> real_digits) {
  std::ostringstream os;
  const K* values[] = {&s.parameters.a, &s.parameters.b, &s.parameters.c,
                       &s.parameters.d, &s.parameters.e, &s.parameters.f};
  os << "# K = Q[u]/(u^3 + u^2 - 1)\n";
  for (std::size_t i = 0; i < 6; ++i) {
    os << parameter_formulas()[i].name << " = " << *values[i];
    if (real_digits) os << "    ~ " << embed_real(*values[i], *real_digits).to_string();
    os << "\n";
  }
  os << "F5 = " << s.F5 << "\n";
  if (real_digits) {
    os << "# coefficient enclosures, " << *real_digits << " digits\n";
    for (const auto& [m, c] : s.F5.terms()) {
      const Poly mono = Poly::term(projective_variables(), m, K(1));
      os << mono << "\t" << embed_real(c, *real_digits).to_string() << "\n";
    }
  }
  return os.str();
}

}  // namespace godeaux
