#include <doctest.h>

#include "godeaux/error.hpp"
#include "godeaux/expr_parser.hpp"
#include "godeaux/quintic.hpp"

using namespace godeaux;

namespace {

K q(long c0, long c1, long c2, long den) { return {Rational(c0, den), Rational(c1, den), Rational(c2, den)}; }

// Reduced forms of the six quotients, computed separately with a CAS
// (polynomial division modulo u^3 + u^2 - 1 over Q).
Parameters reference_parameters() {
  return {K(0, 0, 1),          q(1, 5, 3, 7),    q(163, 241, 181, 49),
          q(18, 13, -2, 7),    q(9, 24, -1, 7),  q(92, 75, 73, 49)};
}

Polynomial<K> P(std::string_view text) { return parse_polynomial(text, projective_variables()); }

// Exponent vector of the image of X^e0 Y^e1 Z^e2 T^e3 under X -> T, Y -> X, Z -> Y, T -> Z.
Monomial shifted(const Monomial& m) { return Monomial{m[1], m[2], m[3], m[0]}; }

}  // namespace

TEST_CASE("build_parameters") {
  const auto p = build_parameters();
  const auto ref = reference_parameters();
  CHECK(p.a == ref.a);
  CHECK(p.b == ref.b);
  CHECK(p.c == ref.c);
  CHECK(p.d == ref.d);
  CHECK(p.e == ref.e);
  CHECK(p.f == ref.f);

  // b times its denominator recovers the numerator.
  const K u = K::generator();
  CHECK(p.b * (K(2) * u * u - K(4) * u + K(1)) == -(u * u - u + K(1)));

  const auto b_real = embed_real(p.b, 6);
  CHECK(b_real.bounds.width() < Rational(1, 1000000));
}

TEST_CASE("build_quintic") {
  const auto s = build_quintic(build_parameters());
  CHECK(s.F5.is_homogeneous());
  CHECK(s.F5.total_degree() == 5);
  CHECK(s.F5.coefficient(Monomial{3, 2, 0, 0}) == K(1));
  CHECK(s.F5.coefficient(Monomial{2, 1, 1, 1}) == s.parameters.c);
  CHECK(s.F5.coefficient(Monomial{0, 2, 1, 2}) == s.parameters.f);
  // X^3 T^2 comes only from (aT + bZ + Y)^2 X^3.
  CHECK(s.F5.coefficient(Monomial{3, 0, 0, 2}) == s.parameters.a * s.parameters.a);
  CHECK(P("X^2*Y*Z*T + X*Y^2*Z*T + X*Y*Z^2*T + X*Y*Z*T^2").size() == 4);
}

TEST_CASE("sigma invariance") {
  const auto s = build_quintic(build_parameters());
  const auto inv = check_sigma_invariance(s);
  CHECK(inv.strict);
  CHECK(inv.difference.is_zero());

  // Independent route: the term map is closed under the cyclic shift.
  for (const auto& [m, c] : s.F5.terms()) CHECK(s.F5.coefficient(shifted(m)) == c);

  const LinearMap4 sigma2 = s.sigma * s.sigma;
  CHECK(check_invariance(P("X*Z"), sigma2).strict);
  CHECK(check_invariance(P("Y*T"), sigma2).strict);

  const auto fifth = check_invariance(P("X^5"), s.sigma);
  CHECK(!fifth.holds());
  CHECK(fifth.difference == P("T^5 - X^5"));

  // Projective but not strict invariance is reported with its scalar.
  const auto anti = check_invariance(P("X - Y + Z - T"), s.sigma);
  CHECK(!anti.strict);
  REQUIRE(anti.scalar.has_value());
  CHECK(*anti.scalar == K(-1));

  CHECK(sigma_has_order_four(s.sigma));
  CHECK(!sigma_has_order_four(LinearMap4(s.sigma * K(2))));
}

TEST_CASE("fixed points") {
  const auto s = build_quintic(build_parameters());
  const auto r = check_fixed_points(s);
  CHECK(r.p0_fixed);
  CHECK(r.q0_fixed);
  CHECK(r.r_fixed_pointwise);
  CHECK(r.r_prime_fixed_pointwise);
  CHECK(!is_fixed(s.sigma, make_point(1, 2, 3, 4)));
  CHECK(is_fixed(LinearMap4(s.sigma * s.sigma), make_point(1, 2, 1, 2)));
}

TEST_CASE("values at fixed points") {
  const auto s = build_quintic(build_parameters());
  CHECK(evaluate(s.F5, s.Q0).is_zero());
  for (const auto& a : s.reference_points) CHECK(evaluate(s.F5, a).is_zero());
}

TEST_CASE("line containment") {
  const auto s = build_quintic(build_parameters());
  const auto lines = check_line_containment(s);
  CHECK(lines.r_contained());
  CHECK(lines.on_r_prime.degree() == 5);
  CHECK(!lines.on_r_prime.is_zero());
  CHECK(lines.r_prime_squarefree.squarefree);
  CHECK(!lines.r_prime_squarefree.resultant.is_zero());
  CHECK(lines.value_at_q0.is_zero());
  CHECK(lines.r_prime_ok());

  // F5 on r' is (s + t) times a quartic: direct evaluation at three points.
  CHECK(lines.on_r_prime(K(2), K(-2)).is_zero());
  CHECK(!lines.on_r_prime(K(1), K(0)).is_zero());
}

TEST_CASE("critical points") {
  const auto s = build_quintic(build_parameters());
  const auto reports = check_critical_points(s);
  REQUIRE(reports.size() == 4);
  const auto& p = s.parameters;
  const std::vector<std::string> yzt{"Y", "Z", "T"};
  const auto l = parse_polynomial("Y", yzt) + parse_polynomial("Z", yzt) * p.b + parse_polynomial("T", yzt) * p.a;
  CHECK(reports[0].quadratic_part == l * l);
  CHECK(reports[0].hessian_rank == 1);
  CHECK(reports[0].linear_form * reports[0].linear_form * reports[0].scale == reports[0].quadratic_part);
  for (const auto& r : reports) {
    CHECK(r.hessian_rank == 1);
    CHECK(!r.scale.is_zero());
  }

  // A point of r: on the surface, but the gradient there is not zero.
  const Point4 on_r = make_point(1, 0, -1, 0);
  CHECK(evaluate(s.F5, on_r).is_zero());
  const Point4 g = gradient(s.F5, on_r);
  bool nonzero = false;
  for (int i = 0; i < 4; ++i) nonzero = nonzero || !g(i).is_zero();
  CHECK(nonzero);
  CHECK(!is_critical_point(s.F5, on_r));
}

TEST_CASE("critical point failure names the point") {
  SurfaceBundle s = build_quintic(build_parameters());
  s.F5 += P("X^5");
  CHECK_THROWS_WITH_AS(check_critical_points(s), doctest::Contains("a1"), CheckFailed);
}

TEST_CASE("quadric base points and coplanarity") {
  const auto s = build_quintic(build_parameters());
  CHECK(check_quadric_base_points(s));
  CHECK(reference_point_determinant(s) == K(1));
}

TEST_CASE("dump") {
  const auto s = build_quintic(build_parameters());
  const auto text = dump_quintic(s);
  CHECK(text.find("a = u^2\n") != std::string::npos);
  CHECK(text.find("b = 1/7 + 5/7*u + 3/7*u^2") != std::string::npos);
  const auto real = dump_quintic(s, 8);
  CHECK(real.find("~ [0.56984") != std::string::npos);

  // The printed form parses back to F5.
  const auto pos = text.find("F5 = ");
  const auto line = text.substr(pos + 5, text.find('\n', pos) - pos - 5);
  CHECK(P(line) == s.F5);
}
