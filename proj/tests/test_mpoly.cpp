#include <doctest.h>

#include "godeaux/eigen_support.hpp"
#include "godeaux/error.hpp"
#include "godeaux/expr_parser.hpp"
#include "godeaux/mpoly.hpp"
#include "support/random.hpp"

using namespace godeaux;

namespace {

const std::vector<std::string> kXYZT{"X", "Y", "Z", "T"};

Polynomial<K> P(std::string_view text) { return parse_polynomial(text, kXYZT); }

Point4 point(long x, long y, long z, long t) {
  Point4 p;
  p << K(x), K(y), K(z), K(t);
  return p;
}

}  // namespace

TEST_CASE("parse and print") {
  CHECK(P("X^2 - Y^2").to_string() == "X^2 - Y^2");
  CHECK(P("3X Y + (1/2)T").to_string() == "3*X*Y + 1/2*T");
  CHECK(P("u X").to_string() == "u*X");
  CHECK(P("(1 + u) X^2").to_string() == "(1 + u)*X^2");
  CHECK(P("-X + 2").to_string() == "-X + 2");
  CHECK(P("0").is_zero());
  CHECK(P("X - X").to_string() == "0");
  CHECK_THROWS_AS(P("X / Y"), ParseError);
  CHECK_THROWS_AS(P("W"), UnknownVariable);
  CHECK_THROWS_AS(P("(X + Y"), ParseError);
  CHECK_THROWS_AS(P("X^"), ParseError);

  testing::RandomSource rng(21);
  for (int i = 0; i < 50; ++i) {
    const auto f = rng.polynomial(kXYZT, 4, 6);
    CHECK(P(f.to_string()) == f);
  }
}

TEST_CASE("poly_mul") {
  CHECK(P("X + Y") * P("X - Y") == P("X^2 - Y^2"));
  const auto f = P("u X^2 + 3 Y Z - T");
  CHECK(f * P("1") == f);
  CHECK_THROWS_AS(f * parse_polynomial("x", {"x"}), VariableMismatch);

  // (aT + bZ + Y)^2 X^3 with symbolic-looking parameters: six monomials.
  const auto sq = P("(u^2 T + (1/7 + 5/7 u) Z + Y)^2 X^3");
  CHECK(sq.size() == 6);
  // Schoolbook: coefficient of X^3 Y Z is 2b.
  CHECK(sq.coefficient(Monomial{3, 1, 1, 0}) == K(2) * K(Rational(1, 7), Rational(5, 7), 0));
  CHECK(P("X + 1").pow(5, 2) == P("10X^2 + 5X + 1"));
}

TEST_CASE("ring axioms on random polynomials") {
  testing::RandomSource rng(22);
  for (int i = 0; i < 60; ++i) {
    const auto f = rng.polynomial(kXYZT, 3, 4), g = rng.polynomial(kXYZT, 3, 4), h = rng.polynomial(kXYZT, 3, 4);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f * g == g * f);
    CHECK(f - f == Polynomial<K>(kXYZT));
  }
}

TEST_CASE("eval") {
  CHECK(evaluate(P("X + Y + Z + T"), point(1, 1, 1, 1)) == K(4));
  CHECK(evaluate(P("u X^2 - Y"), point(2, 1, 0, 0)) == K(0, 4, 0) - K(1));
  std::vector<K> short_point{K(1)};
  CHECK_THROWS_AS(evaluate(P("X"), std::span<const K>(short_point)), ArityMismatch);
}

TEST_CASE("partial") {
  CHECK(partial(P("X^3"), "X") == P("3X^2"));
  CHECK(partial(P("7"), "X").is_zero());
  CHECK_THROWS_AS(partial(P("X"), "W"), UnknownVariable);

  testing::RandomSource rng(23);
  for (int i = 0; i < 50; ++i) {
    const auto f = rng.polynomial(kXYZT, 5, 6);
    CHECK(partial(partial(f, "X"), "Y") == partial(partial(f, "Y"), "X"));
  }
}

TEST_CASE("Euler relation for forms") {
  testing::RandomSource rng(24);
  for (int i = 0; i < 40; ++i) {
    const int d = static_cast<int>(rng.integer(1, 5));
    const auto f = rng.polynomial(kXYZT, d, 6).homogeneous_part(d);
    Polynomial<K> euler(kXYZT);
    for (const auto& v : kXYZT) euler += Polynomial<K>::variable(kXYZT, v) * partial(f, v);
    CHECK(euler == f * K(d));
  }
}

TEST_CASE("substitute_linear") {
  LinearMap4 sigma = LinearMap4::Zero();
  sigma(0, 3) = sigma(1, 0) = sigma(2, 1) = sigma(3, 2) = K(1);
  CHECK(substitute_linear(P("X"), sigma) == P("T"));
  CHECK(substitute_linear(P("X Z"), LinearMap4(sigma * sigma)) == P("Z X"));
  const auto f = P("u X^3 + Y Z T - 2 Z^2 X");
  CHECK(substitute_linear(f, LinearMap4::Identity()) == f);

  Eigen::Matrix<K, 3, 3> small = Eigen::Matrix<K, 3, 3>::Identity();
  CHECK_THROWS_AS(substitute_linear(parse_polynomial("x", {"x", "y"}), small), ArityMismatch);
}

TEST_CASE("eval commutes with linear substitution") {
  testing::RandomSource rng(25);
  for (int i = 0; i < 40; ++i) {
    const auto f = rng.polynomial(kXYZT, 4, 5);
    const LinearMap4 m = rng.linear_map();
    const Point4 p = rng.point();
    CHECK(evaluate(substitute_linear(f, m), p) == evaluate(f, Point4(m * p)));
  }
}

TEST_CASE("truncated substitution matches full substitution below the bound") {
  testing::RandomSource rng(26);
  const std::vector<std::string> xyz{"x", "y", "z"};
  for (int i = 0; i < 20; ++i) {
    const auto f = rng.polynomial(xyz, 5, 6);
    std::vector<Polynomial<K>> images;
    for (int k = 0; k < 3; ++k) {
      auto img = rng.polynomial(xyz, 3, 4);
      img.add_term(Monomial(3), -img.coefficient(Monomial(3)));
      images.push_back(img);
    }
    CHECK(substitute(f, images, 4) == substitute(f, images).truncated(4));
  }
  std::vector<Polynomial<K>> with_constant{parse_polynomial("x + 1", xyz), parse_polynomial("y", xyz),
                                           parse_polynomial("z", xyz)};
  CHECK_THROWS_AS(substitute(parse_polynomial("x", xyz), with_constant, 3), InternalError);
}

TEST_CASE("dehomogenize") {
  CHECK(dehomogenize(P("X^2 Y"), "X") == parse_polynomial("Y", {"Y", "Z", "T"}));
  CHECK_THROWS_AS(dehomogenize(P("X^2 + X"), "X"), NotHomogeneous);
  CHECK(dehomogenize(P("X Y + Z T"), "T") == parse_polynomial("X Y + Z", {"X", "Y", "Z"}));
}

TEST_CASE("restrict_to_line") {
  const auto b = restrict_to_line(P("X"), point(1, 0, 0, 0), point(0, 1, 0, 0));
  CHECK(b.degree() == 1);
  CHECK(b.to_string() == "s");
  const auto zero = restrict_to_line(P("X + Z"), point(1, 0, -1, 0), point(0, 1, 0, -1));
  CHECK(zero.is_zero());
  CHECK_THROWS_AS(restrict_to_line(P("X"), point(1, 2, 0, 0), point(2, 4, 0, 0)), CoincidentPoints);
  CHECK_THROWS_AS(restrict_to_line(P("X + 1"), point(1, 0, 0, 0), point(0, 1, 0, 0)), NotHomogeneous);
}

TEST_CASE("binary_form_squarefree") {
  const std::vector<std::string> st{"s", "t"};
  const auto quintic = BinaryForm<K>::from_polynomial(parse_polynomial("s^5 - t^5", st), 5);
  const auto w = binary_form_squarefree(quintic);
  CHECK(w.squarefree);
  CHECK(!w.resultant.is_zero());

  const auto repeated = BinaryForm<K>::from_polynomial(parse_polynomial("s^2 t^3", st), 5);
  const auto r = binary_form_squarefree(repeated);
  CHECK(!r.squarefree);
  CHECK(r.resultant.is_zero());

  // Root at infinity (t-axis) forces a shear.
  const auto at_infinity = BinaryForm<K>::from_polynomial(parse_polynomial("s t^2 - s^2 t", st), 3);
  const auto a = binary_form_squarefree(at_infinity);
  CHECK(a.squarefree);
  CHECK(a.shear > 0);

  CHECK_THROWS_AS(binary_form_squarefree(BinaryForm<K>(2, {K(0), K(0), K(0)})), ZeroForm);
}

TEST_CASE("projective points") {
  CHECK(projectively_equal(point(1, 2, 3, 4), point(-2, -4, -6, -8)));
  CHECK(!projectively_equal(point(1, 2, 3, 4), point(1, 2, 3, 5)));
  CHECK(!projectively_equal(point(0, 0, 0, 0), point(0, 0, 0, 0)));
  using P4 = ProjectivePoint<K, 4>;
  CHECK(P4(point(1, -1, 1, -1)) == P4(point(-3, 3, -3, 3)));
  CHECK_THROWS_AS(P4(point(0, 0, 0, 0)), Error);
}
