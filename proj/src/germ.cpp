#include "godeaux/germ.hpp"

#include <climits>
#include <sstream>

#include "godeaux/error.hpp"
#include "godeaux/exact_linalg.hpp"
#include "godeaux/expr_parser.hpp"

namespace godeaux {

namespace {

using Poly = Polynomial<K>;
using Matrix3 = KMatrix<3, 3>;

const std::vector<std::string>& xyz() {
  static const std::vector<std::string> v{"x", "y", "z"};
  return v;
}

int weight(const Monomial& m) { return m.weighted_degree(kTildeE8Weights); }
int weight2(const Monomial& m) { return 2 * m[0] + m[1]; }

Matrix3 inverse(const Matrix3& b) {
  Matrix3 inv;
  for (int j = 0; j < 3; ++j) {
    KVector<3> e = KVector<3>::Zero();
    e(j) = K(1);
    const auto sol = exact_solve(b, e);
    if (!sol.unique()) throw InternalError("coordinate change is not invertible");
    inv.col(j) = *sol.solution;
  }
  return inv;
}

/// New coordinates are the rows of `b` applied to the old variables; returns
/// the germ in the new variables (x, y, z).
Germ change_coordinates(const Germ& g, const Matrix3& b) {
  const Matrix3 a = inverse(b);
  return g.substituted(linear_forms(a, xyz()));
}

Poly row_form(const Matrix3& m, int row, const std::vector<std::string>& vars) {
  Poly p(vars);
  for (int j = 0; j < 3; ++j) p.add_term(Monomial::unit(3, static_cast<std::size_t>(j)), m(row, j));
  return p;
}

void note(std::vector<std::string>* trace, const std::string& line) {
  if (trace) trace->push_back(line);
}

}  // namespace

Germ localize_form(const Poly& form, std::string_view chart_variable) {
  const Poly local = dehomogenize(form, chart_variable);
  const Poly low = local.filtered([](const Monomial& m) { return m.degree() <= 1; });
  if (!low.is_zero()) throw NotSingular("not a singular point: constant and linear part " + low.to_string());
  return Germ(local);
}

Germ localize(const SurfaceBundle& s, int index) {
  if (index < 1 || index > 4) throw ArityMismatch("reference point index must be 1..4");
  return localize_form(s.F5, projective_variables()[static_cast<std::size_t>(index - 1)]);
}

Germ parse_germ(std::string_view text) {
  std::vector<std::string> vars = xyz();
  std::string body;
  std::istringstream in{std::string(text)};
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (first && line.rfind("vars:", 0) == 0) {
      vars.clear();
      std::istringstream names(line.substr(5));
      for (std::string n; names >> n;) vars.push_back(n);
    } else {
      body += line + " ";
    }
    first = false;
  }
  return Germ(parse_polynomial(body, vars));
}

SquareRoot split_square(const Germ& g) {
  if (g.poly.is_zero() || g.order() < 2) throw NotSingular("germ has order " + std::to_string(g.order()));
  const Poly q = g.poly.homogeneous_part(2);
  const auto split = split_rank_one_square(q);
  if (!split.linear_form) {
    throw RankNotOne("quadratic part " + q.to_string() + " has rank " + std::to_string(split.rank));
  }
  Poly normalized = g.poly;
  normalized *= split.scale.inverse();
  return {*split.linear_form, split.scale, Germ(normalized, g.precision)};
}

Elimination eliminate_square_variable(const Germ& g) {
  if (g.variables().size() != 3) throw ArityMismatch("elimination needs three variables");
  const Monomial z2{0, 0, 2};
  if (g.poly.coefficient(z2) != K(1) || !(g.poly.homogeneous_part(2) == Poly::term(g.variables(), z2, K(1)))) {
    throw InternalError("elimination needs quadratic part exactly z^2");
  }
  Elimination out;
  out.sheared = g;
  int last = -1;
  for (;;) {
    Poly a(g.variables());
    int lowest = INT_MAX;
    for (const auto& [m, c] : out.sheared.poly.terms()) {
      if (m[2] != 1 || m[0] + m[1] == 0 || weight(m) > kTildeE8Weight) continue;
      a.add_term(Monomial{m[0], m[1], 0}, c);
      lowest = std::min(lowest, weight(m));
    }
    if (a.is_zero()) break;
    if (lowest <= last) throw NonConvergent("mixed terms stay at weight " + std::to_string(lowest));
    last = lowest;
    const std::vector<Poly> images{Poly::variable(g.variables(), 0), Poly::variable(g.variables(), 1),
                                   Poly::variable(g.variables(), 2) - a * K(Rational(1, 2))};
    out.sheared = out.sheared.substituted(images);
    ++out.iterations;
  }
  std::vector<std::string> two{g.variables()[0], g.variables()[1]};
  Poly d(two);
  for (const auto& [m, c] : out.sheared.poly.terms())
    if (m[2] == 0) d.add_term(m.without(2), -c);
  out.discriminant = d;
  return out;
}

TripleLine cube_tangent_cone(const Poly& d) {
  if (d.num_variables() != 2) throw ArityMismatch("tangent cone needs a germ in two variables");
  const Poly cubic = d.homogeneous_part(3);
  if (cubic.is_zero()) throw NotATripleLine("cubic part of D vanishes (order " + std::to_string(d.order()) + ")");
  const K A = cubic.coefficient(Monomial{3, 0}), B = cubic.coefficient(Monomial{2, 1}),
          C = cubic.coefficient(Monomial{1, 2}), D = cubic.coefficient(Monomial{0, 3});
  const K b = B / K(3), c = C / K(3);
  // Hessian covariant of A x^3 + 3b x^2 y + 3c x y^2 + D y^3, up to a factor.
  const K h0 = A * c - b * b, h1 = A * D - b * c, h2 = b * D - c * c;
  if (!h0.is_zero() || !h1.is_zero() || !h2.is_zero()) {
    throw NotATripleLine("cubic part " + cubic.to_string() + " is not a cube; Hessian (" + h0.to_string() + ", " +
                         h1.to_string() + ", " + h2.to_string() + ")");
  }
  Poly l(d.variables());
  if (!A.is_zero()) {
    l.add_term(Monomial{1, 0}, K(1));
    l.add_term(Monomial{0, 1}, b / A);
    return {l, A};
  }
  l.add_term(Monomial{0, 1}, K(1));
  return {l, D};
}

K cubic_discriminant(const K& a, const K& b, const K& c) {
  return a * a * b * b - K(4) * b * b * b - K(4) * a * a * a * c - K(27) * c * c + K(18) * a * b * c;
}

TildeE8Certificate tilde_e8_certificate(const Germ& g, std::vector<std::string>* trace) {
  if (g.variables().size() != 3) throw ArityMismatch("certificate needs a germ in three variables");
  TildeE8Certificate cert;

  const SquareRoot root = split_square(g);
  cert.square_root_linear_form = root.linear_form;
  cert.square_scale = root.scale;
  note(trace, "split_square: quadratic part = (" + root.scale.to_string() + ") * (" + root.linear_form.to_string() +
                  ")^2");

  // Provisional coordinates: two unit vectors completing L, then z = L.
  std::size_t k = 0;
  while (root.linear_form.coefficient(Monomial::unit(3, k)).is_zero()) ++k;
  Matrix3 b = Matrix3::Zero();
  for (std::size_t j = 0, row = 0; j < 3; ++j)
    if (j != k) b(static_cast<Eigen::Index>(row++), static_cast<Eigen::Index>(j)) = K(1);
  for (std::size_t j = 0; j < 3; ++j)
    b(2, static_cast<Eigen::Index>(j)) = root.linear_form.coefficient(Monomial::unit(3, j));
  const Germ g1 = change_coordinates(root.normalized, b);

  const Elimination first = eliminate_square_variable(g1);
  note(trace, "provisional D = " + first.discriminant.to_string());
  const TripleLine line = cube_tangent_cone(first.discriminant);
  cert.tangent_cone_linear_form = line.linear_form;
  cert.tangent_cone_scale = line.scale;
  note(trace, "cube_tangent_cone: cubic part = (" + line.scale.to_string() + ") * (" + line.linear_form.to_string() +
                  ")^3");

  // Rotate (x, y) so that x = l.
  const K lx = line.linear_form.coefficient(Monomial{1, 0}), ly = line.linear_form.coefficient(Monomial{0, 1});
  Matrix3 rot = Matrix3::Zero();
  rot(0, 0) = lx;
  rot(0, 1) = ly;
  if (lx.is_zero()) {
    rot(1, 0) = K(1);
  } else {
    rot(1, 1) = K(1);
  }
  rot(2, 2) = K(1);
  const Germ g2 = change_coordinates(g1, rot);
  const Matrix3 total = rot * b;
  for (int r = 0; r < 3; ++r) cert.coordinates[static_cast<std::size_t>(r)] = row_form(total, r, g.variables());
  note(trace, "coordinates: x = " + cert.coordinates[0].to_string() + ", y = " + cert.coordinates[1].to_string() +
                  ", z = " + cert.coordinates[2].to_string());

  const Elimination second = eliminate_square_variable(g2);
  cert.shear_iterations = second.iterations;
  const Poly& d = second.discriminant;
  cert.discriminant_germ = d;
  note(trace, "eliminate_square_variable: " + std::to_string(second.iterations) + " shear(s), D = " + d.to_string());

  const Poly below = d.filtered([](const Monomial& m) { return weight2(m) < kTildeE8Weight; });
  if (!below.is_zero()) throw DegenerateJet("D has terms below weight 6: " + below.to_string());
  const Poly principal = d.filtered([](const Monomial& m) { return weight2(m) == kTildeE8Weight; });
  note(trace, "weight-6 part = " + principal.to_string());
  cert.principal_x3 = principal.coefficient(Monomial{3, 0});
  if (cert.principal_x3.is_zero()) throw DegenerateJet("weight-6 part has no x^3 term: " + principal.to_string());
  const K inv = cert.principal_x3.inverse();
  cert.alpha = principal.coefficient(Monomial{2, 2}) * inv;
  cert.beta = principal.coefficient(Monomial{1, 4}) * inv;
  cert.gamma = principal.coefficient(Monomial{0, 6}) * inv;
  cert.cubic_resolvent_discriminant = cubic_discriminant(cert.alpha, cert.beta, cert.gamma);
  note(trace, "q(s) = s^3 + (" + cert.alpha.to_string() + ") s^2 + (" + cert.beta.to_string() + ") s + (" +
                  cert.gamma.to_string() + "), disc = " + cert.cubic_resolvent_discriminant.to_string());
  return cert;
}

CertificationOutcome certify(const Germ& g) {
  CertificationOutcome out;
  try {
    out.certificate = tilde_e8_certificate(g, &out.trace);
    out.passed = out.certificate->passes();
    out.stage = out.passed ? "passed" : "discriminant";
    if (!out.passed) out.message = "weight-6 part has a repeated factor (disc = 0)";
  } catch (const NotSingular& e) {
    out.stage = "split_square";
    out.message = e.what();
  } catch (const RankNotOne& e) {
    out.stage = "split_square";
    out.message = e.what();
  } catch (const NonConvergent& e) {
    out.stage = "eliminate_square_variable";
    out.message = e.what();
  } catch (const NotATripleLine& e) {
    out.stage = "cube_tangent_cone";
    out.message = e.what();
  } catch (const DegenerateJet& e) {
    out.stage = "principal_part";
    out.message = e.what();
  }
  return out;
}

std::string describe(const CertificationOutcome& outcome) {
  std::ostringstream os;
  for (const auto& line : outcome.trace) os << "  " << line << "\n";
  if (outcome.passed) {
    os << "PASS: weighted-jet nondegeneracy certificate for z^2 + x^3 + y^6 (weights 2, 1, 3)\n";
  } else {
    os << "FAIL at " << outcome.stage << ": " << outcome.message << "\n";
  }
  return os.str();
}

}  // namespace godeaux
