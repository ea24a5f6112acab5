#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "godeaux/mpoly.hpp"
#include "godeaux/number_field.hpp"
#include "godeaux/quintic.hpp"

namespace godeaux {

/// Total-degree bound carried by every germ operation.
inline constexpr int kGermPrecision = 8;

/// Weights of (x, y, z) in the normal form z^2 + x^3 + y^6, and its weight.
inline constexpr std::array<int, 3> kTildeE8Weights{2, 1, 3};
inline constexpr int kTildeE8Weight = 6;

/// Jet of a power series at the origin: all terms of total degree <= precision.
struct Germ {
  Polynomial<K> poly;
  int precision = kGermPrecision;

  Germ() = default;
  explicit Germ(const Polynomial<K>& p, int prec = kGermPrecision) : poly(p.truncated(prec)), precision(prec) {}

  const std::vector<std::string>& variables() const { return poly.variables(); }
  int order() const { return poly.order(); }

  /// g(images), images without constant term; stays exact to `precision`.
  Germ substituted(const std::vector<Polynomial<K>>& images) const {
    return Germ(substitute(poly, images, precision), precision);
  }
};

/// Dehomogenizes a form at `chart_variable`. Throws NotSingular unless the
/// constant and linear parts vanish.
Germ localize_form(const Polynomial<K>& form, std::string_view chart_variable);

/// Germ of F5 at a_index (1..4) in the chart where that coordinate is 1.
Germ localize(const SurfaceBundle& s, int index);

/// Reads a germ in the expression grammar. A first line "vars: a b c" sets the
/// variables; the default is x, y, z.
Germ parse_germ(std::string_view text);

struct SquareRoot {
  Polynomial<K> linear_form;  // L, in the germ's variables
  K scale;                    // quadratic part = scale * L^2
  Germ normalized;            // germ / scale
};

/// Throws NotSingular if ord(g) < 2 and RankNotOne if the quadratic part is
/// not a nonzero multiple of a square.
SquareRoot split_square(const Germ& g);

/// Result of completing the square in z up to weight 6.
struct Elimination {
  Germ sheared;            // after z -> z - A/2, repeated
  Polynomial<K> discriminant;  // D(x, y) = -(z-free part), truncated
  int iterations = 0;
  int validity_weight = kTildeE8Weight;
};

/// `g` is in variables (x, y, z) with quadratic part z^2. Shears z until no
/// term z*h of weight <= 6 remains (weights 2, 1, 3). Throws NonConvergent if
/// the lowest mixed weight stops increasing.
Elimination eliminate_square_variable(const Germ& g);

struct TripleLine {
  Polynomial<K> linear_form;  // l in the two variables of D
  K scale;                    // cubic part = scale * l^3
};

/// Throws NotATripleLine when the cubic part of D is zero or not a cube
/// (tested by the Hessian covariant of the binary cubic).
TripleLine cube_tangent_cone(const Polynomial<K>& d);

/// disc(s^3 + a s^2 + b s + c) = a^2 b^2 - 4 b^3 - 4 a^3 c - 27 c^2 + 18 a b c.
K cubic_discriminant(const K& a, const K& b, const K& c);

struct TildeE8Certificate {
  Polynomial<K> square_root_linear_form;  // L in the input variables
  K square_scale;
  /// Final linear coordinates (x, y, z) as forms in the input variables; z = L.
  std::array<Polynomial<K>, 3> coordinates;
  Polynomial<K> discriminant_germ;         // D(x, y) in final coordinates
  Polynomial<K> tangent_cone_linear_form;  // l in the provisional (x, y)
  K tangent_cone_scale;
  K principal_x3;                          // coefficient of x^3 in D
  K alpha, beta, gamma;                    // weight-6 part / x^3 coefficient
  K cubic_resolvent_discriminant;
  int shear_iterations = 0;
  int validity_weight = kTildeE8Weight;

  bool passes() const { return !cubic_resolvent_discriminant.is_zero(); }
};

/// split_square -> adapted coordinates -> eliminate -> cube_tangent_cone ->
/// rotate so x = l -> eliminate -> no terms below weight 6 -> principal part
/// -> discriminant. Errors from each stage propagate.
TildeE8Certificate tilde_e8_certificate(const Germ& g, std::vector<std::string>* trace = nullptr);

struct CertificationOutcome {
  bool passed = false;
  std::string stage;  // last stage reached: "passed" or the failing stage
  std::string message;
  std::optional<TildeE8Certificate> certificate;
  std::vector<std::string> trace;
};

/// Runs the certificate and turns stage errors into a failed outcome.
CertificationOutcome certify(const Germ& g);

/// Multi-line rendering of every stage.
std::string describe(const CertificationOutcome& outcome);

}  // namespace godeaux
