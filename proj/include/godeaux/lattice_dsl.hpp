#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "godeaux/divisor.hpp"

namespace godeaux {

/// A declared lattice plus named classes.
///
/// Declaration format, one statement per line, '#' starts a comment:
///
///   basis H E1 E2 E3 E4 R        basis names, in order (once, first)
///   gram H H 5                   sets H.H (and the symmetric entry)
///   canonical H - E1 - E2 - E3 - E4
///   let A = 3K - R               binds a name to a class expression
///
/// Unset Gram entries are 0. After `canonical`, the name K refers to the
/// canonical class unless it is a basis name.
struct LatticeEnvironment {
  LatticePtr lattice;
  std::map<std::string, DivisorClass, std::less<>> names;
};

using LatticeValue = std::variant<Rational, DivisorClass>;

/// Throws ParseError with the line number folded into the message.
LatticeEnvironment parse_lattice_declarations(std::string_view text);

/// Evaluates an expression: rational numbers, class names, + and -, '*' or
/// juxtaposition for scaling ("3K"), '/' by a number, '.' for the pairing
/// ("(3K-R).(3K-R)"), and genus(D).
LatticeValue evaluate_lattice_expression(const LatticeEnvironment& env, std::string_view text);

std::string to_string(const LatticeValue& value);

}  // namespace godeaux
