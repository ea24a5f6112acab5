#pragma once

#include <Eigen/Core>

#include "godeaux/number_field.hpp"
#include "godeaux/rational.hpp"

namespace Eigen {

// Exact scalars: no rounding, so the precision hooks return zero. Only the
// structural parts of Eigen (storage, products, comparisons) are used with
// these types; decompositions go through godeaux/exact_linalg.hpp.
template <>
struct NumTraits<godeaux::Rational> : GenericNumTraits<godeaux::Rational> {
  using Real = godeaux::Rational;
  using NonInteger = godeaux::Rational;
  using Nested = godeaux::Rational;
  using Literal = godeaux::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<godeaux::NumberFieldElement> : GenericNumTraits<godeaux::NumberFieldElement> {
  using Real = godeaux::NumberFieldElement;
  using NonInteger = godeaux::NumberFieldElement;
  using Nested = godeaux::NumberFieldElement;
  using Literal = godeaux::NumberFieldElement;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 12,
    AddCost = 48,
    MulCost = 300
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace godeaux {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

template <int Rows, int Cols>
using KMatrix = Eigen::Matrix<NumberFieldElement, Rows, Cols>;
template <int Rows>
using KVector = Eigen::Matrix<NumberFieldElement, Rows, 1>;

/// Linear change of the projective coordinates (X, Y, Z, T).
using LinearMap4 = KMatrix<4, 4>;
using Point4 = KVector<4>;

}  // namespace godeaux
