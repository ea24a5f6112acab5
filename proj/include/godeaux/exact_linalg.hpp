#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

namespace godeaux {

template <typename Derived>
using PlainOf = typename Eigen::MatrixBase<Derived>::PlainObject;

/// Reduced row echelon form over an exact field, with the pivot columns.
template <typename Derived>
struct RowEchelon {
  PlainOf<Derived> reduced;
  std::vector<Eigen::Index> pivots;
  /// Product of the pivots before normalization, times the permutation sign.
  typename Derived::Scalar determinant_factor;
};

template <typename Derived>
RowEchelon<Derived> row_echelon(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  PlainOf<Derived> m = input;
  std::vector<Eigen::Index> pivots;
  Scalar factor(1);
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == m.rows()) {
      factor = Scalar(0);
      continue;
    }
    if (pivot != row) {
      m.row(pivot).swap(m.row(row));
      factor = -factor;
    }
    const Scalar p = m(row, col);
    factor *= p;
    const Scalar inv = Scalar(1) / p;
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == Scalar(0)) continue;
      const Scalar f = m(i, col);
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  if (static_cast<Eigen::Index>(pivots.size()) < m.rows()) factor = Scalar(0);
  return {std::move(m), std::move(pivots), factor};
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Eigen::Index>(row_echelon(m).pivots.size());
}

template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& m) {
  eigen_assert(m.rows() == m.cols());
  return row_echelon(m).determinant_factor;
}

template <typename Scalar>
struct LinearSolve {
  std::optional<Eigen::Matrix<Scalar, Eigen::Dynamic, 1>> solution;  // particular solution if consistent
  Eigen::Index rank = 0;
  Eigen::Index nullity = 0;
  bool consistent = false;

  bool unique() const { return consistent && nullity == 0; }
};

/// Solves A x = b exactly. Free variables of a consistent underdetermined
/// system are set to zero and reported through `nullity`.
template <typename DerivedA, typename DerivedB>
LinearSolve<typename DerivedA::Scalar> exact_solve(const Eigen::MatrixBase<DerivedA>& a,
                                                   const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  eigen_assert(a.rows() == b.rows() && b.cols() == 1);
  Matrix augmented(a.rows(), a.cols() + 1);
  augmented.leftCols(a.cols()) = a;
  augmented.col(a.cols()) = b;
  const auto ech = row_echelon(augmented);

  LinearSolve<Scalar> out;
  out.consistent = ech.pivots.empty() || ech.pivots.back() != a.cols();
  out.rank = static_cast<Eigen::Index>(ech.pivots.size()) - (out.consistent ? 0 : 1);
  out.nullity = a.cols() - out.rank;
  if (!out.consistent) return out;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x(a.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j) x(j) = Scalar(0);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    x(ech.pivots[r]) = ech.reduced(static_cast<Eigen::Index>(r), a.cols());
  }
  out.solution = std::move(x);
  return out;
}

}  // namespace godeaux
