#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "godeaux/eigen_support.hpp"
#include "godeaux/rational.hpp"

namespace godeaux {

class DivisorClass;

/// Named basis classes with a symmetric Gram matrix of pairings and an
/// optional canonical class.
class Lattice {
 public:
  Lattice(std::vector<std::string> basis, RationalMatrix gram, std::optional<RationalVector> canonical = {});

  const std::vector<std::string>& basis() const { return basis_; }
  const RationalMatrix& gram() const { return gram_; }
  std::size_t rank() const { return basis_.size(); }
  const std::optional<RationalVector>& canonical() const { return canonical_; }

  /// Throws LatticeMismatch for names outside the basis.
  std::size_t index(std::string_view name) const;
  bool has(std::string_view name) const;

  bool same_as(const Lattice& other) const { return basis_ == other.basis_ && gram_ == other.gram_; }

 private:
  std::vector<std::string> basis_;
  RationalMatrix gram_;
  std::optional<RationalVector> canonical_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

/// Diagonal Gram matrix.
LatticePtr make_diagonal_lattice(std::vector<std::string> basis, const std::vector<Rational>& squares);

/// Rational combination of basis classes.
class DivisorClass {
 public:
  DivisorClass(LatticePtr lattice, RationalVector coefficients);

  static DivisorClass zero(const LatticePtr& lattice);
  static DivisorClass basis(const LatticePtr& lattice, std::string_view name);

  const LatticePtr& lattice() const { return lattice_; }
  const RationalVector& coefficients() const { return coeffs_; }
  Rational coefficient(std::string_view name) const { return coeffs_(static_cast<Eigen::Index>(lattice_->index(name))); }
  bool is_zero() const;

  /// The same coefficients read in another lattice with the same basis size.
  DivisorClass in(const LatticePtr& other) const;

  DivisorClass& operator+=(const DivisorClass& rhs);
  DivisorClass& operator-=(const DivisorClass& rhs);
  DivisorClass& operator*=(const Rational& s);

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rational& s, DivisorClass a) { return a *= s; }
  friend DivisorClass operator*(DivisorClass a, const Rational& s) { return a *= s; }
  friend DivisorClass operator-(DivisorClass a) { return a *= Rational(-1); }

  /// "4h - 2e1_0 + 1/2 C1"; "0" for the zero class.
  std::string to_string() const;

 private:
  LatticePtr lattice_;
  RationalVector coeffs_;
};

void require_same_lattice(const DivisorClass& a, const DivisorClass& b);

/// Bilinear pairing through the Gram matrix. Throws LatticeMismatch.
Rational pair(const DivisorClass& a, const DivisorClass& b);
inline Rational square(const DivisorClass& d) { return pair(d, d); }

/// Coefficientwise equality. Throws LatticeMismatch.
bool class_equal(const DivisorClass& a, const DivisorClass& b);

/// Throws MissingCanonicalClass.
DivisorClass canonical_class(const LatticePtr& lattice);

/// 1 + (D^2 + D.K) / 2.
Rational adjunction_genus(const DivisorClass& d);

/// A blown-up point, optionally carrying one infinitely near point.
struct BlowUpPoint {
  std::string name;
  bool infinitely_near = false;
};

/// Basis h, then e_<name> for a simple point, or e1_<name>, e2_<name> (total
/// transforms) for a point with an infinitely near child. Gram diag(1, -1, ...),
/// canonical class -3h + sum of all exceptionals.
struct BlowUp {
  LatticePtr lattice;

  DivisorClass line() const { return DivisorClass::basis(lattice, "h"); }
  /// Exceptional curve of a simple point.
  DivisorClass exceptional(std::string_view point) const;
  /// Proper transform e1 - e2 of the first exceptional curve (square -2).
  DivisorClass first_proper(std::string_view point) const;
  /// Last exceptional curve e2 (square -1).
  DivisorClass second(std::string_view point) const;
};

BlowUp blowup_basis(const std::vector<BlowUpPoint>& points);

/// Classes pulled back along a double cover branched over `branch`. The
/// cover lattice has basis p_<name>, Gram 2G and canonical class
/// p^*(K + branch/2). Divisibility of the branch class by 2 is assumed, not checked.
struct DoubleCover {
  LatticePtr base;
  LatticePtr lattice;
  DivisorClass branch;

  DivisorClass pullback(const DivisorClass& d) const;
  /// Reduced preimage (1/2) p^*C of a branch component C. Throws
  /// OddBranchComponent if C^2 is odd.
  DivisorClass reduced_preimage(const DivisorClass& component) const;
};

/// Throws MissingCanonicalClass, OddBranchComponent if branch^2 is odd.
DoubleCover double_cover_pullback(const DivisorClass& branch);

/// Contraction of a (-1)-class e: classes are projected to e-perp by
/// D -> D + (D.e) e; the canonical class becomes K - e.
struct BlowDown {
  LatticePtr before;
  LatticePtr lattice;  // same basis and Gram, new canonical class
  DivisorClass exceptional;

  DivisorClass pushforward(const DivisorClass& d) const;
  /// Pullback of a class on the contracted surface (orthogonal to e).
  DivisorClass pullback(const DivisorClass& d) const;
};

/// Throws InvalidBlowDown unless e^2 = -1 and e.K = -1.
BlowDown blow_down(const DivisorClass& e);

/// Topological Euler number after blowing up `points` points.
long euler_after_blowups(long euler, long points);
/// e(cover) = 2 e(base) - e(branch).
long euler_double_cover(long base, long branch);
/// e(base) = (e(cover) + e(branch)) / 2.
Rational euler_of_quotient(long cover, long branch);

struct SurfaceInvariants {
  long chi = 0;
  long k_squared = 0;
  long euler = 0;
  std::optional<long> pg;
  std::optional<long> q;
};

/// 12 chi = K^2 + e, and chi = 1 - q + pg when pg and q are given.
bool noether_check(const SurfaceInvariants& inv);

struct PairingConstraint {
  DivisorClass test;
  Rational target;  // value of (unknown . test)
};

struct ClassSolution {
  RationalVector coefficients;  // over the unknown classes; free directions set to 0
  Eigen::Index rank = 0;
  Eigen::Index nullity = 0;
  DivisorClass combination;     // sum of coefficients * unknowns
};

/// Finds x with (sum x_k U_k) . T_j = target_j for every constraint. Throws
/// InconsistentSystem (with rank data) when no solution exists.
ClassSolution solve_class(const std::vector<DivisorClass>& unknowns, const std::vector<PairingConstraint>& constraints);

}  // namespace godeaux
