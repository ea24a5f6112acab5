#include "godeaux/divisor.hpp"

#include <algorithm>

#include "godeaux/error.hpp"
#include "godeaux/exact_linalg.hpp"

namespace godeaux {

namespace {

RationalVector zero_vector(std::size_t n) {
  RationalVector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Rational(0);
  return v;
}

Rational bilinear(const RationalMatrix& g, const RationalVector& a, const RationalVector& b) {
  Rational acc(0);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i).is_zero()) continue;
    for (Eigen::Index j = 0; j < b.size(); ++j)
      if (!b(j).is_zero() && !g(i, j).is_zero()) acc += a(i) * g(i, j) * b(j);
  }
  return acc;
}

bool is_even_integer(const Rational& x) { return x.is_integer() && x.numerator() % 2 == 0; }

}  // namespace

Lattice::Lattice(std::vector<std::string> basis, RationalMatrix gram, std::optional<RationalVector> canonical)
    : basis_(std::move(basis)), gram_(std::move(gram)), canonical_(std::move(canonical)) {
  const auto n = static_cast<Eigen::Index>(basis_.size());
  if (gram_.rows() != n || gram_.cols() != n) throw LatticeMismatch("Gram matrix size does not match the basis");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (gram_(i, j) != gram_(j, i)) throw LatticeMismatch("Gram matrix is not symmetric");
  auto sorted = basis_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw LatticeMismatch("repeated basis name");
  if (canonical_ && canonical_->size() != n) throw LatticeMismatch("canonical class has the wrong length");
}

std::size_t Lattice::index(std::string_view name) const {
  const auto it = std::find(basis_.begin(), basis_.end(), name);
  if (it == basis_.end()) throw LatticeMismatch("no basis class named '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - basis_.begin());
}

bool Lattice::has(std::string_view name) const {
  return std::find(basis_.begin(), basis_.end(), name) != basis_.end();
}

LatticePtr make_diagonal_lattice(std::vector<std::string> basis, const std::vector<Rational>& squares) {
  const auto n = static_cast<Eigen::Index>(basis.size());
  if (static_cast<Eigen::Index>(squares.size()) != n) throw LatticeMismatch("one square per basis class");
  RationalMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = i == j ? squares[static_cast<std::size_t>(i)] : Rational(0);
  return std::make_shared<const Lattice>(std::move(basis), std::move(g));
}

DivisorClass::DivisorClass(LatticePtr lattice, RationalVector coefficients)
    : lattice_(std::move(lattice)), coeffs_(std::move(coefficients)) {
  if (!lattice_) throw LatticeMismatch("class without a lattice");
  if (coeffs_.size() != static_cast<Eigen::Index>(lattice_->rank())) {
    throw LatticeMismatch("coefficient vector length does not match the basis");
  }
}

DivisorClass DivisorClass::zero(const LatticePtr& lattice) { return {lattice, zero_vector(lattice->rank())}; }

DivisorClass DivisorClass::basis(const LatticePtr& lattice, std::string_view name) {
  RationalVector v = zero_vector(lattice->rank());
  v(static_cast<Eigen::Index>(lattice->index(name))) = Rational(1);
  return {lattice, std::move(v)};
}

bool DivisorClass::is_zero() const {
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_(i).is_zero()) return false;
  return true;
}

DivisorClass DivisorClass::in(const LatticePtr& other) const { return {other, coeffs_}; }

DivisorClass& DivisorClass::operator+=(const DivisorClass& rhs) {
  require_same_lattice(*this, rhs);
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i) coeffs_(i) += rhs.coeffs_(i);
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& rhs) {
  require_same_lattice(*this, rhs);
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i) coeffs_(i) -= rhs.coeffs_(i);
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& s) {
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i) coeffs_(i) *= s;
  return *this;
}

std::string DivisorClass::to_string() const {
  std::string out;
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_(i);
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (mag != Rational(1)) out += mag.to_string() + (mag.is_integer() ? "" : " ");
    out += lattice_->basis()[static_cast<std::size_t>(i)];
  }
  return out.empty() ? "0" : out;
}

void require_same_lattice(const DivisorClass& a, const DivisorClass& b) {
  if (a.lattice() != b.lattice() && !a.lattice()->same_as(*b.lattice())) {
    throw LatticeMismatch("classes live in different lattices");
  }
}

Rational pair(const DivisorClass& a, const DivisorClass& b) {
  require_same_lattice(a, b);
  return bilinear(a.lattice()->gram(), a.coefficients(), b.coefficients());
}

bool class_equal(const DivisorClass& a, const DivisorClass& b) {
  require_same_lattice(a, b);
  return a.coefficients() == b.coefficients();
}

DivisorClass canonical_class(const LatticePtr& lattice) {
  if (!lattice->canonical()) throw MissingCanonicalClass("lattice has no canonical class");
  return {lattice, *lattice->canonical()};
}

Rational adjunction_genus(const DivisorClass& d) {
  const DivisorClass k = canonical_class(d.lattice());
  return Rational(1) + (pair(d, d) + pair(d, k)) * Rational(1, 2);
}

DivisorClass BlowUp::exceptional(std::string_view point) const {
  return DivisorClass::basis(lattice, "e_" + std::string(point));
}

DivisorClass BlowUp::first_proper(std::string_view point) const {
  return DivisorClass::basis(lattice, "e1_" + std::string(point)) -
         DivisorClass::basis(lattice, "e2_" + std::string(point));
}

DivisorClass BlowUp::second(std::string_view point) const {
  return DivisorClass::basis(lattice, "e2_" + std::string(point));
}

BlowUp blowup_basis(const std::vector<BlowUpPoint>& points) {
  std::vector<std::string> names{"h"};
  std::vector<Rational> squares{Rational(1)};
  for (const auto& p : points) {
    if (p.infinitely_near) {
      names.push_back("e1_" + p.name);
      names.push_back("e2_" + p.name);
      squares.insert(squares.end(), 2, Rational(-1));
    } else {
      names.push_back("e_" + p.name);
      squares.push_back(Rational(-1));
    }
  }
  const auto plain = make_diagonal_lattice(names, squares);
  RationalVector k = zero_vector(names.size());
  k(0) = Rational(-3);
  for (Eigen::Index i = 1; i < k.size(); ++i) k(i) = Rational(1);
  return {std::make_shared<const Lattice>(plain->basis(), plain->gram(), k)};
}

DivisorClass DoubleCover::pullback(const DivisorClass& d) const {
  require_same_lattice(d, branch);
  return d.in(lattice);
}

DivisorClass DoubleCover::reduced_preimage(const DivisorClass& component) const {
  const Rational c2 = square(component);
  if (!is_even_integer(c2)) {
    throw OddBranchComponent("branch component " + component.to_string() + " has odd square " + c2.to_string());
  }
  return pullback(component) * Rational(1, 2);
}

DoubleCover double_cover_pullback(const DivisorClass& branch) {
  const LatticePtr& base = branch.lattice();
  const DivisorClass k = canonical_class(base);
  const Rational b2 = square(branch);
  if (!is_even_integer(b2)) throw OddBranchComponent("branch class has odd square " + b2.to_string());
  std::vector<std::string> names;
  for (const auto& n : base->basis()) names.push_back("p_" + n);
  const RationalMatrix gram = base->gram() * Rational(2);
  const DivisorClass k_cover = k + branch * Rational(1, 2);
  auto lattice = std::make_shared<const Lattice>(names, gram, k_cover.coefficients());
  return {base, lattice, branch};
}

DivisorClass BlowDown::pushforward(const DivisorClass& d) const {
  const DivisorClass moved = d.in(before);
  return (moved + exceptional * pair(moved, exceptional)).in(lattice);
}

DivisorClass BlowDown::pullback(const DivisorClass& d) const {
  const DivisorClass moved = d.in(before);
  if (!pair(moved, exceptional).is_zero()) {
    throw InvalidBlowDown("class " + d.to_string() + " is not orthogonal to the contracted curve");
  }
  return moved;
}

BlowDown blow_down(const DivisorClass& e) {
  const LatticePtr& before = e.lattice();
  const DivisorClass k = canonical_class(before);
  const Rational e2 = square(e), ek = pair(e, k);
  if (e2 != Rational(-1) || ek != Rational(-1)) {
    throw InvalidBlowDown("cannot contract " + e.to_string() + ": e^2 = " + e2.to_string() +
                          ", e.K = " + ek.to_string());
  }
  const DivisorClass k_after = k - e;
  auto lattice = std::make_shared<const Lattice>(before->basis(), before->gram(), k_after.coefficients());
  return {before, lattice, e};
}

long euler_after_blowups(long euler, long points) { return euler + points; }

long euler_double_cover(long base, long branch) { return 2 * base - branch; }

Rational euler_of_quotient(long cover, long branch) { return Rational(cover + branch, 2); }

bool noether_check(const SurfaceInvariants& inv) {
  if (12 * inv.chi != inv.k_squared + inv.euler) return false;
  if (inv.pg && inv.q && inv.chi != 1 - *inv.q + *inv.pg) return false;
  return true;
}

ClassSolution solve_class(const std::vector<DivisorClass>& unknowns, const std::vector<PairingConstraint>& constraints) {
  if (unknowns.empty()) throw InconsistentSystem("no unknown classes");
  const auto rows = static_cast<Eigen::Index>(constraints.size());
  const auto cols = static_cast<Eigen::Index>(unknowns.size());
  RationalMatrix a(rows, cols);
  RationalVector b(rows);
  for (Eigen::Index j = 0; j < rows; ++j) {
    const auto& c = constraints[static_cast<std::size_t>(j)];
    for (Eigen::Index k = 0; k < cols; ++k) a(j, k) = pair(unknowns[static_cast<std::size_t>(k)], c.test);
    b(j) = c.target;
  }
  const auto sol = exact_solve(a, b);
  if (!sol.consistent) {
    throw InconsistentSystem("pairing system is inconsistent: rank " + std::to_string(exact_rank(a)) + " of " +
                             std::to_string(cols) + " unknowns, augmented rank " + std::to_string(sol.rank + 1));
  }
  DivisorClass combination = DivisorClass::zero(unknowns.front().lattice());
  for (Eigen::Index k = 0; k < cols; ++k) combination += unknowns[static_cast<std::size_t>(k)] * (*sol.solution)(k);
  return {*sol.solution, sol.rank, sol.nullity, combination};
}

}  // namespace godeaux
