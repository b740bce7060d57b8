#pragma once

#include "dgbv/algebra.hpp"

#include <memory>

namespace dgbv {

/// Supercommutative algebra with two odd operators: the differential
/// `delta` and the second-order operator `Delta` whose failure to be a
/// derivation defines the bracket.
class DGBVStructure {
public:
  DGBVStructure(std::shared_ptr<const GradedAlgebra> algebra, GradedOperator delta, GradedOperator Delta);

  const GradedAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const GradedAlgebra>& algebra_ptr() const { return algebra_; }
  const GradedOperator& delta() const { return delta_; }
  const GradedOperator& Delta() const { return Delta_; }
  std::size_t dim() const { return algebra_->dim(); }

  /// Compares the algebra and the operator matrices; declared shifts are
  /// bookkeeping and not part of the comparison.
  friend bool operator==(const DGBVStructure& a, const DGBVStructure& b) {
    return *a.algebra_ == *b.algebra_ && a.delta_.matrix() == b.delta_.matrix() &&
           a.Delta_.matrix() == b.Delta_.matrix();
  }

private:
  std::shared_ptr<const GradedAlgebra> algebra_;
  GradedOperator delta_;
  GradedOperator Delta_;
};

/// [a . b] = (-1)^|a| (Delta(a b) - (Delta a) b - (-1)^|a| a Delta b),
/// applied to each parity component of a.
Element bracket(const DGBVStructure& D, const Element& a, const Element& b);

/// {a, b} = (Delta a) b + (-1)^|a| a Delta b - Delta(a b), per parity component of a.
Element koszul_bracket(const DGBVStructure& D, const Element& a, const Element& b);

/// Brackets of all basis pairs, row-major: table[i * dim + j] = [e_i . e_j].
std::vector<Element> bracket_table(const DGBVStructure& D);

/// Exhaustive check of the dGBV axioms (square-zero, anticommutation,
/// derivation properties, closedness of the unit) plus the four derived
/// bracket identities reported under CheckTier::Derived. Assumes the
/// algebra itself already validates.
ValidationReport validate_dgbv(const DGBVStructure& D);

/// Maurer-Cartan residual delta(a) + 1/2 [a . a].
Element mc_defect(const DGBVStructure& D, const Element& a);

/// Structure with delta replaced by b -> delta b + [a . b].
/// Throws McViolation if a is not even, Delta a != 0, or delta a + 1/2[a . a] != 0.
DGBVStructure twist(const DGBVStructure& D, const Element& a);

}  // namespace dgbv
