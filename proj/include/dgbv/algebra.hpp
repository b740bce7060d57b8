#pragma once

#include "dgbv/report.hpp"
#include "dgbv/scalar.hpp"
#include "dgbv/sparse.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dgbv {

/// Element of a graded algebra in its chosen basis.
using Element = SparseVector;

struct Bidegree {
  int p = 0;
  int q = 0;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
  Bidegree operator+(const Bidegree& o) const { return {p + o.p, q + o.q}; }
};

/// Either a bare Z/2 parity or a bidegree (p, q) whose parity is p + q mod 2.
/// Sign rules only ever read the parity.
class Degree {
public:
  static Degree even() { return Degree(0); }
  static Degree odd() { return Degree(1); }
  static Degree of_parity(int parity) { return Degree(parity & 1); }
  static Degree bi(int p, int q) { return Degree(Bidegree{p, q}); }

  int parity() const { return bidegree_ ? ((bidegree_->p + bidegree_->q) & 1) : parity_; }
  bool has_bidegree() const { return bidegree_.has_value(); }
  const std::optional<Bidegree>& bidegree() const { return bidegree_; }

  std::string to_string() const;
  friend bool operator==(const Degree&, const Degree&) = default;

private:
  explicit Degree(int parity) : parity_(parity) {}
  explicit Degree(Bidegree b) : bidegree_(b) {}
  int parity_ = 0;
  std::optional<Bidegree> bidegree_;
};

struct BasisElement {
  std::string name;
  Degree degree = Degree::even();
};

inline constexpr std::size_t default_max_dim = 256;

/// Finite-dimensional algebra with basis, unit and full multiplication table.
///
/// The table is stored as given; validate_algebra decides whether it is in
/// fact unital, associative and supercommutative.
class GradedAlgebra {
public:
  using ProductTable = std::map<std::pair<std::size_t, std::size_t>, Element>;

  GradedAlgebra(std::vector<BasisElement> basis, std::size_t unit_index, const ProductTable& products,
                std::size_t max_dim = default_max_dim);

  std::size_t dim() const { return basis_.size(); }
  std::size_t unit_index() const { return unit_; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const BasisElement& basis(std::size_t i) const { return basis_[i]; }
  int parity(std::size_t i) const { return basis_[i].degree.parity(); }
  bool bigraded() const { return bigraded_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Product of two basis elements.
  const Element& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Element unit() const { return Element::unit(unit_); }
  Element basis_vector(std::size_t i) const { return Element::unit(i); }

  /// Throws MalformedElement when an index is outside the basis.
  void check(const Element& a) const;
  /// (even part, odd part)
  std::pair<Element, Element> split_parity(const Element& a) const;
  /// Parity of a homogeneous nonzero element; nullopt for zero or mixed parity.
  std::optional<int> parity_of(const Element& a) const;

  std::string format(const Element& a) const;

  friend bool operator==(const GradedAlgebra& a, const GradedAlgebra& b);

private:
  std::vector<BasisElement> basis_;
  std::size_t unit_ = 0;
  std::vector<Element> table_;
  bool bigraded_ = false;
};

Element wedge(const GradedAlgebra& A, const Element& a, const Element& b);

/// Linear map of the algebra to itself with a declared parity and, for
/// bigraded algebras, an optional declared bidegree shift.
class GradedOperator {
public:
  /// Rejects any nonzero entry that breaks the declared parity or shift.
  GradedOperator(const GradedAlgebra& A, SparseMatrix matrix, int parity,
                 std::optional<Bidegree> shift = std::nullopt);
  static GradedOperator zero(const GradedAlgebra& A, int parity, std::optional<Bidegree> shift = std::nullopt);

  const SparseMatrix& matrix() const { return matrix_; }
  int parity() const { return parity_; }
  const std::optional<Bidegree>& shift() const { return shift_; }
  std::size_t dim() const { return matrix_.cols(); }

  Element apply(const Element& a) const;
  const Element& on_basis(std::size_t j) const { return matrix_.column(j); }
  bool is_zero() const;

  friend bool operator==(const GradedOperator& a, const GradedOperator& b) {
    return a.parity_ == b.parity_ && a.shift_ == b.shift_ && a.matrix_ == b.matrix_;
  }

private:
  SparseMatrix matrix_;
  int parity_ = 1;
  std::optional<Bidegree> shift_;
};

Element apply(const GradedOperator& op, const Element& a);

/// Exhaustive check of unit, supercommutativity, associativity and degree
/// additivity over all basis tuples.
ValidationReport validate_algebra(const GradedAlgebra& A);

}  // namespace dgbv
