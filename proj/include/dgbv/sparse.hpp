#pragma once

#include "dgbv/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace dgbv {

/// Sparse vector over Q(i): index-sorted (index, coefficient) pairs with no
/// stored zeros, so structural equality is mathematical equality.
class SparseVector {
public:
  using Term = std::pair<std::size_t, Scalar>;

  SparseVector() = default;
  SparseVector(std::initializer_list<Term> terms);

  static SparseVector unit(std::size_t index, Scalar coeff = Scalar(1));

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Scalar coeff(std::size_t index) const;
  /// Largest stored index + 1, or 0 for the zero vector.
  std::size_t support_bound() const { return terms_.empty() ? 0 : terms_.back().first + 1; }

  /// this += c * other
  void axpy(const Scalar& c, const SparseVector& other);
  void add_term(std::size_t index, const Scalar& c);

  SparseVector& operator+=(const SparseVector& o) { axpy(Scalar(1), o); return *this; }
  SparseVector& operator-=(const SparseVector& o) { axpy(Scalar(-1), o); return *this; }
  SparseVector& operator*=(const Scalar& c);

  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(const Scalar& c, SparseVector a) { return a *= c; }
  SparseVector operator-() const { return Scalar(-1) * *this; }

  friend bool operator==(const SparseVector& a, const SparseVector& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const SparseVector& a, const SparseVector& b) { return !(a == b); }

  /// Hermitian inner product sum conj(a_k) b_k.
  friend Scalar hermitian_dot(const SparseVector& a, const SparseVector& b);

private:
  std::vector<Term> terms_;
};

/// Incrementally maintained reduced row-echelon basis of a subspace.
///
/// Every stored row has a pivot coefficient of 1 and every other stored row
/// is zero in that pivot column, so the basis of a given subspace is unique.
class EchelonBasis {
public:
  /// Reduces v against the basis; returns the residue (zero iff v is in the span).
  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const { return reduce(v).is_zero(); }
  /// Adds v if it is independent; returns whether the rank grew.
  bool insert(SparseVector v);

  std::size_t rank() const { return rows_.size(); }
  /// Rows sorted by pivot column.
  std::vector<SparseVector> rows() const;
  std::vector<std::size_t> pivots() const;

private:
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivot_;
};

/// Column-major sparse matrix: column j is the image of the j-th unit vector.
class SparseMatrix {
public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::vector<SparseVector> columns);
  static SparseMatrix zero(std::size_t rows, std::size_t cols);
  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const SparseVector& column(std::size_t j) const { return columns_[j]; }
  const std::vector<SparseVector>& columns() const { return columns_; }

  SparseVector apply(const SparseVector& v) const;
  SparseMatrix compose(const SparseMatrix& right) const;  // this * right
  SparseMatrix adjoint() const;                          // conjugate transpose
  SparseMatrix transpose() const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.columns_ == b.columns_;
  }

private:
  std::size_t rows_ = 0;
  std::vector<SparseVector> columns_;
};

std::size_t rank(const SparseMatrix& m);
/// Reduced echelon basis of the column space.
std::vector<SparseVector> image_basis(const SparseMatrix& m);
/// Basis of the null space, one vector per free column of the reduced row
/// echelon form, ordered by free column.
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);
/// Null space of several maps with a common domain.
std::vector<SparseVector> common_kernel_basis(const std::vector<const SparseMatrix*>& maps);
/// Some x with m x = b (free variables set to zero), or false if none exists.
bool solve(const SparseMatrix& m, const SparseVector& b, SparseVector& x);
/// Dimension of span(a) + span(b).
std::size_t sum_dimension(const std::vector<SparseVector>& a, const std::vector<SparseVector>& b);
/// Basis of span(a) intersected with span(b).
std::vector<SparseVector> intersection_basis(const std::vector<SparseVector>& a,
                                             const std::vector<SparseVector>& b, std::size_t ambient);

}  // namespace dgbv
