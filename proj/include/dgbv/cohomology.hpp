#pragma once

#include "dgbv/dgbv.hpp"

#include <map>
#include <string>
#include <vector>

namespace dgbv {

/// Even linear functional on the algebra, stored as a sparse covector.
class IntegralFunctional {
public:
  IntegralFunctional() = default;
  explicit IntegralFunctional(Element covector) : covector_(std::move(covector)) {}

  const Element& covector() const { return covector_; }
  Scalar operator()(const Element& a) const;

  friend bool operator==(const IntegralFunctional&, const IntegralFunctional&) = default;

private:
  Element covector_;
};

/// Delta- and delta-closed representatives of a basis of H(A, delta).
struct CohomologyBasis {
  std::vector<Element> representatives;
  std::vector<Degree> degrees;
  std::size_t unit_position = 0;

  std::size_t size() const { return representatives.size(); }
  int parity(std::size_t j) const { return degrees[j].parity(); }
  /// Number of classes per degree label (bidegree "(p,q)" or "even"/"odd").
  std::map<std::string, std::size_t> betti() const;

  friend bool operator==(const CohomologyBasis& a, const CohomologyBasis& b) {
    return a.representatives == b.representatives && a.degrees == b.degrees && a.unit_position == b.unit_position;
  }
};

/// Dense square matrix over Q(i), row-major.
class SquareMatrix {
public:
  explicit SquareMatrix(std::size_t n = 0) : n_(n), data_(n * n) {}
  std::size_t size() const { return n_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  /// Exact inverse by Gauss-Jordan elimination; false if singular.
  bool invert(SquareMatrix& out) const;
  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
  std::size_t n_;
  std::vector<Scalar> data_;
};

struct PairingMatrix {
  SquareMatrix g;
  SquareMatrix g_inv;
};

/// Parity of the functional plus the two compatibility conditions
///   f((delta a) b) = (-1)^(|a|+1) f(a delta b),  f((Delta a) b) = (-1)^|a| f(a Delta b)
/// on all basis pairs.
ValidationReport check_integral(const DGBVStructure& D, const IntegralFunctional& f);

/// Whether (Ker Delta, delta) -> (A, delta) and (Ker delta, Delta) -> (A, Delta)
/// induce isomorphisms, decided by exact ranks. Reported as condition 3.
ValidationReport check_condition3(const DGBVStructure& D);

/// Representatives in Ker delta /\ Ker Delta, unit first, chosen greedily from
/// the reduced echelon basis of that intersection. Throws Obstruction if
/// condition 3 fails.
CohomologyBasis cohomology(const DGBVStructure& D);

/// g_jk = f(e_j e_k) and its inverse. Throws NotNice when g is singular and
/// CheckFailure if the Frobenius property fails on representative triples.
PairingMatrix pairing(const DGBVStructure& D, const IntegralFunctional& f, const CohomologyBasis& H);

/// Nondegeneracy (condition 2), graded symmetry and the Frobenius property
/// (a b, c) = (a, b c) as a report instead of exceptions.
ValidationReport check_pairing(const DGBVStructure& D, const IntegralFunctional& f, const CohomologyBasis& H);

/// Deterministic choice of gamma in Im Delta with delta gamma = r.
///
/// gamma = Delta eta, where eta is the least-norm solution of (delta Delta) eta = r
/// for the standard Hermitian form, i.e. eta = M^* y with (M M^*) y = r.
class PreimageSelector {
public:
  explicit PreimageSelector(const DGBVStructure& D);
  /// Throws Obstruction if r is not in the image of delta Delta.
  Element select(const Element& r) const;

private:
  SparseMatrix delta_, Delta_, m_adj_, normal_;
};

Element select_preimage(const DGBVStructure& D, const Element& r);

/// Membership of v in the image of an operator, by exact rank.
bool in_image(const GradedOperator& op, const Element& v);

}  // namespace dgbv
