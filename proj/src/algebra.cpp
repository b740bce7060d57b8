#include "dgbv/algebra.hpp"

#include "dgbv/errors.hpp"

#include <sstream>

namespace dgbv {

std::string Degree::to_string() const {
  if (bidegree_) return "(" + std::to_string(bidegree_->p) + "," + std::to_string(bidegree_->q) + ")";
  return parity_ ? "odd" : "even";
}

GradedAlgebra::GradedAlgebra(std::vector<BasisElement> basis, std::size_t unit_index,
                             const ProductTable& products, std::size_t max_dim)
    : basis_(std::move(basis)), unit_(unit_index) {
  const std::size_t n = basis_.size();
  if (n == 0) throw MalformedElement("algebra needs at least one basis element");
  if (n > max_dim)
    throw DimensionMismatch("algebra dimension " + std::to_string(n) + " exceeds cap " + std::to_string(max_dim));
  if (unit_ >= n) throw MalformedElement("unit index out of range");
  bigraded_ = true;
  for (const auto& b : basis_) bigraded_ = bigraded_ && b.degree.has_bidegree();
  table_.assign(n * n, Element());
  for (const auto& [key, value] : products) {
    if (key.first >= n || key.second >= n) throw MalformedElement("product index out of range");
    if (value.support_bound() > n) throw MalformedElement("product result index out of range");
    table_[key.first * n + key.second] = value;
  }
}

std::optional<std::size_t> GradedAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return i;
  return std::nullopt;
}

void GradedAlgebra::check(const Element& a) const {
  if (a.support_bound() > dim())
    throw MalformedElement("element index " + std::to_string(a.support_bound() - 1) + " outside basis of dimension " +
                           std::to_string(dim()));
}

std::pair<Element, Element> GradedAlgebra::split_parity(const Element& a) const {
  check(a);
  Element even, odd;
  for (const auto& [i, c] : a) (parity(i) ? odd : even).add_term(i, c);
  return {even, odd};
}

std::optional<int> GradedAlgebra::parity_of(const Element& a) const {
  check(a);
  std::optional<int> p;
  for (const auto& [i, c] : a) {
    if (p && *p != parity(i)) return std::nullopt;
    p = parity(i);
  }
  return p;
}

std::string GradedAlgebra::format(const Element& a) const {
  check(a);
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : a) {
    if (!first) os << " + ";
    first = false;
    if (c == Scalar(1))
      os << basis_[i].name;
    else
      os << "(" << c.to_string() << ")*" << basis_[i].name;
  }
  return os.str();
}

bool operator==(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (a.dim() != b.dim() || a.unit_ != b.unit_ || a.table_ != b.table_) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.basis_[i].name != b.basis_[i].name || !(a.basis_[i].degree == b.basis_[i].degree)) return false;
  return true;
}

Element wedge(const GradedAlgebra& A, const Element& a, const Element& b) {
  A.check(a);
  A.check(b);
  Element out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) {
      const Element& p = A.product(i, j);
      if (!p.is_zero()) out.axpy(x * y, p);
    }
  return out;
}

// ---------------------------------------------------------------------------

GradedOperator::GradedOperator(const GradedAlgebra& A, SparseMatrix matrix, int parity,
                               std::optional<Bidegree> shift)
    : matrix_(std::move(matrix)), parity_(parity & 1), shift_(shift) {
  if (matrix_.rows() != A.dim() || matrix_.cols() != A.dim())
    throw DimensionMismatch("operator matrix must be " + std::to_string(A.dim()) + "x" + std::to_string(A.dim()));
  if (shift_ && ((shift_->p + shift_->q) & 1) != parity_)
    throw GradingViolation("bidegree shift disagrees with declared parity");
  for (std::size_t j = 0; j < A.dim(); ++j)
    for (const auto& [i, c] : matrix_.column(j)) {
      if ((A.parity(i) ^ A.parity(j)) != parity_)
        throw GradingViolation("entry " + A.basis(j).name + " -> " + A.basis(i).name + " breaks declared parity " +
                               std::to_string(parity_));
      if (shift_ && A.bigraded()) {
        Bidegree expected = *A.basis(j).degree.bidegree() + *shift_;
        if (*A.basis(i).degree.bidegree() != expected)
          throw GradingViolation("entry " + A.basis(j).name + " -> " + A.basis(i).name + " breaks declared shift");
      }
    }
}

GradedOperator GradedOperator::zero(const GradedAlgebra& A, int parity, std::optional<Bidegree> shift) {
  return GradedOperator(A, SparseMatrix::zero(A.dim(), A.dim()), parity, shift);
}

Element GradedOperator::apply(const Element& a) const { return matrix_.apply(a); }

bool GradedOperator::is_zero() const {
  for (const auto& c : matrix_.columns())
    if (!c.is_zero()) return false;
  return true;
}

Element apply(const GradedOperator& op, const Element& a) { return op.apply(a); }

// ---------------------------------------------------------------------------

ValidationReport validate_algebra(const GradedAlgebra& A) {
  ValidationReport r;
  const std::size_t n = A.dim();
  const std::size_t u = A.unit_index();

  r.begin("unit");
  for (std::size_t i = 0; i < n; ++i) {
    Element e = Element::unit(i);
    if (A.product(u, i) != e) r.fail({u, i}, "1 ^ " + A.basis(i).name + " = " + A.format(A.product(u, i)));
    if (A.product(i, u) != e) r.fail({i, u}, A.basis(i).name + " ^ 1 = " + A.format(A.product(i, u)));
  }

  r.begin("supercommutativity");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Element swapped = sign_of(A.parity(i) * A.parity(j)) * A.product(j, i);
      if (A.product(i, j) != swapped) r.fail({i, j}, A.basis(i).name + " ^ " + A.basis(j).name);
    }

  r.begin("associativity");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element& ij = A.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Element left = wedge(A, ij, Element::unit(k));
        Element right = wedge(A, Element::unit(i), A.product(j, k));
        if (left != right) r.fail({i, j, k});
      }
    }

  r.begin("degree-additivity");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : A.product(i, j)) {
        const Degree& di = A.basis(i).degree;
        const Degree& dj = A.basis(j).degree;
        const Degree& dk = A.basis(k).degree;
        bool ok = A.bigraded() ? (*di.bidegree() + *dj.bidegree() == *dk.bidegree())
                               : ((di.parity() + dj.parity()) & 1) == dk.parity();
        if (!ok) r.fail({i, j, k}, A.basis(i).name + " ^ " + A.basis(j).name + " has a term in " + A.basis(k).name);
      }
  return r;
}

}  // namespace dgbv
