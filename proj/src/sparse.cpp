#include "dgbv/sparse.hpp"

#include "dgbv/errors.hpp"

#include <algorithm>

namespace dgbv {

SparseVector::SparseVector(std::initializer_list<Term> terms) {
  for (const auto& [i, c] : terms) add_term(i, c);
}

SparseVector SparseVector::unit(std::size_t index, Scalar coeff) {
  SparseVector v;
  v.add_term(index, coeff);
  return v;
}

Scalar SparseVector::coeff(std::size_t index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, std::size_t i) { return t.first < i; });
  if (it != terms_.end() && it->first == index) return it->second;
  return Scalar();
}

void SparseVector::add_term(std::size_t index, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, std::size_t i) { return t.first < i; });
  if (it != terms_.end() && it->first == index) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, Term{index, c});
  }
}

void SparseVector::axpy(const Scalar& c, const SparseVector& other) {
  if (c.is_zero() || other.is_zero()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Scalar s = a->second + c * b->second;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

SparseVector& SparseVector::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Scalar hermitian_dot(const SparseVector& a, const SparseVector& b) {
  Scalar s;
  auto x = a.terms_.begin();
  auto y = b.terms_.begin();
  while (x != a.terms_.end() && y != b.terms_.end()) {
    if (x->first < y->first) {
      ++x;
    } else if (y->first < x->first) {
      ++y;
    } else {
      s += x->second.conj() * y->second;
      ++x;
      ++y;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

SparseVector EchelonBasis::reduce(SparseVector v) const {
  for (std::size_t k = 0; k < rows_.size() && !v.is_zero(); ++k) {
    Scalar c = v.coeff(pivot_[k]);
    if (!c.is_zero()) v.axpy(-c, rows_[k]);
  }
  return v;
}

bool EchelonBasis::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.is_zero()) return false;
  std::size_t p = v.terms().front().first;
  v *= v.terms().front().second.inverse();
  for (auto& row : rows_) {
    Scalar c = row.coeff(p);
    if (!c.is_zero()) row.axpy(-c, v);
  }
  auto pos = std::lower_bound(pivot_.begin(), pivot_.end(), p) - pivot_.begin();
  pivot_.insert(pivot_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

std::vector<SparseVector> EchelonBasis::rows() const { return rows_; }
std::vector<std::size_t> EchelonBasis::pivots() const { return pivot_; }

// ---------------------------------------------------------------------------

SparseMatrix::SparseMatrix(std::size_t rows, std::vector<SparseVector> columns)
    : rows_(rows), columns_(std::move(columns)) {
  for (const auto& c : columns_)
    if (c.support_bound() > rows_) throw DimensionMismatch("matrix entry outside row range");
}

SparseMatrix SparseMatrix::zero(std::size_t rows, std::size_t cols) {
  return SparseMatrix(rows, std::vector<SparseVector>(cols));
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  std::vector<SparseVector> cols;
  cols.reserve(n);
  for (std::size_t j = 0; j < n; ++j) cols.push_back(SparseVector::unit(j));
  return SparseMatrix(n, std::move(cols));
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  if (v.support_bound() > cols()) throw DimensionMismatch("vector length exceeds matrix columns");
  SparseVector out;
  for (const auto& [j, c] : v) out.axpy(c, columns_[j]);
  return out;
}

SparseMatrix SparseMatrix::compose(const SparseMatrix& right) const {
  if (right.rows() != cols()) throw DimensionMismatch("composition of incompatible matrices");
  std::vector<SparseVector> cols;
  cols.reserve(right.cols());
  for (const auto& c : right.columns_) cols.push_back(apply(c));
  return SparseMatrix(rows_, std::move(cols));
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<SparseVector> cols(rows_);
  for (std::size_t j = 0; j < columns_.size(); ++j)
    for (const auto& [i, c] : columns_[j]) cols[i].add_term(j, c);
  return SparseMatrix(columns_.size(), std::move(cols));
}

SparseMatrix SparseMatrix::adjoint() const {
  std::vector<SparseVector> cols(rows_);
  for (std::size_t j = 0; j < columns_.size(); ++j)
    for (const auto& [i, c] : columns_[j]) cols[i].add_term(j, c.conj());
  return SparseMatrix(columns_.size(), std::move(cols));
}

// ---------------------------------------------------------------------------

std::size_t rank(const SparseMatrix& m) {
  EchelonBasis e;
  for (const auto& c : m.columns()) e.insert(c);
  return e.rank();
}

std::vector<SparseVector> image_basis(const SparseMatrix& m) {
  EchelonBasis e;
  for (const auto& c : m.columns()) e.insert(c);
  return e.rows();
}

namespace {

std::vector<SparseVector> kernel_from_rows(const EchelonBasis& rref, std::size_t ncols) {
  auto rows = rref.rows();
  auto piv = rref.pivots();
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<SparseVector> out;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    SparseVector v = SparseVector::unit(f);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      Scalar c = rows[k].coeff(f);
      if (!c.is_zero()) v.add_term(piv[k], -c);
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
  return common_kernel_basis({&m});
}

std::vector<SparseVector> common_kernel_basis(const std::vector<const SparseMatrix*>& maps) {
  if (maps.empty()) return {};
  std::size_t n = maps.front()->cols();
  EchelonBasis rref;
  for (const auto* m : maps) {
    if (m->cols() != n) throw DimensionMismatch("maps with different domains");
    auto t = m->transpose();
    for (const auto& row : t.columns()) rref.insert(row);
  }
  return kernel_from_rows(rref, n);
}

bool solve(const SparseMatrix& m, const SparseVector& b, SparseVector& x) {
  if (b.support_bound() > m.rows()) throw DimensionMismatch("right-hand side too long");
  std::size_t n = m.cols();
  auto t = m.transpose();
  EchelonBasis rref;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseVector row = t.column(i);
    row.add_term(n, b.coeff(i));
    rref.insert(std::move(row));
  }
  auto rows = rref.rows();
  auto piv = rref.pivots();
  x = SparseVector();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (piv[k] == n) return false;
    x.add_term(piv[k], rows[k].coeff(n));
  }
  return true;
}

std::size_t sum_dimension(const std::vector<SparseVector>& a, const std::vector<SparseVector>& b) {
  EchelonBasis e;
  for (const auto& v : a) e.insert(v);
  for (const auto& v : b) e.insert(v);
  return e.rank();
}

std::vector<SparseVector> intersection_basis(const std::vector<SparseVector>& a,
                                             const std::vector<SparseVector>& b, std::size_t ambient) {
  // Kernel of [A | -B] parametrizes pairs with sum alpha_i a_i = sum beta_j b_j.
  std::vector<SparseVector> cols;
  cols.reserve(a.size() + b.size());
  for (const auto& v : a) cols.push_back(v);
  for (const auto& v : b) cols.push_back(-v);
  SparseMatrix stacked(ambient, std::move(cols));
  EchelonBasis out;
  for (const auto& k : kernel_basis(stacked)) {
    SparseVector w;
    for (const auto& [i, c] : k)
      if (i < a.size()) w.axpy(c, a[i]);
    out.insert(std::move(w));
  }
  return out.rows();
}

}  // namespace dgbv
