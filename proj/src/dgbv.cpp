#include "dgbv/dgbv.hpp"

#include "dgbv/errors.hpp"

namespace dgbv {

DGBVStructure::DGBVStructure(std::shared_ptr<const GradedAlgebra> algebra, GradedOperator delta,
                             GradedOperator Delta)
    : algebra_(std::move(algebra)), delta_(std::move(delta)), Delta_(std::move(Delta)) {
  if (!algebra_) throw MalformedElement("null algebra");
  if (delta_.dim() != algebra_->dim() || Delta_.dim() != algebra_->dim())
    throw DimensionMismatch("operators do not match algebra dimension");
  if (delta_.parity() != 1) throw GradingViolation("delta must be odd");
  if (Delta_.parity() != 1) throw GradingViolation("Delta must be odd");
}

namespace {

Element bracket_homogeneous(const DGBVStructure& D, int pa, const Element& a, const Element& b) {
  const auto& A = D.algebra();
  Element out = D.Delta().apply(wedge(A, a, b));
  out -= wedge(A, D.Delta().apply(a), b);
  out.axpy(-sign_of(pa), wedge(A, a, D.Delta().apply(b)));
  return sign_of(pa) * std::move(out);
}

Element koszul_homogeneous(const DGBVStructure& D, int pa, const Element& a, const Element& b) {
  const auto& A = D.algebra();
  Element out = wedge(A, D.Delta().apply(a), b);
  out.axpy(sign_of(pa), wedge(A, a, D.Delta().apply(b)));
  out -= D.Delta().apply(wedge(A, a, b));
  return out;
}

}  // namespace

Element bracket(const DGBVStructure& D, const Element& a, const Element& b) {
  auto [even, odd] = D.algebra().split_parity(a);
  D.algebra().check(b);
  Element out;
  if (!even.is_zero()) out += bracket_homogeneous(D, 0, even, b);
  if (!odd.is_zero()) out += bracket_homogeneous(D, 1, odd, b);
  return out;
}

Element koszul_bracket(const DGBVStructure& D, const Element& a, const Element& b) {
  auto [even, odd] = D.algebra().split_parity(a);
  D.algebra().check(b);
  Element out;
  if (!even.is_zero()) out += koszul_homogeneous(D, 0, even, b);
  if (!odd.is_zero()) out += koszul_homogeneous(D, 1, odd, b);
  return out;
}

std::vector<Element> bracket_table(const DGBVStructure& D) {
  const std::size_t n = D.dim();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = bracket(D, Element::unit(i), Element::unit(j));
  return table;
}

namespace {

// Bilinear extension of a basis-pair table.
Element from_table(const std::vector<Element>& table, std::size_t n, const Element& a, const Element& b) {
  Element out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) out.axpy(x * y, table[i * n + j]);
  return out;
}

}  // namespace

ValidationReport validate_dgbv(const DGBVStructure& D) {
  ValidationReport r;
  const auto& A = D.algebra();
  const auto& d = D.delta();
  const auto& L = D.Delta();
  const std::size_t n = A.dim();
  auto e = [](std::size_t i) { return Element::unit(i); };
  auto par = [&](std::size_t i) { return A.parity(i); };

  r.begin("delta-square-zero");
  for (std::size_t j = 0; j < n; ++j)
    if (!d.apply(d.on_basis(j)).is_zero()) r.fail({j}, "delta^2 " + A.basis(j).name + " != 0");

  r.begin("Delta-square-zero");
  for (std::size_t j = 0; j < n; ++j)
    if (!L.apply(L.on_basis(j)).is_zero()) r.fail({j}, "Delta^2 " + A.basis(j).name + " != 0");

  r.begin("anticommutation");
  for (std::size_t j = 0; j < n; ++j)
    if (!(d.apply(L.on_basis(j)) + L.apply(d.on_basis(j))).is_zero())
      r.fail({j}, "(delta Delta + Delta delta) " + A.basis(j).name + " != 0");

  r.begin("unit-closed");
  if (!d.on_basis(A.unit_index()).is_zero()) r.fail({A.unit_index()}, "delta(1) != 0");
  if (!L.on_basis(A.unit_index()).is_zero()) r.fail({A.unit_index()}, "Delta(1) != 0");

  r.begin("delta-derivation");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element lhs = d.apply(A.product(i, j));
      Element rhs = wedge(A, d.on_basis(i), e(j));
      rhs.axpy(sign_of(par(i)), wedge(A, e(i), d.on_basis(j)));
      if (lhs != rhs) r.fail({i, j});
    }

  const auto table = bracket_table(D);
  auto br = [&](const Element& a, const Element& b) { return from_table(table, n, a, b); };

  r.begin("bracket-derivation");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Element lhs = br(e(i), A.product(j, k));
        Element rhs = wedge(A, table[i * n + j], e(k));
        rhs.axpy(sign_of((par(i) + 1) * par(j)), wedge(A, e(j), table[i * n + k]));
        if (lhs != rhs) r.fail({i, j, k});
      }

  r.begin("bracket-antisymmetry", CheckTier::Derived);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Element rhs = -sign_of((par(i) + 1) * (par(j) + 1)) * table[j * n + i];
      if (table[i * n + j] != rhs) r.fail({i, j});
    }

  r.begin("bracket-jacobi", CheckTier::Derived);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Element lhs = br(e(i), table[j * n + k]);
        Element rhs = br(table[i * n + j], e(k));
        rhs.axpy(sign_of((par(i) + 1) * (par(j) + 1)), br(e(j), table[i * n + k]));
        if (lhs != rhs) r.fail({i, j, k});
      }

  auto leibniz = [&](const char* name, const GradedOperator& op) {
    r.begin(name, CheckTier::Derived);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Element lhs = op.apply(table[i * n + j]);
        Element rhs = br(op.on_basis(i), e(j));
        rhs.axpy(sign_of(par(i) + 1), br(e(i), op.on_basis(j)));
        if (lhs != rhs) r.fail({i, j});
      }
  };
  leibniz("Delta-bracket-leibniz", L);
  leibniz("delta-bracket-leibniz", d);
  return r;
}

Element mc_defect(const DGBVStructure& D, const Element& a) {
  Element out = D.delta().apply(a);
  out.axpy(Scalar::rational(1, 2), bracket(D, a, a));
  return out;
}

DGBVStructure twist(const DGBVStructure& D, const Element& a) {
  const auto& A = D.algebra();
  A.check(a);
  if (!A.split_parity(a).second.is_zero()) throw McViolation("twisting element must be even");
  if (!D.Delta().apply(a).is_zero()) throw McViolation("Delta a != 0");
  if (!mc_defect(D, a).is_zero()) throw McViolation("delta a + 1/2 [a . a] != 0");

  std::vector<Element> cols;
  cols.reserve(A.dim());
  for (std::size_t j = 0; j < A.dim(); ++j) cols.push_back(D.delta().on_basis(j) + bracket(D, a, Element::unit(j)));
  SparseMatrix m(A.dim(), std::move(cols));
  std::optional<GradedOperator> twisted;
  try {
    twisted.emplace(A, m, 1, D.delta().shift());
  } catch (const GradingViolation&) {
    // a with mixed bidegree: the twisted differential only keeps the parity
    twisted.emplace(A, m, 1);
  }
  return DGBVStructure(D.algebra_ptr(), *twisted, D.Delta());
}

}  // namespace dgbv
