#include "dgbv/cohomology.hpp"

#include "dgbv/errors.hpp"

namespace dgbv {

Scalar IntegralFunctional::operator()(const Element& a) const {
  Scalar s;
  auto x = covector_.begin();
  auto y = a.begin();
  while (x != covector_.end() && y != a.end()) {
    if (x->first < y->first) {
      ++x;
    } else if (y->first < x->first) {
      ++y;
    } else {
      s += x->second * y->second;
      ++x;
      ++y;
    }
  }
  return s;
}

std::map<std::string, std::size_t> CohomologyBasis::betti() const {
  std::map<std::string, std::size_t> out;
  for (const auto& d : degrees) ++out[d.to_string()];
  return out;
}

bool SquareMatrix::invert(SquareMatrix& out) const {
  const std::size_t n = n_;
  SquareMatrix a = *this;
  out = SquareMatrix(n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = Scalar(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) return false;
    if (piv != col)
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a(piv, k), a(col, k));
        std::swap(out(piv, k), out(col, k));
      }
    Scalar inv = a(col, col).inverse();
    for (std::size_t k = 0; k < n; ++k) {
      a(col, k) *= inv;
      out(col, k) *= inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      Scalar c = a(r, col);
      for (std::size_t k = 0; k < n; ++k) {
        a(r, k) -= c * a(col, k);
        out(r, k) -= c * out(col, k);
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

ValidationReport check_integral(const DGBVStructure& D, const IntegralFunctional& f) {
  ValidationReport r;
  const auto& A = D.algebra();
  const std::size_t n = A.dim();
  A.check(f.covector());

  r.begin("integral-even");
  for (const auto& [i, c] : f.covector())
    if (A.parity(i)) r.fail({i}, "integral of odd " + A.basis(i).name + " is " + c.to_string());

  auto condition = [&](const char* name, const GradedOperator& op, int shift) {
    r.begin(name);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Scalar lhs = f(wedge(A, op.on_basis(i), Element::unit(j)));
        Scalar rhs = sign_of(A.parity(i) + shift) * f(wedge(A, Element::unit(i), op.on_basis(j)));
        if (lhs != rhs) r.fail({i, j}, lhs.to_string() + " vs " + rhs.to_string());
      }
  };
  condition("integral-delta-compatible", D.delta(), 1);
  condition("integral-Delta-compatible", D.Delta(), 0);
  return r;
}

namespace {

std::vector<Element> images(const GradedOperator& op, const std::vector<Element>& vs) {
  EchelonBasis e;
  for (const auto& v : vs) e.insert(op.apply(v));
  return e.rows();
}

struct SubcomplexDims {
  std::size_t sub_h = 0;     // dim H of the subcomplex
  std::size_t full_h = 0;    // dim H of the full complex
  bool injective = false;
  bool surjective = false;
};

// Inclusion (Ker other, d) -> (A, d).
SubcomplexDims compare(const GradedOperator& d, const GradedOperator& other, std::size_t n) {
  auto ker_d = kernel_basis(d.matrix());
  auto ker_other = kernel_basis(other.matrix());
  auto both = common_kernel_basis({&d.matrix(), &other.matrix()});
  auto im_d = image_basis(d.matrix());
  auto d_of_sub = images(d, ker_other);

  SubcomplexDims out;
  out.sub_h = both.size() - d_of_sub.size();
  out.full_h = ker_d.size() - im_d.size();
  out.injective = intersection_basis(both, im_d, n).size() == d_of_sub.size();
  out.surjective = sum_dimension(both, im_d) == ker_d.size();
  return out;
}

}  // namespace

ValidationReport check_condition3(const DGBVStructure& D) {
  ValidationReport r;
  const std::size_t n = D.dim();

  // Finite-dimensional algebras have finite-dimensional cohomology.
  r.begin("cohomology-finite", CheckTier::Hypothesis, 1);

  auto run = [&](const char* name, const GradedOperator& d, const GradedOperator& other, const char* label) {
    r.begin(name, CheckTier::Hypothesis, 3);
    SubcomplexDims s = compare(d, other, n);
    std::string dims = std::string("dim H(") + label + ") = " + std::to_string(s.sub_h) + ", dim H(full) = " +
                       std::to_string(s.full_h);
    if (s.sub_h != s.full_h) r.fail({s.sub_h, s.full_h}, "dimension mismatch: " + dims);
    if (!s.injective) r.fail({s.sub_h, s.full_h}, "induced map not injective: " + dims);
    if (!s.surjective) r.fail({s.sub_h, s.full_h}, "induced map not surjective: " + dims);
  };
  run("inclusion-ker-Delta-quasi-iso", D.delta(), D.Delta(), "Ker Delta, delta");
  run("inclusion-ker-delta-quasi-iso", D.Delta(), D.delta(), "Ker delta, Delta");
  return r;
}

CohomologyBasis cohomology(const DGBVStructure& D) {
  const auto& A = D.algebra();
  if (!check_condition3(D).clean())
    throw Obstruction("cannot choose delta- and Delta-closed representatives: the inclusion quasi-isomorphism "
                      "hypothesis fails (run check_condition3)");

  auto im_d = image_basis(D.delta().matrix());
  const std::size_t target = kernel_basis(D.delta().matrix()).size() - im_d.size();
  auto closed = common_kernel_basis({&D.delta().matrix(), &D.Delta().matrix()});

  // The unit column of both operators is zero, so e_unit is itself a kernel vector.
  std::vector<Element> ordered;
  ordered.push_back(A.unit());
  for (auto& v : closed)
    if (v != A.unit()) ordered.push_back(std::move(v));

  EchelonBasis span;
  for (const auto& v : im_d) span.insert(v);
  CohomologyBasis H;
  for (const auto& v : ordered) {
    if (!span.insert(v)) continue;
    auto p = A.parity_of(v);
    if (!p) throw CheckFailure("inhomogeneous cohomology representative " + A.format(v));
    Degree deg = Degree::of_parity(*p);
    const auto& lead = A.basis(v.terms().front().first).degree;
    if (A.bigraded()) {
      bool same = true;
      for (const auto& [i, c] : v) same = same && A.basis(i).degree == lead;
      if (same) deg = lead;
    }
    H.representatives.push_back(v);
    H.degrees.push_back(deg);
  }
  if (H.size() != target)
    throw Obstruction("found " + std::to_string(H.size()) + " closed representatives, cohomology has dimension " +
                      std::to_string(target));
  H.unit_position = 0;
  return H;
}

PairingMatrix pairing(const DGBVStructure& D, const IntegralFunctional& f, const CohomologyBasis& H) {
  const auto& A = D.algebra();
  const std::size_t m = H.size();
  PairingMatrix P;
  P.g = SquareMatrix(m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) P.g(j, k) = f(wedge(A, H.representatives[j], H.representatives[k]));
  if (!P.g.invert(P.g_inv)) throw NotNice("pairing on cohomology is degenerate: the integral is not nice");

  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Element ab = wedge(A, H.representatives[a], H.representatives[b]);
      for (std::size_t c = 0; c < m; ++c) {
        Element bc = wedge(A, H.representatives[b], H.representatives[c]);
        if (f(wedge(A, ab, H.representatives[c])) != f(wedge(A, H.representatives[a], bc)))
          throw CheckFailure("Frobenius property fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                             std::to_string(c) + ")");
      }
    }
  return P;
}

ValidationReport check_pairing(const DGBVStructure& D, const IntegralFunctional& f, const CohomologyBasis& H) {
  ValidationReport r;
  const auto& A = D.algebra();
  const std::size_t m = H.size();
  SquareMatrix g(m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) g(j, k) = f(wedge(A, H.representatives[j], H.representatives[k]));

  r.begin("pairing-nondegenerate", CheckTier::Hypothesis, 2);
  SquareMatrix inv;
  if (!g.invert(inv)) r.fail({m}, "pairing matrix on cohomology is singular");

  r.begin("pairing-graded-symmetry");
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = j; k < m; ++k) {
      Scalar other = f(wedge(A, H.representatives[k], H.representatives[j]));
      if (g(j, k) != sign_of(H.parity(j) * H.parity(k)) * other) r.fail({j, k});
    }

  r.begin("frobenius-property");
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Element ab = wedge(A, H.representatives[a], H.representatives[b]);
      for (std::size_t c = 0; c < m; ++c) {
        Element bc = wedge(A, H.representatives[b], H.representatives[c]);
        if (f(wedge(A, ab, H.representatives[c])) != f(wedge(A, H.representatives[a], bc))) r.fail({a, b, c});
      }
    }
  return r;
}

// ---------------------------------------------------------------------------

PreimageSelector::PreimageSelector(const DGBVStructure& D)
    : delta_(D.delta().matrix()), Delta_(D.Delta().matrix()) {
  SparseMatrix m = delta_.compose(Delta_);
  m_adj_ = m.adjoint();
  normal_ = m.compose(m_adj_);
}

Element PreimageSelector::select(const Element& r) const {
  if (r.is_zero()) return Element();
  SparseVector y;
  if (!solve(normal_, r, y)) throw Obstruction("no gamma in Im Delta with delta gamma = r");
  Element eta = m_adj_.apply(y);
  Element gamma = Delta_.apply(eta);
  if (delta_.apply(gamma) != r) throw CheckFailure("preimage does not satisfy delta gamma = r");
  if (!Delta_.apply(gamma).is_zero()) throw CheckFailure("preimage is not Delta-closed");
  return gamma;
}

Element select_preimage(const DGBVStructure& D, const Element& r) {
  D.algebra().check(r);
  return PreimageSelector(D).select(r);
}

bool in_image(const GradedOperator& op, const Element& v) {
  EchelonBasis e;
  for (const auto& c : op.matrix().columns()) e.insert(c);
  return e.contains(v);
}

}  // namespace dgbv
