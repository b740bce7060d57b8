#include "dgbv/models.hpp"

#include "dgbv/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

namespace dgbv {

const char* side_name(TorusSide s) { return s == TorusSide::CZ ? "cz" : "bk"; }
const char* variant_name(TorusVariant v) { return v == TorusVariant::Standard ? "standard" : "conjugate"; }

namespace {

using Mask = std::uint32_t;

// Subsets of g generators ordered by size, then lexicographically by their
// ascending index lists.
struct SubsetIndex {
  std::vector<Mask> masks;
  std::map<Mask, std::size_t> index;

  explicit SubsetIndex(unsigned g) {
    for (Mask m = 0; m < (Mask(1) << g); ++m) masks.push_back(m);
    auto key = [](Mask m) {
      std::vector<unsigned> bits;
      for (unsigned i = 0; i < 32; ++i)
        if (m >> i & 1) bits.push_back(i);
      return bits;
    };
    std::sort(masks.begin(), masks.end(), [&](Mask a, Mask b) {
      int pa = std::popcount(a), pb = std::popcount(b);
      if (pa != pb) return pa < pb;
      return key(a) < key(b);
    });
    for (std::size_t i = 0; i < masks.size(); ++i) index[masks[i]] = i;
  }
  std::size_t at(Mask m) const { return index.at(m); }
};

int below(Mask m, unsigned j) { return std::popcount(m & ((Mask(1) << j) - 1)); }

// Sign of sorting the concatenation S T of odd generators; 0 if they overlap.
int merge_sign(Mask s, Mask t) {
  if (s & t) return 0;
  int inv = 0;
  for (unsigned j = 0; j < 32; ++j)
    if (t >> j & 1) inv += std::popcount(s >> (j + 1));
  return (inv & 1) ? -1 : 1;
}

// d/dg_j from the left: sign (-1)^{generators before j}; 0 if absent.
std::pair<int, Mask> left_derivative(Mask m, unsigned j) {
  if (!(m >> j & 1)) return {0, 0};
  return {(below(m, j) & 1) ? -1 : 1, m & ~(Mask(1) << j)};
}

std::vector<BasisElement> subset_basis(const std::vector<BasisElement>& gens, const SubsetIndex& idx) {
  bool bi = std::all_of(gens.begin(), gens.end(), [](const BasisElement& g) { return g.degree.has_bidegree(); });
  std::vector<BasisElement> basis;
  for (Mask m : idx.masks) {
    std::string name;
    Bidegree d{0, 0};
    int parity = 0;
    for (unsigned j = 0; j < gens.size(); ++j) {
      if (!(m >> j & 1)) continue;
      if (!name.empty()) name += "^";
      name += gens[j].name;
      parity += gens[j].degree.parity();
      if (bi) d = d + *gens[j].degree.bidegree();
    }
    if (name.empty()) name = "1";
    basis.push_back({name, bi ? Degree::bi(d.p, d.q) : Degree::of_parity(parity)});
  }
  return basis;
}

struct TorusGrading {
  Bidegree first, second, delta, Delta, d;
};

TorusGrading grading(TorusVariant v) {
  if (v == TorusVariant::Standard) return {{1, 0}, {0, 1}, {0, 1}, {-1, 0}, {1, 0}};
  return {{0, 1}, {1, 0}, {1, 0}, {0, -1}, {0, 1}};
}

Model cz_model(unsigned n, TorusVariant v) {
  const auto gr = grading(v);
  std::vector<BasisElement> gens;
  for (unsigned i = 1; i <= n; ++i) {
    gens.push_back({"e" + std::to_string(i), Degree::bi(gr.first.p, gr.first.q)});
    gens.push_back({"eb" + std::to_string(i), Degree::bi(gr.second.p, gr.second.q)});
  }
  auto A = std::make_shared<const GradedAlgebra>(exterior_algebra(gens));
  GradedOperator delta = GradedOperator::zero(*A, 1, gr.delta);
  GradedOperator Delta = GradedOperator::zero(*A, 1, gr.Delta);
  IntegralFunctional f(Element::unit(A->dim() - 1));
  return Model{DGBVStructure(A, delta, Delta), f};
}

// Omega = e1 ^ ... ^ en inside the forms model (generator e_i has index 2(i-1)).
Mask omega_mask(unsigned n) {
  Mask m = 0;
  for (unsigned i = 0; i < n; ++i) m |= Mask(1) << (2 * i);
  return m;
}

Element contract_basis(unsigned n, const SubsetIndex& bk, const SubsetIndex& cz, std::size_t b) {
  Mask m = bk.masks[b];
  Mask forms = omega_mask(n);
  int sign = 1;
  // innermost contraction first: highest t index
  for (int j = static_cast<int>(n) - 1; j >= 0; --j) {
    if (!(m >> j & 1)) continue;
    auto [s, rest] = left_derivative(forms, 2 * static_cast<unsigned>(j));
    if (s == 0) return {};
    sign *= s;
    forms = rest;
  }
  Mask bar = 0;
  for (unsigned i = 0; i < n; ++i)
    if (m >> (n + i) & 1) bar |= Mask(1) << (2 * i + 1);
  int s = merge_sign(forms, bar);
  if (s == 0) return {};
  return Element::unit(cz.at(forms | bar), Scalar(sign * s));
}

Scalar integral_of_contraction(const Model& forms, unsigned n, const Element& image) {
  const auto& A = forms.D.algebra();
  SubsetIndex cz(2 * n);
  Element omega = Element::unit(cz.at(omega_mask(n)));
  return forms.f(wedge(A, image, omega));
}

void require_bk(const TorusModel& t) {
  if (t.side != TorusSide::BK || !t.forms) throw SideMismatch("operation needs a BK-side torus model");
}

}  // namespace

GradedAlgebra exterior_algebra(const std::vector<BasisElement>& generators, std::size_t max_dim) {
  const unsigned g = static_cast<unsigned>(generators.size());
  if (g > 16) throw DimensionMismatch("too many exterior generators");
  for (const auto& x : generators)
    if (x.degree.parity() != 1) throw GradingViolation("exterior generator " + x.name + " must be odd");
  if ((std::size_t(1) << g) > max_dim)
    throw DimensionMismatch("algebra dimension " + std::to_string(std::size_t(1) << g) + " exceeds cap " +
                            std::to_string(max_dim));
  SubsetIndex idx(g);
  GradedAlgebra::ProductTable table;
  for (std::size_t i = 0; i < idx.masks.size(); ++i)
    for (std::size_t j = 0; j < idx.masks.size(); ++j) {
      int s = merge_sign(idx.masks[i], idx.masks[j]);
      if (s) table[{i, j}] = Element::unit(idx.at(idx.masks[i] | idx.masks[j]), Scalar(s));
    }
  return GradedAlgebra(subset_basis(generators, idx), 0, table, max_dim);
}

TorusModel build_torus(unsigned n, TorusSide side, TorusVariant variant) {
  if (n < 1 || n > 4) throw DimensionMismatch("torus dimension must be between 1 and 4");
  if (side == TorusSide::CZ) return TorusModel{n, side, variant, cz_model(n, variant), nullptr};

  const auto gr = grading(variant);
  auto forms = std::make_shared<const Model>(cz_model(n, variant));
  std::vector<BasisElement> gens;
  for (unsigned i = 1; i <= n; ++i) gens.push_back({"t" + std::to_string(i), Degree::bi(gr.first.p, gr.first.q)});
  for (unsigned i = 1; i <= n; ++i) gens.push_back({"eb" + std::to_string(i), Degree::bi(gr.second.p, gr.second.q)});
  auto A = std::make_shared<const GradedAlgebra>(exterior_algebra(gens));

  SubsetIndex bk(2 * n), cz(2 * n);
  Element cov;
  for (std::size_t b = 0; b < A->dim(); ++b) {
    Scalar v = integral_of_contraction(*forms, n, contract_basis(n, bk, cz, b));
    if (!v.is_zero()) cov.add_term(b, v);
  }
  GradedOperator delta = GradedOperator::zero(*A, 1, gr.delta);
  GradedOperator Delta = GradedOperator::zero(*A, 1, gr.Delta);
  return TorusModel{n, side, variant, Model{DGBVStructure(A, delta, Delta), IntegralFunctional(cov)}, forms};
}

Element contract_omega(const TorusModel& t, const Element& gamma) {
  require_bk(t);
  t.model.D.algebra().check(gamma);
  SubsetIndex bk(2 * t.n), cz(2 * t.n);
  Element out;
  for (const auto& [b, c] : gamma) out.axpy(c, contract_basis(t.n, bk, cz, b));
  return out;
}

SparseMatrix contraction_matrix(const TorusModel& t) {
  require_bk(t);
  SubsetIndex bk(2 * t.n), cz(2 * t.n);
  std::vector<SparseVector> cols;
  for (std::size_t b = 0; b < t.model.D.dim(); ++b) cols.push_back(contract_basis(t.n, bk, cz, b));
  return SparseMatrix(t.forms->D.dim(), std::move(cols));
}

Scalar bk_integral(const TorusModel& t, const Element& gamma) {
  require_bk(t);
  return integral_of_contraction(*t.forms, t.n, contract_omega(t, gamma));
}

GradedOperator holomorphic_d(const TorusModel& t) {
  require_bk(t);
  return GradedOperator::zero(t.forms->D.algebra(), 1, grading(t.variant).d);
}

ValidationReport contraction_checks(const TorusModel& t) {
  require_bk(t);
  ValidationReport r;
  const std::size_t n = t.model.D.dim();
  SparseMatrix C = contraction_matrix(t);

  r.begin("contraction-isomorphism");
  std::size_t rk = rank(C);
  if (C.rows() != n || rk != n) r.fail({rk, n}, "rank " + std::to_string(rk) + " of " + std::to_string(n));

  r.begin("Delta-contraction-diagram");
  GradedOperator d = holomorphic_d(t);
  for (std::size_t j = 0; j < n; ++j) {
    Element lhs = C.apply(t.model.D.Delta().on_basis(j));
    Element rhs = d.apply(C.column(j));
    if (lhs != rhs) r.fail({j}, t.model.D.algebra().basis(j).name);
  }

  r.begin("bk-integral");
  for (std::size_t j = 0; j < n; ++j) {
    Scalar v = bk_integral(t, Element::unit(j));
    Scalar stored = t.model.f.covector().coeff(j);
    if (v != stored) r.fail({j}, v.to_string() + " vs " + stored.to_string());
  }
  return r;
}

Model build_synthetic() {
  // Lambda(a, b) factor
  const std::vector<std::string> lname = {"", "a", "b", "a^b"};
  const std::vector<Bidegree> ldeg = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  const std::vector<Mask> lmask = {0, 1, 2, 3};
  // C = k 1 + V
  enum { one, eta, sigma, tau, w };
  const std::vector<std::string> cname = {"", "eta", "sigma", "tau", "w"};
  const std::vector<Bidegree> cdeg = {{0, 0}, {1, 0}, {1, 1}, {0, 0}, {0, 1}};
  const std::size_t nc = cname.size();
  auto idx = [&](std::size_t l, std::size_t c) { return l * nc + c; };
  auto par = [](Bidegree d) { return (d.p + d.q) & 1; };

  std::vector<BasisElement> basis;
  for (std::size_t l = 0; l < 4; ++l)
    for (std::size_t c = 0; c < nc; ++c) {
      std::string name = lname[l];
      if (c != one) name += (name.empty() ? "" : "^") + cname[c];
      if (name.empty()) name = "1";
      Bidegree d = ldeg[l] + cdeg[c];
      basis.push_back({name, Degree::bi(d.p, d.q)});
    }

  GradedAlgebra::ProductTable table;
  for (std::size_t l1 = 0; l1 < 4; ++l1)
    for (std::size_t c1 = 0; c1 < nc; ++c1)
      for (std::size_t l2 = 0; l2 < 4; ++l2)
        for (std::size_t c2 = 0; c2 < nc; ++c2) {
          int s = merge_sign(lmask[l1], lmask[l2]);
          if (!s) continue;
          std::size_t c;
          if (c1 == one) c = c2;
          else if (c2 == one) c = c1;
          else continue;
          if (par(cdeg[c1]) && par(ldeg[l2])) s = -s;
          std::size_t l = static_cast<std::size_t>(lmask[l1] | lmask[l2]);
          table[{idx(l1, c1), idx(l2, c2)}] = Element::unit(idx(l, c), Scalar(s));
        }
  auto A = std::make_shared<const GradedAlgebra>(std::move(basis), idx(0, one), table);

  const std::size_t n = A->dim();
  std::vector<SparseVector> dcols(n), Dcols(n);
  for (std::size_t l = 0; l < 4; ++l) {
    Scalar s = sign_of(par(ldeg[l]));
    dcols[idx(l, eta)] = Element::unit(idx(l, sigma), s);
    dcols[idx(l, tau)] = Element::unit(idx(l, w), s);
    Dcols[idx(l, eta)] = Element::unit(idx(l, tau), s);
    Dcols[idx(l, sigma)] = Element::unit(idx(l, w), -s);
  }
  // w d_a d_b (a^b) = -w
  Dcols[idx(3, one)].add_term(idx(0, w), Scalar(-1));

  GradedOperator delta(*A, SparseMatrix(n, dcols), 1, Bidegree{0, 1});
  GradedOperator Delta(*A, SparseMatrix(n, Dcols), 1, Bidegree{-1, 0});
  IntegralFunctional f(Element::unit(idx(3, one)));
  return Model{DGBVStructure(A, delta, Delta), f};
}

Model build_broken() {
  std::vector<BasisElement> gens = {{"t1", Degree::odd()}, {"t2", Degree::odd()}, {"t3", Degree::odd()}};
  auto A = std::make_shared<const GradedAlgebra>(exterior_algebra(gens));
  SubsetIndex idx(3);
  const std::size_t n = A->dim();
  std::vector<SparseVector> cols(n);
  for (std::size_t b = 0; b < n; ++b) {
    auto [s2, m2] = left_derivative(idx.masks[b], 1);
    if (!s2) continue;
    auto [s1, m1] = left_derivative(m2, 0);
    if (!s1) continue;
    int s3 = merge_sign(Mask(4), m1);
    if (!s3) continue;
    cols[b] = Element::unit(idx.at(m1 | 4), Scalar(s1 * s2 * s3));
  }
  GradedOperator delta = GradedOperator::zero(*A, 1);
  GradedOperator Delta(*A, SparseMatrix(n, cols), 1);
  return Model{DGBVStructure(A, delta, Delta), IntegralFunctional()};
}

}  // namespace dgbv
