#include "dgbv/dgbv.hpp"
#include "dgbv/errors.hpp"
#include "dgbv/models.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace dgbv;
using testing_support::has_witness;
using testing_support::idx;

namespace {

// [a . b] straight from the definition on basis vectors, with dense matrices.
std::vector<Scalar> direct_bracket(const DGBVStructure& D, std::size_t i, std::size_t j) {
  const auto& A = D.algebra();
  const std::size_t n = A.dim();
  auto Dm = oracle::dense(D.Delta().matrix());
  std::vector<Scalar> a(n), b(n);
  a[i] = Scalar(1);
  b[j] = Scalar(1);
  auto ab = oracle::mul(A, a, b);
  auto t1 = oracle::mat_vec(Dm, ab);
  auto t2 = oracle::mul(A, oracle::mat_vec(Dm, a), b);
  auto t3 = oracle::mul(A, a, oracle::mat_vec(Dm, b));
  int pa = A.parity(i);
  std::vector<Scalar> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Scalar v = t1[k] - t2[k] - sign_of(pa) * t3[k];
    out[k] = sign_of(pa) * v;
  }
  return out;
}

DGBVStructure with_operators(const DGBVStructure& D, const SparseMatrix& d, const SparseMatrix& Dl) {
  return DGBVStructure(D.algebra_ptr(), GradedOperator(D.algebra(), d, 1), GradedOperator(D.algebra(), Dl, 1));
}

SparseMatrix edit(const SparseMatrix& m, std::size_t from, std::size_t to, const Scalar& value) {
  auto cols = m.columns();
  Scalar c = cols[from].coeff(to);
  cols[from].add_term(to, value - c);
  return SparseMatrix(m.rows(), cols);
}

std::vector<std::size_t> even_basis(const GradedAlgebra& A) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < A.dim(); ++i)
    if (!A.parity(i)) out.push_back(i);
  return out;
}

}  // namespace

TEST_CASE("bracket matches its definition and the Koszul bracket") {
  Model m = build_synthetic();
  const auto& A = m.D.algebra();
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      Element br = bracket(m.D, Element::unit(i), Element::unit(j));
      CHECK(oracle::to_dense(br, A.dim()) == direct_bracket(m.D, i, j));
      // with both formulas taken literally the two brackets differ by (-1)^{|a|+1}
      Element kz = koszul_bracket(m.D, Element::unit(i), Element::unit(j));
      CHECK(br == sign_of(A.parity(i) + 1) * kz);
    }
  Element ab = bracket(m.D, Element::unit(idx(A, "a")), Element::unit(idx(A, "b")));
  CHECK(!ab.is_zero());
  // the relation with sign (-1)^{|a|} alone does not hold on this pair
  Element kab = koszul_bracket(m.D, Element::unit(idx(A, "a")), Element::unit(idx(A, "b")));
  CHECK(ab != sign_of(A.parity(idx(A, "a"))) * kab);
  CHECK(koszul_bracket(m.D, A.unit(), Element::unit(idx(A, "eta"))).is_zero());
}

TEST_CASE("bracket is bilinear including mixed parity arguments") {
  Model m = build_synthetic();
  const auto& A = m.D.algebra();
  std::mt19937 rng(1);
  auto table = bracket_table(m.D);
  for (int t = 0; t < 30; ++t) {
    Element a = oracle::random_element(rng, A.dim(), 3, true), b = oracle::random_element(rng, A.dim(), 3, true);
    Element expect;
    for (const auto& [i, ci] : a)
      for (const auto& [j, cj] : b) expect.axpy(ci * cj, table[i * A.dim() + j]);
    CHECK(bracket(m.D, a, b) == expect);
  }
}

TEST_CASE("bundled models satisfy the axioms and the derived identities") {
  CHECK(validate_dgbv(build_synthetic().D).clean());
  CHECK(validate_dgbv(build_broken().D).clean());
  for (unsigned n = 1; n <= 2; ++n) {
    CHECK(validate_dgbv(build_torus(n, TorusSide::CZ).model.D).clean());
    CHECK(validate_dgbv(build_torus(n, TorusSide::BK).model.D).clean());
    CHECK(validate_dgbv(build_torus(n, TorusSide::CZ, TorusVariant::Conjugate).model.D).clean());
  }
}

TEST_CASE("operator mutations are caught with the mutated basis element as witness") {
  Model m = build_synthetic();
  const auto& A = m.D.algebra();
  const std::size_t eta = idx(A, "eta"), sigma = idx(A, "sigma"), tau = idx(A, "tau"), w = idx(A, "w");
  const SparseMatrix& d = m.D.delta().matrix();
  const SparseMatrix& Dl = m.D.Delta().matrix();

  SUBCASE("delta entry sign flipped") {
    auto r = validate_dgbv(with_operators(m.D, edit(d, eta, sigma, Scalar(-1)), Dl));
    CHECK(has_witness(r, "anticommutation", {eta}));
  }
  SUBCASE("delta entry dropped") {
    auto r = validate_dgbv(with_operators(m.D, edit(d, tau, w, Scalar(0)), Dl));
    CHECK(has_witness(r, "anticommutation", {eta}));
  }
  SUBCASE("Delta entry sign flipped") {
    auto r = validate_dgbv(with_operators(m.D, d, edit(Dl, sigma, w, Scalar(1))));
    CHECK(has_witness(r, "anticommutation", {eta}));
  }
  SUBCASE("Delta on the unit") {
    auto r = validate_dgbv(with_operators(m.D, d, edit(Dl, A.unit_index(), w, Scalar(1))));
    CHECK(has_witness(r, "unit-closed", {A.unit_index()}));
  }
  SUBCASE("square-zero broken") {
    // delta sigma = w makes delta^2 eta = w
    auto r = validate_dgbv(with_operators(m.D, edit(d, sigma, w, Scalar(1)), Dl));
    CHECK(has_witness(r, "delta-square-zero", {eta}));
  }
}

TEST_CASE("twisting by a Maurer-Cartan element") {
  Model m = build_synthetic();
  const auto& A = m.D.algebra();
  auto even = even_basis(A);
  REQUIRE(even.size() == 10);

  // exhaustive search over coefficients in {-1, 0, 1}
  std::vector<Element> found;
  std::vector<int> digits(even.size(), -1);
  for (;;) {
    Element a;
    for (std::size_t k = 0; k < even.size(); ++k)
      if (digits[k]) a.add_term(even[k], Scalar(digits[k]));
    if (!a.is_zero() && m.D.Delta().apply(a).is_zero() && mc_defect(m.D, a).is_zero()) found.push_back(a);
    std::size_t k = 0;
    while (k < digits.size() && digits[k] == 1) digits[k++] = -1;
    if (k == digits.size()) break;
    ++digits[k];
  }
  REQUIRE(!found.empty());
  bool nontrivial = false;
  for (const auto& a : found) {
    DGBVStructure T = twist(m.D, a);
    CHECK(validate_dgbv(T).clean());
    CHECK(T.Delta() == m.D.Delta());
    nontrivial = nontrivial || !(T.delta().matrix() == m.D.delta().matrix());
  }
  CHECK(nontrivial);

  CHECK_THROWS_AS(twist(m.D, Element::unit(idx(A, "eta"))), McViolation);
  CHECK_THROWS_AS(twist(m.D, Element::unit(idx(A, "sigma"))), McViolation);  // Delta sigma != 0
  CHECK_THROWS_AS(twist(m.D, Element::unit(idx(A, "tau"))), McViolation);    // delta tau != 0
}
