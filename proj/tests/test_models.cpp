#include "dgbv/errors.hpp"
#include "dgbv/io.hpp"
#include "dgbv/models.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>


using namespace dgbv;
using testing_support::has_witness;


TEST_CASE("n=1 contraction values") {
  TorusModel t = build_torus(1, TorusSide::BK);
  const auto& A = t.model.D.algebra();
  const auto& F = t.forms->D.algebra();
  auto img = [&](const char* name) { return contract_omega(t, Element::unit(*A.index_of(name))); };
  CHECK(img("1") == Element::unit(*F.index_of("e1")));
  CHECK(img("t1") == Element::unit(*F.index_of("1")));
  CHECK(img("eb1") == Element::unit(*F.index_of("e1^eb1")));
  CHECK(img("t1^eb1") == Element::unit(*F.index_of("eb1")));
  CHECK(bk_integral(t, A.unit()).is_zero());
  CHECK(bk_integral(t, Element::unit(*A.index_of("t1^eb1"))) == Scalar(-1));
}

TEST_CASE("contraction against the word oracle") {
  for (unsigned n = 1; n <= 3; ++n)
    for (auto v : {TorusVariant::Standard, TorusVariant::Conjugate}) {
      TorusModel t = build_torus(n, TorusSide::BK, v);
      const std::size_t dim = t.model.D.dim();
      SparseMatrix C = contraction_matrix(t);
      for (std::size_t b = 0; b < dim; ++b) {
        Element want = oracle::contract_basis(t, b);
        CHECK(C.column(b) == want);
        CHECK(bk_integral(t, Element::unit(b)) == oracle::bk_value(t, want));
        CHECK(t.model.f.covector().coeff(b) == oracle::bk_value(t, want));
      }
      CHECK(oracle::rank(oracle::dense(C)) == dim);
      CHECK(contraction_checks(t).clean());
      CHECK(full_validation(t.model).clean());
      CHECK(bk_integral(t, t.model.D.algebra().unit()).is_zero());
      // the only nonzero value sits on the top monomial
      std::size_t nonzero = 0;
      for (std::size_t b = 0; b < dim; ++b)
        if (!t.model.f.covector().coeff(b).is_zero()) {
          ++nonzero;
          CHECK(oracle::split_name(t.model.D.algebra().basis(b).name).size() == 2 * n);
          Scalar v = t.model.f.covector().coeff(b);
          CHECK((v == Scalar(1) || v == Scalar(-1)));
        }
      CHECK(nonzero == 1);
    }
}

TEST_CASE("contraction checks catch a tampered integral") {
  TorusModel t = build_torus(2, TorusSide::BK);
  Element cov = t.model.f.covector();
  const std::size_t j = *t.model.D.algebra().index_of("t1^eb1");
  cov.add_term(j, Scalar(1));
  t.model.f = IntegralFunctional(cov);
  CHECK(has_witness(contraction_checks(t), "bk-integral", {j}));
}

TEST_CASE("side mismatch, bounds and generator parity") {
  TorusModel cz = build_torus(2, TorusSide::CZ);
  CHECK_THROWS_AS(contract_omega(cz, cz.model.D.algebra().unit()), SideMismatch);
  CHECK_THROWS_AS(contraction_matrix(cz), SideMismatch);
  CHECK_THROWS_AS(contraction_checks(cz), SideMismatch);
  CHECK_THROWS_AS(build_torus(0, TorusSide::CZ), DimensionMismatch);
  CHECK_THROWS_AS(build_torus(5, TorusSide::BK), DimensionMismatch);
  CHECK_THROWS(exterior_algebra({{"x", Degree::even()}}));
}

TEST_CASE("torus models: structure and variants") {
  for (unsigned n = 1; n <= 4; ++n) {
    TorusModel s = build_torus(n, TorusSide::CZ), c = build_torus(n, TorusSide::CZ, TorusVariant::Conjugate);
    CHECK(s.model.D.dim() == (std::size_t(1) << (2 * n)));
    CHECK(s.model.D.delta().is_zero());
    CHECK(s.model.D.Delta().is_zero());
    const auto& A = s.model.D.algebra();
    const auto& B = c.model.D.algebra();
    for (std::size_t j = 0; j < A.dim(); ++j) {
      CHECK(A.basis(j).name == B.basis(j).name);
      auto a = *A.basis(j).degree.bidegree(), b = *B.basis(j).degree.bidegree();
      CHECK(a.p == b.q);
      CHECK(a.q == b.p);
    }
    auto sh = *s.model.D.delta().shift(), ch = *c.model.D.delta().shift();
    CHECK(sh.p == ch.q);
    CHECK(sh.q == ch.p);
    if (n <= 3) CHECK(full_validation(c.model).clean());
  }
  TorusModel bk = build_torus(1, TorusSide::BK);
  CHECK(holomorphic_d(bk).is_zero());
  CHECK(holomorphic_d(bk).parity() == 1);
}

TEST_CASE("synthetic and broken models") {
  Model s = build_synthetic();
  CHECK(s.D.dim() == 20);
  CHECK(full_validation(s).clean());
  Model b = build_broken();
  ValidationReport r = full_validation(b);
  CHECK(!r.clean());
  for (const auto& c : r.checks())
    if (!c.passed) CHECK(c.condition == 3);
}
