#include "dgbv/errors.hpp"
#include "dgbv/mc.hpp"
#include "dgbv/models.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace dgbv;

namespace {

ElementSeries first_order(const CohomologyBasis& H, unsigned N) {
  VariableContext ctx = VariableContext::from_cohomology(H);
  ElementSeries g(ctx, N);
  for (std::size_t j = 0; j < H.size(); ++j) g.add(SuperMonomial::variable(H.size(), j), H.representatives[j]);
  return g;
}

}  // namespace

TEST_CASE("torus models: Gamma is Gamma_1 at every order") {
  std::vector<TorusModel> tori = {build_torus(1, TorusSide::CZ), build_torus(2, TorusSide::CZ),
                                  build_torus(3, TorusSide::CZ), build_torus(1, TorusSide::BK),
                                  build_torus(2, TorusSide::BK), build_torus(1, TorusSide::CZ, TorusVariant::Conjugate)};
  for (const auto& t : tori) {
    CohomologyBasis H = cohomology(t.model.D);
    for (unsigned N = 1; N <= 6; ++N) {
      SolveOptions opts;
      opts.verify_preconditions = N == 1;
      MCSolution M = solve_mc(t.model.D, H, N, opts);
      CHECK(M.gamma == first_order(H, N));
      CHECK(residual(t.model.D, M.gamma, N).is_zero());
    }
  }
}

TEST_CASE("order one on the synthetic model") {
  Model m = build_synthetic();
  CohomologyBasis H = cohomology(m.D);
  MCSolution M = solve_mc(m.D, H, 1);
  CHECK(M.gamma == first_order(H, 1));
  CHECK(residual(m.D, M.gamma, 1).is_zero());
  CHECK(M.log.empty());
}

TEST_CASE("synthetic model through order 4") {
  Model m = build_synthetic();
  const auto& A = m.D.algebra();
  const std::size_t n = A.dim();
  CohomologyBasis H = cohomology(m.D);
  MCSolution M = solve_mc(m.D, H, 4);
  CHECK(!M.part(2).is_zero());
  CHECK(M.part(1) == first_order(H, 4));
  CHECK(M.part(0).is_zero());

  std::vector<std::vector<Scalar>> imDelta;
  for (std::size_t j = 0; j < n; ++j) imDelta.push_back(oracle::to_dense(m.D.Delta().on_basis(j), n));
  const std::size_t rim = oracle::span_dim(imDelta);
  for (unsigned k = 2; k <= 4; ++k) {
    const ElementSeries part = M.part(k);
    for (const auto& [mono, c] : part.terms()) {
      auto span = imDelta;
      span.push_back(oracle::to_dense(c, n));
      CHECK(oracle::span_dim(span) == rim);
      CHECK(!mono.contains(H.unit_position));
    }
  }
  CHECK(apply(m.D.Delta(), M.gamma).is_zero());
  CHECK(total_parity(A, M.gamma) == 0);
  CHECK(residual(m.D, M.gamma, 4).is_zero());

  // the log records exactly the coefficients of Gamma_n
  for (const auto& rec : M.log)
    for (const auto& e : rec.entries) {
      CHECK(M.gamma.coeff(e.monomial) == e.selected);
      CHECK(in_image(m.D.delta(), e.rhs));
      CHECK(m.D.Delta().apply(e.rhs).is_zero());
    }

  // dropping Gamma_2 is seen by the residual
  ElementSeries g1 = M.part(1);
  CHECK(!residual(m.D, g1, 2).is_zero());
}

TEST_CASE("solver output is deterministic") {
  Model m = build_synthetic();
  CohomologyBasis H = cohomology(m.D);
  MCSolution a = solve_mc(m.D, H, 4), b = solve_mc(build_synthetic().D, cohomology(build_synthetic().D), 4);
  CHECK(a.gamma == b.gamma);
  REQUIRE(a.log.size() == b.log.size());
  for (std::size_t k = 0; k < a.log.size(); ++k) {
    REQUIRE(a.log[k].entries.size() == b.log[k].entries.size());
    for (std::size_t e = 0; e < a.log[k].entries.size(); ++e) {
      CHECK(a.log[k].entries[e].monomial == b.log[k].entries[e].monomial);
      CHECK(a.log[k].entries[e].selected == b.log[k].entries[e].selected);
    }
  }
}

TEST_CASE("preconditions and obstructions") {
  Model b = build_broken();
  CohomologyBasis fake;
  fake.representatives = {b.D.algebra().unit()};
  fake.degrees = {Degree::even()};
  CHECK_THROWS_AS(solve_mc(b.D, fake, 2), Obstruction);

  Model s = build_synthetic();
  CohomologyBasis H = cohomology(s.D);
  CHECK_THROWS_AS(solve_mc(s.D, H, 0), PreconditionFailure);
  // a representative that is not Delta-closed
  CohomologyBasis bad = H;
  bad.representatives[3] = Element::unit(*s.D.algebra().index_of("a^b"));
  CHECK_THROWS_AS(solve_mc(s.D, bad, 2), PreconditionFailure);
  // broken anticommutation
  auto cols = s.D.delta().matrix().columns();
  cols[*s.D.algebra().index_of("eta")] = Element::unit(*s.D.algebra().index_of("sigma"), Scalar(-1));
  DGBVStructure M(s.D.algebra_ptr(), GradedOperator(s.D.algebra(), SparseMatrix(s.D.dim(), cols), 1), s.D.Delta());
  CHECK_THROWS_AS(solve_mc(M, H, 2), PreconditionFailure);
}

TEST_CASE("residual of zero and of Gamma_1 on a torus") {
  Model s = build_synthetic();
  VariableContext ctx({0, 1});
  CHECK(residual(s.D, ElementSeries(ctx, 3), 3).is_zero());
  TorusModel t = build_torus(1, TorusSide::CZ);
  CohomologyBasis H = cohomology(t.model.D);
  CHECK(residual(t.model.D, first_order(H, 5), 5).is_zero());
}
