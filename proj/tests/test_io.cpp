#include "dgbv/errors.hpp"
#include "dgbv/io.hpp"
#include "dgbv/models.hpp"

#include <doctest.h>

#include <filesystem>

using namespace dgbv;

namespace {

std::vector<Model> all_models() {
  return {build_torus(1, TorusSide::CZ).model, build_torus(2, TorusSide::CZ).model,
          build_torus(1, TorusSide::BK).model, build_torus(2, TorusSide::BK, TorusVariant::Conjugate).model,
          build_synthetic(), build_broken()};
}

const char* two_generators = R"({
  "field": "gaussian-rational",
  "unit": "1",
  "basis": [
    {"name": "1", "parity": 0},
    {"name": "x", "parity": 1},
    {"name": "y", "parity": 1},
    {"name": "xy", "parity": 0}
  ],
  "product": [
    {"left": "x", "right": "y", "result": [{"basis": "xy", "coeff": "1"}]}
  ],
  "integral": [{"basis": "xy", "coeff": "1"}]
})";

Json doc_of(const char* text) { return Json::parse(text); }

std::string parse_path(const Json& doc, LoadOptions opts = {}) {
  try {
    model_from_json(doc, opts);
  } catch (const ParseError& e) {
    return e.path();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("round trip is structural and byte-stable") {
  for (const auto& m : all_models()) {
    Json j = model_to_json(m);
    LoadOptions lax;
    lax.validate = false;
    Model back = model_from_json(j, lax);
    CHECK(back.D == m.D);
    CHECK(back.f == m.f);
    CHECK(dump_canonical(model_to_json(back)) == dump_canonical(j));
    CHECK(parse_model(dump_canonical(j), lax).D == m.D);
  }
}

TEST_CASE("Gaussian coefficients survive the round trip") {
  Model s = build_synthetic();
  const auto& A = s.D.algebra();
  const Scalar i(mpq_class(0), mpq_class(1));
  std::vector<SparseVector> cols;
  for (std::size_t j = 0; j < A.dim(); ++j) cols.push_back(i * s.D.Delta().on_basis(j));
  GradedOperator Delta(A, SparseMatrix(A.dim(), cols), 1);
  Scalar half_i(mpq_class(1, 2), mpq_class(-3, 4));
  Model m{DGBVStructure(s.D.algebra_ptr(), s.D.delta(), Delta), IntegralFunctional(half_i * s.f.covector())};
  CHECK(full_validation(m).clean());
  Model back = parse_model(dump_canonical(model_to_json(m)));
  CHECK(back.D == m.D);
  CHECK(back.f == m.f);
  CHECK(!(back.D == s.D));
}

TEST_CASE("implicit unit products and supercommutative completion") {
  Model m = model_from_json(doc_of(two_generators));
  const auto& A = m.D.algebra();
  const std::size_t x = *A.index_of("x"), y = *A.index_of("y"), xy = *A.index_of("xy");
  CHECK(A.product(x, y) == Element::unit(xy));
  CHECK(A.product(y, x) == Element::unit(xy, Scalar(-1)));
  CHECK(A.product(0, x) == Element::unit(x));
  CHECK(A.product(xy, 0) == Element::unit(xy));
  CHECK(A.product(x, x).is_zero());
  CHECK(m.f(Element::unit(xy)) == Scalar(1));
}

TEST_CASE("parse errors name the offending member") {
  Json d = doc_of(two_generators);
  Json bad = d;
  bad["integral"][0]["coeff"] = "1/0";
  CHECK(parse_path(bad) == "integral[0].coeff");
  bad = d;
  bad["product"][0]["right"] = "z";
  CHECK(parse_path(bad) == "product[0].right");
  bad = d;
  bad["product"].push_back(d["product"][0]);
  CHECK(parse_path(bad) == "product[1]");
  bad = d;
  bad["field"] = "reals";
  CHECK(parse_path(bad) == "field");
  bad = d;
  bad["basis"][2]["name"] = "x";
  CHECK(parse_path(bad) == "basis[2].name");
  bad = d;
  bad["basis"][1]["parity"] = 2;
  CHECK(parse_path(bad) == "basis[1].parity");
  bad = d;
  bad.erase("unit");
  CHECK(parse_path(bad) == "unit");
  bad = d;
  bad["product"][0]["result"][0]["coeff"] = 3;
  CHECK(parse_path(bad) == "product[0].result[0].coeff");
  LoadOptions small;
  small.max_dim = 3;
  CHECK(parse_path(d, small) == "basis");
  CHECK_THROWS_AS(parse_model("{\"field\": "), ParseError);
  CHECK_THROWS_AS(load_dgbv("/nonexistent/model.json"), ParseError);
}

TEST_CASE("strict loading rejects axiom failures") {
  Json d = doc_of(two_generators);
  // x x must vanish for odd x
  d["product"].push_back({{"left", "x"}, {"right", "x"}, {"result", {{{"basis", "xy"}, {"coeff", "1"}}}}});
  CHECK_THROWS_AS(model_from_json(d), ValidationFailure);
  LoadOptions lax;
  lax.validate = false;
  CHECK_NOTHROW(model_from_json(d, lax));

  Json e = doc_of(two_generators);
  e["integral"] = Json::array({{{"basis", "x"}, {"coeff", "1"}}});
  CHECK_THROWS_AS(model_from_json(e), ValidationFailure);
}

TEST_CASE("reports are deterministic") {
  for (const auto& m : all_models()) {
    std::string a = dump_canonical(report_document(full_validation(m)));
    std::string b = dump_canonical(report_document(full_validation(m)));
    CHECK(a == b);
    Json doc = Json::parse(a);
    CHECK(doc["tool_version"] == tool_version);
    for (const auto& c : doc["checks"]) {
      CHECK(c.contains("name"));
      CHECK((c["status"] == "pass" || c["status"] == "fail"));
    }
  }
  Model s = build_synthetic();
  auto frob = [&] {
    CohomologyBasis H = cohomology(s.D);
    MCSolution M = solve_mc(s.D, H, 4);
    FrobeniusData F = three_point(s.D, s.f, M, 3);
    F.phi = reconstruct_potential(F);
    return dump_canonical(frobenius_to_json(s.D.algebra(), F)) + dump_canonical(solution_to_json(s.D.algebra(), M));
  };
  CHECK(frob() == frob());
}

TEST_CASE("bundled model files match the builders") {
  const std::filesystem::path dir = DGBV_MODELS_DIR;
  LoadOptions lax;
  lax.validate = false;
  struct Case {
    const char* file;
    Model m;
  };
  std::vector<Case> cases = {{"synthetic.json", build_synthetic()},
                             {"broken.json", build_broken()},
                             {"torus_cz_n1.json", build_torus(1, TorusSide::CZ).model},
                             {"torus_cz_n2.json", build_torus(2, TorusSide::CZ).model},
                             {"torus_bk_n1.json", build_torus(1, TorusSide::BK).model},
                             {"torus_bk_n2.json", build_torus(2, TorusSide::BK).model}};
  for (const auto& c : cases) {
    Model loaded = load_dgbv((dir / c.file).string(), lax);
    CHECK(loaded.D == c.m.D);
    CHECK(loaded.f == c.m.f);
    CHECK(read_file((dir / c.file).string()) == dump_canonical(model_to_json(c.m)));
  }
  CHECK_NOTHROW(load_dgbv((dir / "synthetic.json").string()));
}
