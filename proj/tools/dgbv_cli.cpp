// dgbv: command-line front end for the exact dGBV engine.

#include "dgbv/cohomology.hpp"
#include "dgbv/errors.hpp"
#include "dgbv/frobenius.hpp"
#include "dgbv/io.hpp"
#include "dgbv/mc.hpp"
#include "dgbv/models.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

using namespace dgbv;

namespace {

enum Exit { ok = 0, check_failed = 1, usage = 2, obstructed = 3 };

struct Globals {
  std::string format = "text";
  std::size_t max_dim = default_max_dim;
  bool no_validate = false;
};

bool as_json(const Globals& g) { return g.format == "json"; }

int emit(const Globals& g, const ValidationReport& r, const Json& data, const std::string& summary) {
  if (as_json(g))
    std::cout << dump_canonical(report_document(r, data));
  else
    std::cout << r.to_text() << summary;
  return r.clean() ? ok : check_failed;
}

Model load(const Globals& g, const std::string& path) {
  LoadOptions opts;
  opts.validate = !g.no_validate;
  opts.max_dim = g.max_dim;
  return load_dgbv(path, opts);
}

std::string betti_text(const CohomologyBasis& H) {
  std::string out = "cohomology dimension " + std::to_string(H.size()) + "\n";
  for (const auto& [d, k] : H.betti()) out += "  " + d + ": " + std::to_string(k) + "\n";
  return out;
}

int cmd_validate(const Globals& g, const std::string& file) {
  LoadOptions opts;
  opts.validate = false;
  opts.max_dim = g.max_dim;
  Model m = load_dgbv(file, opts);
  ValidationReport r = full_validation(m);
  return emit(g, r, Json{{"dimension", m.D.dim()}}, "dimension " + std::to_string(m.D.dim()) + "\n");
}

int cmd_cohomology(const Globals& g, const std::string& file) {
  Model m = load(g, file);
  ValidationReport r = check_condition3(m.D);
  if (!r.clean()) {
    emit(g, r, Json::object(), "");
    return obstructed;
  }
  CohomologyBasis H = cohomology(m.D);
  const auto& A = m.D.algebra();
  std::string text = betti_text(H);
  for (std::size_t j = 0; j < H.size(); ++j)
    text += "  e" + std::to_string(j) + " " + H.degrees[j].to_string() + " = " + A.format(H.representatives[j]) + "\n";
  return emit(g, r, cohomology_to_json(A, H), text);
}

int cmd_solve(const Globals& g, const std::string& file, unsigned order, const std::string& out) {
  Model m = load(g, file);
  ValidationReport r = check_condition3(m.D);
  if (!r.clean()) {
    emit(g, r, Json::object(), "obstruction: condition 3 fails, no normalized solution\n");
    return obstructed;
  }
  CohomologyBasis H = cohomology(m.D);
  MCSolution M = solve_mc(m.D, H, order);
  const auto& A = m.D.algebra();
  r.begin("residual", CheckTier::Derived);
  ElementSeries res = residual(m.D, M.gamma, order);
  for (const auto& [mono, c] : res.terms()) r.fail({mono.degree()}, mono.to_string() + ": " + A.format(c));
  r.begin("Delta-closed", CheckTier::Derived);
  ElementSeries dg = apply(m.D.Delta(), M.gamma);
  for (const auto& [mono, c] : dg.terms()) r.fail({mono.degree()}, mono.to_string() + ": " + A.format(c));

  Json data{{"cohomology", cohomology_to_json(A, H)}, {"solution", solution_to_json(A, M)}};
  if (!out.empty()) write_file(out, dump_canonical(report_document(r, data)));
  std::string text = betti_text(H);
  for (unsigned n = 1; n <= order; ++n) text += "Gamma_" + std::to_string(n) + " = " + format_series(A, M.part(n)) + "\n";
  return emit(g, r, data, text);
}

int cmd_frobenius(const Globals& g, const std::string& file, unsigned order, bool potential, bool wdvv) {
  Model m = load(g, file);
  ValidationReport r = check_condition3(m.D);
  if (!r.clean()) {
    emit(g, r, Json::object(), "obstruction: condition 3 fails\n");
    return obstructed;
  }
  CohomologyBasis H = cohomology(m.D);
  r.append(check_pairing(m.D, m.f, H));
  if (!r.clean()) return emit(g, r, Json::object(), "integral is not nice\n");
  MCSolution M = solve_mc(m.D, H, order + 1);
  FrobeniusData F = three_point(m.D, m.f, M, order);
  r.append(check_tensor(m.D, m.f, F));
  r.append(potentiality_check(F));
  if (wdvv) r.append(wdvv_check(F));
  if (potential) F.phi = reconstruct_potential(F);

  const auto& A = m.D.algebra();
  Json data{{"cohomology", cohomology_to_json(A, H)}, {"frobenius", frobenius_to_json(A, F)}};
  std::string text = betti_text(H);
  bool constant = data["frobenius"]["constant_tensor"].get<bool>();
  text += std::string("three-point tensor ") + (constant ? "constant" : "depends on x") + " through degree " +
          std::to_string(order) + "\n";
  if (F.phi) text += "Phi = " + format_series(*F.phi) + "\n";
  return emit(g, r, data, text);
}

int cmd_torus(const Globals& g, unsigned n, const std::string& side, const std::string& variant,
              const std::string& path) {
  TorusSide s = side == "cz" ? TorusSide::CZ : TorusSide::BK;
  TorusVariant v = variant == "conjugate" ? TorusVariant::Conjugate : TorusVariant::Standard;
  TorusModel t = build_torus(n, s, v);
  if (t.model.D.dim() > g.max_dim) throw DimensionMismatch("model dimension exceeds --max-dim");
  ValidationReport r = full_validation(t.model);
  if (s == TorusSide::BK) r.append(contraction_checks(t));
  if (!path.empty()) save_model(t.model, path);
  Json data{{"n", n}, {"side", side_name(s)}, {"variant", variant_name(v)}, {"dimension", t.model.D.dim()}};
  return emit(g, r, data, "torus n=" + std::to_string(n) + " " + side_name(s) + " " + variant_name(v) +
                              ", dimension " + std::to_string(t.model.D.dim()) + "\n");
}

int cmd_contract(const Globals& g, unsigned n, const std::string& variant) {
  TorusVariant v = variant == "conjugate" ? TorusVariant::Conjugate : TorusVariant::Standard;
  TorusModel t = build_torus(n, TorusSide::BK, v);
  ValidationReport r = contraction_checks(t);
  r.append(check_integral(t.model.D, t.model.f));
  r.append(check_pairing(t.model.D, t.model.f, cohomology(t.model.D)));
  const auto& A = t.model.D.algebra();
  const auto& F = t.forms->D.algebra();
  Json images = Json::array();
  std::string text;
  for (std::size_t j = 0; j < A.dim(); ++j) {
    Element img = contract_omega(t, Element::unit(j));
    images.push_back({{"basis", A.basis(j).name}, {"image", element_to_json(F, img)}});
    text += "  " + A.basis(j).name + " -| Omega = " + F.format(img) + "\n";
  }
  return emit(g, r, Json{{"n", n}, {"contractions", images}}, text);
}

int cmd_example(const Globals& g, const std::string& name, const std::string& path) {
  Model m = name == "synthetic" ? build_synthetic() : build_broken();
  ValidationReport r = full_validation(m);
  if (!path.empty()) save_model(m, path);
  int status = emit(g, r, Json{{"model", name}, {"dimension", m.D.dim()}}, "");
  return name == "broken" ? ok : status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact dGBV algebra, Maurer-Cartan and Frobenius manifold engine"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-dim", g.max_dim, "Largest admitted algebra dimension");

  std::string file, out, side = "cz", variant = "standard", name;
  unsigned order = 4, n = 1;
  bool potential = false, wdvv = false;

  auto* validate = app.add_subcommand("validate", "Run every validator on a config file");
  validate->add_option("file", file)->required();

  auto* coh = app.add_subcommand("cohomology", "Cohomology basis with bi-closed representatives");
  coh->add_option("file", file)->required();
  coh->add_flag("--no-validate", g.no_validate);

  auto* solve = app.add_subcommand("solve-mc", "Normalized universal Maurer-Cartan solution");
  solve->add_option("file", file)->required();
  solve->add_option("--order", order)->check(CLI::Range(1u, 64u));
  solve->add_option("--out", out);
  solve->add_flag("--no-validate", g.no_validate);

  auto* frob = app.add_subcommand("frobenius", "Three-point tensor, potentiality, WDVV, potential");
  frob->add_option("file", file)->required();
  frob->add_option("--order", order)->check(CLI::Range(0u, 64u));
  frob->add_flag("--potential", potential);
  frob->add_flag("--wdvv", wdvv);
  frob->add_flag("--no-validate", g.no_validate);

  auto* torus = app.add_subcommand("torus", "Bundled constant-coefficient torus model");
  torus->add_option("--n", n)->required()->check(CLI::Range(1u, 4u));
  torus->add_option("--side", side)->required()->check(CLI::IsMember({"cz", "bk"}));
  torus->add_option("--variant", variant)->check(CLI::IsMember({"standard", "conjugate"}));
  torus->add_option("--emit", out);

  auto* contract = app.add_subcommand("contract", "Contraction with Omega on the BK torus model");
  contract->add_option("--n", n)->required()->check(CLI::Range(1u, 4u));
  contract->add_option("--variant", variant)->check(CLI::IsMember({"standard", "conjugate"}));

  auto* example = app.add_subcommand("example", "Bundled synthetic or broken model");
  example->add_option("name", name)->required()->check(CLI::IsMember({"synthetic", "broken"}));
  example->add_option("--emit", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    if (*validate) return cmd_validate(g, file);
    if (*coh) return cmd_cohomology(g, file);
    if (*solve) return cmd_solve(g, file, order, out);
    if (*frob) return cmd_frobenius(g, file, order, potential, wdvv);
    if (*torus) return cmd_torus(g, n, side, variant, out);
    if (*contract) return cmd_contract(g, n, variant);
    if (*example) return cmd_example(g, name, out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return usage;
  } catch (const Obstruction& e) {
    std::cerr << "obstruction: " << e.what() << "\n";
    return obstructed;
  } catch (const ValidationFailure& e) {
    std::cerr << e.what();
    return check_failed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return check_failed;
  }
  return usage;
}
