#include "dgbv/io.hpp"

#include "dgbv/errors.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace dgbv {

namespace {

const Json& member(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path.empty() ? key : path + "." + key, "missing member");
  return *it;
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const std::string& string_member(const Json& obj, const std::string& key, const std::string& path) {
  const Json& v = member(obj, key, path);
  if (!v.is_string()) throw ParseError(join(path, key), "expected a string");
  return v.get_ref<const std::string&>();
}

const Json& array_member(const Json& obj, const std::string& key, const std::string& path) {
  const Json& v = member(obj, key, path);
  if (!v.is_array()) throw ParseError(join(path, key), "expected an array");
  return v;
}

Scalar scalar_member(const Json& obj, const std::string& key, const std::string& path) {
  const std::string& text = string_member(obj, key, path);
  try {
    return Scalar::parse(text);
  } catch (const ParseError& e) {
    throw ParseError(join(path, key), e.what());
  }
}

int int_value(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ParseError(path, "expected an integer");
  return v.get<int>();
}

struct Names {
  std::map<std::string, std::size_t> index;
  std::size_t lookup(const std::string& name, const std::string& path) const {
    auto it = index.find(name);
    if (it == index.end()) throw ParseError(path, "unknown basis element '" + name + "'");
    return it->second;
  }
};

Element terms_member(const Json& obj, const std::string& key, const std::string& path, const Names& names) {
  const Json& arr = array_member(obj, key, path);
  Element e;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string p = at(join(path, key), i);
    std::size_t b = names.lookup(string_member(arr[i], "basis", p), join(p, "basis"));
    e.add_term(b, scalar_member(arr[i], "coeff", p));
  }
  return e;
}

SparseMatrix operator_member(const Json& doc, const std::string& key, const Names& names, std::size_t n) {
  std::vector<SparseVector> cols(n);
  if (!doc.contains(key)) return SparseMatrix(n, std::move(cols));
  const Json& arr = array_member(doc, key, "");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string p = at(key, i);
    std::size_t from = names.lookup(string_member(arr[i], "from", p), join(p, "from"));
    std::size_t to = names.lookup(string_member(arr[i], "to", p), join(p, "to"));
    cols[from].add_term(to, scalar_member(arr[i], "coeff", p));
  }
  return SparseMatrix(n, std::move(cols));
}

Json terms_json(const GradedAlgebra& A, const Element& e) {
  Json arr = Json::array();
  for (const auto& [i, c] : e) arr.push_back({{"basis", A.basis(i).name}, {"coeff", c.to_string()}});
  return arr;
}

Json operator_json(const GradedAlgebra& A, const GradedOperator& op) {
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> entries;
  for (std::size_t j = 0; j < op.dim(); ++j)
    for (const auto& [i, c] : op.on_basis(j)) entries.emplace_back(j, i, c);
  Json arr = Json::array();
  for (const auto& [from, to, c] : entries)
    arr.push_back({{"from", A.basis(from).name}, {"to", A.basis(to).name}, {"coeff", c.to_string()}});
  return arr;
}

}  // namespace

Model model_from_json(const Json& doc, const LoadOptions& opts) {
  if (!doc.is_object()) throw ParseError("", "config must be a JSON object");
  if (string_member(doc, "field", "") != "gaussian-rational")
    throw ParseError("field", "unsupported field '" + doc["field"].get<std::string>() + "'");

  const Json& jb = array_member(doc, "basis", "");
  std::vector<BasisElement> basis;
  Names names;
  for (std::size_t i = 0; i < jb.size(); ++i) {
    std::string p = at("basis", i);
    const std::string& name = string_member(jb[i], "name", p);
    if (names.index.count(name)) throw ParseError(join(p, "name"), "duplicate basis element '" + name + "'");
    Degree d = Degree::even();
    if (jb[i].contains("degree")) {
      const Json& deg = jb[i]["degree"];
      if (!deg.is_array() || deg.size() != 2) throw ParseError(join(p, "degree"), "expected [p, q]");
      d = Degree::bi(int_value(deg[0], at(join(p, "degree"), 0)), int_value(deg[1], at(join(p, "degree"), 1)));
    } else if (jb[i].contains("parity")) {
      int par = int_value(jb[i]["parity"], join(p, "parity"));
      if (par != 0 && par != 1) throw ParseError(join(p, "parity"), "parity must be 0 or 1");
      d = Degree::of_parity(par);
    } else {
      throw ParseError(p, "basis element needs 'degree' or 'parity'");
    }
    names.index[name] = i;
    basis.push_back({name, d});
  }
  const std::size_t n = basis.size();
  if (n == 0) throw ParseError("basis", "empty basis");
  if (n > opts.max_dim)
    throw ParseError("basis", "dimension " + std::to_string(n) + " exceeds cap " + std::to_string(opts.max_dim));
  const std::size_t unit = names.lookup(string_member(doc, "unit", ""), "unit");

  GradedAlgebra::ProductTable table;
  std::map<std::pair<std::size_t, std::size_t>, bool> listed;
  if (doc.contains("product")) {
    const Json& jp = array_member(doc, "product", "");
    for (std::size_t i = 0; i < jp.size(); ++i) {
      std::string p = at("product", i);
      std::size_t l = names.lookup(string_member(jp[i], "left", p), join(p, "left"));
      std::size_t r = names.lookup(string_member(jp[i], "right", p), join(p, "right"));
      if (listed.count({l, r})) throw ParseError(p, "product listed twice");
      listed[{l, r}] = true;
      table[{l, r}] = terms_member(jp[i], "result", p, names);
    }
  }
  for (const auto& [key, v] : std::map(table)) {
    std::pair<std::size_t, std::size_t> flip{key.second, key.first};
    if (!listed.count(flip)) {
      Scalar s = sign_of(basis[key.first].degree.parity() * basis[key.second].degree.parity());
      table[flip] = s * v;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!listed.count({unit, j})) table[{unit, j}] = Element::unit(j);
    if (!listed.count({j, unit})) table[{j, unit}] = Element::unit(j);
  }

  std::shared_ptr<const GradedAlgebra> A;
  try {
    A = std::make_shared<const GradedAlgebra>(basis, unit, table, opts.max_dim);
  } catch (const Error& e) {
    throw ParseError("product", e.what());
  }
  auto make_op = [&](const char* key) {
    try {
      return GradedOperator(*A, operator_member(doc, key, names, n), 1);
    } catch (const GradingViolation& e) {
      throw ParseError(key, e.what());
    }
  };
  GradedOperator delta = make_op("delta");
  GradedOperator Delta = make_op("Delta");
  IntegralFunctional f(doc.contains("integral") ? terms_member(doc, "integral", "", names) : Element());
  Model m{DGBVStructure(A, delta, Delta), f};

  if (opts.validate) {
    ValidationReport r = validate_algebra(*A);
    if (r.clean()) r.append(validate_dgbv(m.D));
    if (r.clean()) r.append(check_integral(m.D, m.f));
    if (!r.clean()) throw ValidationFailure("model fails validation:\n" + r.to_text());
  }
  return m;
}

Model parse_model(const std::string& text, const LoadOptions& opts) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
  return model_from_json(doc, opts);
}

Model load_dgbv(const std::string& path, const LoadOptions& opts) { return parse_model(read_file(path), opts); }

Json model_to_json(const Model& m) {
  const auto& A = m.D.algebra();
  const std::size_t n = A.dim();
  Json doc = Json::object();
  doc["field"] = "gaussian-rational";
  Json basis = Json::array();
  for (const auto& b : A.basis()) {
    Json e = {{"name", b.name}};
    if (b.degree.has_bidegree())
      e["degree"] = {b.degree.bidegree()->p, b.degree.bidegree()->q};
    else
      e["parity"] = b.degree.parity();
    basis.push_back(e);
  }
  doc["basis"] = basis;
  doc["unit"] = A.basis(A.unit_index()).name;
  Json prod = Json::array();
  const std::size_t u = A.unit_index();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (i == u || j == u) continue;
      const Element& v = A.product(i, j);
      if (v.is_zero()) continue;
      prod.push_back({{"left", A.basis(i).name}, {"right", A.basis(j).name}, {"result", terms_json(A, v)}});
    }
  doc["product"] = prod;
  doc["delta"] = operator_json(A, m.D.delta());
  doc["Delta"] = operator_json(A, m.D.Delta());
  doc["integral"] = terms_json(A, m.f.covector());
  return doc;
}

std::string dump_canonical(const Json& doc) { return doc.dump(2) + "\n"; }

void save_model(const Model& m, const std::string& path) { write_file(path, dump_canonical(model_to_json(m))); }

ValidationReport full_validation(const Model& m) {
  ValidationReport r = validate_algebra(m.D.algebra());
  r.append(validate_dgbv(m.D));
  r.append(check_integral(m.D, m.f));
  ValidationReport c3 = check_condition3(m.D);
  r.append(c3);
  if (c3.clean()) r.append(check_pairing(m.D, m.f, cohomology(m.D)));
  return r;
}

Json report_to_json(const ValidationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks()) {
    Json w = Json::array();
    for (const auto& x : c.witnesses) w.push_back({{"indices", x.indices}, {"detail", x.detail}});
    Json e = {{"name", c.name},   {"status", c.passed ? "pass" : "fail"}, {"tier", tier_name(c.tier)},
              {"violations", c.violations}, {"witnesses", w}};
    if (c.condition) e["condition"] = c.condition;
    checks.push_back(e);
  }
  return checks;
}

Json report_document(const ValidationReport& r, const Json& data) {
  return Json{{"tool_version", tool_version}, {"checks", report_to_json(r)}, {"data", data}};
}

void save_report(const ValidationReport& r, const Json& data, const std::string& path, bool json_format) {
  write_file(path, json_format ? dump_canonical(report_document(r, data)) : r.to_text());
}

Json element_to_json(const GradedAlgebra& A, const Element& e) { return terms_json(A, e); }

Json series_to_json(const GradedAlgebra& A, const ElementSeries& s) {
  Json arr = Json::array();
  for (const auto& [m, c] : s.terms())
    arr.push_back({{"monomial", m.to_string()}, {"degree", m.degree()}, {"coeff", terms_json(A, c)}});
  return arr;
}

Json series_to_json(const ScalarSeries& s) {
  Json arr = Json::array();
  for (const auto& [m, c] : s.terms())
    arr.push_back({{"monomial", m.to_string()}, {"degree", m.degree()}, {"coeff", c.to_string()}});
  return arr;
}

Json cohomology_to_json(const GradedAlgebra& A, const CohomologyBasis& H) {
  Json reps = Json::array();
  for (std::size_t j = 0; j < H.size(); ++j)
    reps.push_back({{"index", j},
                    {"degree", H.degrees[j].to_string()},
                    {"representative", terms_json(A, H.representatives[j])},
                    {"text", A.format(H.representatives[j])}});
  Json betti = Json::object();
  for (const auto& [k, v] : H.betti()) betti[k] = v;
  return Json{{"dimension", H.size()}, {"unit_position", H.unit_position}, {"representatives", reps},
              {"by_degree", betti}};
}

Json solution_to_json(const GradedAlgebra& A, const MCSolution& M) {
  Json parts = Json::array();
  for (unsigned n = 1; n <= M.order; ++n) parts.push_back({{"order", n}, {"terms", series_to_json(A, M.part(n))}});
  Json log = Json::array();
  for (const auto& rec : M.log) {
    Json entries = Json::array();
    for (const auto& e : rec.entries)
      entries.push_back({{"monomial", e.monomial.to_string()},
                         {"rhs", terms_json(A, e.rhs)},
                         {"selected", terms_json(A, e.selected)}});
    log.push_back({{"order", rec.order}, {"entries", entries}});
  }
  return Json{{"order", M.order}, {"gamma", parts}, {"log", log}};
}

Json frobenius_to_json(const GradedAlgebra& A, const FrobeniusData& F) {
  (void)A;
  const std::size_t m = F.size();
  Json g = Json::array(), ginv = Json::array();
  for (std::size_t i = 0; i < m; ++i) {
    Json row = Json::array(), irow = Json::array();
    for (std::size_t j = 0; j < m; ++j) {
      row.push_back(F.g.g(i, j).to_string());
      irow.push_back(F.g.g_inv(i, j).to_string());
    }
    g.push_back(row);
    ginv.push_back(irow);
  }
  Json c = Json::array();
  bool constant = true;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const ScalarSeries& s = F.tensor(i, j, k);
        if (s.is_zero()) continue;
        if (s.terms().rbegin()->first.degree() > 0) constant = false;
        c.push_back({{"indices", {i, j, k}}, {"terms", series_to_json(s)}});
      }
  Json out{{"order", F.order}, {"pairing", g}, {"pairing_inverse", ginv}, {"tensor", c}, {"constant_tensor", constant}};
  if (F.phi) out["potential"] = series_to_json(*F.phi);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("", "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write failed for " + path);
}

}  // namespace dgbv
