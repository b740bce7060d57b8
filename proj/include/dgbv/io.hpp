#pragma once

#include "dgbv/cohomology.hpp"
#include "dgbv/frobenius.hpp"
#include "dgbv/mc.hpp"
#include "dgbv/models.hpp"
#include "dgbv/report.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace dgbv {

using Json = nlohmann::json;

inline constexpr const char* tool_version = "0.1.0";

struct LoadOptions {
  /// Run validate_algebra, validate_dgbv and check_integral after parsing.
  bool validate = true;
  std::size_t max_dim = default_max_dim;
};

/// Parses a config document. Products involving the unit are implied; a
/// product listed in one orientation is completed by supercommutativity.
/// Throws ParseError naming the member path, or ValidationFailure with the
/// rendered report when validation is on and a check fails.
Model model_from_json(const Json& doc, const LoadOptions& opts = {});
Model parse_model(const std::string& text, const LoadOptions& opts = {});
Model load_dgbv(const std::string& path, const LoadOptions& opts = {});

/// Canonical document: one product entry per unordered pair of non-unit
/// basis elements, operator entries by (from, to), sorted members.
Json model_to_json(const Model& m);
/// Canonical text: two-space indentation, LF line endings, trailing newline.
std::string dump_canonical(const Json& doc);
void save_model(const Model& m, const std::string& path);

/// All validators: algebra, dGBV, integral, condition 3 and, when condition 3
/// holds, the pairing checks.
ValidationReport full_validation(const Model& m);

Json report_to_json(const ValidationReport& r);
/// {"tool_version", "checks", "data"}.
Json report_document(const ValidationReport& r, const Json& data = Json::object());
void save_report(const ValidationReport& r, const Json& data, const std::string& path, bool json_format);

Json element_to_json(const GradedAlgebra& A, const Element& e);
Json series_to_json(const GradedAlgebra& A, const ElementSeries& s);
Json series_to_json(const ScalarSeries& s);
Json cohomology_to_json(const GradedAlgebra& A, const CohomologyBasis& H);
Json solution_to_json(const GradedAlgebra& A, const MCSolution& M);
Json frobenius_to_json(const GradedAlgebra& A, const FrobeniusData& F);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace dgbv
