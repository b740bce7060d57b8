#include "dgbv/report.hpp"

#include <sstream>

namespace dgbv {

const char* tier_name(CheckTier t) {
  switch (t) {
    case CheckTier::Axiom: return "axiom";
    case CheckTier::Derived: return "derived";
    case CheckTier::Hypothesis: return "hypothesis";
  }
  return "?";
}

Check& ValidationReport::begin(std::string name, CheckTier tier, int condition) {
  Check c;
  c.name = std::move(name);
  c.tier = tier;
  c.condition = condition;
  checks_.push_back(std::move(c));
  return checks_.back();
}

void ValidationReport::fail(std::vector<std::size_t> indices, std::string detail) {
  if (checks_.empty()) begin("unnamed");
  Check& c = checks_.back();
  c.passed = false;
  ++c.violations;
  if (c.witnesses.size() < max_witnesses) c.witnesses.push_back({std::move(indices), std::move(detail)});
}

void ValidationReport::append(const ValidationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool ValidationReport::clean() const {
  for (const auto& c : checks_)
    if (!c.passed) return false;
  return true;
}

std::vector<const Check*> ValidationReport::failures() const {
  std::vector<const Check*> out;
  for (const auto& c : checks_)
    if (!c.passed) out.push_back(&c);
  return out;
}

const Check* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

std::string ValidationReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << " [" << tier_name(c.tier);
    if (c.condition) os << ", condition " << c.condition;
    os << "]";
    if (!c.passed) os << " (" << c.violations << " violation" << (c.violations == 1 ? "" : "s") << ")";
    os << "\n";
    for (const auto& w : c.witnesses) {
      os << "    at (";
      for (std::size_t k = 0; k < w.indices.size(); ++k) os << (k ? "," : "") << w.indices[k];
      os << ")";
      if (!w.detail.empty()) os << ": " << w.detail;
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace dgbv
