#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace dgbv {

/// Which layer of the theory a check belongs to.
enum class CheckTier {
  Axiom,       // defining axioms of the structure under test
  Derived,     // identities that follow from the axioms; failure with clean axioms means a sign bug
  Hypothesis,  // hypotheses of the Frobenius manifold construction
};

struct Witness {
  std::vector<std::size_t> indices;
  std::string detail;
};

struct Check {
  std::string name;
  CheckTier tier = CheckTier::Axiom;
  /// Hypothesis number (1: finite cohomology, 2: nice integral,
  /// 3: the two inclusions are quasi-isomorphisms), 0 when not applicable.
  int condition = 0;
  bool passed = true;
  std::size_t violations = 0;
  std::vector<Witness> witnesses;  // at most max_witnesses are kept
};

/// Ordered list of named checks with witnesses for each violation.
class ValidationReport {
public:
  static constexpr std::size_t max_witnesses = 16;

  /// Starts a new check; later fail() calls attach to it.
  Check& begin(std::string name, CheckTier tier = CheckTier::Axiom, int condition = 0);
  void fail(std::vector<std::size_t> indices, std::string detail = {});
  void append(const ValidationReport& other);

  bool clean() const;
  /// Only violations count; passing checks are kept so reports list everything that ran.
  std::vector<const Check*> failures() const;
  const Check* find(const std::string& name) const;
  const std::vector<Check>& checks() const { return checks_; }

  std::string to_text() const;

private:
  std::vector<Check> checks_;
};

const char* tier_name(CheckTier t);

}  // namespace dgbv
