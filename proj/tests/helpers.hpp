#pragma once

#include "dgbv/algebra.hpp"
#include "dgbv/report.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace testing_support {

inline std::size_t idx(const dgbv::GradedAlgebra& A, const std::string& n) {
  auto i = A.index_of(n);
  if (!i) throw std::runtime_error("no basis element " + n);
  return *i;
}

/// The named check failed and some witness mentions every index in `want`.
inline bool has_witness(const dgbv::ValidationReport& r, const std::string& check,
                        const std::vector<std::size_t>& want) {
  const dgbv::Check* c = r.find(check);
  if (!c || c->passed) return false;
  for (const auto& w : c->witnesses) {
    bool all = true;
    for (auto i : want) all = all && std::find(w.indices.begin(), w.indices.end(), i) != w.indices.end();
    if (all) return true;
  }
  return false;
}

}  // namespace testing_support
