#pragma once

#include "dgbv/cohomology.hpp"
#include "dgbv/dgbv.hpp"
#include "dgbv/errors.hpp"
#include "dgbv/series.hpp"

#include <vector>

namespace dgbv {

/// Termwise bracket of series:
/// [x^I a . x^J b] = (-1)^{(|a|+1)|x^J|} x^I x^J [a . b].
ElementSeries series_bracket(const DGBVStructure& D, const ElementSeries& u, const ElementSeries& v);

struct PreimageRecord {
  SuperMonomial monomial;
  Element rhs;       // coefficient of r_n at this monomial
  Element selected;  // coefficient of Gamma_n at this monomial
};

struct OrderRecord {
  unsigned order = 0;
  std::vector<PreimageRecord> entries;
};

/// Normalized universal solution truncated at `order`.
struct MCSolution {
  ElementSeries gamma;
  CohomologyBasis basis;
  unsigned order = 0;
  std::vector<OrderRecord> log;

  /// Homogeneous part Gamma_n.
  ElementSeries part(unsigned n) const { return gamma.part(n); }
};

struct SolveOptions {
  /// Run validate_algebra, validate_dgbv and check_condition3 first.
  bool verify_preconditions = true;
};

/// Order-by-order solution of delta Gamma + 1/2 [Gamma . Gamma] = 0 with
/// Gamma_1 = sum_j x^j e_j and Gamma_n = preimage under delta of
/// r_n = -1/2 sum_{p+q=n} [Gamma_p . Gamma_q], chosen in Im Delta.
///
/// Throws Obstruction naming the order and monomial where r_n is not
/// delta-exact, not Delta-closed, or has no preimage in Im Delta.
MCSolution solve_mc(const DGBVStructure& D, const CohomologyBasis& H, unsigned order, SolveOptions opts = {});

/// delta Gamma + 1/2 [Gamma . Gamma] through degree `order`, expanded
/// directly from the defining formula of the bracket on the full series.
ElementSeries residual(const DGBVStructure& D, const ElementSeries& gamma, unsigned order);

}  // namespace dgbv
