#pragma once

#include "dgbv/cohomology.hpp"
#include "dgbv/mc.hpp"
#include "dgbv/series.hpp"

#include <optional>

namespace dgbv {

/// Formal Frobenius manifold data on H: pairing g and the three-point tensor
/// c_ijk(x) = f(d_i Gamma  d_j Gamma  d_k Gamma), exact through degree `order`.
struct FrobeniusData {
  CohomologyBasis basis;
  PairingMatrix g;
  VariableContext context;
  unsigned order = 0;
  std::vector<ScalarSeries> c;  // c[(i*m + j)*m + k]
  std::optional<ScalarSeries> phi;

  std::size_t size() const { return basis.size(); }
  const ScalarSeries& tensor(std::size_t i, std::size_t j, std::size_t k) const {
    const std::size_t m = size();
    return c[(i * m + j) * m + k];
  }
  ScalarSeries& tensor(std::size_t i, std::size_t j, std::size_t k) {
    const std::size_t m = size();
    return c[(i * m + j) * m + k];
  }
};

/// Builds the three-point tensor through degree `order`; the solution must
/// have been computed to at least order + 1. Verifies origin consistency,
/// graded symmetry and the flat identity c_{unit,j,k} = g_jk before returning
/// (CheckFailure otherwise).
FrobeniusData three_point(const DGBVStructure& D, const IntegralFunctional& f, const MCSolution& M, unsigned order);

/// The invariants three_point enforces, as a report.
ValidationReport check_tensor(const DGBVStructure& D, const IntegralFunctional& f, const FrobeniusData& F);

/// d_l c_ijk is graded-symmetric in (l, i, j, k) through degree order - 1.
ValidationReport potentiality_check(const FrobeniusData& F);

/// Phi with d_i d_j d_k Phi = c_ijk, assembled degree by degree from the
/// Euler identity. No terms below degree three. Throws CheckFailure if the
/// derivatives of the result do not reproduce c.
ScalarSeries reconstruct_potential(const FrobeniusData& F);

/// sum_{e,f} c_ije g^{ef} c_fkl = (-1)^{|x^i|(|x^j|+|x^k|)} sum_{e,f} c_jke g^{ef} c_fil
/// for all (i, j, k, l), through degree `order`.
ValidationReport wdvv_check(const FrobeniusData& F);

}  // namespace dgbv
