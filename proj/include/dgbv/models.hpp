#pragma once

#include "dgbv/cohomology.hpp"
#include "dgbv/dgbv.hpp"
#include "dgbv/errors.hpp"

#include <memory>
#include <string>
#include <vector>

namespace dgbv {

/// A dGBV structure together with its integral.
struct Model {
  DGBVStructure D;
  IntegralFunctional f;
};

enum class TorusSide { CZ, BK };
enum class TorusVariant { Standard, Conjugate };

const char* side_name(TorusSide s);
const char* variant_name(TorusVariant v);

/// Constant-coefficient model on the flat n-torus.
///
/// CZ: forms, generators e1 eb1 e2 eb2 ... (bidegrees (1,0) and (0,1)),
/// delta = Delta = 0, integral of e1^eb1^...^en^ebn equal to 1.
/// BK: polyvector-valued (0,q)-forms on generators t1..tn, eb1..ebn with
/// integral (gamma -| Omega) ^ Omega; `forms` is the CZ model hosting the
/// contraction. The conjugate variant swaps the two bidegree labels.
struct TorusModel {
  unsigned n = 0;
  TorusSide side = TorusSide::CZ;
  TorusVariant variant = TorusVariant::Standard;
  Model model;
  std::shared_ptr<const Model> forms;  // BK side only
};

/// 1 <= n <= 4.
TorusModel build_torus(unsigned n, TorusSide side, TorusVariant variant = TorusVariant::Standard);

/// Exterior algebra on odd generators; basis = subsets ordered by size, then
/// lexicographically, with names joined by '^' and "1" for the unit.
GradedAlgebra exterior_algebra(const std::vector<BasisElement>& generators, std::size_t max_dim = default_max_dim);

class SideMismatch : public Error {
public:
  using Error::Error;
};

/// gamma -| Omega for gamma = t_J ^ eb^K: the iterated contraction
/// i_{t_j1} ... i_{t_jp} Omega with i_{t_j} = d/de^j, wedged with eb^K, as
/// an element of the CZ forms algebra.
Element contract_omega(const TorusModel& bk, const Element& gamma);

/// Matrix of contract_omega, column j = image of the j-th basis element.
SparseMatrix contraction_matrix(const TorusModel& bk);

/// Top coefficient of (gamma -| Omega) ^ Omega.
Scalar bk_integral(const TorusModel& bk, const Element& gamma);

/// The (1,0) differential on the constant forms model; zero.
GradedOperator holomorphic_d(const TorusModel& bk);

/// contraction rank, (Delta gamma) -| Omega = d(gamma -| Omega) on every
/// basis element, and agreement of the stored integral with bk_integral.
ValidationReport contraction_checks(const TorusModel& bk);

/// Lambda(a, b) tensor C with C = k 1 + span(eta, sigma, tau, w), V V = 0,
/// delta: eta -> sigma, tau -> w; Delta: eta -> tau, sigma -> -w on C,
/// extended as derivations, plus w d_a d_b. Dimension 20, integral =
/// coefficient of a^b.
Model build_synthetic();

/// Lambda(t1, t2, t3), delta = 0, Delta = t3 d_1 d_2, zero integral:
/// satisfies the dGBV axioms, fails condition 3.
Model build_broken();

}  // namespace dgbv
