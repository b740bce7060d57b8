#include "dgbv/mc.hpp"

#include "dgbv/errors.hpp"

namespace dgbv {

ElementSeries series_bracket(const DGBVStructure& D, const ElementSeries& u, const ElementSeries& v) {
  if (!(u.context() == v.context())) throw DimensionMismatch("series over different variable contexts");
  const auto& A = D.algebra();
  const auto& ctx = u.context();
  unsigned order = std::min(u.order(), v.order());
  ElementSeries out(ctx, order);
  for (const auto& [mi, a] : u.terms()) {
    auto [even, odd] = A.split_parity(a);
    for (const auto& [mj, b] : v.terms()) {
      if (mi.degree() + mj.degree() > order) continue;
      auto prod = SuperMonomial::multiply(ctx, mi, mj);
      if (!prod) continue;
      int pj = mj.parity(ctx);
      int s = prod->second;
      if (!even.is_zero()) out.add(prod->first, bracket(D, even, b), sign_of(s + pj));
      if (!odd.is_zero()) out.add(prod->first, bracket(D, odd, b), sign_of(s));
    }
  }
  return out;
}

MCSolution solve_mc(const DGBVStructure& D, const CohomologyBasis& H, unsigned order, SolveOptions opts) {
  if (order < 1) throw PreconditionFailure("truncation order must be at least 1");
  const auto& A = D.algebra();
  if (opts.verify_preconditions) {
    if (!validate_algebra(A).clean()) throw PreconditionFailure("algebra axioms fail; run validate_algebra");
    if (!validate_dgbv(D).clean()) throw PreconditionFailure("dGBV axioms fail; run validate_dgbv");
    if (!check_condition3(D).clean())
      throw Obstruction("inclusions of Ker Delta and Ker delta are not quasi-isomorphisms; run check_condition3");
  }
  for (const auto& e : H.representatives)
    if (!D.delta().apply(e).is_zero() || !D.Delta().apply(e).is_zero())
      throw PreconditionFailure("cohomology representative " + A.format(e) + " is not delta- and Delta-closed");

  const VariableContext ctx = VariableContext::from_cohomology(H);
  const std::size_t m = ctx.size();
  MCSolution sol;
  sol.basis = H;
  sol.order = order;
  sol.gamma = ElementSeries(ctx, order);
  for (std::size_t j = 0; j < m; ++j) sol.gamma.add(SuperMonomial::variable(m, j), H.representatives[j]);

  std::vector<ElementSeries> parts(order + 1, ElementSeries(ctx, order));
  parts[1] = sol.gamma;

  EchelonBasis exact;
  for (const auto& v : image_basis(D.delta().matrix())) exact.insert(v);
  PreimageSelector selector(D);

  for (unsigned n = 2; n <= order; ++n) {
    ElementSeries r(ctx, order);
    for (unsigned p = 1; p < n; ++p) r += series_bracket(D, parts[p], parts[n - p]);
    r = r.part(n).scaled(Scalar::rational(-1, 2));

    OrderRecord rec;
    rec.order = n;
    ElementSeries gn(ctx, order);
    for (const auto& [mono, coeff] : r.terms()) {
      auto where = [&] { return "order " + std::to_string(n) + ", monomial " + mono.to_string(); };
      if (!exact.contains(coeff)) throw Obstruction(where() + ": r_n is not delta-exact");
      if (!D.Delta().apply(coeff).is_zero()) throw Obstruction(where() + ": r_n is not Delta-closed");
      // delta(x^I c) = (-1)^{|x^I|} x^I delta(c)
      Element target = sign_of(mono.parity(ctx)) * coeff;
      Element chosen;
      try {
        chosen = selector.select(target);
      } catch (const Obstruction&) {
        throw Obstruction(where() + ": no preimage of r_n in Im Delta");
      }
      if (H.unit_position < m && mono.contains(H.unit_position))
        throw CheckFailure(where() + ": unit direction appears beyond first order");
      auto pc = A.parity_of(chosen);
      if (pc && ((*pc + mono.parity(ctx)) & 1))
        throw CheckFailure(where() + ": Gamma_n term has odd total parity");
      gn.add(mono, chosen);
      rec.entries.push_back({mono, coeff, chosen});
    }
    parts[n] = gn;
    sol.gamma += gn;
    sol.log.push_back(std::move(rec));
  }
  return sol;
}

ElementSeries residual(const DGBVStructure& D, const ElementSeries& gamma, unsigned order) {
  const auto& A = D.algebra();
  auto p = total_parity(A, gamma);
  if (p && *p != 0) throw PreconditionFailure("residual needs an even series");
  if (!p && !gamma.is_zero()) throw PreconditionFailure("residual needs a series of homogeneous even terms");

  ElementSeries g = gamma.truncated(order);
  // For even G: [G . G] = Delta(G G) - (Delta G) G - G (Delta G).
  ElementSeries dg = apply(D.Delta(), g);
  ElementSeries br = apply(D.Delta(), series_mul(A, g, g));
  br -= series_mul(A, dg, g);
  br -= series_mul(A, g, dg);

  ElementSeries out = apply(D.delta(), g);
  out += br.scaled(Scalar::rational(1, 2));
  return out.truncated(order);
}

}  // namespace dgbv
