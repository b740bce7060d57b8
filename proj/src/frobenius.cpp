#include "dgbv/frobenius.hpp"

#include "dgbv/errors.hpp"

#include <array>
#include <map>

namespace dgbv {

namespace {

using Quad = std::array<std::size_t, 4>;

// Dense bilinear form B_ab = f(e_a e_b).
std::vector<Scalar> integral_form(const GradedAlgebra& A, const IntegralFunctional& f) {
  const std::size_t n = A.dim();
  std::vector<Scalar> B(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) B[a * n + b] = f(A.product(a, b));
  return B;
}

// f(u v) for element-valued series, without forming the product.
ScalarSeries integrated_product(const GradedAlgebra& A, const std::vector<Scalar>& B, const ElementSeries& u,
                                const ElementSeries& v, unsigned order) {
  const auto& ctx = u.context();
  const std::size_t n = A.dim();
  ScalarSeries out(ctx, order);
  for (const auto& [mj, q] : v.terms()) {
    int pj = mj.parity(ctx);
    for (const auto& [mi, p] : u.terms()) {
      if (mi.degree() + mj.degree() > order) continue;
      auto prod = SuperMonomial::multiply(ctx, mi, mj);
      if (!prod) continue;
      Scalar s;
      for (const auto& [a, ca] : p) {
        Scalar row;
        for (const auto& [b, cb] : q) {
          const Scalar& w = B[a * n + b];
          if (!w.is_zero()) row += cb * w;
        }
        if (row.is_zero()) continue;
        if (pj && A.parity(a)) row = -row;
        s += ca * row;
      }
      out.add(prod->first, s, sign_of(prod->second));
    }
  }
  return out;
}

std::string describe_mismatch(const ScalarSeries& lhs, const ScalarSeries& rhs) {
  // lowest monomial where the two sides disagree
  ScalarSeries diff = lhs;
  diff -= rhs;
  if (diff.is_zero()) return {};
  const auto& [m, c] = *diff.terms().begin();
  return "degree " + std::to_string(m.degree()) + ", monomial " + m.to_string() + ": " + lhs.coeff(m).to_string() +
         " vs " + rhs.coeff(m).to_string();
}

bool has_positive_degree(const ScalarSeries& s) {
  return !s.is_zero() && s.terms().rbegin()->first.degree() > 0;
}

}  // namespace

FrobeniusData three_point(const DGBVStructure& D, const IntegralFunctional& f, const MCSolution& M, unsigned order) {
  if (M.order < order + 1)
    throw PreconditionFailure("three-point tensor through degree " + std::to_string(order) +
                              " needs a solution of order " + std::to_string(order + 1));
  const auto& A = D.algebra();
  FrobeniusData F;
  F.basis = M.basis;
  F.g = pairing(D, f, M.basis);
  F.context = M.gamma.context();
  F.order = order;
  const std::size_t m = F.size();

  std::vector<ElementSeries> P(m);
  for (std::size_t i = 0; i < m; ++i) {
    ElementSeries d = partial(M.gamma, i).truncated(order);
    P[i] = std::move(d);
  }
  const std::vector<Scalar> B = integral_form(A, f);
  F.c.assign(m * m * m, ScalarSeries(F.context, order));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      ElementSeries q = series_mul(A, P[i], P[j]);
      if (q.is_zero()) continue;
      for (std::size_t k = 0; k < m; ++k) F.tensor(i, j, k) = integrated_product(A, B, q, P[k], order);
    }

  ValidationReport r = check_tensor(D, f, F);
  if (!r.clean()) throw CheckFailure("three-point tensor invariants fail:\n" + r.to_text());
  return F;
}

ValidationReport check_tensor(const DGBVStructure& D, const IntegralFunctional& f, const FrobeniusData& F) {
  const auto& A = D.algebra();
  const auto& ctx = F.context;
  const std::size_t m = F.size();
  const SuperMonomial one(ctx.size());
  ValidationReport r;

  r.begin("tensor-origin", CheckTier::Derived);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Element ij = wedge(A, F.basis.representatives[i], F.basis.representatives[j]);
      for (std::size_t k = 0; k < m; ++k) {
        Scalar expect = f(wedge(A, ij, F.basis.representatives[k]));
        Scalar got = F.tensor(i, j, k).coeff(one);
        if (got != expect) r.fail({i, j, k}, got.to_string() + " vs " + expect.to_string());
      }
    }

  r.begin("tensor-graded-symmetry", CheckTier::Derived);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const ScalarSeries& c = F.tensor(i, j, k);
        ScalarSeries a = F.tensor(j, i, k).scaled(sign_of(ctx.parity(i) * ctx.parity(j)));
        ScalarSeries b = F.tensor(i, k, j).scaled(sign_of(ctx.parity(j) * ctx.parity(k)));
        if (c != a) r.fail({i, j, k}, "swap of first two: " + describe_mismatch(c, a));
        if (c != b) r.fail({i, j, k}, "swap of last two: " + describe_mismatch(c, b));
      }

  r.begin("flat-identity", CheckTier::Derived);
  const std::size_t u = F.basis.unit_position;
  if (u < m)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        ScalarSeries expect = constant_series(ctx, F.order, F.g.g(j, k));
        if (F.tensor(u, j, k) != expect) r.fail({u, j, k}, describe_mismatch(F.tensor(u, j, k), expect));
      }
  return r;
}

ValidationReport potentiality_check(const FrobeniusData& F) {
  const auto& ctx = F.context;
  const std::size_t m = F.size();
  const unsigned through = F.order == 0 ? 0 : F.order - 1;

  // T(l, i, j, k) = d_l c_ijk, stored only where nonzero
  std::map<Quad, ScalarSeries> T;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const ScalarSeries& c = F.tensor(i, j, k);
        if (!has_positive_degree(c)) continue;
        for (std::size_t l = 0; l < m; ++l) {
          ScalarSeries d = partial(c, l).truncated(through);
          if (!d.is_zero()) T.emplace(Quad{l, i, j, k}, std::move(d));
        }
      }
  const ScalarSeries zero(ctx, through);
  auto at = [&](const Quad& q) -> const ScalarSeries& {
    auto it = T.find(q);
    return it == T.end() ? zero : it->second;
  };

  ValidationReport r;
  r.begin("potentiality", CheckTier::Derived);
  std::map<Quad, bool> seen;
  for (const auto& [q, t] : T) {
    for (std::size_t s = 0; s < 3; ++s) {
      Quad p = q;
      std::swap(p[s], p[s + 1]);
      ScalarSeries other = at(p).scaled(sign_of(ctx.parity(q[s]) * ctx.parity(q[s + 1])));
      if (t == other) continue;
      Quad key = std::min(q, p);
      if (seen[key]) continue;
      seen[key] = true;
      r.fail({q[0], q[1], q[2], q[3]}, "transposition of positions " + std::to_string(s) + "," +
                                           std::to_string(s + 1) + ": " + describe_mismatch(t, other));
    }
  }
  return r;
}

ScalarSeries reconstruct_potential(const FrobeniusData& F) {
  const auto& ctx = F.context;
  const std::size_t m = F.size();
  const std::size_t nv = ctx.size();
  const unsigned top = F.order + 3;
  ScalarSeries phi(ctx, top);

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const ScalarSeries& c = F.tensor(i, j, k);
        if (c.is_zero()) continue;
        ScalarSeries weighted(ctx, top);
        for (const auto& [mono, v] : c.terms()) {
          const std::int64_t d = mono.degree() + 3;
          weighted.add(mono, v, Scalar::rational(1, d * (d - 1) * (d - 2)));
        }
        // x^k x^j x^i c_ijk
        ScalarSeries term = weighted;
        for (std::size_t v : {i, j, k}) {
          ScalarSeries xv(ctx, top);
          xv.add(SuperMonomial::variable(nv, v), Scalar(1));
          term = series_mul(xv, term);
        }
        phi += term;
      }

  std::vector<ScalarSeries> dk(m);
  for (std::size_t k = 0; k < m; ++k) dk[k] = partial(phi, k);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) {
      ScalarSeries djk = partial(dk[k], j);
      for (std::size_t i = 0; i < m; ++i) {
        ScalarSeries got = partial(djk, i).truncated(F.order);
        ScalarSeries expect = F.tensor(i, j, k).truncated(F.order);
        if (got != expect)
          throw CheckFailure("potential does not reproduce c at (" + std::to_string(i) + "," + std::to_string(j) +
                             "," + std::to_string(k) + "), " + describe_mismatch(got, expect));
      }
    }
  return phi;
}

ValidationReport wdvv_check(const FrobeniusData& F) {
  const auto& ctx = F.context;
  const std::size_t m = F.size();
  const unsigned order = F.order;

  // A(i, j, f) = sum_e c_ije g^{ef}
  std::vector<ScalarSeries> Acon(m * m * m, ScalarSeries(ctx, order));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t e = 0; e < m; ++e) {
        const ScalarSeries& c = F.tensor(i, j, e);
        if (c.is_zero()) continue;
        for (std::size_t f = 0; f < m; ++f) {
          const Scalar& w = F.g.g_inv(e, f);
          if (!w.is_zero()) Acon[(i * m + j) * m + f] += c.scaled(w);
        }
      }

  // nonzero (k, l) per leading index f
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> rows(m);
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t l = 0; l < m; ++l)
        if (!F.tensor(f, k, l).is_zero()) rows[f].emplace_back(k, l);

  // L(i, j, k, l) = sum_f A(i, j, f) c_fkl
  std::map<Quad, ScalarSeries> L;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t f = 0; f < m; ++f) {
        const ScalarSeries& a = Acon[(i * m + j) * m + f];
        if (a.is_zero()) continue;
        for (const auto& [k, l] : rows[f]) {
          ScalarSeries p = series_mul(a, F.tensor(f, k, l));
          if (p.is_zero()) continue;
          auto [it, fresh] = L.try_emplace(Quad{i, j, k, l}, ScalarSeries(ctx, order));
          it->second += p;
        }
      }
  const ScalarSeries zero(ctx, order);
  auto at = [&](const Quad& q) -> const ScalarSeries& {
    auto it = L.find(q);
    return it == L.end() ? zero : it->second;
  };

  ValidationReport r;
  r.begin("wdvv", CheckTier::Derived);
  std::map<Quad, bool> done;
  auto check = [&](const Quad& q) {
    if (done[q]) return;
    done[q] = true;
    const auto [i, j, k, l] = q;
    const ScalarSeries& lhs = at(q);
    ScalarSeries rhs = at(Quad{j, k, i, l}).scaled(sign_of(ctx.parity(i) * (ctx.parity(j) + ctx.parity(k))));
    if (lhs != rhs) r.fail({i, j, k, l}, describe_mismatch(lhs, rhs));
  };
  for (const auto& [q, v] : L) {
    check(q);
    // q = (j, k, i, l) as the right-hand side of (i, j, k, l)
    check(Quad{q[2], q[0], q[1], q[3]});
  }
  return r;
}

}  // namespace dgbv
