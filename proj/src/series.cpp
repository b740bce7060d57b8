#include "dgbv/series.hpp"

#include "dgbv/errors.hpp"

#include <sstream>

namespace dgbv {

VariableContext VariableContext::from_cohomology(const CohomologyBasis& H) {
  std::vector<int> parities;
  for (std::size_t j = 0; j < H.size(); ++j) parities.push_back(H.parity(j));
  return VariableContext(std::move(parities));
}

SuperMonomial SuperMonomial::variable(std::size_t nvars, std::size_t j) {
  SuperMonomial m(nvars);
  m.set_exponent(j, 1);
  return m;
}

void SuperMonomial::set_exponent(std::size_t j, unsigned e) {
  degree_ = degree_ - exps_[j] + e;
  exps_[j] = static_cast<std::uint16_t>(e);
}

int SuperMonomial::parity(const VariableContext& ctx) const {
  int p = 0;
  for (std::size_t j = 0; j < exps_.size(); ++j)
    if (ctx.parity(j)) p += exps_[j];
  return p & 1;
}

std::optional<std::pair<SuperMonomial, int>> SuperMonomial::multiply(const VariableContext& ctx, const SuperMonomial& a,
                                                                     const SuperMonomial& b) {
  if (a.nvars() != b.nvars() || a.nvars() != ctx.size()) throw DimensionMismatch("monomials from different contexts");
  SuperMonomial out = a;
  int sign = 0;
  // odd variables of a with index greater than the current one
  int odd_after = 0;
  for (std::size_t j = 0; j < a.nvars(); ++j)
    if (ctx.parity(j) && a.exps_[j]) ++odd_after;
  for (std::size_t j = 0; j < b.nvars(); ++j) {
    if (ctx.parity(j) && a.exps_[j]) --odd_after;
    if (!b.exps_[j]) continue;
    if (ctx.parity(j)) {
      if (a.exps_[j]) return std::nullopt;
      sign += odd_after;
    }
    out.set_exponent(j, a.exps_[j] + b.exps_[j]);
  }
  return std::make_pair(std::move(out), sign & 1);
}

std::optional<std::pair<Scalar, SuperMonomial>> SuperMonomial::derivative(const VariableContext& ctx,
                                                                          std::size_t j) const {
  if (j >= exps_.size()) throw MalformedElement("variable index out of range");
  if (!exps_[j]) return std::nullopt;
  SuperMonomial out = *this;
  out.set_exponent(j, exps_[j] - 1);
  if (!ctx.parity(j)) return std::make_pair(Scalar(static_cast<std::int64_t>(exps_[j])), std::move(out));
  int before = 0;
  for (std::size_t i = 0; i < j; ++i)
    if (ctx.parity(i) && exps_[i]) ++before;
  return std::make_pair(sign_of(before), std::move(out));
}

std::string SuperMonomial::to_string() const {
  if (degree_ == 0) return "1";
  std::string out;
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    if (!exps_[j]) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(j);
    if (exps_[j] > 1) out += "^" + std::to_string(exps_[j]);
  }
  return out;
}

bool operator<(const SuperMonomial& a, const SuperMonomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
  return a.exps_ > b.exps_;
}

// ---------------------------------------------------------------------------

namespace {

void require_same_context(const VariableContext& a, const VariableContext& b) {
  if (!(a == b)) throw DimensionMismatch("series over different variable contexts");
}

}  // namespace

ElementSeries series_mul(const GradedAlgebra& A, const ElementSeries& u, const ElementSeries& v) {
  require_same_context(u.context(), v.context());
  const auto& ctx = u.context();
  unsigned order = std::min(u.order(), v.order());
  ElementSeries out(ctx, order);
  for (const auto& [mj, b] : v.terms()) {
    int pj = mj.parity(ctx);
    for (const auto& [mi, a] : u.terms()) {
      if (mi.degree() + mj.degree() > order) continue;
      auto prod = SuperMonomial::multiply(ctx, mi, mj);
      if (!prod) continue;
      Scalar s = sign_of(prod->second);
      if (pj) {
        auto [even, odd] = A.split_parity(a);
        out.add(prod->first, wedge(A, even, b), s);
        out.add(prod->first, wedge(A, odd, b), -s);
      } else {
        out.add(prod->first, wedge(A, a, b), s);
      }
    }
  }
  return out;
}

ScalarSeries series_mul(const ScalarSeries& u, const ScalarSeries& v) {
  require_same_context(u.context(), v.context());
  const auto& ctx = u.context();
  unsigned order = std::min(u.order(), v.order());
  ScalarSeries out(ctx, order);
  for (const auto& [mi, a] : u.terms())
    for (const auto& [mj, b] : v.terms()) {
      if (mi.degree() + mj.degree() > order) continue;
      auto prod = SuperMonomial::multiply(ctx, mi, mj);
      if (!prod) continue;
      out.add(prod->first, a * b, sign_of(prod->second));
    }
  return out;
}

namespace {

template <class Coeff>
SuperSeries<Coeff> partial_impl(const SuperSeries<Coeff>& u, std::size_t j) {
  SuperSeries<Coeff> out(u.context(), u.order());
  for (const auto& [m, c] : u.terms()) {
    auto d = m.derivative(u.context(), j);
    if (d) out.add(d->second, c, d->first);
  }
  return out;
}

}  // namespace

ElementSeries partial(const ElementSeries& u, std::size_t j) { return partial_impl(u, j); }
ScalarSeries partial(const ScalarSeries& u, std::size_t j) { return partial_impl(u, j); }

ElementSeries apply(const GradedOperator& op, const ElementSeries& u) {
  ElementSeries out(u.context(), u.order());
  for (const auto& [m, c] : u.terms()) out.add(m, op.apply(c), sign_of(op.parity() * m.parity(u.context())));
  return out;
}

ScalarSeries integrate(const IntegralFunctional& f, const ElementSeries& u) {
  ScalarSeries out(u.context(), u.order());
  for (const auto& [m, c] : u.terms()) out.add(m, f(c));
  return out;
}

std::optional<int> total_parity(const GradedAlgebra& A, const ElementSeries& u) {
  std::optional<int> p;
  for (const auto& [m, c] : u.terms()) {
    auto pc = A.parity_of(c);
    if (!pc) return std::nullopt;
    int t = (*pc + m.parity(u.context())) & 1;
    if (p && *p != t) return std::nullopt;
    p = t;
  }
  return p;
}

ScalarSeries constant_series(const VariableContext& ctx, unsigned order, const Scalar& c) {
  ScalarSeries out(ctx, order);
  out.add(SuperMonomial(ctx.size()), c);
  return out;
}

std::string format_series(const GradedAlgebra& A, const ElementSeries& u) {
  if (u.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : u.terms()) {
    if (!first) os << " + ";
    first = false;
    os << m.to_string() << "*(" << A.format(c) << ")";
  }
  return os.str();
}

std::string format_series(const ScalarSeries& u) {
  if (u.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : u.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (!m.is_one()) os << "*" << m.to_string();
  }
  return os.str();
}

}  // namespace dgbv
