#pragma once

#include "dgbv/algebra.hpp"
#include "dgbv/cohomology.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dgbv {

/// Formal parameters x^0 .. x^{m-1}; variable j carries the parity of the
/// j-th cohomology representative, so each x^j e_j is even.
/// Copies share the parity table.
class VariableContext {
public:
  VariableContext() : parities_(std::make_shared<const std::vector<int>>()) {}
  explicit VariableContext(std::vector<int> parities)
      : parities_(std::make_shared<const std::vector<int>>(std::move(parities))) {}
  static VariableContext from_cohomology(const CohomologyBasis& H);

  std::size_t size() const { return parities_->size(); }
  int parity(std::size_t j) const { return (*parities_)[j]; }
  const std::vector<int>& parities() const { return *parities_; }

  friend bool operator==(const VariableContext& a, const VariableContext& b) {
    return a.parities_ == b.parities_ || *a.parities_ == *b.parities_;
  }

private:
  std::shared_ptr<const std::vector<int>> parities_;
};

/// Exponent vector in canonical (ascending index) order. Odd variables have
/// exponent at most one.
class SuperMonomial {
public:
  SuperMonomial() = default;
  explicit SuperMonomial(std::size_t nvars) : exps_(nvars, 0) {}
  static SuperMonomial variable(std::size_t nvars, std::size_t j);

  std::size_t nvars() const { return exps_.size(); }
  unsigned exponent(std::size_t j) const { return exps_[j]; }
  unsigned degree() const { return degree_; }
  int parity(const VariableContext& ctx) const;
  bool contains(std::size_t j) const { return exps_[j] != 0; }
  bool is_one() const { return degree_ == 0; }

  /// x^I x^J moved to canonical order: the sign collects one factor -1 per
  /// transposition of odd variables. nullopt when an odd variable repeats.
  static std::optional<std::pair<SuperMonomial, int>> multiply(const VariableContext& ctx, const SuperMonomial& a,
                                                               const SuperMonomial& b);
  /// Left derivative d/dx^j: returns (coefficient, monomial) or nullopt when x^j is absent.
  std::optional<std::pair<Scalar, SuperMonomial>> derivative(const VariableContext& ctx, std::size_t j) const;

  std::string to_string() const;

  /// Degree first, then lexicographic with x^0 leading.
  friend bool operator<(const SuperMonomial& a, const SuperMonomial& b);
  friend bool operator==(const SuperMonomial& a, const SuperMonomial& b) { return a.exps_ == b.exps_; }

  void set_exponent(std::size_t j, unsigned e);

private:
  std::vector<std::uint16_t> exps_;
  unsigned degree_ = 0;
};

namespace detail {
inline bool coeff_is_zero(const Scalar& s) { return s.is_zero(); }
inline bool coeff_is_zero(const Element& e) { return e.is_zero(); }
}  // namespace detail

/// Truncated series sum_I x^I c_I with coefficients to the right of the
/// variables. No term of degree above `order()` and no zero coefficients.
template <class Coeff>
class SuperSeries {
public:
  SuperSeries() = default;
  SuperSeries(VariableContext ctx, unsigned order) : ctx_(std::move(ctx)), order_(order) {}

  const VariableContext& context() const { return ctx_; }
  unsigned order() const { return order_; }
  const std::map<SuperMonomial, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c x^I; terms above the truncation order are dropped.
  void add(const SuperMonomial& m, const Coeff& c, const Scalar& factor = Scalar(1)) {
    if (m.degree() > order_) return;
    if (detail::coeff_is_zero(c) || factor.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      Coeff v = c;
      v *= factor;
      terms_.emplace(m, std::move(v));
    } else {
      accumulate(it->second, c, factor);
      if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  Coeff coeff(const SuperMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff() : it->second;
  }

  /// Homogeneous part of degree d.
  SuperSeries part(unsigned d) const {
    SuperSeries out(ctx_, order_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == d) out.terms_.emplace(m, c);
    return out;
  }

  SuperSeries truncated(unsigned order) const {
    SuperSeries out(ctx_, order);
    for (const auto& [m, c] : terms_)
      if (m.degree() <= order) out.terms_.emplace(m, c);
    return out;
  }

  SuperSeries& operator+=(const SuperSeries& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  SuperSeries& operator-=(const SuperSeries& o) {
    for (const auto& [m, c] : o.terms_) add(m, c, Scalar(-1));
    return *this;
  }
  SuperSeries scaled(const Scalar& s) const {
    SuperSeries out(ctx_, order_);
    for (const auto& [m, c] : terms_) out.add(m, c, s);
    return out;
  }

  friend bool operator==(const SuperSeries& a, const SuperSeries& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SuperSeries& a, const SuperSeries& b) { return !(a == b); }

private:
  static void accumulate(Scalar& acc, const Scalar& c, const Scalar& f) { acc += c * f; }
  static void accumulate(Element& acc, const Element& c, const Scalar& f) { acc.axpy(f, c); }

  VariableContext ctx_;
  unsigned order_ = 0;
  std::map<SuperMonomial, Coeff> terms_;
};

using ElementSeries = SuperSeries<Element>;
using ScalarSeries = SuperSeries<Scalar>;

/// (x^I a)(x^J b) = (-1)^{|a||x^J|} x^I x^J (a b), truncated at the smaller order.
ElementSeries series_mul(const GradedAlgebra& A, const ElementSeries& u, const ElementSeries& v);
/// Product of scalar-valued series (coefficients are even).
ScalarSeries series_mul(const ScalarSeries& u, const ScalarSeries& v);

/// Left derivative d/dx^j, term by term.
ElementSeries partial(const ElementSeries& u, std::size_t j);
ScalarSeries partial(const ScalarSeries& u, std::size_t j);

/// op(x^I a) = (-1)^{|op||x^I|} x^I op(a).
ElementSeries apply(const GradedOperator& op, const ElementSeries& u);

/// f(x^I a) = x^I f(a); f is even so no sign arises.
ScalarSeries integrate(const IntegralFunctional& f, const ElementSeries& u);

/// Parity of each stored term: monomial parity plus coefficient parity.
/// nullopt if some coefficient is inhomogeneous or the terms disagree.
std::optional<int> total_parity(const GradedAlgebra& A, const ElementSeries& u);

/// The constant series c (degree zero).
ScalarSeries constant_series(const VariableContext& ctx, unsigned order, const Scalar& c);

std::string format_series(const GradedAlgebra& A, const ElementSeries& u);
std::string format_series(const ScalarSeries& u);

}  // namespace dgbv
