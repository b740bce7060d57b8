#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace dgbv {

/// Exact element of the Gaussian rationals Q(i).
///
/// Both parts are kept in canonical reduced form by GMP, so two scalars are
/// equal exactly when their parts compare equal.
class Scalar {
public:
  Scalar() = default;
  Scalar(std::int64_t re) : re_(static_cast<long>(re)) {}
  Scalar(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar rational(std::int64_t num, std::int64_t den);
  static Scalar i() { return Scalar(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// re^2 + im^2, the squared modulus.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical text form: "0", "3", "-1/2", "2*i", "1/2-3/4*i".
  std::string to_string() const;
  /// Parses "a/b", "a/b+c/d*i", "c/d*i", "i", "-i" with optional signs.
  /// Throws ParseError on malformed input or a zero denominator.
  static Scalar parse(std::string_view text);

private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// (-1)^k as a scalar.
inline Scalar sign_of(int k) { return (k & 1) ? Scalar(-1) : Scalar(1); }

}  // namespace dgbv
