#include "dgbv/scalar.hpp"

#include "dgbv/errors.hpp"

#include <cctype>

namespace dgbv {

Scalar Scalar::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw MalformedElement("zero denominator");
  mpq_class q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw MalformedElement("division by zero");
  mpq_class n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string Scalar::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string out;
  if (sgn(re_) != 0) out = re_.get_str();
  mpq_class mag = abs(im_);
  if (sgn(im_) < 0)
    out += "-";
  else if (!out.empty())
    out += "+";
  if (mag != 1) out += mag.get_str() + "*";
  out += "i";
  return out;
}

namespace {

// Parses an optionally signed rational "a" or "a/b" starting at pos.
// Returns false if no digits are present.
bool parse_rational(std::string_view s, std::size_t& pos, mpq_class& out, std::string_view whole) {
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) return false;
  std::string num(s.substr(start, pos - start));
  std::string den = "1";
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    std::size_t dstart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == dstart) throw ParseError("", "missing denominator in '" + std::string(whole) + "'");
    den = std::string(s.substr(dstart, pos - dstart));
  }
  mpz_class d(den);
  if (d == 0) throw ParseError("", "zero denominator in '" + std::string(whole) + "'");
  out = mpq_class(mpz_class(num), d);
  out.canonicalize();
  return true;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("", "empty scalar");

  mpq_class re = 0, im = 0;
  bool seen_re = false, seen_im = false;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    bool had_sign = false;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      had_sign = true;
      ++pos;
    }
    if (!had_sign && (seen_re || seen_im)) throw ParseError("", "malformed scalar '" + s + "'");
    mpq_class mag = 1;
    bool has_num = parse_rational(s, pos, mag, s);
    bool imaginary = false;
    if (has_num && pos < s.size() && s[pos] == '*') {
      ++pos;
      if (pos >= s.size() || s[pos] != 'i') throw ParseError("", "expected 'i' in '" + s + "'");
      ++pos;
      imaginary = true;
    } else if (pos < s.size() && s[pos] == 'i') {
      ++pos;
      imaginary = true;
    } else if (!has_num) {
      throw ParseError("", "malformed scalar '" + s + "'");
    }
    if (sign < 0) mag = -mag;
    if (imaginary) {
      if (seen_im) throw ParseError("", "repeated imaginary part in '" + s + "'");
      im = mag;
      seen_im = true;
    } else {
      if (seen_re || seen_im) throw ParseError("", "malformed scalar '" + s + "'");
      re = mag;
      seen_re = true;
    }
  }
  return Scalar(re, im);
}

}  // namespace dgbv
