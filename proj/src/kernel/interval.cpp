#include "weil/kernel/interval.hpp"

#include <algorithm>

#include "weil/errors.hpp"

namespace weil {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw DomainError("interval with lo > hi");
}

Rational Interval::magnitude() const { return std::max(abs(lo), abs(hi)); }

Rational Interval::mignitude() const {
  if (contains_zero()) return 0;
  return std::min(abs(lo), abs(hi));
}

Interval Interval::rounded(long bits) const { return Interval(floor_dyadic(lo, bits), ceil_dyadic(hi, bits)); }

Interval operator+(const Interval& a, const Interval& b) { return Interval(a.lo + b.lo, a.hi + b.hi); }
Interval operator-(const Interval& a, const Interval& b) { return Interval(a.lo - b.hi, a.hi - b.lo); }
Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

Interval operator*(const Interval& a, const Interval& b) {
  if (a.is_point() && b.is_point()) return Interval::point(a.lo * b.lo);
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return Interval(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

Interval operator*(const Interval& a, const Rational& s) {
  if (s >= 0) return Interval(a.lo * s, a.hi * s);
  return Interval(a.hi * s, a.lo * s);
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
  Rational inv_lo = 1 / b.hi, inv_hi = 1 / b.lo;
  return a * Interval(inv_lo, inv_hi);
}

Interval square(const Interval& a) {
  Rational l2 = a.lo * a.lo, h2 = a.hi * a.hi;
  if (a.contains_zero()) return Interval(0, std::max(l2, h2));
  return Interval(std::min(l2, h2), std::max(l2, h2));
}

namespace {

// smallest d.dEk >= q for q > 0, two significant digits
std::string round_up_scientific(const Rational& q) {
  int e = 0;
  Rational m = q;
  while (m >= 10) m /= 10, ++e;
  while (m < 1) m *= 10, --e;
  Integer t = ceil(m * 10);
  if (t == 100) t = 10, ++e;
  std::string digits = t.get_str();
  return std::string(1, digits[0]) + "." + digits[1] + "e" + std::to_string(e);
}

}  // namespace

DecimalEnclosure to_decimal(const Interval& iv, int max_digits) {
  const Rational mid = iv.midpoint(), radius = iv.width() / 2;
  int digits = max_digits;
  if (radius > 0) {
    digits = 0;
    Rational step = 1;
    while (digits < max_digits && step / 10 >= radius) step /= 10, ++digits;
  }
  std::string text = to_fixed(mid, digits);
  const Rational shown = parse_rational(text);
  const Rational err = radius + abs(mid - shown);
  return {text, err == 0 ? std::string("0") : round_up_scientific(err)};
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

Rational ComplexBox::size() const { return std::max(re.width(), im.width()); }

Interval ComplexBox::abs_squared() const { return square(re) + square(im); }

ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) { return {a.re + b.re, a.im + b.im}; }
ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) { return {a.re - b.re, a.im - b.im}; }
ComplexBox operator-(const ComplexBox& a) { return {-a.re, -a.im}; }

ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
  if (a.is_real() && b.is_real()) return {a.re * b.re, Interval()};
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexBox reciprocal(const ComplexBox& b) {
  if (b.is_real()) {
    if (b.re.contains_zero()) throw DomainError("reciprocal of a box containing zero");
    return {Interval(1 / b.re.hi, 1 / b.re.lo), Interval()};
  }
  Interval den = b.abs_squared();
  if (den.contains_zero()) throw DomainError("reciprocal of a box containing zero");
  return {b.re / den, -b.im / den};
}

ComplexBox operator/(const ComplexBox& a, const ComplexBox& b) { return a * reciprocal(b); }

}  // namespace weil
