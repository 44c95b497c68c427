#pragma once

#include <string>

#include "weil/kernel/numbers.hpp"

namespace weil {

/// Closed interval [lo, hi] with exact rational endpoints.
struct Interval {
  Rational lo{0};
  Rational hi{0};

  Interval() = default;
  Interval(Rational l, Rational h);
  static Interval point(const Rational& q) { return Interval(q, q); }

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
  /// Largest |x| over the interval.
  Rational magnitude() const;
  /// Smallest |x| over the interval.
  Rational mignitude() const;

  /// Outward rounding of both endpoints to multiples of 2^-bits.
  Interval rounded(long bits) const;

  friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Rational& s);
/// Throws DomainError if b contains zero.
Interval operator/(const Interval& a, const Interval& b);
/// Exact enclosure of {x^2 : x in a}.
Interval square(const Interval& a);
Interval hull(const Interval& a, const Interval& b);

/// Decimal rendering of an enclosure: every real in the interval is within
/// `plus_minus` of `value`. Only digits the width supports are printed.
struct DecimalEnclosure {
  std::string value;
  std::string plus_minus;
  std::string text() const { return value + " ± " + plus_minus; }
};

DecimalEnclosure to_decimal(const Interval& iv, int max_digits = 40);

/// Axis-aligned rectangle re x im in the complex plane, rational corners.
/// Doubles as complex interval arithmetic.
struct ComplexBox {
  Interval re;
  Interval im;

  ComplexBox() = default;
  ComplexBox(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
  static ComplexBox point(const Rational& r, const Rational& i = 0) {
    return {Interval::point(r), Interval::point(i)};
  }

  bool is_real() const { return im.lo == 0 && im.hi == 0; }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  bool intersects(const ComplexBox& o) const { return re.intersects(o.re) && im.intersects(o.im); }
  bool contains(const ComplexBox& o) const { return re.contains(o.re) && im.contains(o.im); }
  /// Larger of the two side lengths.
  Rational size() const;
  ComplexBox conjugate() const { return {re, -im}; }
  ComplexBox rounded(long bits) const { return {re.rounded(bits), im.rounded(bits)}; }
  /// Enclosure of |z|^2 over the box (exact).
  Interval abs_squared() const;

  friend bool operator==(const ComplexBox& a, const ComplexBox& b) { return a.re == b.re && a.im == b.im; }
};

ComplexBox operator+(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator-(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator-(const ComplexBox& a);
ComplexBox operator*(const ComplexBox& a, const ComplexBox& b);
/// Throws DomainError if b contains zero.
ComplexBox operator/(const ComplexBox& a, const ComplexBox& b);
ComplexBox reciprocal(const ComplexBox& b);

/// Certified location of exactly one (distinct) root of some polynomial:
/// a real interval (im = [0,0], `real` set) or a rectangle that does not
/// meet the real axis.
struct RootBox {
  ComplexBox region;
  bool real = true;

  static RootBox real_interval(Interval iv) { return {ComplexBox(std::move(iv), Interval()), true}; }
  static RootBox exact(const Rational& q) { return real_interval(Interval::point(q)); }

  bool is_exact_point() const { return real && region.re.is_point(); }
  Rational size() const { return region.size(); }
  friend bool operator==(const RootBox& a, const RootBox& b) { return a.real == b.real && a.region == b.region; }
};

}  // namespace weil
