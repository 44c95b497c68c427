#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weil/kernel/int_poly.hpp"
#include "weil/kernel/interval.hpp"

namespace weil {

/// Limits for resultant-based arithmetic.
struct ArithmeticOptions {
  /// Largest composite (resultant) degree an operation may form.
  int degree_cap = 64;
};

/// An algebraic number: its minimal polynomial (irreducible, canonical) and
/// a RootBox isolating the selected conjugate. Rationals have a degree-1
/// minimal polynomial and an exact point as location.
class AlgebraicNumber {
 public:
  /// Zero.
  AlgebraicNumber();

  static AlgebraicNumber from_rational(const Rational& q);
  static AlgebraicNumber from_integer(long v) { return from_rational(Rational(v)); }

  /// Trusted constructor: `minpoly` must already be irreducible and
  /// canonical and `box` must isolate one of its roots.
  static AlgebraicNumber from_isolated(IntPoly minpoly, RootBox box);

  /// The unique root of f lying in `region`. f may be reducible; the
  /// result carries the minimal polynomial of that root. Throws DomainError
  /// when the region holds no root or more than one.
  static AlgebraicNumber root_in(const IntPoly& f, const ComplexBox& region);

  /// Root of f closest to the point re + i*im. Throws DomainError when two
  /// roots are equidistant.
  static AlgebraicNumber nearest_root(const IntPoly& f, const Rational& re, const Rational& im = 0);

  /// k-th root (0-based) of an irreducible f in isolate_roots order.
  static AlgebraicNumber root_by_index(const IntPoly& f, int k);

  const IntPoly& minpoly() const { return minpoly_; }
  const RootBox& location() const { return location_; }
  int degree() const { return minpoly_.degree(); }

  bool is_rational() const { return degree() == 1; }
  std::optional<Rational> as_rational() const;
  /// Exact: the minimal polynomial is x.
  bool is_zero() const;
  /// The selected conjugate is real.
  bool is_real() const { return location_.real; }

 private:
  AlgebraicNumber(IntPoly minpoly, RootBox location);
  IntPoly minpoly_;
  RootBox location_;
};

AlgebraicNumber add(const AlgebraicNumber& a, const AlgebraicNumber& b, const ArithmeticOptions& opts = {});
AlgebraicNumber sub(const AlgebraicNumber& a, const AlgebraicNumber& b, const ArithmeticOptions& opts = {});
AlgebraicNumber mul(const AlgebraicNumber& a, const AlgebraicNumber& b, const ArithmeticOptions& opts = {});
/// Throws DomainError when b is zero.
AlgebraicNumber div(const AlgebraicNumber& a, const AlgebraicNumber& b, const ArithmeticOptions& opts = {});
AlgebraicNumber negate(const AlgebraicNumber& a);
/// Throws DomainError for zero.
AlgebraicNumber inverse(const AlgebraicNumber& a);

inline AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) { return add(a, b); }
inline AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) { return sub(a, b); }
inline AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) { return mul(a, b); }
inline AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) { return div(a, b); }
inline AlgebraicNumber operator-(const AlgebraicNumber& a) { return negate(a); }

/// Exact equality: same minimal polynomial and the same root of it.
bool equals(const AlgebraicNumber& a, const AlgebraicNumber& b);

bool is_totally_real(const AlgebraicNumber& a);
bool is_algebraic_integer(const AlgebraicNumber& a);

/// Certified enclosure with size <= eps (a point for rationals).
ComplexBox approximate(const AlgebraicNumber& a, const Rational& eps);

/// Position of the selected root in isolate_roots(minpoly) order.
int root_index(const AlgebraicNumber& a);

/// All conjugates of a number, each box refined to size <= 2^-precision_bits.
struct ConjugateSet {
  AlgebraicNumber owner;
  std::vector<RootBox> boxes;
  long precision_bits = 0;
};

ConjugateSet conjugates(const AlgebraicNumber& a, long precision_bits);

/// Enclosure of f(z) over a box by complex interval Horner; endpoints are
/// rounded outward to multiples of 2^-round_bits after every step.
ComplexBox horner_enclosure(const IntPoly& f, const ComplexBox& z, long round_bits);

}  // namespace weil
