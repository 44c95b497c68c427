#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weil/kernel/numbers.hpp"

namespace weil {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, stored ascending by exponent. Trailing zeros are trimmed,
/// so the zero polynomial has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, int k);
  /// x - r for integer r, or den*x - num for a rational root.
  static IntPoly linear_root(const Rational& r);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Integer>& coeffs() const { return c_; }
  /// Coefficient of x^k (zero beyond the degree).
  Integer coeff(int k) const;
  const Integer& leading() const;
  const Integer& constant_term() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const Integer& s);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& s) { return a *= s; }
  IntPoly operator-() const;
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  IntPoly derivative() const;
  /// gcd of the coefficients, non-negative; zero for the zero polynomial.
  Integer content() const;
  IntPoly primitive_part() const;
  /// Primitive with positive leading coefficient. Idempotent.
  IntPoly canonical() const;
  bool is_canonical() const { return *this == canonical(); }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  /// x^deg * f(1/x).
  IntPoly reversed() const;
  /// f(-x).
  IntPoly negated_variable() const;
  /// f(x + a).
  IntPoly taylor_shift(const Integer& a) const;
  /// den^deg * f(num/den * x): roots divided by q.
  IntPoly scale_variable(const Rational& q) const;
  /// den^deg * f(x + q): roots shifted by -q.
  IntPoly shift_variable(const Rational& q) const;
  /// f(x^k).
  IntPoly inflate(int k) const;

  Integer eval(const Integer& x) const;
  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const;

  /// Human-readable form, e.g. "x^2 - x - 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> c_;
};

struct PseudoDivision {
  IntPoly quotient;
  IntPoly remainder;
};

/// lc(g)^(deg f - deg g + 1) * f = q*g + r with deg r < deg g.
/// Throws DomainError for g = 0.
PseudoDivision pseudo_divrem(const IntPoly& f, const IntPoly& g);

/// f / g when g divides f in Z[x], otherwise nullopt. Throws for g = 0.
std::optional<IntPoly> exact_divide(const IntPoly& f, const IntPoly& g);

/// Greatest common divisor, in canonical form (zero only if both are zero).
IntPoly gcd(const IntPoly& f, const IntPoly& g);

/// Deterministic total order on polynomials: by degree, then by the
/// ascending coefficient sequence.
bool canonical_less(const IntPoly& a, const IntPoly& b);

/// Parses "3*x^2 - x + 1", "x^10 + x^9 - x^7", or "[c0, c1, ..., cd]".
/// Throws ParseError with the character offset of the failure.
IntPoly parse_poly(std::string_view text);

/// Resultant of two nonzero polynomials (Sylvester determinant).
Integer resultant(const IntPoly& f, const IntPoly& g);

/// Sum of squares of coefficients.
Integer norm2_squared(const IntPoly& f);
/// max |c_i|.
Integer height(const IntPoly& f);

}  // namespace weil
