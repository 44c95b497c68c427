#pragma once

#include <mpfr.h>

#include <utility>

#include "weil/kernel/numbers.hpp"

namespace weil {

/// RAII wrapper around an MPFR value. Every instance carries its own
/// precision; binary operations produce a result at the larger of the two.
/// Used for numerical work (root approximation, Newton polishing, objective
/// evaluation); certified results never depend on its rounding alone.
class BigFloat {
 public:
  explicit BigFloat(long prec = 64);
  BigFloat(long prec, double v);
  BigFloat(long prec, const Integer& v, mpfr_rnd_t rnd = MPFR_RNDN);
  BigFloat(long prec, const Rational& v, mpfr_rnd_t rnd = MPFR_RNDN);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  /// Exact value of the binary float.
  Rational to_rational() const;
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// log2 |x| as a double; -infinity for zero.
  double log2_abs() const;

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  BigFloat operator-() const;

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }

 private:
  void widen_to(long prec);
  mpfr_t v_;
};

BigFloat sqrt(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat abs(const BigFloat& x);

/// Certified enclosure [lo, hi] of ln(q) for q > 0, computed with directed
/// rounding at `bits` of precision; endpoints are exact rationals.
std::pair<Rational, Rational> log_bounds(const Rational& q, long bits);

/// Certified enclosure of exp(q).
std::pair<Rational, Rational> exp_bounds(const Rational& q, long bits);

}  // namespace weil
