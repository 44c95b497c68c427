#include "weil/kernel/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "weil/errors.hpp"

namespace weil {

BigFloat::BigFloat(long prec) {
  mpfr_init2(v_, std::max<long>(prec, MPFR_PREC_MIN));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long prec, double v) : BigFloat(prec) { mpfr_set_d(v_, v, MPFR_RNDN); }

BigFloat::BigFloat(long prec, const Integer& v, mpfr_rnd_t rnd) : BigFloat(prec) {
  mpfr_set_z(v_, v.get_mpz_t(), rnd);
}

BigFloat::BigFloat(long prec, const Rational& v, mpfr_rnd_t rnd) : BigFloat(prec) {
  mpfr_set_q(v_, v.get_mpq_t(), rnd);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

void BigFloat::widen_to(long prec) {
  if (prec > precision()) mpfr_prec_round(v_, prec, MPFR_RNDN);
}

Rational BigFloat::to_rational() const {
  if (!is_finite()) throw DomainError("non-finite float has no rational value");
  Rational q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return q;
}

double BigFloat::log2_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long e = 0;
  double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  widen_to(o.precision());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& o) {
  widen_to(o.precision());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& o) {
  widen_to(o.precision());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& o) {
  widen_to(o.precision());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

std::pair<Rational, Rational> log_bounds(const Rational& q, long bits) {
  if (q <= 0) throw DomainError("log of non-positive rational");
  if (q == 1) return {Rational(0), Rational(0)};
  BigFloat lo(bits, q, MPFR_RNDD), hi(bits, q, MPFR_RNDU);
  mpfr_log(lo.raw(), lo.raw(), MPFR_RNDD);
  mpfr_log(hi.raw(), hi.raw(), MPFR_RNDU);
  return {lo.to_rational(), hi.to_rational()};
}

std::pair<Rational, Rational> exp_bounds(const Rational& q, long bits) {
  if (q == 0) return {Rational(1), Rational(1)};
  BigFloat lo(bits, q, MPFR_RNDD), hi(bits, q, MPFR_RNDU);
  mpfr_exp(lo.raw(), lo.raw(), MPFR_RNDD);
  mpfr_exp(hi.raw(), hi.raw(), MPFR_RNDU);
  return {lo.to_rational(), hi.to_rational()};
}

}  // namespace weil
