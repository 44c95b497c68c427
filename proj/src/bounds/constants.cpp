#include "weil/bounds/constants.hpp"

#include <algorithm>
#include <optional>

#include "weil/errors.hpp"
#include "weil/kernel/bigfloat.hpp"
#include "weil/kernel/roots.hpp"

namespace weil {

Rational delta(const MultihomogeneousPolynomial& f, const ExceptionalSet& e) {
  const auto d = f.partial_degrees();
  const auto dt = f.tilde_degrees();
  Rational best = 0;
  bool first = true;
  for (int i = 0; i < f.blocks(); ++i) {
    Rational num = dt[i];
    if (e.blocks.count(i)) num += d[i][1];
    Rational v = num / (f.shape()[i] + 1);
    if (first || v > best) best = v;
    first = false;
  }
  return best;
}

Integer c_value(const MultihomogeneousPolynomial& f, int i, int j) {
  if (i < 0 || i >= f.blocks() || j < 0 || j > f.shape()[i]) throw DomainError("c_value: index pair out of range");
  Integer total = 0;
  for (const auto& m : f.monomials()) {
    const int e = m.exponents[i][j];
    if (e == 0) continue;
    auto q = m.coeff.as_rational();
    if (!q || q->get_den() != 1)
      throw DomainError("c_value: coefficient " + m.coeff.minpoly().to_string() +
                        " at this pair is not an integer; the value depends on the place");
    total += e * abs(q->get_num());
  }
  return total;
}

Integer c_max(const MultihomogeneousPolynomial& f, const ExceptionalSet& e) {
  std::optional<Integer> best;
  for (int i = 0; i < f.blocks(); ++i)
    for (int j = 0; j <= f.shape()[i]; ++j) {
      if (e.is_exceptional(i, j)) continue;
      Integer c = c_value(f, i, j);
      if (!best || c > *best) best = c;
    }
  if (!best) throw DomainError("C_F: polynomial has no regular index pair");
  return *best;
}

Threshold threshold(const Integer& c, const Rational& delta, long precision_bits) {
  if (c < 1) throw DomainError("rho: C_F must be a positive integer");
  if (delta < 0) throw DomainError("rho: delta must be nonnegative");
  if (delta == 0 && c == 1) throw DomainError("rho: delta = 0 needs C_F > 1, otherwise no root exceeds 1");
  if (!delta.get_num().fits_slong_p() || !delta.get_den().fits_slong_p() || delta.get_num() > 4096 ||
      delta.get_den() > 4096)
    throw DomainError("rho: delta numerator and denominator are limited to 4096");
  const int p = static_cast<int>(delta.get_num().get_si());
  const int q = static_cast<int>(delta.get_den().get_si());

  // x^-2 + C^-1 x^-p/q = 1 for x > 1  <=>  C^q x^p (x^2-1)^q = x^2q
  Integer cq;
  mpz_pow_ui(cq.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(q));
  IntPoly lhs = IntPoly::monomial(cq, p);
  for (int k = 0; k < q; ++k) lhs = lhs * IntPoly{-1, 0, 1};
  IntPoly poly = lhs - IntPoly::monomial(1, 2 * q);
  const Rational top = root_bound(poly) + 1;
  AlgebraicNumber rho = AlgebraicNumber::root_in(poly, ComplexBox(Interval(1, top), Interval()));

  const Rational eps = pow2(-precision_bits);
  ComplexBox box = approximate(rho, eps / 4);
  const long bits = precision_bits + 16;
  Interval log_rho(log_bounds(box.re.lo, bits).first, log_bounds(box.re.hi, bits).second);
  return {rho, log_rho};
}

BoundConstants bound_constants(const MultihomogeneousPolynomial& f, const ExceptionalSet& e, long precision_bits) {
  BoundConstants out;
  out.d = f.partial_degrees();
  out.d_tilde = f.tilde_degrees();
  out.delta = delta(f, e);
  for (int i = 0; i < f.blocks(); ++i)
    for (int j = 0; j <= f.shape()[i]; ++j)
      if (!e.is_exceptional(i, j)) out.c[{i, j}] = c_value(f, i, j);
  out.c_f = c_max(f, e);
  out.threshold = threshold(out.c_f, out.delta, precision_bits);
  return out;
}

}  // namespace weil
