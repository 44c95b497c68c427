#include "weil/bounds/optimization.hpp"

#include <functional>

#include "weil/errors.hpp"
#include "weil/kernel/bigfloat.hpp"

namespace weil {

namespace {

constexpr long kGridBits = 96;

Interval log_of(const Rational& q, long bits) {
  auto [lo, hi] = log_bounds(q, bits);
  return Interval(lo, hi);
}

// u log(gamma u/(u+v)) + v log(v/(u+v)), 0 log 0 = 0
Interval entropy_objective(const Rational& u, const Rational& v, const Rational& gamma, long bits) {
  Interval total = Interval::point(0);
  const Rational s = u + v;
  if (u > 0) total = total + log_of(gamma * u / s, bits) * u;
  if (v > 0) total = total + log_of(v / s, bits) * v;
  return total;
}

struct Minimum {
  Rational at;
  Interval value;
};

// Golden-section search for a convex objective on [lo, hi]. The returned
// enclosure uses the secants through the final bracket: a convex function
// lies above each secant line outside its chord.
Minimum minimize_convex(const std::function<Interval(const Rational&)>& f, Rational a, Rational b,
                        const Rational& tol) {
  static const Rational g = parse_rational("0.61803398874989484820");
  auto place = [](const Rational& x) {
    Rational r = floor_dyadic(x, kGridBits);
    return r;
  };
  Rational c = place(b - g * (b - a)), d = place(a + g * (b - a));
  Interval fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc.midpoint() < fd.midpoint()) {
      b = d;
      d = c;
      fd = fc;
      c = place(b - g * (b - a));
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = place(a + g * (b - a));
      fd = f(d);
    }
    if (!(a <= c && c <= d && d <= b)) break;  // grid exhausted
  }
  const bool left = fc.midpoint() < fd.midpoint();
  const Rational x2 = left ? c : d;
  const Interval f2 = left ? fc : fd;
  const Interval f1 = f(a), f3 = f(b);
  Rational lower = f2.lo;
  if (x2 > a && b > x2) {
    lower = std::min(lower, Rational(f2.lo + (f2.lo - f1.hi) * ((b - x2) / (x2 - a))));
    lower = std::min(lower, Rational(f2.lo + (f2.lo - f3.hi) * ((x2 - a) / (b - x2))));
  }
  // endpoint values may themselves be the minimum
  Rational upper = std::min({f2.hi, f1.hi, f3.hi});
  Rational at = x2;
  if (f1.hi < f2.hi && f1.hi <= f3.hi) at = a;
  else if (f3.hi < f2.hi && f3.hi < f1.hi) at = b;
  return {at, Interval(std::min(lower, upper), upper)};
}

// root > 1 of x^-alpha/gamma + x^-beta = 1 by plain bisection in MPFR
Interval bisect_root(const Rational& alpha, const Rational& beta, const Rational& gamma) {
  const long prec = 256;
  const BigFloat a(prec, alpha), b(prec, beta), inv_gamma(prec, Rational(1 / gamma)), one(prec, 1.0);
  auto g = [&](const BigFloat& x) {
    BigFloat lx = log(x);
    return inv_gamma * exp(-(a * lx)) + exp(-(b * lx)) - one;
  };
  BigFloat lo(prec, 1.0), hi(prec, 2.0);
  while (g(hi).sign() > 0) hi = hi * BigFloat(prec, 2.0);
  for (int k = 0; k < 200; ++k) {
    BigFloat mid = (lo + hi) * BigFloat(prec, 0.5);
    if (g(mid).sign() > 0) lo = mid;
    else hi = mid;
  }
  return Interval(lo.to_rational(), hi.to_rational());
}

bool positive(const Rational& q) { return q > 0; }

}  // namespace

EntropyMinimum entropy_minimize(const Rational& alpha, const Rational& beta, const Rational& gamma,
                                 const Rational& tolerance) {
  if (!positive(alpha) || !positive(beta) || !positive(gamma))
    throw DomainError("entropy_minimize: alpha, beta and gamma must be positive");
  const long bits = 128;
  auto f = [&](const Rational& u) { return entropy_objective(u, (1 - alpha * u) / beta, gamma, bits); };
  Minimum m = minimize_convex(f, Rational(0), Rational(1 / alpha), pow2(-44));
  EntropyMinimum out;
  out.u = m.at;
  out.v = (1 - alpha * m.at) / beta;
  out.minimum = m.value;
  out.rho_prime = bisect_root(alpha, beta, gamma);
  const Interval e_minus_l(exp_bounds(-m.value.hi, bits).first, exp_bounds(-m.value.lo, bits).second);
  const Rational gap = std::max(abs(e_minus_l.hi - out.rho_prime.lo), abs(out.rho_prime.hi - e_minus_l.lo));
  out.consistent = gap <= tolerance;
  return out;
}

Interval lambda_rhs(const Rational& b, const Rational& delta, const Integer& c, long precision_bits) {
  if (delta < 0) throw DomainError("lambda_rhs: delta must be nonnegative");
  if (c < 1) throw DomainError("lambda_rhs: C_F must be positive");
  if (b < 0 || (delta > 0 && b > 1 / delta)) throw DomainError("lambda_rhs: b outside [0, 1/delta]");
  const Rational s = 1 - delta * b;
  return entropy_objective(b, s / 2, Rational(c), precision_bits);
}

OptimalB optimal_b(const Rational& delta, const Integer& c, const Rational& tolerance) {
  if (delta < 0) throw DomainError("optimal_b: delta must be nonnegative");
  if (c < 1) throw DomainError("optimal_b: C_F must be positive");
  Rational top;
  if (delta > 0) {
    top = 1 / delta;
  } else {
    if (c == 1) throw DomainError("optimal_b: delta = 0 with C_F = 1 has no minimizer");
    top = Rational(1) / Rational(c - 1);  // twice the stationary point 1/(2(C-1))
  }
  auto f = [&](const Rational& b) { return lambda_rhs(b, delta, c, 128); };
  Minimum m = minimize_convex(f, Rational(0), top, tolerance);
  return {m.at, m.value};
}

XiStar xi_star(const Rational& a, const Rational& b, const Rational& c, long precision_bits) {
  if (a < 0 || b < 0) throw DomainError("xi_star: a and b must be nonnegative");
  if (a == 0 && b == 0) throw DomainError("xi_star: a and b are both zero");
  if (b > 0 && c <= 0) throw DomainError("xi_star: c must be positive");
  const Rational s = a + 2 * b;
  XiStar out{a / s, Interval::point(0)};
  if (b > 0) out.value = out.value + log_of(2 * b * c / s, precision_bits) * b;
  if (a > 0) out.value = out.value + log_of(a / s, precision_bits) * Rational(a / 2);
  return out;
}

namespace {

// a_ij = 1 - slope_ij * b
std::map<std::pair<int, int>, Rational> slopes(const MultihomogeneousPolynomial& f, const ExceptionalSet& e) {
  const auto d = f.partial_degrees();
  const auto dt = f.tilde_degrees();
  std::map<std::pair<int, int>, Rational> out;
  for (int i = 0; i < f.blocks(); ++i) {
    const int n = f.shape()[i];
    for (int j = 0; j <= n; ++j) {
      Rational num = dt[i];
      if (e.blocks.count(i)) num += (j % 2 == 0 ? 1 : -1) * d[i][1];
      out[{i, j}] = num / (n + 1);
    }
  }
  return out;
}

}  // namespace

WeightScheme weight_scheme(const MultihomogeneousPolynomial& f, const ExceptionalSet& e, const Rational& b) {
  if (b < 0) throw DomainError("weight_scheme: b must be nonnegative");
  for (int i : e.blocks)
    if (i < 0 || i >= f.blocks() || f.shape()[i] != 1)
      throw DomainError("weight_scheme: exceptional block " + std::to_string(i + 1) + " is not a P^1 block");
  WeightScheme out;
  out.b = b;
  for (const auto& [ij, slope] : slopes(f, e)) {
    Rational a = 1 - slope * b;
    if (a < 0)
      throw DomainError("weight_scheme: b = " + to_string(b) + " makes a_" + std::to_string(ij.first + 1) + "," +
                        std::to_string(ij.second) + " negative");
    out.a[ij] = a;
  }
  const auto dt = f.tilde_degrees();
  for (int i = 0; i < f.blocks(); ++i) {
    Rational w = b * dt[i];
    for (int j = 0; j <= f.shape()[i]; ++j) w += out.a[{i, j}];
    if (w != f.shape()[i] + 1) throw Error("weight_scheme: block weight identity failed");
    out.weights.push_back(w);
  }
  return out;
}

std::optional<Rational> max_feasible_b(const MultihomogeneousPolynomial& f, const ExceptionalSet& e) {
  std::optional<Rational> best;
  for (const auto& [ij, slope] : slopes(f, e)) {
    if (slope <= 0) continue;
    Rational limit = 1 / slope;
    if (!best || limit < *best) best = limit;
  }
  return best;
}

}  // namespace weil
