#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "weil/bounds/multihomogeneous.hpp"
#include "weil/kernel/interval.hpp"

namespace weil {

/// Minimum of u log(gamma u / (u+v)) + v log(v / (u+v)) on the segment
/// alpha u + beta v = 1, u, v >= 0, next to an independently computed root
/// rho' > 1 of x^-alpha / gamma + x^-beta = 1.
struct EntropyMinimum {
  Rational u;
  Rational v;
  Interval minimum;    // certified enclosure of the minimum value l
  Interval rho_prime;  // bisection enclosure of the root
  /// |e^-l - rho'| <= tolerance, evaluated with the enclosures.
  bool consistent = false;
};

/// Throws DomainError unless alpha, beta, gamma > 0.
EntropyMinimum entropy_minimize(const Rational& alpha, const Rational& beta, const Rational& gamma,
                                 const Rational& tolerance = Rational(1, 1000000000));

/// b log(2bC/((1-delta b)+2b)) + ((1-delta b)/2) log((1-delta b)/((1-delta b)+2b)),
/// with 0 log 0 = 0. Domain 0 <= b <= 1/delta (b >= 0 when delta = 0).
Interval lambda_rhs(const Rational& b, const Rational& delta, const Integer& c, long precision_bits = 128);

struct OptimalB {
  Rational b;
  Interval bound;  // certified enclosure of min_b lambda_rhs
};

/// Golden-section search over the feasible b range with rational brackets;
/// the objective is convex, which the enclosure of the minimum relies on.
/// Throws DomainError where no minimizer exists (delta = 0 and C = 1).
OptimalB optimal_b(const Rational& delta, const Integer& c, const Rational& tolerance = pow2(-40));

/// Maximizer xi0 = a/(a+2b) of b log(c(1-xi)) + (a/2) log xi on [0, 1] and
/// the enclosure of the maximum b log(2bc/(a+2b)) + (a/2) log(a/(a+2b)).
struct XiStar {
  Rational xi0;
  Interval value;
};

/// Throws DomainError for negative a or b, a = b = 0, or c <= 0 with b > 0.
XiStar xi_star(const Rational& a, const Rational& b, const Rational& c, long precision_bits = 128);

struct WeightScheme {
  Rational b;
  std::map<std::pair<int, int>, Rational> a;
  /// Coordinates contribute a_ij to block i; the reciprocal polynomial
  /// contributes b * d~_i. Equals n_i + 1 for every block.
  std::vector<Rational> weights;
};

/// a_ij from b; throws DomainError when b < 0 or some a_ij < 0.
WeightScheme weight_scheme(const MultihomogeneousPolynomial& f, const ExceptionalSet& e, const Rational& b);

/// Largest b keeping every a_ij >= 0 (nullopt when unbounded).
std::optional<Rational> max_feasible_b(const MultihomogeneousPolynomial& f, const ExceptionalSet& e);

}  // namespace weil
