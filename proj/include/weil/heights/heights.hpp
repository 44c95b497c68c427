#pragma once

#include <vector>

#include "weil/algebraic/algebraic_number.hpp"
#include "weil/kernel/interval.hpp"

namespace weil {

/// A certified natural-log height.
struct HeightValue {
  Interval log_height;
  long precision_bits = 0;
};

/// |lead| * prod max(1, |root|) over all roots with multiplicity, as an
/// interval of width <= eps. Factors that are cyclotomic contribute exactly 1.
/// Throws DomainError for the zero polynomial or eps <= 0.
Interval mahler_measure(const IntPoly& f, const Rational& eps);

/// True when f is (up to sign and content) the m-th cyclotomic polynomial for
/// some m. Decided by comparing against every Phi_m of the same degree.
bool is_cyclotomic(const IntPoly& f);

/// m-th cyclotomic polynomial.
IntPoly cyclotomic_polynomial(int m);

/// log h(a) = log M(minpoly) / deg with interval width <= eps; exactly [0,0]
/// for zero and roots of unity.
HeightValue weil_log_height(const AlgebraicNumber& a, const Rational& eps);

/// log max |c_i| of the coprime integer vector proportional to the block.
/// Throws DomainError when every coordinate is zero.
HeightValue rational_block_log_height(const std::vector<Rational>& block, long precision_bits = 128);

/// Point in P^{n_1} x ... x P^{n_r}; block i holds n_i + 1 coordinates.
struct MultiProjectivePoint {
  std::vector<std::vector<AlgebraicNumber>> blocks;

  std::vector<int> shape() const;
  /// Coordinatewise inverse; requires every coordinate nonzero.
  MultiProjectivePoint inverted() const;
};

/// sum_i (n_i + 1) log H(x_i) with interval width <= eps.
/// Supported blocks: all coordinates rational multiples of one coordinate,
/// or two coordinates (then the block is (1, x_1/x_0) after scaling).
/// Throws UnsupportedShape otherwise, DomainError for an all-zero block.
HeightValue point_log_height(const MultiProjectivePoint& p, const Rational& eps);

}  // namespace weil
