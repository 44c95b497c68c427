#pragma once

#include <map>
#include <utility>
#include <vector>

#include "weil/bounds/multihomogeneous.hpp"

namespace weil {

Rational delta(const MultihomogeneousPolynomial& f, const ExceptionalSet& e);

/// sum over monomials of m_ij * |s_m|. Refuses (DomainError) when a
/// contributing coefficient is not rational, which can only happen at an
/// exceptional pair of a valid polynomial, or not an integer.
Integer c_value(const MultihomogeneousPolynomial& f, int i, int j);

/// Largest c_value over the regular pairs. Throws DomainError when there is
/// no regular pair.
Integer c_max(const MultihomogeneousPolynomial& f, const ExceptionalSet& e);

/// The threshold rho > 1 solving x^-2 + C^-1 x^-delta = 1, exactly, with a
/// certified enclosure of log rho.
struct Threshold {
  AlgebraicNumber rho;
  Interval log_rho;
};

/// rho is the unique root > 1 of C^q x^p (x^2 - 1)^q - x^{2q} for
/// delta = p/q. Throws DomainError for C < 1, delta < 0, or delta = 0 with
/// C = 1 (no root above 1).
Threshold threshold(const Integer& c, const Rational& delta, long precision_bits = 128);

struct BoundConstants {
  std::vector<std::vector<int>> d;
  std::vector<int> d_tilde;
  Rational delta;
  std::map<std::pair<int, int>, Integer> c;  // regular pairs only
  Integer c_f;
  Threshold threshold;
};

/// Everything the inequality needs from (F, E). F should be valid; this
/// does not re-run validate().
BoundConstants bound_constants(const MultihomogeneousPolynomial& f, const ExceptionalSet& e,
                               long precision_bits = 128);

}  // namespace weil
