#pragma once

#include <vector>

#include "weil/kernel/int_poly.hpp"

namespace weil {

struct FactorPower {
  IntPoly factor;  // canonical irreducible
  int multiplicity = 1;
};

/// Complete factorization over the rationals. Factors are canonical
/// (primitive, positive leading coefficient) and sorted by
/// (degree, coefficient sequence); the product of factor^multiplicity equals
/// f up to a rational unit times the content. Throws DomainError for 0.
///
/// Algorithm: squarefree decomposition, then per part a Zassenhaus
/// factorization (Cantor-Zassenhaus modulo a small prime, linear Hensel
/// lifting, subset recombination). Recombination is exponential in the
/// number of modular factors; intended for degrees up to about 24, workable
/// up to the composite-degree cap of the algebraic layer.
std::vector<FactorPower> factor_over_rationals(const IntPoly& f);

/// Irreducible factors of a squarefree polynomial, canonical and sorted.
std::vector<IntPoly> factor_squarefree(const IntPoly& f);

/// Degree >= 1 and no nontrivial factorization over Q.
bool is_irreducible(const IntPoly& f);

}  // namespace weil
