#pragma once

// Numerical root approximation used by the certified isolation code.
// Nothing here is trusted: every approximation is re-checked with exact
// rational arithmetic by the caller.

#include <vector>

#include "weil/kernel/int_poly.hpp"

namespace weil::detail {

struct DyadicComplex {
  Rational re;
  Rational im;
};

/// Approximations of all deg(f) complex roots by Aberth-Ehrlich iteration.
/// bits <= 53 runs in double precision, otherwise in MPFR at `bits`,
/// seeded by `seed` when it has the right size. Approximations are returned
/// as exact dyadic rationals (the floats themselves).
std::vector<DyadicComplex> aberth_roots(const IntPoly& f, long bits,
                                        const std::vector<DyadicComplex>& seed = {});

/// Newton iteration from `start` at `bits` of precision; returns the last
/// iterate (not necessarily converged).
DyadicComplex newton_polish(const IntPoly& f, const DyadicComplex& start, long bits, int max_iter);

}  // namespace weil::detail
