#pragma once

#include <cstdint>
#include <vector>

#include "weil/bounds/optimization.hpp"

namespace weil {

/// Numerical search for the largest
///   Phi(x) = sum a_ij log|x_ij| + b log|F~(x)|
/// over zeros of F with every |x_ij| <= 1 and no coordinate zero, in the
/// embedding that the coefficients' isolating boxes select. Not certified.
struct PhiReport {
  bool feasible = false;
  double best_phi = 0;
  /// Coordinate moduli of the best point, ascending.
  std::vector<double> moduli;
  /// Every modulus within 1e-6 of 1 outside at most one block.
  bool unit_structure = false;
  /// best_phi <= -log rho + 1e-4, when a threshold was supplied.
  bool below_threshold = false;
};

struct SpotcheckOptions {
  int trials = 32;
  int steps = 400;
  std::uint64_t seed = 0x5eed;
  /// -log rho for the consistency flag; NaN skips it.
  double neg_log_rho = 0.0 / 0.0;
};

/// Only P^1 x ... x P^1 shapes; throws UnsupportedShape otherwise.
PhiReport phi_spotcheck(const MultihomogeneousPolynomial& f, const WeightScheme& scheme,
                        const SpotcheckOptions& opts = {});

}  // namespace weil
