#pragma once

#include <optional>
#include <vector>

#include "weil/kernel/int_poly.hpp"
#include "weil/kernel/interval.hpp"

namespace weil {

/// One factor of a squarefree decomposition: f = c * prod factor^multiplicity.
struct SquarefreeFactor {
  IntPoly factor;  // canonical, pairwise coprime
  int multiplicity = 1;
};

/// Product of the distinct irreducible factors of f, canonical form.
/// Throws DomainError for the zero polynomial.
IntPoly squarefree_part(const IntPoly& f);

/// Yun's algorithm; factors of degree >= 1 only, content and sign dropped.
std::vector<SquarefreeFactor> squarefree_decomposition(const IntPoly& f);

bool is_squarefree(const IntPoly& f);

/// Sturm chain of a squarefree polynomial. Counting is exact: every sign
/// is evaluated in rational arithmetic.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& f);
  /// Distinct real roots in the closed interval [a, b].
  int count(const Interval& closed) const;
  /// Distinct real roots in the open interval (a, b).
  int count_open(const Rational& a, const Rational& b) const;
  int count_all() const;

 private:
  int variations_at(const Rational& x) const;
  int variations_at_infinity(bool positive) const;
  std::vector<IntPoly> chain_;
};

/// Number of distinct real roots on the whole line. Throws DomainError when
/// f is zero or not squarefree.
int real_root_count(const IntPoly& f);
/// Number of distinct real roots in the closed interval.
int real_root_count(const IntPoly& f, const Interval& closed);

/// Descartes (Vincent-Collins-Akritas) bisection. Returns one interval per
/// distinct real root in increasing order; each is either a point (exact
/// rational root) or has endpoints where f is nonzero with opposite signs.
/// Precondition: f squarefree, degree >= 1.
std::vector<Interval> isolate_real_roots(const IntPoly& f);

/// One certified RootBox per distinct complex root of a squarefree f of
/// degree >= 1: real roots first in increasing order, then non-real roots in
/// conjugate pairs (upper half-plane first), ordered by real part.
/// Non-real boxes come from Aberth approximations certified by
/// Gerschgorin-type inclusion discs evaluated in exact arithmetic.
std::vector<RootBox> isolate_roots(const IntPoly& f);

/// Shrinks a certified box of a squarefree f to size <= eps (diameter for
/// complex boxes). The result is contained in the input. Throws
/// DomainError for eps <= 0.
RootBox refine_root(const IntPoly& f, const RootBox& box, const Rational& eps);

/// Bound B with every root of f satisfying |z| < B (power of two).
Rational root_bound(const IntPoly& f);

}  // namespace weil
