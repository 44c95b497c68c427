#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weil/bounds/constants.hpp"
#include "weil/heights/heights.hpp"

namespace weil {

enum class ZeroTest { Zero, Nonzero, Undecided };

/// Value of F at a point. `exact` is set when the algebraic arithmetic stayed
/// under the degree cap; otherwise `enclosure` carries the interval evidence.
struct Evaluation {
  ZeroTest zero = ZeroTest::Undecided;
  std::optional<AlgebraicNumber> exact;
  ComplexBox enclosure;
};

struct VerifyOptions {
  long precision_bits = 64;
  long max_precision_bits = 4096;
  ArithmeticOptions arithmetic{};
};

/// Throws DomainError when the point shape differs from F.
Evaluation evaluate(const MultihomogeneousPolynomial& f, const MultiProjectivePoint& x, const VerifyOptions& opts = {});

enum class Check { Pass, Fail, Undecided };

struct HypothesisResult {
  std::string name;
  Check result = Check::Undecided;
  std::string witness;  // empty on pass
};

/// Hypotheses in order: "F(x) = 0", "coordinates nonzero", "F(1/x) != 0".
/// The third is skipped (Undecided, witness says why) when the second fails.
std::vector<HypothesisResult> check_hypotheses(const MultihomogeneousPolynomial& f, const ExceptionalSet& e,
                                               const MultiProjectivePoint& x, const VerifyOptions& opts = {});

enum class VerdictStatus {
  Holds,
  EqualityCandidate,
  ViolatedHypotheses,
  UndecidedAtPrecision,
  NotApplicable,
  ViolatedInequality,
};

const char* to_string(VerdictStatus s);

/// Which inequality the numbers refer to. For Corollary/Schinzel lhs is
/// sum log h(alpha_i) and log_rho is the halved threshold.
enum class Statement { Theorem, Corollary, Schinzel };

const char* to_string(Statement s);

struct Verdict {
  Statement statement = Statement::Theorem;
  VerdictStatus status = VerdictStatus::UndecidedAtPrecision;
  std::vector<HypothesisResult> hypotheses;
  /// Only set once every hypothesis passed.
  std::optional<Interval> lhs;
  std::optional<Interval> log_rho;
  std::optional<Interval> margin;
  Rational delta = 0;
  Integer c_f = 0;
  long precision_bits = 0;
  std::string note;
};

/// Equality-candidate threshold on the margin width.
Rational equality_width();

/// Checks properties (i)/(ii) and the three hypotheses, then certifies
/// sum (n_i + 1) log H(x_i) - log rho, doubling precision from
/// opts.precision_bits up to opts.max_precision_bits.
Verdict verify_theorem(const MultihomogeneousPolynomial& f, const ExceptionalSet& e, const MultiProjectivePoint& x,
                       const VerifyOptions& opts = {});

struct CorollaryInstance {
  std::vector<AlgebraicNumber> alphas;
  AlgebraicNumber n;
};

/// sum_i x_i1 prod_{j != i} x_j0 - N prod_j x_j0 with I = all blocks.
MultihomogeneousPolynomial corollary_polynomial(const AlgebraicNumber& n, int r);

/// Throws DomainError when some alpha is zero or sum alpha != N.
Verdict verify_corollary(const CorollaryInstance& inst, const VerifyOptions& opts = {});

/// NotApplicable unless alpha is a totally real algebraic integer outside
/// {0, 1, -1}; then the r = 1 corollary with N = alpha.
Verdict schinzel_check(const AlgebraicNumber& alpha, const VerifyOptions& opts = {});

/// verify_corollary over many instances on `jobs` threads; results keep the
/// input order. Errors are reported per instance in Verdict::note with status
/// NotApplicable.
std::vector<Verdict> verify_corollary_batch(const std::vector<CorollaryInstance>& insts, const VerifyOptions& opts,
                                            int jobs);

}  // namespace weil
