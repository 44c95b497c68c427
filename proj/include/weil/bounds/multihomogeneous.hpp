#pragma once

#include <set>
#include <string>
#include <vector>

#include "weil/algebraic/algebraic_number.hpp"

namespace weil {

/// Exponent matrix of a monomial: row i holds the exponents of
/// x_{i0}, ..., x_{i n_i}.
using ExponentMatrix = std::vector<std::vector<int>>;

struct Monomial {
  ExponentMatrix exponents;
  AlgebraicNumber coeff;
};

/// Polynomial on P^{n_1} x ... x P^{n_r}, homogeneous of degree d_i in
/// block i. Blocks are 0-based in this API.
class MultihomogeneousPolynomial {
 public:
  MultihomogeneousPolynomial() = default;
  /// Throws DomainError when a monomial has the wrong shape, a negative
  /// exponent or a row that does not sum to the block degree. Monomials with
  /// the same exponent matrix are merged; zero coefficients dropped.
  MultihomogeneousPolynomial(std::vector<int> shape, std::vector<int> degrees, std::vector<Monomial> monomials);

  const std::vector<int>& shape() const { return shape_; }
  const std::vector<int>& degrees() const { return degrees_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  int blocks() const { return static_cast<int>(shape_.size()); }

  /// d_ij: largest exponent of x_ij over all monomials.
  std::vector<std::vector<int>> partial_degrees() const;
  /// -d_i + sum_j d_ij.
  std::vector<int> tilde_degrees() const;

 private:
  std::vector<int> shape_;
  std::vector<int> degrees_;
  std::vector<Monomial> monomials_;
};

/// The block indices I (0-based); the exceptional pairs are (i, 0), i in I.
struct ExceptionalSet {
  std::set<int> blocks;

  bool is_exceptional(int i, int j) const { return j == 0 && blocks.count(i) > 0; }
};

/// True when the monomial has a positive exponent at some regular pair.
bool is_regular_monomial(const Monomial& m, const ExceptionalSet& e);

struct Violation {
  enum class Kind { ExceptionalSet, TotallyRealInteger, RegularNotInteger };
  Kind kind;
  int monomial = -1;  // index into monomials(), or -1
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks that I only names blocks with n_i = 1, that every coefficient is
/// a totally real algebraic integer, and that regular monomials have integer
/// coefficients. Every violation is listed.
ValidationReport validate(const MultihomogeneousPolynomial& f, const ExceptionalSet& e);

/// F(x^{-1}) * prod x_ij^{d_ij}: exponents complemented against d_ij.
MultihomogeneousPolynomial tilde(const MultihomogeneousPolynomial& f);

const char* to_string(Violation::Kind kind);

}  // namespace weil
