#include "weil/bounds/multihomogeneous.hpp"

#include <algorithm>

#include "weil/errors.hpp"

namespace weil {

namespace {

std::string pair_name(int i, int j) { return "x_" + std::to_string(i + 1) + "," + std::to_string(j); }

}  // namespace

MultihomogeneousPolynomial::MultihomogeneousPolynomial(std::vector<int> shape, std::vector<int> degrees,
                                                       std::vector<Monomial> monomials)
    : shape_(std::move(shape)), degrees_(std::move(degrees)) {
  if (shape_.empty()) throw DomainError("multihomogeneous polynomial needs at least one block");
  if (degrees_.size() != shape_.size()) throw DomainError("degree vector length differs from the number of blocks");
  for (size_t i = 0; i < shape_.size(); ++i) {
    if (shape_[i] < 1) throw DomainError("block dimensions must be positive");
    if (degrees_[i] < 0) throw DomainError("block degrees must be nonnegative");
  }
  for (size_t k = 0; k < monomials.size(); ++k) {
    auto& m = monomials[k];
    const std::string where = "monomial " + std::to_string(k);
    if (m.exponents.size() != shape_.size()) throw DomainError(where + ": wrong number of blocks");
    for (size_t i = 0; i < shape_.size(); ++i) {
      const auto& row = m.exponents[i];
      if (static_cast<int>(row.size()) != shape_[i] + 1) throw DomainError(where + ": wrong block length");
      int sum = 0;
      for (int e : row) {
        if (e < 0) throw DomainError(where + ": negative exponent");
        sum += e;
      }
      if (sum != degrees_[i])
        throw DomainError(where + ": block " + std::to_string(i + 1) + " has degree " + std::to_string(sum) +
                          ", expected " + std::to_string(degrees_[i]));
    }
    if (m.coeff.is_zero()) continue;
    auto same = std::find_if(monomials_.begin(), monomials_.end(),
                             [&](const Monomial& o) { return o.exponents == m.exponents; });
    if (same == monomials_.end()) {
      monomials_.push_back(std::move(m));
    } else {
      same->coeff = same->coeff + m.coeff;
    }
  }
  monomials_.erase(std::remove_if(monomials_.begin(), monomials_.end(), [](const Monomial& m) { return m.coeff.is_zero(); }),
                   monomials_.end());
}

std::vector<std::vector<int>> MultihomogeneousPolynomial::partial_degrees() const {
  std::vector<std::vector<int>> d;
  for (int n : shape_) d.emplace_back(n + 1, 0);
  for (const auto& m : monomials_)
    for (size_t i = 0; i < d.size(); ++i)
      for (size_t j = 0; j < d[i].size(); ++j) d[i][j] = std::max(d[i][j], m.exponents[i][j]);
  return d;
}

std::vector<int> MultihomogeneousPolynomial::tilde_degrees() const {
  auto d = partial_degrees();
  std::vector<int> out;
  for (size_t i = 0; i < d.size(); ++i) {
    int s = -degrees_[i];
    for (int v : d[i]) s += v;
    out.push_back(s);
  }
  return out;
}

bool is_regular_monomial(const Monomial& m, const ExceptionalSet& e) {
  for (size_t i = 0; i < m.exponents.size(); ++i)
    for (size_t j = 0; j < m.exponents[i].size(); ++j)
      if (m.exponents[i][j] > 0 && !e.is_exceptional(static_cast<int>(i), static_cast<int>(j))) return true;
  return false;
}

ValidationReport validate(const MultihomogeneousPolynomial& f, const ExceptionalSet& e) {
  ValidationReport report;
  for (int i : e.blocks) {
    if (i < 0 || i >= f.blocks()) {
      report.violations.push_back({Violation::Kind::ExceptionalSet, -1,
                                   "exceptional block " + std::to_string(i + 1) + " does not exist"});
    } else if (f.shape()[i] != 1) {
      report.violations.push_back({Violation::Kind::ExceptionalSet, -1,
                                   "exceptional block " + std::to_string(i + 1) + " has dimension " +
                                       std::to_string(f.shape()[i]) + ", expected 1"});
    }
  }
  const auto& ms = f.monomials();
  for (size_t k = 0; k < ms.size(); ++k) {
    const auto& m = ms[k];
    const int idx = static_cast<int>(k);
    if (!is_algebraic_integer(m.coeff) || !is_totally_real(m.coeff)) {
      report.violations.push_back({Violation::Kind::TotallyRealInteger, idx,
                                   "coefficient with minimal polynomial " + m.coeff.minpoly().to_string() +
                                       " is not a totally real algebraic integer"});
    }
    const auto q = m.coeff.as_rational();
    if (is_regular_monomial(m, e) && !(q && q->get_den() == 1)) {
      std::string where;
      for (size_t i = 0; i < m.exponents.size() && where.empty(); ++i)
        for (size_t j = 0; j < m.exponents[i].size(); ++j)
          if (m.exponents[i][j] > 0 && !e.is_exceptional(static_cast<int>(i), static_cast<int>(j))) {
            where = pair_name(static_cast<int>(i), static_cast<int>(j));
            break;
          }
      report.violations.push_back({Violation::Kind::RegularNotInteger, idx,
                                   "monomial involving regular variable " + where + " has a non-integer coefficient"});
    }
  }
  return report;
}

MultihomogeneousPolynomial tilde(const MultihomogeneousPolynomial& f) {
  const auto d = f.partial_degrees();
  std::vector<Monomial> out;
  for (const auto& m : f.monomials()) {
    Monomial t{m.exponents, m.coeff};
    for (size_t i = 0; i < d.size(); ++i)
      for (size_t j = 0; j < d[i].size(); ++j) t.exponents[i][j] = d[i][j] - m.exponents[i][j];
    out.push_back(std::move(t));
  }
  return MultihomogeneousPolynomial(f.shape(), f.tilde_degrees(), std::move(out));
}

const char* to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::ExceptionalSet: return "exceptional-set";
    case Violation::Kind::TotallyRealInteger: return "coefficient-not-totally-real-integer";
    case Violation::Kind::RegularNotInteger: return "regular-coefficient-not-integer";
  }
  return "unknown";
}

}  // namespace weil
