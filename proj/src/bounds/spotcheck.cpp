#include "weil/bounds/spotcheck.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <random>

#include "weil/errors.hpp"

namespace weil {

namespace {

using cd = std::complex<double>;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct Term {
  std::vector<int> exps;  // flattened (i, j) -> 2i + j
  cd coeff;
};

std::vector<Term> flatten(const MultihomogeneousPolynomial& f) {
  std::vector<Term> out;
  for (const auto& m : f.monomials()) {
    Term t;
    for (const auto& row : m.exponents) t.exps.insert(t.exps.end(), row.begin(), row.end());
    ComplexBox box = approximate(m.coeff, pow2(-60));
    t.coeff = cd(box.re.midpoint().get_d(), box.im.midpoint().get_d());
    out.push_back(std::move(t));
  }
  return out;
}

cd evaluate(const std::vector<Term>& terms, const std::vector<cd>& x) {
  cd s = 0;
  for (const auto& t : terms) {
    cd p = t.coeff;
    for (size_t k = 0; k < x.size(); ++k)
      for (int e = 0; e < t.exps[k]; ++e) p *= x[k];
    s += p;
  }
  return s;
}

// roots of sum c_k z^k by Durand-Kerner
std::vector<cd> poly_roots(std::vector<cd> c) {
  while (!c.empty() && std::abs(c.back()) < 1e-300) c.pop_back();
  const int n = static_cast<int>(c.size()) - 1;
  if (n < 1) return {};
  if (n == 1) return {-c[0] / c[1]};
  for (auto& v : c) v /= c.back();
  std::vector<cd> z(n);
  for (int k = 0; k < n; ++k) z[k] = std::pow(cd(0.4, 0.9), k);
  for (int it = 0; it < 500; ++it) {
    double change = 0;
    for (int k = 0; k < n; ++k) {
      cd num = 0;
      for (int j = n; j >= 0; --j) num = num * z[k] + c[j];
      cd den = 1;
      for (int j = 0; j < n; ++j)
        if (j != k) den *= z[k] - z[j];
      cd step = num / den;
      z[k] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-15) break;
  }
  return z;
}

class PhiProblem {
 public:
  PhiProblem(const MultihomogeneousPolynomial& f, const WeightScheme& s)
      : terms_(flatten(f)), tilde_terms_(flatten(tilde(f))), b_(s.b.get_d()) {
    for (int i = 0; i < f.blocks(); ++i)
      for (int j = 0; j < 2; ++j) a_.push_back(s.a.at({i, j}).get_d());
    degree_.assign(a_.size(), 0);
    for (const auto& t : terms_)
      for (size_t k = 0; k < t.exps.size(); ++k) degree_[k] = std::max(degree_[k], t.exps[k]);
  }

  size_t size() const { return a_.size(); }
  int degree(size_t k) const { return degree_[k]; }

  double phi(const std::vector<cd>& x) const {
    double v = 0;
    for (size_t k = 0; k < x.size(); ++k) {
      const double r = std::abs(x[k]);
      if (r == 0 || r > 1 + 1e-12) return kNegInf;
      v += a_[k] * std::log(r);
    }
    if (b_ != 0) {
      const double t = std::abs(evaluate(tilde_terms_, x));
      if (t == 0) return kNegInf;
      v += b_ * std::log(t);
    }
    return v;
  }

  // Fix every coordinate but `solve`, put x[solve] on a root of F and keep
  // the best admissible root. Returns Phi or -inf.
  double complete(std::vector<cd>& x, size_t solve) const {
    std::vector<cd> c(degree_[solve] + 1, 0);
    for (const auto& t : terms_) {
      cd p = t.coeff;
      for (size_t k = 0; k < x.size(); ++k)
        if (k != solve)
          for (int e = 0; e < t.exps[k]; ++e) p *= x[k];
      c[t.exps[solve]] += p;
    }
    double best = kNegInf;
    cd chosen = x[solve];
    for (cd z : poly_roots(c)) {
      if (std::abs(z) > 1) {
        if (std::abs(z) > 1 + 1e-9) continue;
        z /= std::abs(z);
      }
      x[solve] = z;
      const double v = phi(x);
      if (v > best) {
        best = v;
        chosen = z;
      }
    }
    x[solve] = chosen;
    return best;
  }

 private:
  std::vector<Term> terms_;
  std::vector<Term> tilde_terms_;
  std::vector<double> a_;
  std::vector<int> degree_;
  double b_;
};

cd polar(double r, double t) { return std::polar(std::min(r, 1.0), t); }

}  // namespace

PhiReport phi_spotcheck(const MultihomogeneousPolynomial& f, const WeightScheme& scheme, const SpotcheckOptions& opts) {
  for (int n : f.shape())
    if (n != 1) throw UnsupportedShape("phi_spotcheck handles products of P^1 only");
  if (opts.trials < 1) throw DomainError("phi_spotcheck: trials must be at least 1");
  PhiProblem prob(f, scheme);
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unit(0, 1), angle(0, 2 * M_PI), jitter(-1, 1);

  std::vector<size_t> solvable;
  for (size_t k = 0; k < prob.size(); ++k)
    if (prob.degree(k) > 0) solvable.push_back(k);

  PhiReport report;
  std::vector<cd> best_x;
  double best = kNegInf;
  for (int trial = 0; trial < opts.trials && !solvable.empty(); ++trial) {
    const size_t solve = solvable[static_cast<size_t>(trial) % solvable.size()];
    std::vector<cd> x(prob.size());
    for (auto& z : x) z = polar(trial % 2 ? 1.0 : std::sqrt(unit(rng)), angle(rng));
    double cur = prob.complete(x, solve);
    double step = 0.5;
    for (int s = 0; s < opts.steps && step > 1e-9; ++s) {
      std::vector<cd> y = x;
      size_t k = static_cast<size_t>(rng() % prob.size());
      if (k == solve) k = (k + 1) % prob.size();
      if (k == solve) break;
      const double r = std::abs(y[k]) * std::exp(step * jitter(rng));
      y[k] = polar(r, std::arg(y[k]) + step * jitter(rng));
      const double v = prob.complete(y, solve);
      if (v > cur) {
        cur = v;
        x = std::move(y);
      } else if (s % 8 == 7) {
        step *= 0.7;
      }
    }
    if (cur > best) {
      best = cur;
      best_x = x;
    }
  }
  if (best == kNegInf) return report;
  report.feasible = true;
  report.best_phi = best;
  std::vector<size_t> off_blocks;
  for (size_t k = 0; k < best_x.size(); ++k) {
    report.moduli.push_back(std::abs(best_x[k]));
    if (std::abs(report.moduli.back() - 1) > 1e-6) off_blocks.push_back(k / 2);
  }
  std::sort(report.moduli.begin(), report.moduli.end());
  off_blocks.erase(std::unique(off_blocks.begin(), off_blocks.end()), off_blocks.end());
  report.unit_structure = off_blocks.size() <= 1;
  report.below_threshold = !std::isnan(opts.neg_log_rho) && best <= opts.neg_log_rho + 1e-4;
  return report;
}

}  // namespace weil
