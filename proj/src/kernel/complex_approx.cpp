#include "complex_approx.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include "weil/kernel/bigfloat.hpp"

namespace weil::detail {

namespace {

struct MpComplex {
  BigFloat re;
  BigFloat im;

  explicit MpComplex(long prec) : re(prec), im(prec) {}
  MpComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  friend MpComplex operator+(const MpComplex& a, const MpComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend MpComplex operator-(const MpComplex& a, const MpComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend MpComplex operator*(const MpComplex& a, const MpComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend MpComplex operator/(const MpComplex& a, const MpComplex& b) {
    BigFloat d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
};

double log2_abs(const std::complex<double>& z) {
  double a = std::abs(z);
  return a == 0 ? -std::numeric_limits<double>::infinity() : std::log2(a);
}

double log2_abs(const MpComplex& z) {
  double a = z.re.log2_abs(), b = z.im.log2_abs();
  double m = std::max(a, b);
  if (std::isinf(m)) return m;
  return m + 0.5 * std::log2(1.0 + std::exp2(2.0 * (std::min(a, b) - m)));
}

bool is_zero(const std::complex<double>& z) { return z == std::complex<double>(0.0, 0.0); }
bool is_zero(const MpComplex& z) { return z.re.is_zero() && z.im.is_zero(); }
bool is_finite(const std::complex<double>& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }
bool is_finite(const MpComplex& z) { return z.re.is_finite() && z.im.is_finite(); }

// Horner for f and f' at z.
template <class C>
void eval_with_derivative(const std::vector<C>& coeffs, const C& z, C& p, C& dp) {
  p = coeffs.back();
  dp = coeffs.back() - coeffs.back();  // zero at the right precision
  for (size_t k = coeffs.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + coeffs[k];
  }
}

// Gauss-Seidel Aberth-Ehrlich iteration; stops when every correction is
// below 2^-bits relative to max(1, |z|).
template <class C>
void aberth_iterate(const std::vector<C>& coeffs, std::vector<C>& z, long bits, int max_iter) {
  const size_t n = z.size();
  std::vector<bool> done(n, false);
  const C one = coeffs.back() / coeffs.back();
  for (int it = 0; it < max_iter; ++it) {
    bool all_done = true;
    for (size_t i = 0; i < n; ++i) {
      C p = one, dp = one;
      eval_with_derivative(coeffs, z[i], p, dp);
      if (is_zero(p)) {
        done[i] = true;
        continue;
      }
      C ratio = is_zero(dp) ? p : p / dp;
      C sum = one - one;
      for (size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        C d = z[i] - z[j];
        if (!is_zero(d)) sum = sum + one / d;
      }
      C denom = one - ratio * sum;
      C w = is_zero(denom) ? ratio : ratio / denom;
      if (!is_finite(w)) continue;
      z[i] = z[i] - w;
      double scale = std::max(0.0, log2_abs(z[i]));
      done[i] = log2_abs(w) < scale - static_cast<double>(bits) + 2;
      all_done = all_done && done[i];
    }
    if (all_done) return;
  }
}

// Initial points on a circle whose radius is a Fujiwara-style root bound.
std::vector<std::complex<double>> initial_guesses(const IntPoly& f) {
  const int n = f.degree();
  const double lead = std::fabs(f.leading().get_d());
  double radius = 0;
  for (int k = 0; k < n; ++k) {
    double c = std::fabs(f.coeff(k).get_d());
    if (c == 0) continue;
    radius = std::max(radius, std::pow(c / lead, 1.0 / (n - k)));
  }
  if (radius == 0) radius = 1;
  std::vector<std::complex<double>> z(static_cast<size_t>(n));
  const double two_pi = 6.283185307179586;
  for (int k = 0; k < n; ++k)
    z[static_cast<size_t>(k)] = std::polar(radius, two_pi * k / n + 0.4);
  return z;
}

}  // namespace

std::vector<DyadicComplex> aberth_roots(const IntPoly& f, long bits, const std::vector<DyadicComplex>& seed) {
  const int n = f.degree();
  std::vector<DyadicComplex> out;
  if (n < 1) return out;
  if (bits <= 53) {
    std::vector<std::complex<double>> coeffs;
    for (const auto& c : f.coeffs()) coeffs.emplace_back(c.get_d(), 0.0);
    auto z = initial_guesses(f);
    aberth_iterate(coeffs, z, 42, 300);
    for (const auto& r : z) out.push_back({Rational(r.real()), Rational(r.imag())});
    return out;
  }
  std::vector<MpComplex> coeffs;
  for (const auto& c : f.coeffs()) coeffs.emplace_back(BigFloat(bits, c), BigFloat(bits));
  std::vector<MpComplex> z;
  if (seed.size() == static_cast<size_t>(n)) {
    for (const auto& s : seed) z.emplace_back(BigFloat(bits, s.re), BigFloat(bits, s.im));
  } else {
    for (const auto& g : initial_guesses(f)) z.emplace_back(BigFloat(bits, g.real()), BigFloat(bits, g.imag()));
  }
  // Separate coincident seeds so the Aberth sum stays finite.
  for (size_t i = 0; i < z.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (mpfr_equal_p(z[i].re.raw(), z[j].re.raw()) && mpfr_equal_p(z[i].im.raw(), z[j].im.raw()))
        z[i].im += BigFloat(bits, std::ldexp(1.0, -20) * static_cast<double>(i + 1));
  aberth_iterate(coeffs, z, bits, 200 + static_cast<int>(bits));
  for (const auto& r : z) {
    if (!is_finite(r)) {
      out.push_back({Rational(0), Rational(0)});
      continue;
    }
    out.push_back({r.re.to_rational(), r.im.to_rational()});
  }
  return out;
}

DyadicComplex newton_polish(const IntPoly& f, const DyadicComplex& start, long bits, int max_iter) {
  std::vector<MpComplex> coeffs;
  for (const auto& c : f.coeffs()) coeffs.emplace_back(BigFloat(bits, c), BigFloat(bits));
  MpComplex z(BigFloat(bits, start.re), BigFloat(bits, start.im));
  MpComplex p(bits), dp(bits);
  for (int it = 0; it < max_iter; ++it) {
    eval_with_derivative(coeffs, z, p, dp);
    if (is_zero(p) || is_zero(dp)) break;
    MpComplex w = p / dp;
    if (!is_finite(w)) break;
    z = z - w;
    if (log2_abs(w) < std::max(0.0, log2_abs(z)) - static_cast<double>(bits) + 2) break;
  }
  if (!is_finite(z)) return start;
  return {z.re.to_rational(), z.im.to_rational()};
}

}  // namespace weil::detail
