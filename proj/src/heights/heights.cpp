#include "weil/heights/heights.hpp"

#include <algorithm>

#include "weil/errors.hpp"
#include "weil/kernel/bigfloat.hpp"
#include "weil/kernel/factor.hpp"
#include "weil/kernel/roots.hpp"

namespace weil {

namespace {

constexpr long kMaxBits = 8192;

int euler_phi(int m) {
  int result = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

int moebius(int m) {
  int k = 0;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    m /= p;
    if (m % p == 0) return 0;
    ++k;
  }
  if (m > 1) ++k;
  return k % 2 ? -1 : 1;
}

// |z| enclosure for a root box
Interval modulus(const RootBox& b, long bits) {
  if (b.real) return Interval(b.region.re.mignitude(), b.region.re.magnitude());
  Interval sq = b.region.abs_squared();
  return Interval(sqrt_lower(sq.lo, bits), sqrt_upper(sq.hi, bits));
}

Interval mul_positive(const Interval& a, const Interval& b, long bits) {
  return Interval(floor_dyadic(a.lo * b.lo, bits), ceil_dyadic(a.hi * b.hi, bits));
}

// Progressive evaluation of M(f): root boxes are refined in place.
class MahlerEvaluator {
 public:
  explicit MahlerEvaluator(const IntPoly& f) : content_(f.content()) {
    for (const auto& fp : factor_over_rationals(f)) {
      Piece p{fp.factor, fp.multiplicity, is_cyclotomic(fp.factor) || fp.factor == IntPoly{0, 1}, {}};
      if (!p.trivial) p.boxes = isolate_roots(p.g);
      pieces_.push_back(std::move(p));
    }
  }

  bool exactly_one() const {
    if (content_ != 1) return false;
    return std::all_of(pieces_.begin(), pieces_.end(), [](const Piece& p) { return p.trivial; });
  }

  Interval at(long bits) {
    const long work = bits + 16;
    const Rational root_eps = pow2(-(bits + 8));
    Interval total = Interval::point(Rational(content_));
    for (auto& p : pieces_) {
      if (p.trivial) continue;
      Interval m = Interval::point(Rational(abs(p.g.leading())));
      for (auto& b : p.boxes) {
        b = refine_root(p.g, b, root_eps);
        Interval r = modulus(b, work);
        m = mul_positive(m, Interval(std::max(Rational(1), r.lo), std::max(Rational(1), r.hi)), work);
      }
      for (int k = 0; k < p.multiplicity; ++k) total = mul_positive(total, m, work);
    }
    return total;
  }

 private:
  struct Piece {
    IntPoly g;
    int multiplicity;
    bool trivial;
    std::vector<RootBox> boxes;
  };
  Integer content_;
  std::vector<Piece> pieces_;
};

Interval log_interval(const Interval& positive, long bits) {
  return Interval(log_bounds(positive.lo, bits).first, log_bounds(positive.hi, bits).second);
}

long bits_for(const Rational& eps) { return std::max<long>(64, -floor_log2(eps) + 8); }

}  // namespace

IntPoly cyclotomic_polynomial(int m) {
  if (m < 1) throw DomainError("cyclotomic index must be positive");
  IntPoly num = IntPoly::constant(1), den = IntPoly::constant(1);
  for (int d = 1; d <= m; ++d) {
    if (m % d) continue;
    int mu = moebius(m / d);
    if (mu == 0) continue;
    IntPoly term = IntPoly::monomial(1, d) - IntPoly::constant(1);
    (mu == 1 ? num : den) = (mu == 1 ? num : den) * term;
  }
  return exact_divide(num, den).value().canonical();
}

bool is_cyclotomic(const IntPoly& f_in) {
  if (f_in.degree() < 1) return false;
  IntPoly f = f_in.canonical();
  if (!f.is_monic() || abs(f.constant_term()) != 1) return false;
  const int n = f.degree();
  for (int m = 1; m <= 2 * n * n + 2; ++m)
    if (euler_phi(m) == n && cyclotomic_polynomial(m) == f) return true;
  return false;
}

Interval mahler_measure(const IntPoly& f, const Rational& eps) {
  if (f.is_zero()) throw DomainError("Mahler measure of the zero polynomial");
  if (eps <= 0) throw DomainError("mahler_measure: eps must be positive");
  MahlerEvaluator ev(f);
  if (ev.exactly_one()) return Interval::point(1);
  for (long bits = bits_for(eps); bits <= kMaxBits; bits *= 2) {
    Interval m = ev.at(bits);
    if (m.width() <= eps) return m;
  }
  throw Error("mahler_measure: precision cap reached");
}

HeightValue weil_log_height(const AlgebraicNumber& a, const Rational& eps) {
  if (eps <= 0) throw DomainError("weil_log_height: eps must be positive");
  if (a.is_zero()) return {Interval::point(0), 0};
  if (auto q = a.as_rational()) {
    Integer top = std::max(abs(q->get_num()), abs(Integer(q->get_den())));
    for (long bits = bits_for(eps); bits <= kMaxBits; bits *= 2) {
      Interval l = log_interval(Interval::point(Rational(top)), bits);
      if (l.width() <= eps) return {l, bits};
    }
    throw Error("weil_log_height: precision cap reached");
  }
  if (is_cyclotomic(a.minpoly())) return {Interval::point(0), 0};
  MahlerEvaluator ev(a.minpoly());
  const Rational deg(a.degree());
  for (long bits = bits_for(eps); bits <= kMaxBits; bits *= 2) {
    Interval l = log_interval(ev.at(bits), bits);
    l = Interval(l.lo / deg, l.hi / deg);
    if (l.width() <= eps) return {l, bits};
  }
  throw Error("weil_log_height: precision cap reached");
}

HeightValue rational_block_log_height(const std::vector<Rational>& block, long precision_bits) {
  Integer den = 1;
  bool nonzero = false;
  for (const auto& c : block) {
    nonzero = nonzero || c != 0;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  if (!nonzero) throw DomainError("projective block with all coordinates zero");
  Integer g = 0, top = 0;
  std::vector<Integer> ints;
  for (const auto& c : block) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  for (const auto& v : ints) top = std::max(top, Integer(abs(v) / g));
  return {log_interval(Interval::point(Rational(top)), precision_bits), precision_bits};
}

std::vector<int> MultiProjectivePoint::shape() const {
  std::vector<int> s;
  for (const auto& b : blocks) s.push_back(static_cast<int>(b.size()) - 1);
  return s;
}

MultiProjectivePoint MultiProjectivePoint::inverted() const {
  MultiProjectivePoint out;
  for (const auto& b : blocks) {
    auto& nb = out.blocks.emplace_back();
    for (const auto& c : b) nb.push_back(inverse(c));
  }
  return out;
}

HeightValue point_log_height(const MultiProjectivePoint& p, const Rational& eps) {
  if (eps <= 0) throw DomainError("point_log_height: eps must be positive");
  Interval total = Interval::point(0);
  long used = 0;
  const Rational share = eps / static_cast<long>(std::max<size_t>(1, p.blocks.size()));
  for (size_t i = 0; i < p.blocks.size(); ++i) {
    const auto& block = p.blocks[i];
    if (block.empty()) throw DomainError("empty projective block");
    const long weight = static_cast<long>(block.size());
    auto pivot = std::find_if(block.begin(), block.end(), [](const AlgebraicNumber& c) { return !c.is_zero(); });
    if (pivot == block.end()) throw DomainError("projective block " + std::to_string(i + 1) + " is all zero");

    std::vector<Rational> ratios;
    bool rational = true;
    for (const auto& c : block) {
      if (c.is_zero() || &c == &*pivot) {
        ratios.emplace_back(c.is_zero() ? 0 : 1);
        continue;
      }
      auto q = c.is_rational() && pivot->is_rational() ? std::optional<Rational>(*c.as_rational() / *pivot->as_rational())
                                                       : div(c, *pivot).as_rational();
      if (!q) {
        rational = false;
        break;
      }
      ratios.push_back(*q);
    }
    if (rational) {
      const long bits = bits_for(share / weight);
      HeightValue h = rational_block_log_height(ratios, bits);
      total = total + h.log_height * Rational(weight);
      used = std::max(used, bits);
      continue;
    }
    if (block.size() != 2)
      throw UnsupportedShape("block " + std::to_string(i + 1) +
                             " has algebraic coordinates in dimension > 1 that are not rational multiples of each other");
    AlgebraicNumber alpha = div(block[1], block[0]);
    HeightValue h = weil_log_height(alpha, share / weight);
    total = total + h.log_height * Rational(weight);
    used = std::max(used, h.precision_bits);
  }
  return {total, used};
}

}  // namespace weil
