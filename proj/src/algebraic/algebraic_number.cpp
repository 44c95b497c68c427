#include "weil/algebraic/algebraic_number.hpp"

#include <algorithm>
#include <functional>

#include "weil/errors.hpp"
#include "weil/kernel/factor.hpp"
#include "weil/kernel/roots.hpp"

namespace weil {

namespace {

// Shrinking enclosure of the target value: called with decreasing eps.
using Enclosure = std::function<ComplexBox(const Rational& eps)>;

constexpr int kMaxRounds = 400;

long round_bits_for(const Rational& eps) { return std::max<long>(64, -floor_log2(eps) + 16); }

std::vector<IntPoly> distinct_factors(const IntPoly& f) {
  std::vector<IntPoly> out;
  for (auto& fp : factor_over_rationals(f))
    if (fp.factor.degree() >= 1) out.push_back(std::move(fp.factor));
  return out;
}

RootBox point_box(const IntPoly& linear) {
  return RootBox::exact(make_rational(-linear.constant_term(), linear.leading()));
}

// The root of the irreducible g lying in every enclosure.
std::pair<IntPoly, RootBox> match_root(const IntPoly& g, const Enclosure& enclose, Rational eps) {
  if (g.degree() == 1) return {g, point_box(g)};
  std::vector<RootBox> boxes = isolate_roots(g);
  for (int round = 0; round < kMaxRounds; ++round) {
    ComplexBox e = enclose(eps);
    std::vector<size_t> hits;
    for (size_t i = 0; i < boxes.size(); ++i)
      if (boxes[i].region.intersects(e)) hits.push_back(i);
    if (hits.size() == 1) return {g, boxes[hits.front()]};
    if (hits.empty()) throw Error("root selection: enclosure meets no root of " + g.to_string());
    for (size_t h : hits) boxes[h] = refine_root(g, boxes[h], eps);
    eps /= 4;
  }
  throw Error("root selection did not separate the roots of " + g.to_string());
}

// Picks the irreducible factor vanishing at the target, then its root.
AlgebraicNumber select_root(std::vector<IntPoly> factors, const Enclosure& enclose) {
  Rational eps = pow2(-8);
  for (int round = 0; round < kMaxRounds && factors.size() > 1; ++round) {
    ComplexBox e = enclose(eps);
    const long bits = round_bits_for(eps);
    std::erase_if(factors, [&](const IntPoly& g) { return !horner_enclosure(g, e, bits).contains_zero(); });
    if (factors.empty()) throw Error("root selection: no factor vanishes on the enclosure");
    if (factors.size() > 1) eps /= 4;
  }
  if (factors.size() != 1) throw Error("root selection did not isolate a single factor");
  auto [g, box] = match_root(factors.front(), enclose, eps);
  return AlgebraicNumber::from_isolated(std::move(g), std::move(box));
}

// Res_y(a(y), B_k(y)) at k = 0..D, then Newton interpolation in x.
IntPoly interpolate_resultant(const IntPoly& a, const std::function<IntPoly(long)>& b_at, int D) {
  std::vector<Rational> diff;
  diff.reserve(static_cast<size_t>(D) + 1);
  for (long k = 0; k <= D; ++k) diff.emplace_back(resultant(a, b_at(k)));
  // forward differences on the nodes 0..D
  std::vector<Rational> coef;
  for (int j = 0; j <= D; ++j) {
    coef.push_back(diff.front());
    for (size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = (diff[i + 1] - diff[i]) / (j + 1);
    diff.pop_back();
  }
  // p(x) = sum c_j * x(x-1)...(x-j+1)
  std::vector<Rational> p{coef.back()};
  for (int j = D - 1; j >= 0; --j) {
    std::vector<Rational> next(p.size() + 1, Rational(0));
    for (size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= p[i] * j;
    }
    next[0] += coef[static_cast<size_t>(j)];
    p = std::move(next);
  }
  std::vector<Integer> out;
  for (auto& c : p) {
    if (c.get_den() != 1) throw Error("resultant interpolation produced a non-integer coefficient");
    out.push_back(c.get_num());
  }
  return IntPoly(std::move(out));
}

void check_cap(const AlgebraicNumber& a, const AlgebraicNumber& b, const ArithmeticOptions& opts) {
  const int D = a.degree() * b.degree();
  if (D > opts.degree_cap) throw DegreeCapExceeded(D, opts.degree_cap);
}

// Enclosure functor refining a private copy of the operand's box.
struct Refiner {
  IntPoly f;
  RootBox box;
  explicit Refiner(const AlgebraicNumber& a) : f(a.minpoly()), box(a.location()) {}
  ComplexBox operator()(const Rational& eps) {
    box = refine_root(f, box, eps);
    return box.region;
  }
};

}  // namespace

ComplexBox horner_enclosure(const IntPoly& f, const ComplexBox& z, long round_bits) {
  if (f.is_zero()) return ComplexBox::point(0);
  const auto& c = f.coeffs();
  ComplexBox acc = ComplexBox::point(Rational(c.back()));
  for (size_t k = c.size() - 1; k-- > 0;) acc = (acc * z + ComplexBox::point(Rational(c[k]))).rounded(round_bits);
  return acc;
}

AlgebraicNumber::AlgebraicNumber() : minpoly_{0, 1}, location_(RootBox::exact(0)) {}

AlgebraicNumber::AlgebraicNumber(IntPoly minpoly, RootBox location)
    : minpoly_(std::move(minpoly)), location_(std::move(location)) {}

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& q_in) {
  Rational q = q_in;
  q.canonicalize();
  return AlgebraicNumber(IntPoly::linear_root(q).canonical(), RootBox::exact(q));
}

AlgebraicNumber AlgebraicNumber::from_isolated(IntPoly minpoly, RootBox box) {
  if (minpoly.degree() < 1) throw DomainError("minimal polynomial must have degree >= 1");
  if (minpoly.degree() == 1) return AlgebraicNumber(minpoly, point_box(minpoly));
  return AlgebraicNumber(std::move(minpoly), std::move(box));
}

AlgebraicNumber AlgebraicNumber::root_in(const IntPoly& f, const ComplexBox& region) {
  if (f.degree() < 1) throw DomainError("root_in: polynomial has no roots");
  std::optional<AlgebraicNumber> found;
  for (const auto& g : distinct_factors(f)) {
    for (RootBox b : isolate_roots(g)) {
      Rational eps = b.size() / 2;
      int round = 0;
      while (!region.contains(b.region) && region.intersects(b.region)) {
        if (++round > kMaxRounds || eps == 0) throw DomainError("root_in: a root lies on the region boundary");
        b = refine_root(g, b, eps);
        eps /= 2;
      }
      if (!region.contains(b.region)) continue;
      if (found) throw DomainError("root_in: region contains more than one root");
      found = from_isolated(g, b);
    }
  }
  if (!found) throw DomainError("root_in: region contains no root");
  return *found;
}

AlgebraicNumber AlgebraicNumber::nearest_root(const IntPoly& f, const Rational& re, const Rational& im) {
  if (f.degree() < 1) throw DomainError("nearest_root: polynomial has no roots");
  struct Candidate {
    IntPoly g;
    RootBox box;
  };
  std::vector<Candidate> all;
  for (const auto& g : distinct_factors(f))
    for (auto& b : isolate_roots(g)) all.push_back({g, std::move(b)});
  const ComplexBox target = ComplexBox::point(re, im);
  Rational eps = pow2(-4);
  for (int round = 0; round < kMaxRounds; ++round) {
    std::vector<Interval> dist;
    for (const auto& c : all) dist.push_back((c.box.region - target).abs_squared());
    size_t best = 0;
    for (size_t i = 1; i < all.size(); ++i)
      if (dist[i].hi < dist[best].hi) best = i;
    bool clear = true;
    for (size_t i = 0; i < all.size() && clear; ++i)
      if (i != best && dist[i].lo <= dist[best].hi) clear = false;
    if (clear) return from_isolated(all[best].g, all[best].box);
    if (round > 60) break;
    for (auto& c : all) c.box = refine_root(c.g, c.box, eps);
    eps /= 4;
  }
  throw DomainError("nearest_root: two roots are equally close to the given point");
}

AlgebraicNumber AlgebraicNumber::root_by_index(const IntPoly& f, int k) {
  if (!is_irreducible(f)) throw DomainError("root_by_index needs an irreducible polynomial");
  IntPoly g = f.canonical();
  auto boxes = isolate_roots(g);
  if (k < 0 || k >= static_cast<int>(boxes.size())) throw DomainError("root index out of range");
  return from_isolated(g, boxes[static_cast<size_t>(k)]);
}

std::optional<Rational> AlgebraicNumber::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return location_.region.re.lo;
}

bool AlgebraicNumber::is_zero() const { return minpoly_ == IntPoly{0, 1}; }

AlgebraicNumber negate(const AlgebraicNumber& a) {
  if (auto q = a.as_rational()) return AlgebraicNumber::from_rational(-*q);
  RootBox b = a.location();
  b.region = -b.region;
  return AlgebraicNumber::from_isolated(a.minpoly().negated_variable().canonical(), b);
}

AlgebraicNumber inverse(const AlgebraicNumber& a) {
  if (a.is_zero()) throw DomainError("inverse of zero");
  if (auto q = a.as_rational()) return AlgebraicNumber::from_rational(1 / *q);
  IntPoly rev = a.minpoly().reversed().canonical();
  if (a.is_real()) {
    RootBox b = a.location();
    Rational eps = b.size() / 2;
    while (b.region.re.contains_zero()) {
      b = refine_root(a.minpoly(), b, eps);
      eps /= 2;
    }
    const Interval& iv = b.region.re;
    if (iv.is_point()) return AlgebraicNumber::from_rational(1 / iv.lo);
    return AlgebraicNumber::from_isolated(rev, RootBox::real_interval(Interval(1 / iv.hi, 1 / iv.lo)));
  }
  Refiner ra(a);
  auto [g, box] = match_root(rev, [&](const Rational& eps) { return reciprocal(ra(eps / 4)); }, pow2(-8));
  return AlgebraicNumber::from_isolated(std::move(g), std::move(box));
}

AlgebraicNumber add(const AlgebraicNumber& a, const AlgebraicNumber& b, const ArithmeticOptions& opts) {
  auto qa = a.as_rational(), qb = b.as_rational();
  if (qa && qb) return AlgebraicNumber::from_rational(*qa + *qb);
  if (qb) {
    if (*qb == 0) return a;
    IntPoly g = a.minpoly().shift_variable(-*qb).canonical();
    Refiner ra(a);
    const ComplexBox shift = ComplexBox::point(*qb);
    auto [h, box] = match_root(g, [&](const Rational& eps) { return ra(eps) + shift; }, pow2(-8));
    return AlgebraicNumber::from_isolated(std::move(h), std::move(box));
  }
  if (qa) return add(b, a, opts);
  check_cap(a, b, opts);
  const int D = a.degree() * b.degree();
  const IntPoly bneg = b.minpoly().negated_variable();
  // Res_y(a(y), b(x - y))
  IntPoly composite = interpolate_resultant(
      a.minpoly(), [&](long k) { return bneg.taylor_shift(Integer(-k)); }, D);
  Refiner ra(a), rb(b);
  return select_root(distinct_factors(composite), [&](const Rational& eps) {
    return (ra(eps / 2) + rb(eps / 2)).rounded(round_bits_for(eps));
  });
}

AlgebraicNumber sub(const AlgebraicNumber& a, const AlgebraicNumber& b, const ArithmeticOptions& opts) {
  return add(a, negate(b), opts);
}

AlgebraicNumber mul(const AlgebraicNumber& a, const AlgebraicNumber& b, const ArithmeticOptions& opts) {
  if (a.is_zero() || b.is_zero()) return AlgebraicNumber();
  auto qa = a.as_rational(), qb = b.as_rational();
  if (qa && qb) return AlgebraicNumber::from_rational(*qa * *qb);
  if (qb) {
    if (*qb == 1) return a;
    IntPoly g = a.minpoly().scale_variable(1 / *qb).canonical();
    Refiner ra(a);
    const ComplexBox factor = ComplexBox::point(*qb);
    auto [h, box] = match_root(
        g, [&](const Rational& eps) { return (ra(eps / (abs(*qb) + 1)) * factor).rounded(round_bits_for(eps)); },
        pow2(-8));
    return AlgebraicNumber::from_isolated(std::move(h), std::move(box));
  }
  if (qa) return mul(b, a, opts);
  check_cap(a, b, opts);
  const int D = a.degree() * b.degree();
  const auto& bc = b.minpoly().coeffs();
  const int m = b.degree();
  // Res_y(a(y), y^m b(x / y))
  IntPoly composite = interpolate_resultant(
      a.minpoly(),
      [&](long k) {
        std::vector<Integer> c(static_cast<size_t>(m) + 1);
        Integer kp = 1;
        for (int j = 0; j <= m; ++j) {
          c[static_cast<size_t>(m - j)] = bc[static_cast<size_t>(j)] * kp;
          kp *= k;
        }
        return IntPoly(std::move(c));
      },
      D);
  Refiner ra(a), rb(b);
  return select_root(distinct_factors(composite), [&](const Rational& eps) {
    return (ra(eps / 8) * rb(eps / 8)).rounded(round_bits_for(eps));
  });
}

AlgebraicNumber div(const AlgebraicNumber& a, const AlgebraicNumber& b, const ArithmeticOptions& opts) {
  if (b.is_zero()) throw DomainError("division by zero");
  return mul(a, inverse(b), opts);
}

int root_index(const AlgebraicNumber& a) {
  if (a.is_rational()) return 0;
  const IntPoly& f = a.minpoly();
  std::vector<RootBox> boxes = isolate_roots(f);
  RootBox own = a.location();
  Rational eps = own.size() / 2;
  for (int round = 0; round < kMaxRounds; ++round) {
    std::vector<size_t> hits;
    for (size_t i = 0; i < boxes.size(); ++i)
      if (boxes[i].region.intersects(own.region)) hits.push_back(i);
    if (hits.size() == 1) return static_cast<int>(hits.front());
    if (hits.empty()) throw Error("root_index: location box meets no root of " + f.to_string());
    own = refine_root(f, own, eps);
    for (size_t h : hits) boxes[h] = refine_root(f, boxes[h], eps);
    eps /= 4;
  }
  throw Error("root_index did not converge for " + f.to_string());
}

bool equals(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.minpoly() != b.minpoly()) return false;
  if (a.is_rational()) return true;
  if (a.is_real() != b.is_real()) return false;
  if (!a.location().region.intersects(b.location().region)) return false;
  return root_index(a) == root_index(b);
}

bool is_totally_real(const AlgebraicNumber& a) { return real_root_count(a.minpoly()) == a.degree(); }

bool is_algebraic_integer(const AlgebraicNumber& a) { return a.minpoly().is_monic(); }

ComplexBox approximate(const AlgebraicNumber& a, const Rational& eps) {
  if (eps <= 0) throw DomainError("approximate: eps must be positive");
  if (a.is_rational()) return a.location().region;
  // margin below eps so decimal renderings at eps are certified
  return refine_root(a.minpoly(), a.location(), eps / 16).region;
}

ConjugateSet conjugates(const AlgebraicNumber& a, long precision_bits) {
  ConjugateSet out{a, {}, precision_bits};
  const Rational eps = pow2(-precision_bits);
  for (const auto& b : isolate_roots(a.minpoly())) out.boxes.push_back(refine_root(a.minpoly(), b, eps));
  return out;
}

}  // namespace weil
