#include "weil/kernel/roots.hpp"

#include <algorithm>

#include "complex_approx.hpp"
#include "weil/errors.hpp"

namespace weil {

IntPoly squarefree_part(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree part of the zero polynomial");
  if (f.degree() < 1) return IntPoly{1};
  IntPoly g = gcd(f, f.derivative());
  auto q = exact_divide(f.primitive_part(), g);
  return q->canonical();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (f.degree() < 1) return out;
  IntPoly a0 = f.canonical();
  IntPoly da = a0.derivative();
  IntPoly b = gcd(a0, da);
  IntPoly c = *exact_divide(a0, b);
  IntPoly d = *exact_divide(da, b) - c.derivative();
  for (int i = 1; c.degree() > 0; ++i) {
    IntPoly a = gcd(c, d);
    if (a.degree() > 0) out.push_back({a, i});
    c = *exact_divide(c, a);
    d = *exact_divide(d, a) - c.derivative();
  }
  return out;
}

bool is_squarefree(const IntPoly& f) {
  if (f.is_zero()) return false;
  return gcd(f, f.derivative()).degree() < 1;
}

// ---------------------------------------------------------------- Sturm

SturmSequence::SturmSequence(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
  chain_.push_back(f.primitive_part());
  if (f.degree() < 1) return;
  chain_.push_back(f.derivative().primitive_part());
  while (chain_.back().degree() > 0) {
    const IntPoly& a = chain_[chain_.size() - 2];
    const IntPoly& b = chain_.back();
    IntPoly r = pseudo_divrem(a, b).remainder;
    if (r.is_zero()) break;
    // pseudo-remainder carries lc(b)^e; undo a negative multiplier
    int e = a.degree() - b.degree() + 1;
    if (b.leading() < 0 && e % 2 == 1) r = -r;
    chain_.push_back((-r).primitive_part());
  }
  if (chain_.back().degree() > 0) throw DomainError("Sturm sequence requires a squarefree polynomial");
}

int SturmSequence::variations_at(const Rational& x) const {
  int v = 0, last = 0;
  for (const auto& p : chain_) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int SturmSequence::variations_at_infinity(bool positive) const {
  int v = 0, last = 0;
  for (const auto& p : chain_) {
    int s = sgn(p.leading());
    if (!positive && p.degree() % 2 == 1) s = -s;
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int SturmSequence::count(const Interval& closed) const {
  // V(a) - V(b) counts roots in (a, b]
  int n = variations_at(closed.lo) - variations_at(closed.hi);
  if (chain_.front().sign_at(closed.lo) == 0) ++n;
  return n;
}

int SturmSequence::count_open(const Rational& a, const Rational& b) const {
  if (a >= b) return 0;
  int n = variations_at(a) - variations_at(b);
  if (chain_.front().sign_at(b) == 0) --n;
  return n;
}

int SturmSequence::count_all() const { return variations_at_infinity(false) - variations_at_infinity(true); }

int real_root_count(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("real_root_count of the zero polynomial");
  if (!is_squarefree(f)) throw DomainError("real_root_count requires a squarefree polynomial");
  return SturmSequence(f).count_all();
}

int real_root_count(const IntPoly& f, const Interval& closed) {
  if (f.is_zero()) throw DomainError("real_root_count of the zero polynomial");
  if (!is_squarefree(f)) throw DomainError("real_root_count requires a squarefree polynomial");
  return SturmSequence(f).count(closed);
}

Rational root_bound(const IntPoly& f) {
  if (f.degree() < 1) return Rational(1);
  long top = 0;
  for (const auto& c : f.coeffs()) top = std::max(top, bit_length(c));
  long L = std::max<long>(1, top - bit_length(f.leading()) + 2);
  return pow2(L);
}

// ----------------------------------------------------- Descartes bisection

namespace {

int sign_variations(const std::vector<Integer>& c) {
  int v = 0, last = 0;
  for (const auto& x : c) {
    int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Upper bound on the number of roots in (0,1): variations of
// (x+1)^n P(1/(x+1)).
int descartes_01(const IntPoly& p) { return sign_variations(p.reversed().taylor_shift(1).coeffs()); }

struct Node {
  Integer c;
  long k;
  IntPoly p;
};

// Isolating intervals for the roots of g in (0, 2^L); g(0) != 0.
void isolate_positive(const IntPoly& g, long L, std::vector<Interval>& out, bool negate) {
  const int n = g.degree();
  std::vector<Integer> scaled(g.coeffs());
  for (int k = 0; k <= n; ++k) mpz_mul_2exp(scaled[static_cast<size_t>(k)].get_mpz_t(), scaled[static_cast<size_t>(k)].get_mpz_t(), static_cast<mp_bitcnt_t>(L * k));
  std::vector<Node> stack;
  stack.push_back({Integer(0), 0, IntPoly(std::move(scaled)).primitive_part()});
  auto to_real = [&](const Rational& t) { return negate ? Rational(-t) : t; };
  auto emit = [&](const Rational& a, const Rational& b) {
    if (negate)
      out.emplace_back(-b, -a);
    else
      out.emplace_back(a, b);
  };
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    int v = descartes_01(node.p);
    Rational width = pow2(L - node.k);
    Rational lo = Rational(node.c) * width;
    if (v == 0) continue;
    if (v == 1) {
      emit(lo, lo + width);
      continue;
    }
    const IntPoly& p = node.p;
    const int d = p.degree();
    // left child: 2^d p(x/2)
    std::vector<Integer> lc(p.coeffs());
    for (int k = 0; k <= d; ++k)
      mpz_mul_2exp(lc[static_cast<size_t>(k)].get_mpz_t(), lc[static_cast<size_t>(k)].get_mpz_t(), static_cast<mp_bitcnt_t>(d - k));
    IntPoly left(std::move(lc));
    // midpoint root?
    if (left.eval(Integer(1)) == 0) {
      Rational mid = lo + width / 2;
      out.push_back(Interval::point(to_real(mid)));
    }
    IntPoly right = left.taylor_shift(1);
    stack.push_back({2 * node.c + 1, node.k + 1, right.primitive_part()});
    stack.push_back({2 * node.c, node.k + 1, left.primitive_part()});
  }
}

// Moves root-valued endpoints inward until f is nonzero at both ends.
Interval clean_endpoints(const IntPoly& f, Interval iv, const SturmSequence* sturm_in) {
  if (iv.is_point()) return iv;
  int sl = f.sign_at(iv.lo), sh = f.sign_at(iv.hi);
  if (sl != 0 && sh != 0 && sl != sh) return iv;
  std::optional<SturmSequence> local;
  const SturmSequence* sturm = sturm_in;
  if (!sturm) sturm = &local.emplace(f);
  while (true) {
    sl = f.sign_at(iv.lo);
    sh = f.sign_at(iv.hi);
    if (sl != 0 && sh != 0 && sl != sh) return iv;
    Rational m = iv.midpoint();
    if (f.sign_at(m) == 0) return Interval::point(m);
    if (sturm->count_open(iv.lo, m) == 1)
      iv.hi = m;
    else
      iv.lo = m;
  }
}

// One sign-based halving of an interval with a sign change at its ends.
void bisect_once(const IntPoly& f, Interval& iv) {
  Rational m = iv.midpoint();
  int sm = f.sign_at(m);
  if (sm == 0)
    iv = Interval::point(m);
  else if (sm == f.sign_at(iv.lo))
    iv.lo = m;
  else
    iv.hi = m;
}

}  // namespace

std::vector<Interval> isolate_real_roots(const IntPoly& f_in) {
  if (f_in.degree() < 1) throw DomainError("root isolation needs degree >= 1");
  if (!is_squarefree(f_in)) throw DomainError("root isolation requires a squarefree polynomial");
  IntPoly f = f_in.primitive_part();
  std::vector<Interval> out;
  IntPoly g = f;
  while (g.constant_term() == 0) {
    out.push_back(Interval::point(0));
    g = IntPoly(std::vector<Integer>(g.coeffs().begin() + 1, g.coeffs().end()));
  }
  if (g.degree() == 1) {
    out.push_back(Interval::point(make_rational(-g.constant_term(), g.leading())));
  } else if (g.degree() >= 1) {
    Rational bound = root_bound(g);
    long L = floor_log2(bound);
    isolate_positive(g, L, out, false);
    isolate_positive(g.negated_variable(), L, out, true);
  }
  std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::optional<SturmSequence> sturm;
  for (auto& iv : out) {
    if (iv.is_point()) continue;
    int sl = f.sign_at(iv.lo), sh = f.sign_at(iv.hi);
    if (sl != 0 && sh != 0 && sl != sh) continue;
    if (!sturm) sturm.emplace(f);
    iv = clean_endpoints(f, iv, &*sturm);
  }
  // neighbours may share an endpoint; shrink until the closed intervals are disjoint
  for (size_t i = 0; i + 1 < out.size(); ++i) {
    while (out[i].hi >= out[i + 1].lo) {
      Interval& iv = out[i].is_point() || (!out[i + 1].is_point() && out[i + 1].width() > out[i].width()) ? out[i + 1] : out[i];
      bisect_once(f, iv);
    }
  }
  return out;
}

// ------------------------------------------------------ complex isolation

namespace {

struct CRat {
  Rational re, im;
};

CRat eval_complex(const IntPoly& f, const CRat& z) {
  CRat acc{0, 0};
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    Rational re = acc.re * z.re - acc.im * z.im + Rational(*it);
    Rational im = acc.re * z.im + acc.im * z.re;
    acc = {std::move(re), std::move(im)};
  }
  return acc;
}

Rational norm2(const CRat& z) { return z.re * z.re + z.im * z.im; }

// Upper bound on sqrt(q) with relative slack around 2^-40.
Rational sqrt_up_rel(const Rational& q) {
  if (q == 0) return 0;
  long e = floor_log2(q) / 2;
  long bits = std::max<long>(0, -e) + 48;
  return sqrt_upper(q, bits);
}

// Exact check of the inclusion-disc certificate for the upper-half-plane
// candidates. Returns the boxes, or nullopt when the certificate fails.
std::optional<std::vector<ComplexBox>> certify_nonreal(const IntPoly& f, const std::vector<detail::DyadicComplex>& approx,
                                                       size_t pairs) {
  const size_t n = approx.size();
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return approx[a].im > approx[b].im; });
  for (size_t t = 0; t < pairs; ++t)
    if (approx[order[t]].im <= 0) return std::nullopt;

  std::vector<CRat> z(n);
  for (size_t i = 0; i < n; ++i) z[i] = {approx[i].re, approx[i].im};
  const Rational lead2 = Rational(f.leading() * f.leading());
  const Rational n2 = Rational(static_cast<long>(n * n));

  std::vector<Rational> radius(n);
  for (size_t i = 0; i < n; ++i) {
    Rational prod = 1;
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      prod *= norm2({z[i].re - z[j].re, z[i].im - z[j].im});
    }
    if (prod == 0) return std::nullopt;
    Rational r2 = n2 * norm2(eval_complex(f, z[i])) / (lead2 * prod);
    radius[i] = sqrt_up_rel(r2);
  }
  const Rational k = Rational(3, 2);
  std::vector<ComplexBox> boxes;
  for (size_t t = 0; t < pairs; ++t) {
    size_t i = order[t];
    if (z[i].im - radius[i] * k <= 0) return std::nullopt;
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      Rational sep = k * (radius[i] + radius[j]);
      if (norm2({z[i].re - z[j].re, z[i].im - z[j].im}) <= sep * sep) return std::nullopt;
    }
    boxes.emplace_back(Interval(z[i].re - radius[i], z[i].re + radius[i]),
                       Interval(z[i].im - radius[i], z[i].im + radius[i]));
  }
  return boxes;
}

}  // namespace

std::vector<RootBox> isolate_roots(const IntPoly& f_in) {
  if (f_in.degree() < 1) throw DomainError("root isolation needs degree >= 1");
  const IntPoly f = f_in.primitive_part();
  std::vector<RootBox> out;
  for (auto& iv : isolate_real_roots(f)) out.push_back(RootBox::real_interval(std::move(iv)));
  const size_t real_count = out.size();
  const size_t n = static_cast<size_t>(f.degree());
  if (real_count == n) return out;
  if ((n - real_count) % 2 != 0) throw Error("root isolation: inconsistent real root count");
  const size_t pairs = (n - real_count) / 2;

  std::vector<detail::DyadicComplex> approx;
  std::optional<std::vector<ComplexBox>> upper;
  for (long bits : {53L, 128L, 256L, 512L, 1024L, 2048L, 4096L}) {
    approx = detail::aberth_roots(f, bits, approx);
    upper = certify_nonreal(f, approx, pairs);
    if (upper) break;
  }
  if (!upper) throw Error("root isolation failed to certify complex roots of " + f.to_string());
  std::sort(upper->begin(), upper->end(), [](const ComplexBox& a, const ComplexBox& b) {
    if (a.re.lo != b.re.lo) return a.re.lo < b.re.lo;
    return a.im.lo < b.im.lo;
  });
  for (const auto& b : *upper) {
    out.push_back({b, false});
    out.push_back({b.conjugate(), false});
  }
  return out;
}

// ----------------------------------------------------------- refinement

namespace {

RootBox refine_real(const IntPoly& f, const RootBox& box, const Rational& eps) {
  Interval iv = box.region.re;
  if (iv.is_point()) return box;
  iv = clean_endpoints(f, iv, nullptr);
  int sl = f.sign_at(iv.lo);
  while (!iv.is_point() && iv.width() > eps) {
    Rational m = iv.midpoint();
    int sm = f.sign_at(m);
    if (sm == 0) {
      iv = Interval::point(m);
      break;
    }
    if (sm == sl)
      iv.lo = m;
    else
      iv.hi = m;
  }
  return RootBox::real_interval(iv);
}

std::optional<RootBox> newton_box(const IntPoly& f, const IntPoly& df, const ComplexBox& within,
                                  const detail::DyadicComplex& start, const Rational& eps, long bits) {
  detail::DyadicComplex z = detail::newton_polish(f, start, bits, 200);
  CRat zc{z.re, z.im};
  Rational dn = norm2(eval_complex(df, zc));
  if (dn == 0) return std::nullopt;
  long n = f.degree();
  Rational r2 = Rational(n * n) * norm2(eval_complex(f, zc)) / dn;
  Rational r = sqrt_up_rel(r2);
  ComplexBox b(Interval(z.re - r, z.re + r), Interval(z.im - r, z.im + r));
  if (!within.contains(b)) return std::nullopt;
  if (r * 3 > eps) return std::nullopt;
  return RootBox{b, false};
}

}  // namespace

RootBox refine_root(const IntPoly& f_in, const RootBox& box, const Rational& eps) {
  if (eps <= 0) throw DomainError("refine_root: eps must be positive");
  const IntPoly f = f_in.primitive_part();
  if (box.real) return refine_real(f, box, eps);
  if (box.region.re.is_point() && box.region.im.is_point()) return box;
  // a rectangle with sides <= 2/3 eps has diameter < eps
  if (box.region.size() * 3 <= eps * 2) return box;
  const IntPoly df = f.derivative();
  long bits = std::max<long>(64, -floor_log2(eps) + 24);
  detail::DyadicComplex center{box.region.re.midpoint(), box.region.im.midpoint()};
  if (auto r = newton_box(f, df, box.region, center, eps, bits)) return *r;
  // Fall back to global approximation and pick the one inside the box.
  std::vector<detail::DyadicComplex> approx;
  for (long b : {53L, 128L, 256L, 512L, 1024L, 2048L, 4096L, 8192L}) {
    approx = detail::aberth_roots(f, b, approx);
    for (const auto& a : approx) {
      if (!box.region.re.contains(a.re) || !box.region.im.contains(a.im)) continue;
      if (auto r = newton_box(f, df, box.region, a, eps, std::max(bits, b))) return *r;
    }
  }
  throw Error("refine_root failed for " + f.to_string());
}

}  // namespace weil
