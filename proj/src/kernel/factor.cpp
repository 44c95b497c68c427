#include "weil/kernel/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "weil/errors.hpp"
#include "weil/kernel/roots.hpp"

namespace weil {

namespace {

// ------------------------------------------------------------ Z/p[x]

using u64 = std::uint64_t;
using ZpPoly = std::vector<u64>;  // ascending, trimmed

struct Zp {
  u64 p;

  void trim(ZpPoly& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }

  ZpPoly from(const IntPoly& f) const {
    ZpPoly r(f.coeffs().size());
    Integer pm(static_cast<unsigned long>(p));
    for (size_t i = 0; i < r.size(); ++i) {
      Integer t;
      mpz_fdiv_r(t.get_mpz_t(), f.coeffs()[i].get_mpz_t(), pm.get_mpz_t());
      r[i] = t.get_ui();
    }
    trim(r);
    return r;
  }

  ZpPoly sub(const ZpPoly& a, const ZpPoly& b) const {
    ZpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
  }

  ZpPoly mul(const ZpPoly& a, const ZpPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }

  // a = q*b + r
  void divrem(const ZpPoly& a, const ZpPoly& b, ZpPoly& q, ZpPoly& r) const {
    if (b.empty()) throw DomainError("Zp division by zero polynomial");
    r = a;
    if (a.size() < b.size()) {
      q.clear();
      return;
    }
    q.assign(a.size() - b.size() + 1, 0);
    u64 il = inv(b.back());
    for (size_t k = a.size() - b.size() + 1; k-- > 0;) {
      u64 c = mul(r[k + b.size() - 1], il);
      q[k] = c;
      if (!c) continue;
      for (size_t j = 0; j < b.size(); ++j) r[k + j] = sub(r[k + j], mul(c, b[j]));
    }
    trim(r);
    trim(q);
  }

  ZpPoly rem(const ZpPoly& a, const ZpPoly& b) const {
    ZpPoly q, r;
    divrem(a, b, q, r);
    return r;
  }

  ZpPoly quo(const ZpPoly& a, const ZpPoly& b) const {
    ZpPoly q, r;
    divrem(a, b, q, r);
    return q;
  }

  ZpPoly monic(ZpPoly a) const {
    if (a.empty()) return a;
    u64 il = inv(a.back());
    for (auto& c : a) c = mul(c, il);
    return a;
  }

  ZpPoly gcd(ZpPoly a, ZpPoly b) const {
    while (!b.empty()) {
      ZpPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  // s*a + t*b = 1 for coprime a, b
  void ext_gcd(const ZpPoly& a, const ZpPoly& b, ZpPoly& s, ZpPoly& t) const {
    ZpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      ZpPoly q, r;
      divrem(r0, r1, q, r);
      ZpPoly s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.size() != 1) throw Error("ext_gcd: inputs not coprime mod p");
    u64 il = inv(r0[0]);
    for (auto& c : s0) c = mul(c, il);
    for (auto& c : t0) c = mul(c, il);
    s = s0;
    t = t0;
  }

  ZpPoly mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& m) const { return rem(mul(a, b), m); }

  ZpPoly powmod(ZpPoly base, const Integer& e, const ZpPoly& m) const {
    ZpPoly r{1};
    base = rem(base, m);
    const long bits = bit_length(e);
    for (long i = bits - 1; i >= 0; --i) {
      r = mulmod(r, r, m);
      if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) r = mulmod(r, base, m);
    }
    return r;
  }

  ZpPoly derivative(const ZpPoly& a) const {
    if (a.size() < 2) return {};
    ZpPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p);
    trim(r);
    return r;
  }
};

struct DdfPart {
  ZpPoly poly;  // product of irreducibles of degree `degree`
  int degree;
};

std::vector<DdfPart> distinct_degree(const Zp& zp, ZpPoly f) {
  std::vector<DdfPart> out;
  const ZpPoly x{0, 1};
  ZpPoly h = x;
  Integer pz(static_cast<unsigned long>(zp.p));
  for (int i = 1; 2 * i <= static_cast<int>(f.size()) - 1; ++i) {
    h = zp.powmod(h, pz, f);
    ZpPoly g = zp.gcd(zp.sub(h, x), f);
    if (g.size() > 1) {
      out.push_back({g, i});
      f = zp.quo(f, g);
      h = zp.rem(h, f);
    }
  }
  if (f.size() > 1) out.push_back({zp.monic(f), static_cast<int>(f.size()) - 1});
  return out;
}

void equal_degree(const Zp& zp, const ZpPoly& f, int d, std::mt19937_64& rng, std::vector<ZpPoly>& out) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == d) {
    out.push_back(zp.monic(f));
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(zp.p), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  while (true) {
    ZpPoly a(static_cast<size_t>(n));
    for (auto& c : a) c = rng() % zp.p;
    zp.trim(a);
    if (a.size() < 2) continue;
    ZpPoly b = zp.powmod(a, e, f);
    b = zp.sub(b, ZpPoly{1});
    ZpPoly g = zp.gcd(b, f);
    if (g.size() > 1 && g.size() < f.size()) {
      equal_degree(zp, g, d, rng, out);
      equal_degree(zp, zp.quo(f, g), d, rng, out);
      return;
    }
  }
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ------------------------------------------------- Hensel lifting over Z

Integer mod_pos(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

IntPoly reduce(const IntPoly& f, const Integer& m) {
  std::vector<Integer> c(f.coeffs());
  for (auto& x : c) x = mod_pos(x, m);
  return IntPoly(std::move(c));
}

IntPoly symmetric(const IntPoly& f, const Integer& m) {
  std::vector<Integer> c(f.coeffs());
  Integer half = m / 2;
  for (auto& x : c) {
    x = mod_pos(x, m);
    if (x > half) x -= m;
  }
  return IntPoly(std::move(c));
}

IntPoly to_int(const ZpPoly& a) {
  std::vector<Integer> c;
  for (u64 x : a) c.emplace_back(static_cast<unsigned long>(x));
  return IntPoly(std::move(c));
}

// Lifts F = g*h (mod p), g, h monic coprime, F monic, to mod p^k.
std::pair<IntPoly, IntPoly> hensel_pair(const Zp& zp, const IntPoly& F, const ZpPoly& g, const ZpPoly& h, int k) {
  ZpPoly s, t;
  zp.ext_gcd(g, h, s, t);
  IntPoly G = to_int(g), H = to_int(h);
  const Integer p(static_cast<unsigned long>(zp.p));
  Integer pj = p;
  for (int j = 1; j < k; ++j) {
    Integer pj1 = pj * p;
    IntPoly diff = reduce(F - G * H, pj1);
    std::vector<Integer> ec(diff.coeffs());
    for (auto& c : ec) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
    ZpPoly e = zp.from(IntPoly(std::move(ec)));
    ZpPoly dG = zp.rem(zp.mul(t, e), g);
    ZpPoly dH = zp.quo(zp.sub(e, zp.mul(dG, h)), g);
    G += to_int(dG) * pj;
    H += to_int(dH) * pj;
    pj = pj1;
  }
  return {reduce(G, pj), reduce(H, pj)};
}

void next_combination(std::vector<size_t>& idx, size_t n, bool& more) {
  const size_t k = idx.size();
  for (size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      more = true;
      return;
    }
  }
  more = false;
}

std::vector<IntPoly> zassenhaus(const IntPoly& f_in) {
  IntPoly f = f_in.canonical();
  const int n = f.degree();
  if (n <= 1) return {f};

  // choose the prime giving the fewest modular factors among a few candidates
  const Integer lc = f.leading();
  std::vector<std::pair<u64, size_t>> candidates;
  for (u64 p = 11; candidates.size() < 5 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    if (mpz_divisible_ui_p(lc.get_mpz_t(), static_cast<unsigned long>(p))) continue;
    Zp zp{p};
    ZpPoly fp = zp.from(f);
    if (zp.gcd(fp, zp.derivative(fp)).size() != 1) continue;
    size_t count = 0;
    for (const auto& part : distinct_degree(zp, zp.monic(fp)))
      count += (part.poly.size() - 1) / static_cast<size_t>(part.degree);
    candidates.push_back({p, count});
    if (count == 1) break;
  }
  if (candidates.empty()) throw Error("factorization: no suitable prime");
  auto best = *std::min_element(candidates.begin(), candidates.end(),
                                [](const auto& a, const auto& b) { return a.second < b.second; });
  if (best.second == 1) return {f};

  Zp zp{best.first};
  ZpPoly fp = zp.monic(zp.from(f));
  std::mt19937_64 rng(0x5eed5eedULL + static_cast<u64>(n));
  std::vector<ZpPoly> modular;
  for (const auto& part : distinct_degree(zp, fp)) equal_degree(zp, part.poly, part.degree, rng, modular);

  // lifting bound: |lc| * 2^n * ||f||_2, doubled for the symmetric range
  Rational norm = sqrt_upper(Rational(norm2_squared(f)), 4);
  Integer bound = ceil(norm) * abs(lc);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n + 1));
  const Integer p(static_cast<unsigned long>(zp.p));
  int k = 1;
  Integer pk = p;
  while (pk <= bound) {
    pk *= p;
    ++k;
  }

  // F = f / lc mod p^k, monic
  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
  IntPoly F = reduce(f * lc_inv, pk);
  std::vector<IntPoly> lifted;
  for (size_t i = 0; i + 1 < modular.size(); ++i) {
    ZpPoly rest{1};
    for (size_t j = i + 1; j < modular.size(); ++j) rest = zp.mul(rest, modular[j]);
    auto [G, H] = hensel_pair(zp, F, modular[i], rest, k);
    lifted.push_back(G);
    F = H;
  }
  lifted.push_back(F);

  // recombination
  std::vector<IntPoly> out;
  IntPoly cur = f;
  for (size_t s = 1; 2 * s <= lifted.size();) {
    bool found = false;
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    bool more = true;
    while (more) {
      IntPoly cand = IntPoly::constant(cur.leading());
      for (size_t i : idx) cand = reduce(cand * lifted[i], pk);
      cand = symmetric(cand, pk);
      bool plausible = true;
      if (cur.constant_term() != 0) {
        const Integer& c0 = cand.constant_term();
        Integer target = cur.leading() * cur.constant_term();
        plausible = c0 != 0 && mpz_divisible_p(target.get_mpz_t(), c0.get_mpz_t());
      }
      if (plausible) {
        IntPoly g = cand.primitive_part();
        if (auto q = exact_divide(cur, g)) {
          out.push_back(g.canonical());
          cur = *q;
          for (size_t i = s; i-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[i]));
          found = true;
          break;
        }
      }
      next_combination(idx, lifted.size(), more);
    }
    if (!found) ++s;
  }
  if (cur.degree() >= 1) out.push_back(cur.canonical());
  return out;
}

}  // namespace

std::vector<IntPoly> factor_squarefree(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("factorization of the zero polynomial");
  std::vector<IntPoly> out;
  if (f.degree() < 1) return out;
  IntPoly g = f.canonical();
  // strip x factors up front
  if (g.constant_term() == 0) {
    out.push_back(IntPoly{0, 1});
    g = *exact_divide(g, IntPoly{0, 1});
  }
  if (g.degree() >= 1)
    for (auto& h : zassenhaus(g)) out.push_back(std::move(h));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<FactorPower> factor_over_rationals(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("factorization of the zero polynomial");
  std::vector<FactorPower> out;
  for (const auto& part : squarefree_decomposition(f))
    for (auto& g : factor_squarefree(part.factor)) out.push_back({std::move(g), part.multiplicity});
  std::sort(out.begin(), out.end(), [](const FactorPower& a, const FactorPower& b) {
    if (a.factor != b.factor) return canonical_less(a.factor, b.factor);
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

bool is_irreducible(const IntPoly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  auto fs = factor_over_rationals(f);
  return fs.size() == 1 && fs.front().multiplicity == 1;
}

}  // namespace weil
