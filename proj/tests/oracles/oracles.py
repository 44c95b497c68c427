"""Independent reference values for the unit and acceptance tests.

Uses mpmath/sympy only; nothing here touches the C++ library. Run with
`python3 tests/oracles/oracles.py` and compare against the frozen constants.
"""
import itertools

import mpmath as mp
import sympy as sp

mp.mp.dps = 50
x = sp.symbols("x")


def mahler(coeffs_desc):
    roots = mp.polyroots(coeffs_desc, maxsteps=500, extraprec=400)
    m = abs(mp.mpf(coeffs_desc[0]))
    for r in roots:
        m *= max(1, abs(r))
    return m


def show(name, v):
    print(f"{name:40s} {mp.nstr(v, 20)}")


lehmer = [1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]
show("lehmer mahler", mahler(lehmer))
lr = mp.polyroots(lehmer, maxsteps=500, extraprec=400)
print("lehmer real roots", [mp.nstr(r.real, 15) for r in lr if abs(r.imag) < 1e-30])
show("golden", (1 + mp.sqrt(5)) / 2)
show("half log golden", mp.log((1 + mp.sqrt(5)) / 2) / 2)
show("log golden", mp.log((1 + mp.sqrt(5)) / 2))
show("sqrt2+sqrt3", mp.sqrt(2) + mp.sqrt(3))
print("resultant", sp.expand(sp.resultant(sp.Symbol("y") ** 2 - 2, (x - sp.Symbol("y")) ** 2 - 3, sp.Symbol("y"))))
show("smyth root", mp.findroot(lambda t: t**3 - t - 1, 1.3))
show("mahler x^3-x-1", mahler([1, 0, -1, -1]))
show("rho(C=2,delta=1)", (1 + mp.sqrt(17)) / 4)
show("margin 2log2-log golden", 2 * mp.log(2) - mp.log((1 + mp.sqrt(5)) / 2))
show("margin log2-half log golden", mp.log(2) - mp.log((1 + mp.sqrt(5)) / 2) / 2)
show("half log 2", mp.log(2) / 2)
# xi_star value for a=1/2, b=1, c=1: b log(2bc/(a+2b)) + (a/2) log(a/(a+2b))
a, b, c = mp.mpf(1) / 2, mp.mpf(1), mp.mpf(1)
show("xi_star value (1/2,1,1)", b * mp.log(2 * b * c / (a + 2 * b)) + a / 2 * mp.log(a / (a + 2 * b)))


# Lemma grid oracle: minimize u log(g u/(u+v)) + v log(v/(u+v)) on alpha u + beta v = 1
def lemma_min(al, be, ga):
    f = lambda u: (u * mp.log(ga * u / (u + (1 - al * u) / be)) if u > 0 else 0) + (
        ((1 - al * u) / be) * mp.log(((1 - al * u) / be) / (u + (1 - al * u) / be)) if (1 - al * u) > 0 else 0)
    # dense grid then golden refinement
    lo, hi = mp.mpf(0), 1 / mp.mpf(al)
    best = min((f(lo + (hi - lo) * k / 2000), k) for k in range(2001))
    k = best[1]
    a_, b_ = lo + (hi - lo) * max(k - 1, 0) / 2000, lo + (hi - lo) * min(k + 1, 2000) / 2000
    for _ in range(200):
        m1, m2 = a_ + (b_ - a_) / 3, b_ - (b_ - a_) / 3
        if f(m1) < f(m2):
            b_ = m2
        else:
            a_ = m1
    return f((a_ + b_) / 2)


def root_gt1(al, be, ga):
    return mp.findroot(lambda t: t ** (-al) / ga + t ** (-be) - 1, (mp.mpf("1.0000001"), mp.mpf(100)), solver="bisect")


worst = 0
for al, be in itertools.product([0.5, 1, 2, 3], repeat=2):
    for ga in [1, 2, 5]:
        al_, be_ = mp.mpf(al), mp.mpf(be)
        l = lemma_min(al_, be_, ga)
        worst = max(worst, abs(mp.exp(-l) - root_gt1(al_, be_, ga)))
print("lemma grid worst |e^-l - rho'|", mp.nstr(worst, 5))
show("lemma (1,2,1) l", lemma_min(1, 2, 1))
show("lemma (2,2,1) l", lemma_min(2, 2, 1))

# cyclotomic Mahler measures
for m in range(1, 21):
    p = sp.Poly(sp.cyclotomic_poly(m, x), x)
    assert abs(mahler([int(c) for c in p.all_coeffs()]) - 1) < mp.mpf(10) ** -30
print("cyclotomic conductors 1..20 have Mahler 1")

# survey oracle: monic degree<=2, |c|<=2, totally real, excluding 0, +-1
best = []
for c1, c0 in itertools.product(range(-2, 3), repeat=2):
    p = sp.Poly(x**2 + c1 * x + c0, x)
    if not p.is_irreducible:
        continue
    if c1 * c1 - 4 * c0 <= 0:
        continue
    best.append((mp.log(mahler([1, c1, c0])) / 2, (c1, c0)))
best.sort()
print("survey deg2 minimum", mp.nstr(best[0][0], 15), [b[1] for b in best[:3]])

# threshold grid: root > 1 of x^-2 + x^-delta / C = 1
for d in (mp.mpf(1) / 2, 1, mp.mpf(3) / 2, 2):
    for c in (1, 2, 3, 5):
        r = mp.findroot(lambda t: t ** -2 + t ** -mp.mpf(d) / c - 1, (1 + mp.mpf(1e-9), 10), solver="bisect")
        show(f"log rho delta={mp.nstr(d, 3)} C={c}", mp.log(r))
