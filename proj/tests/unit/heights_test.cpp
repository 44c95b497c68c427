#include <doctest.h>

#include "support/generators.hpp"
#include "weil/errors.hpp"
#include "weil/heights/heights.hpp"

using namespace weil;

namespace {

const IntPoly kLehmer = parse_poly("x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1");

AlgebraicNumber alg(const char* poly, const char* approx) {
  return AlgebraicNumber::nearest_root(parse_poly(poly), parse_rational(approx));
}
AlgebraicNumber rat(long p, long q = 1) { return AlgebraicNumber::from_rational(make_rational(p, q)); }

// reference value +- tolerance lies inside [lo - tol, hi + tol] and the
// interval is no wider than tol
bool matches(const Interval& iv, const char* reference, const char* tol) {
  Rational r = parse_rational(reference), t = parse_rational(tol);
  return iv.width() <= t && iv.lo - t <= r && r <= iv.hi + t;
}

}  // namespace

TEST_CASE("Mahler measure examples") {
  CHECK(mahler_measure(IntPoly{-2, 1}, pow2(-40)) == Interval::point(2));
  CHECK(matches(mahler_measure(IntPoly{-1, -1, 1}, parse_rational("1e-10")), "1.6180339887", "1e-9"));
  // reference 1.17628081825991750
  CHECK(matches(mahler_measure(kLehmer, parse_rational("1e-10")), "1.1762808183", "1e-9"));
  CHECK(matches(mahler_measure(IntPoly{-1, -1, 0, 1}, parse_rational("1e-10")), "1.3247179572", "1e-9"));
  // content and repeated factors: 6 (x-2)^2 (x^2+1)
  CHECK(mahler_measure(IntPoly{-2, 1} * IntPoly{-2, 1} * IntPoly{1, 0, 1} * Integer(6), pow2(-20)) ==
        Interval::point(24));
  CHECK(mahler_measure(IntPoly{1, 2}, pow2(-20)) == Interval::point(2));
  CHECK_THROWS_AS(mahler_measure(IntPoly{}, Rational(1)), DomainError);
}

TEST_CASE("cyclotomic detection") {
  CHECK(cyclotomic_polynomial(1) == IntPoly{-1, 1});
  CHECK(cyclotomic_polynomial(12) == IntPoly{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(15) == parse_poly("x^8 - x^7 + x^5 - x^4 + x^3 - x + 1"));
  for (int m = 1; m <= 20; ++m) {
    CHECK(is_cyclotomic(cyclotomic_polynomial(m)));
    CHECK(mahler_measure(cyclotomic_polynomial(m), pow2(-40)) == Interval::point(1));
  }
  CHECK_FALSE(is_cyclotomic(IntPoly{-1, -1, 1}));
  CHECK_FALSE(is_cyclotomic(kLehmer));
  CHECK_FALSE(is_cyclotomic(IntPoly{1, 0, 2}));
}

TEST_CASE("Weil height examples") {
  CHECK(weil_log_height(rat(1), pow2(-30)).log_height == Interval::point(0));
  CHECK(weil_log_height(AlgebraicNumber(), pow2(-30)).log_height == Interval::point(0));
  CHECK(matches(weil_log_height(alg("x^2-x-1", "1.6"), parse_rational("1e-9")).log_height, "0.2406059125",
                "1e-8"));
  CHECK(matches(weil_log_height(rat(2), parse_rational("1e-12")).log_height, "0.6931471806", "1e-9"));
  CHECK(matches(weil_log_height(rat(-3, 2), parse_rational("1e-12")).log_height, "1.0986122887", "1e-9"));
  auto i = AlgebraicNumber::nearest_root(IntPoly{1, 0, 1}, 0, 1);
  CHECK(weil_log_height(i, pow2(-30)).log_height == Interval::point(0));
  CHECK_THROWS_AS(weil_log_height(rat(2), Rational(0)), DomainError);
}

TEST_CASE("rational block heights") {
  const Interval log2 = rational_block_log_height({Rational(1), Rational(2)}).log_height;
  CHECK(matches(log2, "0.69314718056", "1e-11"));
  CHECK(rational_block_log_height({Rational(2), Rational(4)}).log_height == log2);
  CHECK(rational_block_log_height({Rational(1, 2), Rational(1, 3)}).log_height ==
        rational_block_log_height({Rational(3), Rational(2)}).log_height);
  CHECK(rational_block_log_height({Rational(0), Rational(-7, 3)}).log_height == Interval::point(0));
  CHECK_THROWS_AS(rational_block_log_height({Rational(0), Rational(0)}), DomainError);
}

TEST_CASE("projective point heights") {
  const auto phi = alg("x^2-x-1", "1.6");
  MultiProjectivePoint single{{{rat(1), phi}}};
  CHECK(matches(point_log_height(single, parse_rational("1e-9")).log_height, "0.4812118250", "1e-8"));

  MultiProjectivePoint pair{{{rat(1), rat(1)}, {rat(1), phi - rat(1)}}};
  CHECK(matches(point_log_height(pair, parse_rational("1e-9")).log_height, "0.4812118250", "1e-8"));

  MultiProjectivePoint triple{{{rat(3), rat(4), rat(5)}}};
  CHECK(matches(point_log_height(triple, parse_rational("1e-12")).log_height, "4.8283137373", "1e-9"));

  // (sqrt2, 2 sqrt2) is the rational point (1, 2)
  const auto r2 = alg("x^2-2", "1.4");
  MultiProjectivePoint scaled{{{r2, r2 * rat(2), rat(0)}}};
  CHECK(matches(point_log_height(scaled, parse_rational("1e-12")).log_height, "2.0794415417", "1e-9"));

  MultiProjectivePoint bad{{{rat(1), r2, alg("x^2-3", "1.7")}}};
  CHECK_THROWS_AS(point_log_height(bad, parse_rational("1e-6")), UnsupportedShape);
  MultiProjectivePoint zero{{{rat(0), rat(0)}}};
  CHECK_THROWS_AS(point_log_height(zero, parse_rational("1e-6")), DomainError);
  CHECK(pair.shape() == std::vector<int>{1, 1});
}

TEST_CASE("property: scale invariance") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = testing::random_algebraic(rng, 3, 5);
    auto s = rat(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 7) + 1);
    MultiProjectivePoint p{{{rat(1), a}}};
    MultiProjectivePoint q{{{s, s * a}}};
    const Rational eps = pow2(-40);
    auto hp = point_log_height(p, eps).log_height, hq = point_log_height(q, eps).log_height;
    CHECK(hp.lo <= hq.hi + eps);
    CHECK(hq.lo <= hp.hi + eps);

    std::vector<Rational> block{Rational(static_cast<long>(rng() % 11) - 5), make_rational(static_cast<long>(rng() % 5) + 1, 3)};
    std::vector<Rational> scaled{block[0] * s.as_rational().value(), block[1] * s.as_rational().value()};
    CHECK(rational_block_log_height(block).log_height == rational_block_log_height(scaled).log_height);
  }
}

TEST_CASE("property: Kronecker") {
  for (int m = 1; m <= 20; ++m) {
    auto boxes = isolate_roots(cyclotomic_polynomial(m));
    auto zeta = AlgebraicNumber::from_isolated(cyclotomic_polynomial(m), boxes.front());
    CHECK(weil_log_height(zeta, pow2(-20)).log_height == Interval::point(0));
  }
  CHECK(weil_log_height(alg("x^2-x-1", "1.6"), pow2(-20)).log_height.lo > 0);
  CHECK(weil_log_height(rat(2), pow2(-20)).log_height.lo > 0);
  auto lehmer_root = AlgebraicNumber::nearest_root(kLehmer, parse_rational("1.17"));
  CHECK(weil_log_height(lehmer_root, pow2(-20)).log_height.lo > 0);
}
