#include <doctest.h>

#include "support/generators.hpp"
#include "weil/errors.hpp"
#include "weil/verify/verify.hpp"

using namespace weil;

namespace {

AlgebraicNumber rat(long p, long q = 1) { return AlgebraicNumber::from_rational(make_rational(p, q)); }
AlgebraicNumber golden() { return AlgebraicNumber::nearest_root(parse_poly("x^2-x-1"), 2); }

bool near(const Interval& iv, const char* reference, const char* tol) {
  Rational r = parse_rational(reference), t = parse_rational(tol);
  return iv.lo - t <= r && r <= iv.hi + t;
}

MultiProjectivePoint pt(const AlgebraicNumber& a) { return {{{rat(1), a}}}; }

VerifyOptions at_bits(long bits) {
  VerifyOptions o;
  o.precision_bits = bits;
  return o;
}

bool same(const Verdict& a, const Verdict& b) {
  if (a.status != b.status || a.precision_bits != b.precision_bits || a.hypotheses.size() != b.hypotheses.size())
    return false;
  for (size_t k = 0; k < a.hypotheses.size(); ++k)
    if (a.hypotheses[k].result != b.hypotheses[k].result || a.hypotheses[k].witness != b.hypotheses[k].witness)
      return false;
  return a.margin == b.margin && a.lhs == b.lhs && a.log_rho == b.log_rho;
}

}  // namespace

TEST_CASE("evaluate") {
  const auto f = corollary_polynomial(golden(), 1);
  CHECK(evaluate(f, pt(golden())).zero == ZeroTest::Zero);

  auto v = evaluate(f, pt(rat(2)));
  CHECK(v.zero == ZeroTest::Nonzero);
  REQUIRE(v.exact);
  CHECK(equals(*v.exact, rat(2) - golden()));
  CHECK(near(v.enclosure.re, "0.38196601125", "1e-10"));

  MultihomogeneousPolynomial prod({1}, {2}, {{{{1, 1}}, rat(1)}});
  CHECK(evaluate(prod, pt(rat(0))).zero == ZeroTest::Zero);
  // (1, x) with x = 0 gives x_10 x_11 = 0
  CHECK_THROWS_AS(evaluate(prod, MultiProjectivePoint{{{rat(1), rat(2), rat(3)}}}), DomainError);

  // interval fallback still proves nonzero values
  VerifyOptions tiny;
  tiny.arithmetic.degree_cap = 1;
  auto w = evaluate(f, pt(rat(2) + AlgebraicNumber::nearest_root(parse_poly("x^2-3"), 2)), tiny);
  CHECK(w.zero == ZeroTest::Nonzero);
  CHECK_FALSE(w.exact);
}

TEST_CASE("hypotheses") {
  const auto phi = golden();
  auto h = check_hypotheses(corollary_polynomial(phi, 1), ExceptionalSet{{0}}, pt(phi));
  REQUIRE(h.size() == 3);
  for (const auto& r : h) CHECK(r.result == Check::Pass);

  auto one = check_hypotheses(corollary_polynomial(rat(1), 1), ExceptionalSet{{0}}, pt(rat(1)));
  CHECK(one[0].result == Check::Pass);
  CHECK(one[2].result == Check::Fail);
  CHECK(one[2].witness == "F(1/x) = 0");

  MultihomogeneousPolynomial prod({1}, {2}, {{{{1, 1}}, rat(1)}});
  auto z = check_hypotheses(prod, ExceptionalSet{}, MultiProjectivePoint{{{rat(0), rat(1)}}});
  CHECK(z[1].result == Check::Fail);
  CHECK(z[1].witness == "x_1,0 = 0");
}

TEST_CASE("verify theorem") {
  const auto phi = golden();
  auto eq = verify_theorem(corollary_polynomial(phi, 1), ExceptionalSet{{0}}, pt(phi), at_bits(128));
  CHECK(eq.status == VerdictStatus::EqualityCandidate);
  REQUIRE(eq.margin);
  CHECK(eq.margin->lo >= parse_rational("-1e-9"));
  CHECK(eq.margin->hi <= parse_rational("1e-9"));
  CHECK(eq.precision_bits == 128);

  auto two = verify_theorem(corollary_polynomial(rat(2), 1), ExceptionalSet{{0}}, pt(rat(2)));
  CHECK(two.status == VerdictStatus::Holds);
  CHECK(near(*two.margin, "0.90508253606028717134", "1e-15"));

  auto bad = verify_theorem(corollary_polynomial(phi, 1), ExceptionalSet{{0}}, pt(rat(2)));
  CHECK(bad.status == VerdictStatus::ViolatedHypotheses);
  CHECK_FALSE(bad.margin);
  CHECK_FALSE(bad.lhs);

  // property (ii) failure is a hypothesis failure
  auto prop = verify_theorem(corollary_polynomial(phi, 1), ExceptionalSet{}, pt(phi));
  CHECK(prop.status == VerdictStatus::ViolatedHypotheses);
  CHECK(prop.hypotheses[0].result == Check::Fail);
}

TEST_CASE("verify corollary") {
  const auto phi = golden();
  auto r1 = verify_corollary({{phi}, phi}, at_bits(128));
  CHECK(r1.status == VerdictStatus::EqualityCandidate);
  CHECK(near(*r1.lhs, "0.24060591252980172375", "1e-19"));
  CHECK(near(*r1.log_rho, "0.24060591252980172375", "1e-19"));
  CHECK(r1.margin->lo >= parse_rational("-1e-9"));
  CHECK(r1.margin->hi <= parse_rational("1e-9"));

  auto r2 = verify_corollary({{rat(1), phi - rat(1)}, phi}, at_bits(128));
  CHECK(r2.status == VerdictStatus::EqualityCandidate);
  CHECK(r2.margin->lo >= parse_rational("-1e-9"));
  CHECK(r2.margin->hi <= parse_rational("1e-9"));

  auto r3 = verify_corollary({{rat(2)}, rat(2)});
  CHECK(r3.status == VerdictStatus::Holds);
  CHECK(near(*r3.margin, "0.45254126803014358567", "1e-15"));

  auto gate = verify_corollary({{rat(1)}, rat(1)});
  CHECK(gate.status == VerdictStatus::ViolatedHypotheses);
  CHECK_FALSE(gate.margin);
  bool witness = false;
  for (const auto& h : gate.hypotheses) witness = witness || (h.result == Check::Fail && h.witness == "F(1/x) = 0");
  CHECK(witness);

  CHECK_THROWS_AS(verify_corollary({{rat(2)}, rat(3)}), DomainError);
  CHECK_THROWS_AS(verify_corollary({{rat(0), rat(3)}, rat(3)}), DomainError);

  // non totally real N is reported, not assumed
  auto i = AlgebraicNumber::nearest_root(parse_poly("x^2+1"), 0, 1);
  auto ni = verify_corollary({{i, rat(1)}, i + rat(1)});
  CHECK(ni.status == VerdictStatus::ViolatedHypotheses);
}

TEST_CASE("schinzel check") {
  CHECK(schinzel_check(golden(), at_bits(128)).status == VerdictStatus::EqualityCandidate);
  auto r2 = schinzel_check(AlgebraicNumber::nearest_root(parse_poly("x^2-2"), 1));
  CHECK(r2.status == VerdictStatus::Holds);
  CHECK(near(*r2.lhs, "0.34657359027997265471", "1e-15"));
  auto i = AlgebraicNumber::nearest_root(parse_poly("x^2+1"), 0, 1);
  CHECK(schinzel_check(i).status == VerdictStatus::NotApplicable);
  CHECK(schinzel_check(rat(1)).status == VerdictStatus::NotApplicable);
  CHECK(schinzel_check(rat(-1)).status == VerdictStatus::NotApplicable);
  CHECK(schinzel_check(rat(0)).status == VerdictStatus::NotApplicable);
  CHECK(schinzel_check(rat(1, 2)).status == VerdictStatus::NotApplicable);
  CHECK(schinzel_check(rat(3)).status == VerdictStatus::Holds);
}

TEST_CASE("property: soundness on totally real integers") {
  std::mt19937_64 rng(23);
  int checked = 0;
  while (checked < 200) {
    auto a = testing::random_totally_real_integer(rng, 4, 5);
    if (a.is_zero() || equals(a, rat(1)) || equals(a, rat(-1))) continue;
    auto v = schinzel_check(a);
    CHECK(v.status != VerdictStatus::ViolatedInequality);
    CHECK(v.status != VerdictStatus::NotApplicable);
    CHECK((v.status == VerdictStatus::Holds || v.status == VerdictStatus::EqualityCandidate));
    ++checked;
  }
}

TEST_CASE("property: Zhang-Zagier family") {
  std::mt19937_64 rng(31);
  std::vector<CorollaryInstance> insts;
  while (insts.size() < 100) {
    auto a = testing::random_algebraic(rng, 3, 5);
    if (a.is_zero() || equals(a, rat(1)) || a.minpoly() == parse_poly("x^2-x+1")) continue;
    insts.push_back({{a, rat(1) - a}, rat(1)});
  }
  auto serial = verify_corollary_batch(insts, {}, 1);
  auto parallel = verify_corollary_batch(insts, {}, 4);
  for (size_t k = 0; k < insts.size(); ++k) {
    const auto& v = serial[k];
    CHECK((v.status == VerdictStatus::Holds || v.status == VerdictStatus::EqualityCandidate));
    CHECK(same(v, parallel[k]));
    if (v.status == VerdictStatus::EqualityCandidate) {
      auto again = verify_corollary(insts[k], at_bits(2 * v.precision_bits));
      CHECK(again.status == VerdictStatus::EqualityCandidate);
    }
  }
}

TEST_CASE("property: hypothesis gate and determinism") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = testing::random_algebraic(rng, 2, 4);
    auto n = testing::random_totally_real_integer(rng, 2, 4);
    if (a.is_zero()) continue;
    const auto f = corollary_polynomial(n, 1);
    auto v = verify_theorem(f, ExceptionalSet{{0}}, pt(a));
    bool any_fail = false;
    for (const auto& h : v.hypotheses) any_fail = any_fail || h.result != Check::Pass;
    if (any_fail) CHECK_FALSE(v.margin);
    CHECK(same(v, verify_theorem(f, ExceptionalSet{{0}}, pt(a))));
  }
}
