#include "weil/verify/verify.hpp"

#include <atomic>
#include <thread>

#include "weil/errors.hpp"

namespace weil {

namespace {

std::string pair_name(size_t i, size_t j) { return "x_" + std::to_string(i + 1) + "," + std::to_string(j); }

void check_shape(const MultihomogeneousPolynomial& f, const MultiProjectivePoint& x) {
  if (x.shape() != f.shape()) throw DomainError("point shape does not match the polynomial");
}

ComplexBox power(const ComplexBox& z, int e) {
  ComplexBox r = ComplexBox::point(1);
  for (int k = 0; k < e; ++k) r = r * z;
  return r;
}

ComplexBox enclose(const MultihomogeneousPolynomial& f, const MultiProjectivePoint& x, long bits) {
  const Rational eps = pow2(-bits);
  std::vector<std::vector<ComplexBox>> xs;
  for (const auto& block : x.blocks) {
    auto& row = xs.emplace_back();
    for (const auto& c : block) row.push_back(approximate(c, eps));
  }
  ComplexBox sum = ComplexBox::point(0);
  for (const auto& m : f.monomials()) {
    ComplexBox term = approximate(m.coeff, eps);
    for (size_t i = 0; i < xs.size(); ++i)
      for (size_t j = 0; j < xs[i].size(); ++j)
        if (m.exponents[i][j]) term = (term * power(xs[i][j], m.exponents[i][j])).rounded(bits + 16);
    sum = sum + term;
  }
  return sum;
}

std::string describe(const ComplexBox& z) {
  std::string s = to_decimal(z.re, 12).value;
  if (!z.is_real()) s += " + (" + to_decimal(z.im, 12).value + ")i";
  return s;
}

}  // namespace

Evaluation evaluate(const MultihomogeneousPolynomial& f, const MultiProjectivePoint& x, const VerifyOptions& opts) {
  check_shape(f, x);
  Evaluation out;
  try {
    AlgebraicNumber sum;
    for (const auto& m : f.monomials()) {
      AlgebraicNumber term = m.coeff;
      for (size_t i = 0; i < x.blocks.size(); ++i)
        for (size_t j = 0; j < x.blocks[i].size(); ++j)
          for (int k = 0; k < m.exponents[i][j]; ++k) term = mul(term, x.blocks[i][j], opts.arithmetic);
      sum = add(sum, term, opts.arithmetic);
    }
    out.zero = sum.is_zero() ? ZeroTest::Zero : ZeroTest::Nonzero;
    out.enclosure = approximate(sum, pow2(-opts.precision_bits));
    out.exact = std::move(sum);
    return out;
  } catch (const DegreeCapExceeded&) {
    // interval evidence can only prove nonzero
  }
  for (long bits = opts.precision_bits; bits <= opts.max_precision_bits; bits *= 2) {
    out.enclosure = enclose(f, x, bits);
    if (!out.enclosure.contains_zero()) {
      out.zero = ZeroTest::Nonzero;
      return out;
    }
  }
  out.zero = ZeroTest::Undecided;
  return out;
}

std::vector<HypothesisResult> check_hypotheses(const MultihomogeneousPolynomial& f, const ExceptionalSet&,
                                               const MultiProjectivePoint& x, const VerifyOptions& opts) {
  check_shape(f, x);
  std::vector<HypothesisResult> out;

  Evaluation fx = evaluate(f, x, opts);
  HypothesisResult h1{"F(x) = 0", Check::Pass, ""};
  if (fx.zero == ZeroTest::Nonzero) h1 = {"F(x) = 0", Check::Fail, "F(x) = " + describe(fx.enclosure)};
  if (fx.zero == ZeroTest::Undecided) h1 = {"F(x) = 0", Check::Undecided, "zero test undecided at precision cap"};
  out.push_back(h1);

  HypothesisResult h2{"coordinates nonzero", Check::Pass, ""};
  for (size_t i = 0; i < x.blocks.size() && h2.result == Check::Pass; ++i)
    for (size_t j = 0; j < x.blocks[i].size(); ++j)
      if (x.blocks[i][j].is_zero()) {
        h2 = {"coordinates nonzero", Check::Fail, pair_name(i, j) + " = 0"};
        break;
      }
  out.push_back(h2);

  HypothesisResult h3{"F(1/x) != 0", Check::Undecided, "not evaluated: a coordinate is zero"};
  if (h2.result == Check::Pass) {
    Evaluation inv = evaluate(f, x.inverted(), opts);
    if (inv.zero == ZeroTest::Nonzero) h3 = {"F(1/x) != 0", Check::Pass, ""};
    else if (inv.zero == ZeroTest::Zero) h3 = {"F(1/x) != 0", Check::Fail, "F(1/x) = 0"};
    else h3.witness = "zero test undecided at precision cap";
  }
  out.push_back(h3);
  return out;
}

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Holds: return "holds";
    case VerdictStatus::EqualityCandidate: return "equality-candidate";
    case VerdictStatus::ViolatedHypotheses: return "violated-hypotheses";
    case VerdictStatus::UndecidedAtPrecision: return "undecided-at-precision";
    case VerdictStatus::NotApplicable: return "not-applicable";
    case VerdictStatus::ViolatedInequality: return "violated-inequality";
  }
  return "unknown";
}

const char* to_string(Statement s) {
  switch (s) {
    case Statement::Theorem: return "theorem";
    case Statement::Corollary: return "corollary";
    case Statement::Schinzel: return "schinzel";
  }
  return "unknown";
}

Rational equality_width() { return pow2(-64); }

Verdict verify_theorem(const MultihomogeneousPolynomial& f, const ExceptionalSet& e, const MultiProjectivePoint& x,
                       const VerifyOptions& opts) {
  check_shape(f, x);
  Verdict v;
  for (const auto& viol : validate(f, e).violations)
    v.hypotheses.push_back({std::string("property: ") + to_string(viol.kind), Check::Fail, viol.message});
  for (auto& h : check_hypotheses(f, e, x, opts)) v.hypotheses.push_back(std::move(h));

  bool failed = false, undecided = false;
  for (const auto& h : v.hypotheses) {
    failed = failed || h.result == Check::Fail;
    undecided = undecided || h.result == Check::Undecided;
  }
  if (failed || undecided) {
    v.status = failed ? VerdictStatus::ViolatedHypotheses : VerdictStatus::UndecidedAtPrecision;
    return v;
  }

  v.delta = delta(f, e);
  v.c_f = c_max(f, e);
  for (long bits = opts.precision_bits; bits <= opts.max_precision_bits; bits *= 2) {
    v.precision_bits = bits;
    const HeightValue lhs = point_log_height(x, pow2(-bits));
    const Threshold th = threshold(v.c_f, v.delta, bits);
    const Interval margin = lhs.log_height - th.log_rho;
    v.lhs = lhs.log_height;
    v.log_rho = th.log_rho;
    v.margin = margin;
    if (margin.lo > 0) {
      v.status = VerdictStatus::Holds;
      return v;
    }
    if (margin.hi < 0) {
      v.status = VerdictStatus::ViolatedInequality;
      return v;
    }
    if (margin.width() < equality_width()) {
      v.status = VerdictStatus::EqualityCandidate;
      return v;
    }
  }
  v.status = VerdictStatus::UndecidedAtPrecision;
  return v;
}

MultihomogeneousPolynomial corollary_polynomial(const AlgebraicNumber& n, int r) {
  if (r < 1) throw DomainError("corollary needs at least one number");
  std::vector<Monomial> ms;
  const size_t rr = static_cast<size_t>(r);
  for (size_t i = 0; i < rr; ++i) {
    ExponentMatrix e(rr, std::vector<int>{1, 0});
    e[i] = {0, 1};
    ms.push_back({e, AlgebraicNumber::from_integer(1)});
  }
  ms.push_back({ExponentMatrix(rr, std::vector<int>{1, 0}), -n});
  return MultihomogeneousPolynomial(std::vector<int>(rr, 1), std::vector<int>(rr, 1), std::move(ms));
}

Verdict verify_corollary(const CorollaryInstance& inst, const VerifyOptions& opts) {
  if (inst.alphas.empty()) throw DomainError("corollary instance has no numbers");
  AlgebraicNumber sum;
  MultiProjectivePoint x;
  for (const auto& a : inst.alphas) {
    if (a.is_zero()) throw DomainError("corollary instance has a zero alpha");
    sum = add(sum, a, opts.arithmetic);
    x.blocks.push_back({AlgebraicNumber::from_integer(1), a});
  }
  if (!equals(sum, inst.n)) throw DomainError("not a corollary instance: the alphas do not sum to N");

  const int r = static_cast<int>(inst.alphas.size());
  const auto f = corollary_polynomial(inst.n, r);
  ExceptionalSet e;
  for (int i = 0; i < r; ++i) e.blocks.insert(i);
  Verdict v = verify_theorem(f, e, x, opts);
  v.statement = Statement::Corollary;
  if (v.lhs) {
    if (v.c_f != 1 || v.delta != 1) throw Error("corollary polynomial has unexpected constants");
    const Rational half(1, 2);
    v.lhs = *v.lhs * half;
    v.log_rho = *v.log_rho * half;
    v.margin = *v.margin * half;
  }
  return v;
}

Verdict schinzel_check(const AlgebraicNumber& alpha, const VerifyOptions& opts) {
  Verdict v;
  v.statement = Statement::Schinzel;
  const bool real = is_totally_real(alpha);
  const bool integral = is_algebraic_integer(alpha);
  const bool trivial = alpha.is_zero() || equals(alpha, AlgebraicNumber::from_integer(1)) ||
                       equals(alpha, AlgebraicNumber::from_integer(-1));
  v.hypotheses.push_back({"totally real", real ? Check::Pass : Check::Fail, real ? "" : "a conjugate is not real"});
  v.hypotheses.push_back({"algebraic integer", integral ? Check::Pass : Check::Fail,
                          integral ? "" : "minimal polynomial " + alpha.minpoly().to_string() + " is not monic"});
  v.hypotheses.push_back({"not 0 or +-1", trivial ? Check::Fail : Check::Pass, trivial ? "alpha is 0 or +-1" : ""});
  if (!real || !integral || trivial) {
    v.status = VerdictStatus::NotApplicable;
    return v;
  }
  Verdict c = verify_corollary({{alpha}, alpha}, opts);
  c.statement = Statement::Schinzel;
  c.hypotheses.insert(c.hypotheses.begin(), v.hypotheses.begin(), v.hypotheses.end());
  return c;
}

std::vector<Verdict> verify_corollary_batch(const std::vector<CorollaryInstance>& insts, const VerifyOptions& opts,
                                            int jobs) {
  std::vector<Verdict> out(insts.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t k = next++; k < insts.size(); k = next++) {
      try {
        out[k] = verify_corollary(insts[k], opts);
      } catch (const Error& err) {
        out[k] = Verdict{};
        out[k].statement = Statement::Corollary;
        out[k].status = VerdictStatus::NotApplicable;
        out[k].note = err.what();
      }
    }
  };
  const int n = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace weil
