// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <unistd.h>

#include "support/generators.hpp"
#include "weil/cli/cli.hpp"
#include "weil/heights/heights.hpp"
#include "weil/io/json.hpp"
#include "weil/kernel/bigfloat.hpp"
#include "weil/search/search.hpp"

using namespace weil;
using io::Json;
namespace fs = std::filesystem;

namespace {

const Rational kNano = parse_rational("1e-9");
const Rational kHalfLogGolden = parse_rational("0.24060591252980172375");

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int n, const char* name, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_seconds > 0 && secs > limit_seconds) c.require(false, "time limit " + std::to_string(limit_seconds) + " s");
  if (!c.ok) ++failures;
  std::printf("%s %2d  %-44s %8.3f s%s%s\n", c.ok ? "PASS" : "FAIL", n, name, secs, c.detail.empty() ? "" : "  ",
              c.detail.c_str());
  std::fflush(stdout);
}

double seconds_of(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

AlgebraicNumber rat(long p, long q = 1) { return AlgebraicNumber::from_rational(make_rational(p, q)); }

bool within(const Interval& iv, const Rational& ref, const Rational& tol) {
  return abs(iv.lo - ref) <= tol && abs(iv.hi - ref) <= tol;
}

SearchSpace schinzel_space() {
  SearchSpace s;
  s.min_degree = 1;
  s.max_degree = 4;
  s.bound = 5;
  s.filters.totally_real = s.filters.algebraic_integer = s.filters.exclude_trivial = true;
  return s;
}

std::vector<CorollaryInstance> zhang_zagier_sample() {
  std::mt19937_64 rng(2718);
  std::vector<CorollaryInstance> insts;
  while (insts.size() < 100) {
    auto a = testing::random_algebraic(rng, 3, 5);
    // 0, 1 and the primitive sixth roots of unity fail the hypotheses
    if (a.is_zero() || equals(a, rat(1)) || a.minpoly() == parse_poly("x^2-x+1")) continue;
    insts.push_back({{a, rat(1) - a}, rat(1)});
  }
  return insts;
}

std::string records_text(const SurveyResult& r) {
  std::string s;
  for (const auto& rec : r.records) s += to_json(rec).dump() + "\n";
  return s;
}

std::string verdicts_text(const std::vector<Verdict>& vs) {
  std::string s;
  for (const auto& v : vs) s += io::to_json(v).dump() + "\n";
  return s;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << text;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), {});
}

struct Grid {
  const char* delta;
  long c;
};

}  // namespace

int main() {
  const fs::path out_dir = fs::temp_directory_path() / ("weil_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(out_dir);

  criterion(1, "golden-ratio threshold", 1.0, [](Outcome& c) {
    std::ostringstream out, err;
    const int code = cli::run({"weilht", "rho", "--cf", "1", "--delta", "1"}, out, err);
    c.require(code == 0, "exit code " + std::to_string(code));
    Json j = io::parse_json(out.str());
    c.require(j["minpoly"] == Json::parse("[-1,-1,1]"), "minpoly " + j["minpoly"].dump());
    c.require(abs(parse_rational(j["approx"].get<std::string>()) - parse_rational("1.6180339887")) <= kNano,
              "approx " + j["approx"].get<std::string>());
    auto t = threshold(1, 1);
    c.require(equals(t.rho, AlgebraicNumber::nearest_root(parse_poly("x^2-x-1"), parse_rational("1.6"))), "rho != phi");
    Interval half = t.log_rho * make_rational(1, 2);
    c.require(within(half, parse_rational("0.2406059125"), parse_rational("1e-8")), "log rho / 2");
  });

  const auto phi = AlgebraicNumber::nearest_root(parse_poly("x^2-x-1"), parse_rational("1.6"));
  criterion(2, "equality cases r = 1, 2", 5.0, [&](Outcome& c) {
    VerifyOptions o;
    o.precision_bits = 128;
    for (const CorollaryInstance& inst : {CorollaryInstance{{phi}, phi}, CorollaryInstance{{rat(1), phi - rat(1)}, phi}}) {
      auto v = verify_corollary(inst, o);
      const std::string r = "r=" + std::to_string(inst.alphas.size());
      c.require(v.status == VerdictStatus::EqualityCandidate, r + " status " + to_string(v.status));
      c.require(v.margin && v.margin->lo >= -kNano && v.margin->hi <= kNano, r + " margin");
    }
  });

  SurveyResult survey1, survey4;
  criterion(3, "Schinzel floor survey", 0, [&](Outcome& c) {
    SurveyOptions four;
    four.jobs = 4;
    const double t1 = seconds_of([&] { survey1 = min_height_survey(schinzel_space()); });
    const double t4 = seconds_of([&] { survey4 = min_height_survey(schinzel_space(), four); });
    c.require(t1 < 600, "single-threaded " + std::to_string(t1) + " s");
    c.require(t4 < 180, "4 workers " + std::to_string(t4) + " s");
    const Interval floor = threshold(1, 1).log_rho * make_rational(1, 2);
    c.require(within(floor, kHalfLogGolden, kNano), "floor value");
    c.require(survey1.finished && !survey1.records.empty(), "unfinished");
    c.require(within(survey1.records.front().log_height, kHalfLogGolden, kNano), "minimum value");
    std::set<std::string> tie;
    for (const auto& r : survey1.minimum) tie.insert(io::to_json(r.minpoly).dump());
    c.require(tie == std::set<std::string>{"[-1,-1,1]", "[-1,1,1]"}, "minimum attained by other polynomials");
    c.require(survey1.minimum_classes.size() == 1, "more than one symmetry class at the minimum");
    c.require(survey1.separated, "minimum not separated from runner-up");
    for (const auto& r : survey1.records)
      c.require(r.log_height.hi >= floor.lo - kNano, "record below the floor: " + io::to_json(r.minpoly).dump());
  });

  criterion(4, "entropy minimum vs root duality", 30.0, [](Outcome& c) {
    int points = 0;
    for (const char* a : {"1/2", "1", "2", "3"})
      for (const char* b : {"1/2", "1", "2", "3"})
        for (long g : {1, 2, 5}) {
          ++points;
          auto s = entropy_minimize(parse_rational(a), parse_rational(b), Rational(g));
          auto lo = exp_bounds(-s.minimum.hi, 128).first, hi = exp_bounds(-s.minimum.lo, 128).second;
          Rational gap = std::max(abs(hi - s.rho_prime.lo), abs(s.rho_prime.hi - lo));
          c.require(gap <= kNano, std::string("lemma point ") + a + "," + b + "," + std::to_string(g));
        }
    c.require(points == 48, "grid size");
    int cells = 0;
    for (const char* d : {"1/2", "1", "3/2", "2"})
      for (long cf : {1, 2, 3, 5}) {
        ++cells;
        auto ob = optimal_b(parse_rational(d), cf);
        Interval sum = ob.bound + threshold(cf, parse_rational(d)).log_rho;
        c.require(abs(sum.lo) <= kNano && abs(sum.hi) <= kNano, std::string("bound cell ") + d + "," + std::to_string(cf));
      }
    c.require(cells == 16, "grid size");
  });

  criterion(5, "stationarity by central difference", 0, [](Outcome& c) {
    const Rational h = parse_rational("1e-4");
    int interior = 0;
    for (const char* d : {"1/2", "1", "3/2", "2"})
      for (long cf : {1, 2, 3, 5}) {
        const Rational delta = parse_rational(d);
        auto ob = optimal_b(delta, cf);
        if (ob.b - h <= 0 || ob.b + h >= 1 / delta) continue;
        ++interior;
        Rational diff = (lambda_rhs(ob.b + h, delta, cf).midpoint() - lambda_rhs(ob.b - h, delta, cf).midpoint()) / (2 * h);
        c.require(abs(diff) <= parse_rational("1e-6"), std::string("cell ") + d + "," + std::to_string(cf));
      }
    c.require(interior == 16, "interior optima: " + std::to_string(interior));
  });

  criterion(6, "Mahler measure oracles", 5.0, [](Outcome& c) {
    c.require(mahler_measure(parse_poly("x-2"), pow2(-40)) == Interval::point(2), "x-2");
    for (int m = 1; m <= 20; ++m)
      c.require(within(mahler_measure(cyclotomic_polynomial(m), parse_rational("1e-13")), Rational(1),
                       parse_rational("1e-12")),
                "cyclotomic " + std::to_string(m));
    c.require(within(mahler_measure(parse_poly("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1"), parse_rational("1e-11")),
                     parse_rational("1.1762808183"), kNano),
              "Lehmer");
    auto plastic = AlgebraicNumber::nearest_root(parse_poly("x^3-x-1"), parse_rational("1.3"));
    c.require(within(mahler_measure(plastic.minpoly(), parse_rational("1e-11")), parse_rational("1.3247179572"), kNano),
              "x^3-x-1");
  });

  criterion(7, "algebraic arithmetic round trips", 60.0, [](Outcome& c) {
    std::mt19937_64 rng(1729);
    int pairs = 0;
    while (pairs < 500) {
      auto a = testing::random_algebraic(rng, 3, 4), b = testing::random_algebraic(rng, 3, 4);
      if (a.is_zero() || b.is_zero()) continue;
      ++pairs;
      c.require(equals((a + b) - b, a), "(a+b)-b");
      c.require(equals((a * b) / b, a), "(ab)/b");
      c.require(equals(inverse(inverse(a)), a), "inv inv");
    }
  });

  criterion(8, "hypothesis gate", 1.0, [](Outcome& c) {
    auto v = verify_corollary({{rat(1)}, rat(1)});
    c.require(v.status == VerdictStatus::ViolatedHypotheses, std::string("status ") + to_string(v.status));
    bool witness = false;
    for (const auto& h : v.hypotheses) witness = witness || (h.result == weil::Check::Fail && h.witness == "F(1/x) = 0");
    c.require(witness, "no F(1/x) = 0 witness");
    c.require(!v.margin && !v.lhs, "margin emitted");
    c.require(!io::to_json(v).contains("margin"), "margin in JSON");
  });

  const auto insts = zhang_zagier_sample();
  std::vector<Verdict> zz1, zz4;
  criterion(9, "Zhang-Zagier sample", 120.0, [&](Outcome& c) {
    zz1 = verify_corollary_batch(insts, {}, 1);
    zz4 = verify_corollary_batch(insts, {}, 4);
    for (size_t k = 0; k < insts.size(); ++k) {
      const auto& v = zz1[k];
      c.require(v.status == VerdictStatus::Holds || v.status == VerdictStatus::EqualityCandidate,
                "instance " + std::to_string(k) + ": " + to_string(v.status));
      if (v.status == VerdictStatus::EqualityCandidate) {
        VerifyOptions o;
        o.precision_bits = 2 * v.precision_bits;
        c.require(verify_corollary(insts[k], o).status == VerdictStatus::EqualityCandidate,
                  "instance " + std::to_string(k) + " at doubled precision");
      }
    }
  });

  criterion(10, "determinism across 1 and 4 workers", 0, [&](Outcome& c) {
    write_file(out_dir / "survey.1.jsonl", records_text(survey1));
    write_file(out_dir / "survey.4.jsonl", records_text(survey4));
    write_file(out_dir / "verdicts.1.jsonl", verdicts_text(zz1));
    write_file(out_dir / "verdicts.4.jsonl", verdicts_text(zz4));
    const std::string s1 = read_file(out_dir / "survey.1.jsonl"), v1 = read_file(out_dir / "verdicts.1.jsonl");
    c.require(!s1.empty() && !v1.empty(), "empty outputs");
    c.require(s1 == read_file(out_dir / "survey.4.jsonl"), "survey records differ");
    c.require(v1 == read_file(out_dir / "verdicts.4.jsonl"), "verdicts differ");
  });

  fs::remove_all(out_dir);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures;
}
