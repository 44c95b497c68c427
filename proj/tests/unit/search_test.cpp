#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "weil/errors.hpp"
#include "weil/search/search.hpp"

using namespace weil;
namespace fs = std::filesystem;

namespace {

const Rational kHalfLogGolden = parse_rational("0.24060591252980172375");

SearchSpace schinzel_space(int max_degree, long bound) {
  SearchSpace s;
  s.min_degree = 1;
  s.max_degree = max_degree;
  s.bound = bound;
  s.filters.totally_real = s.filters.algebraic_integer = s.filters.exclude_trivial = true;
  return s;
}

std::string dump(const SurveyResult& r) {
  std::string out;
  for (const auto& rec : r.records) out += to_json(rec).dump() + "\n";
  return out + to_json(r.stats).dump();
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("weil_search_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("enumeration") {
  SearchSpace s;
  s.min_degree = s.max_degree = 2;
  s.bound = 1;
  CHECK(candidate_count(s) == 9);
  std::vector<IntPoly> seen;
  enumerate(s, [&](const IntPoly& f) { seen.push_back(f); });
  REQUIRE(seen.size() == 9);
  CHECK(seen.front() == parse_poly("x^2 - x - 1"));
  CHECK(seen[1] == parse_poly("x^2 - x"));
  CHECK(seen.back() == parse_poly("x^2 + x + 1"));

  s.min_degree = s.max_degree = 1;
  s.bound = 2;
  CHECK(candidate_count(s) == 5);

  s.monic = false;
  s.bound = 1;
  CHECK(candidate_count(s) == 6);
  std::vector<IntPoly> lin;
  enumerate(s, [&](const IntPoly& f) { lin.push_back(f); });
  CHECK(lin.front() == IntPoly{-1, -1});
  CHECK(lin.back() == IntPoly{1, 1});
  for (const auto& f : lin) CHECK(f.leading() != 0);

  s.min_degree = s.max_degree = 0;
  CHECK_THROWS_AS(check_space(s), DomainError);
  s.min_degree = 3;
  s.max_degree = 2;
  CHECK_THROWS_AS(check_space(s), DomainError);
}

TEST_CASE("survey examples") {
  auto q = min_height_survey(schinzel_space(2, 2));
  REQUIRE(q.finished);
  REQUIRE(q.minimum.size() == 2);
  CHECK(q.minimum[0].minpoly == parse_poly("x^2-x-1"));
  CHECK(q.minimum[1].minpoly == parse_poly("x^2+x-1"));
  CHECK(abs(q.minimum[0].log_height.midpoint() - kHalfLogGolden) < parse_rational("1e-19"));
  CHECK(q.separated);
  CHECK(q.minimum_classes.size() == 1);

  auto big = min_height_survey(schinzel_space(4, 5));
  CHECK(big.stats.candidates == 11 + 121 + 1331 + 14641);
  CHECK(abs(big.records.front().log_height.midpoint() - kHalfLogGolden) < parse_rational("1e-9"));
  CHECK(big.minimum.size() == 2);
  for (const auto& r : big.records) CHECK(r.log_height.hi >= kHalfLogGolden - parse_rational("1e-9"));

  // no filters: cyclotomic records at height zero
  SearchSpace open;
  open.min_degree = 1;
  open.max_degree = 2;
  open.bound = 1;
  auto o = min_height_survey(open);
  bool cyclo = false;
  for (const auto& r : o.records)
    if (r.minpoly == parse_poly("x^2+x+1")) {
      cyclo = true;
      CHECK(r.log_height == Interval::point(0));
      CHECK(std::find(r.flags.begin(), r.flags.end(), "cyclotomic") != r.flags.end());
    }
  CHECK(cyclo);
  CHECK(o.records.front().log_height == Interval::point(0));
}

TEST_CASE("completeness accounting") {
  for (bool irreducible : {false, true}) {
    SearchSpace s = schinzel_space(3, 3);
    s.filters.irreducible = irreducible;
    auto r = min_height_survey(s);
    std::uint64_t rejected = 0;
    for (const auto& [k, v] : r.stats.rejected) rejected += v;
    CHECK(r.stats.candidates == candidate_count(s));
    CHECK(r.stats.records == r.records.size());
    CHECK(r.stats.factors - rejected == r.stats.records);
    if (irreducible) CHECK(r.stats.reducible > 0);
    else CHECK(r.stats.reducible == 0);
  }
}

TEST_CASE("determinism across workers") {
  SearchSpace s = schinzel_space(4, 3);
  SurveyOptions one, four;
  four.jobs = 4;
  four.chunk = 37;
  CHECK(dump(min_height_survey(s, one)) == dump(min_height_survey(s, four)));
}

TEST_CASE("checkpoint and resume") {
  const SearchSpace s = schinzel_space(3, 4);
  const std::string full = dump(min_height_survey(s));

  const fs::path dir = scratch("resume");
  SurveyOptions part;
  part.checkpoint_dir = dir.string();
  part.chunk = 50;
  part.stop_after = 200;
  auto first = min_height_survey(s, part);
  CHECK_FALSE(first.finished);
  CHECK(first.stats.candidates == 200);
  // a line written after the last cursor update is discarded on resume
  {
    std::ofstream junk(dir / "records.jsonl", std::ios::app);
    junk << "{\"partial\":\n";
  }
  part.stop_after = 0;
  part.jobs = 3;
  auto rest = min_height_survey(s, part);
  CHECK(rest.finished);
  CHECK(dump(rest) == full);

  // same directory, different space
  SearchSpace other = s;
  other.bound = 2;
  CHECK_THROWS_AS(min_height_survey(other, part), DomainError);

  // empty directory starts fresh
  const fs::path empty = scratch("empty");
  fs::create_directories(empty);
  SurveyOptions fresh;
  fresh.checkpoint_dir = empty.string();
  CHECK(dump(min_height_survey(s, fresh)) == full);

  // corrupted cursor
  const fs::path bad = scratch("bad");
  fs::create_directories(bad);
  {
    std::ofstream c(bad / "cursor.json");
    c << "{\"space_hash\": 12";
  }
  SurveyOptions broken;
  broken.checkpoint_dir = bad.string();
  CHECK_THROWS_AS(min_height_survey(s, broken), ParseError);

  for (const auto& p : {dir, empty, bad}) fs::remove_all(p);
}

TEST_CASE("space and record JSON") {
  SearchSpace s = schinzel_space(4, 5);
  s.monic = false;
  auto back = space_from_json(to_json(s));
  CHECK(to_json(back) == to_json(s));
  CHECK(space_hash(back) == space_hash(s));
  s.bound = 4;
  CHECK(space_hash(back) != space_hash(s));
  CHECK_THROWS_AS(space_from_json(io::parse_json(R"({"degree": 0, "bound": 1})")), ParseError);
  CHECK_THROWS_AS(space_from_json(io::parse_json(R"({"bound": "x"})")), ParseError);
  auto d = space_from_json(io::parse_json(R"({"degree": [2, 3], "bound": 2})"));
  CHECK(d.min_degree == 2);
  CHECK(d.max_degree == 3);

  auto r = min_height_survey(schinzel_space(2, 1)).records.front();
  auto rr = record_from_json(to_json(r));
  CHECK(rr.minpoly == r.minpoly);
  CHECK(rr.log_height == r.log_height);
  CHECK(rr.flags == r.flags);
}

TEST_CASE("symmetry classes") {
  CHECK(symmetry_representative(parse_poly("x^2-x-1")) == symmetry_representative(parse_poly("x^2+x-1")));
  CHECK(symmetry_representative(parse_poly("x^3-x-1")) == symmetry_representative(parse_poly("x^3+x^2-1")));
  CHECK(symmetry_representative(parse_poly("x^2-2")) != symmetry_representative(parse_poly("x^2-3")));
}

TEST_CASE("equality hunt") {
  SearchSpace quad = schinzel_space(2, 2);
  auto r1 = equality_hunt(1, quad);
  const auto phi = AlgebraicNumber::nearest_root(parse_poly("x^2-x-1"), parse_rational("1.6"));
  bool golden = false;
  for (const auto& h : r1) {
    CHECK(h.verdict.status == VerdictStatus::EqualityCandidate);
    if (equals(h.instance.n, phi) && equals(h.instance.alphas[0], phi)) golden = true;
  }
  CHECK(golden);

  auto r2 = equality_hunt(2, quad);
  bool pair = false;
  for (const auto& h : r2) {
    CHECK(h.verdict.status == VerdictStatus::EqualityCandidate);
    const auto& a = h.instance.alphas;
    if (equals(a[0], AlgebraicNumber::from_integer(1)) && equals(a[1], phi - AlgebraicNumber::from_integer(1)) &&
        equals(h.instance.n, phi))
      pair = true;
  }
  CHECK(pair);

  SearchSpace cubic = schinzel_space(4, 2);
  cubic.min_degree = 3;
  CHECK(equality_hunt(1, cubic).empty());
  CHECK_THROWS_AS(equality_hunt(3, quad), DomainError);
}
