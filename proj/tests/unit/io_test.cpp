#include <doctest.h>

#include "weil/errors.hpp"
#include "weil/io/json.hpp"

using namespace weil;
using io::Json;

namespace {

AlgebraicNumber alg(const char* poly, const char* approx) {
  return AlgebraicNumber::nearest_root(parse_poly(poly), parse_rational(approx));
}

}  // namespace

TEST_CASE("scalar round trips") {
  for (const char* q : {"0", "-7", "3/4", "-22/7", "123456789012345678901234567890"})
    CHECK(io::rational_from_json(io::to_json(parse_rational(q))) == parse_rational(q));
  CHECK(io::to_json(Integer(5)) == Json(5));
  CHECK(io::to_json(Integer("123456789012345678901234567890")).is_string());
  CHECK(io::integer_from_json(Json("-99999999999999999999")) == Integer("-99999999999999999999"));
  CHECK(io::rational_from_json(Json(3)) == 3);
  CHECK(io::rational_from_json(Json("0.25")) == make_rational(1, 4));
  CHECK_THROWS_AS(io::integer_from_json(Json("1/2")), ParseError);
  CHECK_THROWS_AS(io::rational_from_json(Json::array()), ParseError);

  IntPoly f = parse_poly("x^3 - 2x + 5");
  CHECK(io::to_json(f) == Json::parse("[5,-2,0,1]"));
  CHECK(io::poly_from_json(io::to_json(f)) == f);
  CHECK(io::poly_from_json(Json("x^3-2x+5")) == f);

  Interval iv(make_rational(1, 3), make_rational(1, 2));
  Json j = io::to_json(iv);
  CHECK(j["lo"] == "1/3");
  CHECK(j["hi"] == "1/2");
}

TEST_CASE("algebraic numbers") {
  const auto phi = alg("x^2-x-1", "1.6");
  CHECK(equals(io::algebraic_from_json(io::to_json(phi)), phi));
  CHECK(equals(io::parse_algebraic("x^2-x-1@1.6"), phi));
  CHECK(equals(io::parse_algebraic("x^2-x-1@#1"), phi));
  CHECK(equals(io::parse_algebraic("x^2-x-1@#0"), AlgebraicNumber::from_integer(1) - phi));
  CHECK(equals(io::parse_algebraic("-3/4"), AlgebraicNumber::from_rational(make_rational(-3, 4))));

  const auto i = AlgebraicNumber::nearest_root(IntPoly{1, 0, 1}, 0, 1);
  CHECK(equals(io::parse_algebraic("x^2+1@i"), i));
  CHECK(equals(io::parse_algebraic("x^2+1@-i"), negate(i)));
  CHECK(equals(io::parse_algebraic("x^2+1@0+1i"), i));
  CHECK(equals(io::algebraic_from_json(io::to_json(i)), i));
  const auto w = io::parse_algebraic("x^2+x+1@-0.5+0.87i");
  CHECK(w.minpoly() == parse_poly("x^2+x+1"));

  Json obj = {{"minpoly", "x^2-2"}, {"index", 0}};
  CHECK(equals(io::algebraic_from_json(obj), negate(alg("x^2-2", "1.4"))));
  CHECK(equals(io::algebraic_from_json(Json(7)), AlgebraicNumber::from_integer(7)));

  CHECK_THROWS_AS(io::parse_algebraic("x^2-4@#0"), ParseError);
  CHECK_THROWS_AS(io::parse_algebraic("x^2-x-1@#2"), ParseError);
  CHECK_THROWS_AS(io::parse_algebraic("x^2-x-1@"), ParseError);
  CHECK_THROWS_AS(io::parse_algebraic("x^^2@1"), ParseError);
}

TEST_CASE("polynomial and point documents") {
  const char* doc = R"({
    "shape": [1, 1], "degrees": [1, 1], "I": [1],
    "monomials": [
      {"exp": [[1, 0], [1, 0]], "coeff": 1},
      {"exp": [[0, 1], [0, 1]], "coeff": -1},
      {"exp": [[1, 0], [0, 1]], "coeff": "x^2-2@1.4"}
    ]})";
  auto [f, e] = io::polynomial_from_json(io::parse_json(doc));
  CHECK(f.shape() == std::vector<int>{1, 1});
  CHECK(f.monomials().size() == 3);
  CHECK(e.blocks == std::set<int>{0});
  auto [g, e2] = io::polynomial_from_json(io::to_json(f, e));
  CHECK(io::to_json(g, e2) == io::to_json(f, e));

  auto p = io::point_from_json(io::parse_json(R"({"blocks": [[1, 2], [1, "x^2-x-1@1.6"]]})"));
  CHECK(p.shape() == std::vector<int>{1, 1});
  auto q = io::point_from_json(io::to_json(p));
  CHECK(equals(q.blocks[1][1], p.blocks[1][1]));

  auto inst = io::instance_from_json(io::parse_json(R"({"alphas": [1, "x^2+x-1@0.6"]})"));
  CHECK(equals(inst.n, alg("x^2-x-1", "1.6")));

  // bad documents report where
  try {
    io::polynomial_from_json(io::parse_json(R"({"shape": [1], "degrees": [1], "monomials": [{"exp": [[1]], "coeff": 1}]})"));
    FAIL("expected an error");
  } catch (const Error& err) {
    CHECK(std::string(err.what()).size() > 0);
  }
  try {
    io::instance_from_json(io::parse_json(R"({"alphas": [1, {"minpoly": "x^2-2", "index": "a"}]})"));
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    CHECK(std::string(err.what()).find("/alphas/1") != std::string::npos);
  }
  CHECK_THROWS_AS(io::parse_json("{\"a\": }"), ParseError);
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/weil.json"), ParseError);
}

TEST_CASE("verdict and constants documents") {
  const auto phi = alg("x^2-x-1", "1.6");
  auto v = verify_corollary({{phi}, phi}, {});
  Json j = io::to_json(v);
  CHECK(j["statement"] == "corollary");
  CHECK(j["status"] == "equality-candidate");
  CHECK(j["hypotheses"].size() == 3);
  CHECK(j["C_F"] == 1);
  CHECK(j["delta"] == "1");
  CHECK(j.contains("margin"));
  CHECK(j.dump() == io::to_json(verify_corollary({{phi}, phi}, {})).dump());

  auto t = threshold(1, 1);
  Json tj = io::to_json(t);
  CHECK(tj["rho"]["minpoly"] == Json::parse("[-1,-1,1]"));
  CHECK(std::string(tj["rho"]["approx"]).rfind("1.618033988", 0) == 0);
}
