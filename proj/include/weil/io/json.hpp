#pragma once

#include <json.hpp>
#include <string>
#include <string_view>
#include <utility>

#include "weil/bounds/constants.hpp"
#include "weil/bounds/optimization.hpp"
#include "weil/bounds/spotcheck.hpp"
#include "weil/verify/verify.hpp"

namespace weil::io {

/// Key order is kept as inserted so output is byte-stable.
using Json = nlohmann::ordered_json;

/// Throws ParseError with the byte offset.
Json parse_json(std::string_view text);
/// Reads a file and parses it; ParseError names the path.
Json read_json_file(const std::string& path);

Json to_json(const Integer& z);       // number when it fits 64 bits, else string
Json to_json(const Rational& q);      // "p" or "p/q"
Json to_json(const IntPoly& f);       // ascending coefficients
/// {"lo": "p/q", "hi": "p/q", "value": "...", "pm": "..."}
Json to_json(const Interval& iv);
/// {"minpoly": [...], "index": k, "root": {"re": [lo, hi], "im": [lo, hi]}, "approx": "..."}
Json to_json(const AlgebraicNumber& a, long precision_bits = 64);
/// F JSON; "I" holds 1-based block indices.
Json to_json(const MultihomogeneousPolynomial& f, const ExceptionalSet& e);
Json to_json(const MultiProjectivePoint& p, long precision_bits = 64);
Json to_json(const CorollaryInstance& inst, long precision_bits = 64);
Json to_json(const BoundConstants& k, long precision_bits = 64);
Json to_json(const Threshold& t, long precision_bits = 64);
Json to_json(const Verdict& v);
Json to_json(const EntropyMinimum& s);
Json to_json(const OptimalB& o);
Json to_json(const WeightScheme& w);
Json to_json(const PhiReport& r);

/// Each parser takes the JSON pointer of `j` for error messages.
Rational rational_from_json(const Json& j, const std::string& where = "");
Integer integer_from_json(const Json& j, const std::string& where = "");
IntPoly poly_from_json(const Json& j, const std::string& where = "");
/// Accepts an integer, a rational string, a text form (see parse_algebraic)
/// or an object with "minpoly" plus one of "index", "root", "approx".
AlgebraicNumber algebraic_from_json(const Json& j, const std::string& where = "");
std::pair<MultihomogeneousPolynomial, ExceptionalSet> polynomial_from_json(const Json& j);
/// {"blocks": [[...], ...]} or the bare array of blocks.
MultiProjectivePoint point_from_json(const Json& j, const std::string& where = "");
/// {"alphas": [...], "N": ...}; N defaults to the sum of the alphas.
CorollaryInstance instance_from_json(const Json& j);

/// Text forms: "p/q" or decimal; "poly@re", "poly@re+imi", "poly@i";
/// "poly@#k" (k-th root, 0-based, isolate_roots order).
AlgebraicNumber parse_algebraic(std::string_view text);

}  // namespace weil::io
