#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "weil/io/json.hpp"
#include "weil/verify/verify.hpp"

namespace weil {

struct SearchFilters {
  bool totally_real = false;
  bool algebraic_integer = false;
  bool exclude_trivial = false;  // drop x, x - 1, x + 1
  bool irreducible = false;      // reject reducible candidates outright
};

struct SearchSpace {
  int min_degree = 1;
  int max_degree = 2;
  long bound = 1;
  bool monic = true;
  SearchFilters filters;
  long precision_bits = 64;
};

/// Throws DomainError for degree < 1, bound < 1 or a space too large to index.
void check_space(const SearchSpace& s);

/// Candidates of one degree: (2B+1)^d monic, 2B (2B+1)^d otherwise.
std::uint64_t candidate_count(const SearchSpace& s);

/// Candidate at a position of the lexicographic order: degree ascending,
/// then (c_d, c_{d-1}, ..., c_0) ascending.
IntPoly candidate_at(const SearchSpace& s, std::uint64_t index);

/// Calls `visit` for every candidate in order.
void enumerate(const SearchSpace& s, const std::function<void(const IntPoly&)>& visit);

struct SearchRecord {
  IntPoly minpoly;
  Interval log_height;
  std::vector<std::string> flags;
  int degree() const { return minpoly.degree(); }
};

/// (log_height.lo, degree, minpoly) order.
bool record_less(const SearchRecord& a, const SearchRecord& b);

struct SearchStats {
  std::uint64_t candidates = 0;
  std::uint64_t reducible = 0;  // rejected by the irreducible filter
  std::uint64_t factors = 0;    // distinct irreducible factors examined
  std::map<std::string, std::uint64_t> rejected;  // per factor predicate
  std::uint64_t records = 0;
};

struct SurveyOptions {
  int jobs = 1;
  /// Directory for records.jsonl and cursor.json; empty disables.
  std::string checkpoint_dir;
  /// Stop after this many candidates in this call (0 = run to the end).
  std::uint64_t stop_after = 0;
  std::uint64_t chunk = 1024;
};

struct SurveyResult {
  std::vector<SearchRecord> records;  // sorted by record_less
  SearchStats stats;
  bool finished = false;
  /// Records whose height interval meets the smallest one.
  std::vector<SearchRecord> minimum;
  /// The tie group is separated from every other record.
  bool separated = false;
  /// Tie group split into classes under x -> -x and reversal.
  std::vector<std::vector<IntPoly>> minimum_classes;
};

SurveyResult min_height_survey(const SearchSpace& s, const SurveyOptions& opts = {});

/// Smallest of f(x), f(-x), x^d f(1/x), x^d f(-1/x) in canonical form.
IntPoly symmetry_representative(const IntPoly& f);

std::string space_hash(const SearchSpace& s);
io::Json to_json(const SearchSpace& s);
SearchSpace space_from_json(const io::Json& j);
io::Json to_json(const SearchRecord& r);
SearchRecord record_from_json(const io::Json& j);
io::Json to_json(const SearchStats& s);

struct HuntResult {
  CorollaryInstance instance;
  Verdict verdict;
};

/// r = 1: N = alpha runs over the largest real root of each totally real
/// algebraic integer of the space. r = 2: pairs (alpha_1, alpha_2) with
/// alpha_1 in {1, -1} or a real root of a space record and alpha_2 a real
/// root of a space record, prescreened by height. Only instances that are
/// equality candidates at opts and at twice its precision are returned.
std::vector<HuntResult> equality_hunt(int r, const SearchSpace& s, const VerifyOptions& opts = {}, int jobs = 1);

}  // namespace weil
