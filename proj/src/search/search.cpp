#include "weil/search/search.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include "weil/errors.hpp"
#include "weil/kernel/factor.hpp"
#include "weil/kernel/roots.hpp"

namespace weil {

namespace fs = std::filesystem;
using io::Json;

namespace {

constexpr std::uint64_t kMaxCandidates = std::uint64_t(1) << 40;

std::uint64_t per_degree(const SearchSpace& s, int d) {
  const std::uint64_t base = static_cast<std::uint64_t>(2 * s.bound + 1);
  std::uint64_t n = s.monic ? 1 : static_cast<std::uint64_t>(2 * s.bound);
  for (int k = 0; k < d; ++k) {
    if (n > kMaxCandidates / base) throw DomainError("search space too large to enumerate");
    n *= base;
  }
  return n;
}

// run fn(k) for k in [0, n) on `jobs` threads; fn writes only slot k
void parallel_for(size_t n, int jobs, const std::function<void(size_t)>& fn) {
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t k = next++; k < n; k = next++) fn(k);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::min<int>(jobs, static_cast<int>(n)); ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
}

struct FactorOutcome {
  IntPoly g;
  std::string reject;  // empty when accepted
};

struct CandidateOutcome {
  bool reducible = false;
  std::vector<FactorOutcome> factors;
};

bool all_real(const IntPoly& g) { return real_root_count(g) == g.degree(); }

CandidateOutcome examine(const SearchSpace& s, const IntPoly& f) {
  CandidateOutcome out;
  auto fs_ = factor_over_rationals(f);
  if (s.filters.irreducible && (fs_.size() != 1 || fs_[0].multiplicity != 1)) {
    out.reducible = true;
    return out;
  }
  for (const auto& fp : fs_) {
    FactorOutcome o{fp.factor, ""};
    const IntPoly& g = fp.factor;
    if (s.filters.exclude_trivial && (g == IntPoly{0, 1} || g == IntPoly{-1, 1} || g == IntPoly{1, 1}))
      o.reject = "trivial";
    else if (s.filters.algebraic_integer && g.leading() != 1)
      o.reject = "not-algebraic-integer";
    else if (s.filters.totally_real && !all_real(g))
      o.reject = "not-totally-real";
    out.factors.push_back(std::move(o));
  }
  return out;
}

SearchRecord make_record(const IntPoly& g, long bits) {
  SearchRecord r;
  r.minpoly = g;
  r.log_height = weil_log_height(AlgebraicNumber::root_by_index(g, 0), pow2(-bits)).log_height;
  if (all_real(g)) r.flags.push_back("totally-real");
  if (g.leading() == 1) r.flags.push_back("algebraic-integer");
  if (is_cyclotomic(g)) r.flags.push_back("cyclotomic");
  IntPoly rev = g.reversed().canonical();
  if (rev == g) r.flags.push_back("reciprocal");
  return r;
}

std::string key(const IntPoly& g) { return io::to_json(g).dump(); }

std::uint64_t hash64(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

void write_atomic(const fs::path& path, const std::string& text) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw Error("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

struct RunState {
  std::uint64_t position = 0;
  std::vector<SearchRecord> records;  // enumeration order
  std::set<std::string> seen;
  SearchStats stats;
};

SearchStats stats_from_json(const Json& j) {
  SearchStats s;
  s.candidates = j.at("candidates").get<std::uint64_t>();
  s.reducible = j.at("reducible").get<std::uint64_t>();
  s.factors = j.at("factors").get<std::uint64_t>();
  for (const auto& [k, v] : j.at("rejected").items()) s.rejected[k] = v.get<std::uint64_t>();
  s.records = j.at("records").get<std::uint64_t>();
  return s;
}

void load_checkpoint(const SearchSpace& s, const fs::path& dir, RunState& st) {
  const fs::path cursor = dir / "cursor.json", records = dir / "records.jsonl";
  if (!fs::exists(cursor)) return;
  Json c;
  try {
    c = io::read_json_file(cursor.string());
    if (c.at("space_hash").get<std::string>() != space_hash(s))
      throw DomainError("checkpoint in " + dir.string() + " belongs to a different search space");
    st.position = c.at("position").at(0).get<std::uint64_t>();
    st.stats = stats_from_json(c.at("stats"));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("corrupted cursor file: ") + e.what(), cursor.string());
  }
  const std::uint64_t n = c.at("records").get<std::uint64_t>();
  std::ifstream in(records);
  std::string line;
  std::vector<std::string> kept;
  while (kept.size() < n && std::getline(in, line)) {
    SearchRecord r = record_from_json(io::parse_json(line));
    st.seen.insert(key(r.minpoly));
    st.records.push_back(std::move(r));
    kept.push_back(line);
  }
  if (kept.size() != n) throw ParseError("records file is shorter than the cursor claims", records.string());
  std::string text;
  for (const auto& k : kept) text += k + "\n";
  write_atomic(records, text);  // drop lines written after the last cursor
}

}  // namespace

void check_space(const SearchSpace& s) {
  if (s.min_degree < 1) throw DomainError("search degree must be at least 1 (constants have no roots)");
  if (s.max_degree < s.min_degree) throw DomainError("empty search space: max_degree < min_degree");
  if (s.bound < 1) throw DomainError("coefficient bound must be at least 1");
  if (s.precision_bits < 32) throw DomainError("precision must be at least 32 bits");
  (void)candidate_count(s);
}

std::uint64_t candidate_count(const SearchSpace& s) {
  std::uint64_t total = 0;
  for (int d = s.min_degree; d <= s.max_degree; ++d) {
    total += per_degree(s, d);
    if (total > kMaxCandidates) throw DomainError("search space too large to enumerate");
  }
  return total;
}

IntPoly candidate_at(const SearchSpace& s, std::uint64_t index) {
  for (int d = s.min_degree; d <= s.max_degree; ++d) {
    const std::uint64_t n = per_degree(s, d);
    if (index >= n) {
      index -= n;
      continue;
    }
    const std::uint64_t base = static_cast<std::uint64_t>(2 * s.bound + 1);
    std::vector<Integer> c(static_cast<size_t>(d) + 1);
    for (int k = 0; k < d; ++k) {
      c[static_cast<size_t>(k)] = static_cast<long>(index % base) - s.bound;
      index /= base;
    }
    if (s.monic) {
      c[static_cast<size_t>(d)] = 1;
    } else {
      const long slot = static_cast<long>(index);  // 0 .. 2B-1, skipping zero
      c[static_cast<size_t>(d)] = slot < s.bound ? slot - s.bound : slot - s.bound + 1;
    }
    return IntPoly(std::move(c));
  }
  throw DomainError("candidate index out of range");
}

void enumerate(const SearchSpace& s, const std::function<void(const IntPoly&)>& visit) {
  check_space(s);
  const std::uint64_t n = candidate_count(s);
  for (std::uint64_t k = 0; k < n; ++k) visit(candidate_at(s, k));
}

bool record_less(const SearchRecord& a, const SearchRecord& b) {
  if (a.log_height.lo != b.log_height.lo) return a.log_height.lo < b.log_height.lo;
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return canonical_less(a.minpoly, b.minpoly);
}

IntPoly symmetry_representative(const IntPoly& f) {
  const IntPoly g = f.canonical();
  IntPoly best = g;
  for (const IntPoly& h : {g.negated_variable().canonical(), g.reversed().canonical(),
                           g.reversed().negated_variable().canonical()})
    if (canonical_less(h, best)) best = h;
  return best;
}

SurveyResult min_height_survey(const SearchSpace& s, const SurveyOptions& opts) {
  check_space(s);
  if (opts.jobs < 1) throw DomainError("worker count must be at least 1");
  const std::uint64_t total = candidate_count(s);
  RunState st;
  fs::path dir;
  if (!opts.checkpoint_dir.empty()) {
    dir = opts.checkpoint_dir;
    fs::create_directories(dir);
    load_checkpoint(s, dir, st);
  }

  std::uint64_t done_here = 0;
  const std::uint64_t step = std::max<std::uint64_t>(1, opts.chunk) * static_cast<std::uint64_t>(opts.jobs);
  while (st.position < total && (opts.stop_after == 0 || done_here < opts.stop_after)) {
    std::uint64_t end = std::min(total, st.position + step);
    if (opts.stop_after) end = std::min(end, st.position + (opts.stop_after - done_here));
    const size_t n = static_cast<size_t>(end - st.position);

    std::vector<CandidateOutcome> outcomes(n);
    parallel_for(n, opts.jobs, [&](size_t k) { outcomes[k] = examine(s, candidate_at(s, st.position + k)); });

    std::vector<IntPoly> fresh;
    for (const auto& o : outcomes) {
      ++st.stats.candidates;
      if (o.reducible) {
        ++st.stats.reducible;
        continue;
      }
      for (const auto& fo : o.factors) {
        ++st.stats.factors;
        if (!fo.reject.empty()) {
          ++st.stats.rejected[fo.reject];
        } else if (!st.seen.insert(key(fo.g)).second) {
          ++st.stats.rejected["duplicate"];
        } else {
          fresh.push_back(fo.g);
        }
      }
    }
    std::vector<SearchRecord> made(fresh.size());
    parallel_for(fresh.size(), opts.jobs, [&](size_t k) { made[k] = make_record(fresh[k], s.precision_bits); });
    st.stats.records += made.size();

    if (!dir.empty()) {
      std::ofstream out(dir / "records.jsonl", std::ios::app);
      for (const auto& r : made) out << to_json(r).dump() << "\n";
      out.flush();
      if (!out) throw Error("cannot append to " + (dir / "records.jsonl").string());
    }
    for (auto& r : made) st.records.push_back(std::move(r));
    st.position = end;
    done_here += n;
    if (!dir.empty()) {
      Json c{{"space_hash", space_hash(s)},
             {"position", Json::array({st.position})},
             {"records", st.records.size()},
             {"stats", to_json(st.stats)}};
      write_atomic(dir / "cursor.json", c.dump() + "\n");
    }
  }

  SurveyResult res;
  res.finished = st.position == total;
  res.stats = st.stats;
  res.records = std::move(st.records);
  std::sort(res.records.begin(), res.records.end(), record_less);
  if (!res.records.empty()) {
    const Interval& low = res.records.front().log_height;
    Rational top = low.hi;
    size_t k = 0;
    while (k < res.records.size() && res.records[k].log_height.lo <= low.hi) {
      top = std::max(top, res.records[k].log_height.hi);
      res.minimum.push_back(res.records[k++]);
    }
    res.separated = k == res.records.size() || res.records[k].log_height.lo > top;
    std::map<std::string, size_t> cls;
    for (const auto& r : res.minimum) {
      const std::string c = key(symmetry_representative(r.minpoly));
      auto [it, inserted] = cls.emplace(c, res.minimum_classes.size());
      if (inserted) res.minimum_classes.emplace_back();
      res.minimum_classes[it->second].push_back(r.minpoly);
    }
  }
  return res;
}

std::string space_hash(const SearchSpace& s) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << hash64(to_json(s).dump());
  return os.str();
}

Json to_json(const SearchSpace& s) {
  return Json{{"min_degree", s.min_degree},
              {"max_degree", s.max_degree},
              {"bound", s.bound},
              {"monic", s.monic},
              {"filters",
               {{"totally_real", s.filters.totally_real},
                {"algebraic_integer", s.filters.algebraic_integer},
                {"exclude_trivial", s.filters.exclude_trivial},
                {"irreducible", s.filters.irreducible}}},
              {"precision_bits", s.precision_bits}};
}

SearchSpace space_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("search space must be an object", "/");
  SearchSpace s;
  auto get_int = [&](const char* k, long& v) {
    if (!j.contains(k)) return;
    if (!j[k].is_number_integer()) throw ParseError("expected an integer", std::string("/") + k);
    v = j[k].get<long>();
  };
  long lo = s.min_degree, hi = s.max_degree;
  if (j.contains("degree")) {
    const Json& d = j["degree"];
    if (d.is_number_integer()) lo = hi = d.get<long>();
    else if (d.is_array() && d.size() == 2 && d[0].is_number_integer() && d[1].is_number_integer())
      lo = d[0].get<long>(), hi = d[1].get<long>();
    else throw ParseError("degree must be an integer or [min, max]", "/degree");
  }
  get_int("min_degree", lo);
  get_int("max_degree", hi);
  s.min_degree = static_cast<int>(lo);
  s.max_degree = static_cast<int>(hi);
  get_int("bound", s.bound);
  get_int("precision_bits", s.precision_bits);
  if (j.contains("monic")) {
    if (!j["monic"].is_boolean()) throw ParseError("expected a boolean", "/monic");
    s.monic = j["monic"].get<bool>();
  }
  for (const auto& [k, v] : j.items())
    if (k != "degree" && k != "min_degree" && k != "max_degree" && k != "bound" && k != "precision_bits" &&
        k != "monic" && k != "filters")
      throw ParseError("unknown key", "/" + k);
  if (j.contains("filters")) {
    const Json& f = j["filters"];
    const std::vector<std::pair<std::string, bool*>> names{{"totally_real", &s.filters.totally_real},
                                                           {"algebraic_integer", &s.filters.algebraic_integer},
                                                           {"exclude_trivial", &s.filters.exclude_trivial},
                                                           {"irreducible", &s.filters.irreducible}};
    auto target = [&](std::string k, const std::string& where) {
      std::replace(k.begin(), k.end(), '-', '_');
      for (const auto& [n, p] : names)
        if (n == k) return p;
      throw ParseError("unknown filter", where);
    };
    if (f.is_array()) {
      // list of enabled filter names
      for (size_t i = 0; i < f.size(); ++i) {
        const std::string where = "/filters/" + std::to_string(i);
        if (!f[i].is_string()) throw ParseError("expected a filter name", where);
        *target(f[i].get<std::string>(), where) = true;
      }
    } else if (f.is_object()) {
      for (const auto& [k, v] : f.items()) {
        const std::string where = "/filters/" + k;
        bool* p = target(k, where);
        if (!v.is_boolean()) throw ParseError("expected a boolean", where);
        *p = v.get<bool>();
      }
    } else {
      throw ParseError("filters must be an object or an array of names", "/filters");
    }
  }
  try {
    check_space(s);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), "/");
  }
  return s;
}

Json to_json(const SearchRecord& r) {
  return Json{{"minpoly", io::to_json(r.minpoly)},
              {"deg", r.degree()},
              {"logh", {{"lo", to_string(r.log_height.lo)}, {"hi", to_string(r.log_height.hi)}}},
              {"flags", r.flags}};
}

SearchRecord record_from_json(const Json& j) {
  try {
    SearchRecord r;
    r.minpoly = io::poly_from_json(j.at("minpoly"), "/minpoly");
    r.log_height = Interval(io::rational_from_json(j.at("logh").at("lo"), "/logh/lo"),
                            io::rational_from_json(j.at("logh").at("hi"), "/logh/hi"));
    r.flags = j.at("flags").get<std::vector<std::string>>();
    return r;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed record: ") + e.what());
  }
}

Json to_json(const SearchStats& s) {
  Json rej = Json::object();
  for (const auto& [k, v] : s.rejected) rej[k] = v;
  return Json{{"candidates", s.candidates},
              {"reducible", s.reducible},
              {"factors", s.factors},
              {"rejected", rej},
              {"records", s.records}};
}

namespace {

std::vector<AlgebraicNumber> real_roots(const IntPoly& g) {
  std::vector<AlgebraicNumber> out;
  for (const auto& b : isolate_roots(g))
    if (b.real) out.push_back(AlgebraicNumber::from_isolated(g, b));
  return out;
}

bool near_target(const Interval& h, const Interval& target) {
  const Rational slack = parse_rational("1e-6");
  return h.lo <= target.hi + slack && target.lo - slack <= h.hi;
}

}  // namespace

namespace {

// factors of reducible candidates can fall below the degree range
bool in_range(const SearchRecord& rec, const SearchSpace& s) {
  return rec.degree() >= s.min_degree && rec.degree() <= s.max_degree;
}

}  // namespace

std::vector<HuntResult> equality_hunt(int r, const SearchSpace& space, const VerifyOptions& opts, int jobs) {
  if (r != 1 && r != 2) throw DomainError("equality hunt supports r = 1 or r = 2");
  SearchSpace s = space;
  if (r == 1) s.filters.totally_real = s.filters.algebraic_integer = s.filters.exclude_trivial = true;
  SurveyOptions so;
  so.jobs = jobs;
  const SurveyResult survey = min_height_survey(s, so);
  const Interval target = threshold(1, 1, 128).log_rho * Rational(1, 2);

  std::vector<CorollaryInstance> insts;
  if (r == 1) {
    for (const auto& rec : survey.records) {
      if (!in_range(rec, s) || !near_target(rec.log_height, target)) continue;
      auto roots = real_roots(rec.minpoly);
      if (roots.empty()) continue;
      insts.push_back({{roots.back()}, roots.back()});
    }
  } else {
    struct Item {
      AlgebraicNumber a;
      Interval h;
    };
    std::vector<Item> pool, seeds{{AlgebraicNumber::from_integer(1), Interval::point(0)},
                                  {AlgebraicNumber::from_integer(-1), Interval::point(0)}};
    for (const auto& rec : survey.records) {
      if (!in_range(rec, s) || rec.log_height.lo > target.hi) continue;
      for (auto& a : real_roots(rec.minpoly)) pool.push_back({a, rec.log_height});
    }
    auto consider = [&](const Item& x, const Item& y) {
      if (!near_target(x.h + y.h, target)) return;
      try {
        insts.push_back({{x.a, y.a}, add(x.a, y.a, opts.arithmetic)});
      } catch (const DegreeCapExceeded&) {
      }
    };
    for (const auto& x : seeds)
      for (const auto& y : pool) consider(x, y);
    for (size_t i = 0; i < pool.size(); ++i)
      for (size_t k = i; k < pool.size(); ++k) consider(pool[i], pool[k]);
  }

  std::vector<Verdict> first = verify_corollary_batch(insts, opts, jobs);
  std::vector<CorollaryInstance> keep;
  std::vector<Verdict> kept;
  for (size_t k = 0; k < insts.size(); ++k)
    if (first[k].status == VerdictStatus::EqualityCandidate) {
      keep.push_back(insts[k]);
      kept.push_back(first[k]);
    }
  VerifyOptions doubled = opts;
  std::vector<HuntResult> out;
  for (size_t k = 0; k < keep.size(); ++k) {
    doubled.precision_bits = 2 * kept[k].precision_bits;
    doubled.max_precision_bits = std::max(opts.max_precision_bits, doubled.precision_bits);
    if (verify_corollary(keep[k], doubled).status == VerdictStatus::EqualityCandidate)
      out.push_back({keep[k], kept[k]});
  }
  return out;
}

}  // namespace weil
