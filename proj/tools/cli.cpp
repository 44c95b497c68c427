#include "weil/cli/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "weil/errors.hpp"
#include "weil/heights/heights.hpp"
#include "weil/io/json.hpp"
#include "weil/search/search.hpp"

namespace weil::cli {

namespace {

using io::Json;

struct RunConfig {
  long precision = 64;
  std::string format = "json";
  int jobs = 1;
  int degree_cap = 64;
};

VerifyOptions verify_options(const RunConfig& c) {
  VerifyOptions o;
  o.precision_bits = c.precision;
  o.max_precision_bits = std::max<long>(4096, c.precision);
  o.arithmetic.degree_cap = c.degree_cap;
  return o;
}

int exit_code(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Holds:
    case VerdictStatus::EqualityCandidate: return kHolds;
    case VerdictStatus::ViolatedHypotheses:
    case VerdictStatus::NotApplicable: return kNotApplicable;
    case VerdictStatus::UndecidedAtPrecision: return kUndecided;
    case VerdictStatus::ViolatedInequality: return kCounterexample;
  }
  return kError;
}

// inline JSON or a path
Json load(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return io::parse_json(arg);
  return io::read_json_file(arg);
}

void render_text(const Json& j, const std::string& key, std::ostream& out) {
  if (j.is_object()) {
    if (!key.empty() && j.contains("value") && j.contains("pm")) {
      out << key << ": " << j["value"].get<std::string>() << " ± " << j["pm"].get<std::string>() << "\n";
      return;
    }
    if (!key.empty() && j.contains("approx") && j.contains("minpoly")) {
      out << key << ": " << j["approx"].get<std::string>() << "  root of " << j["minpoly"].dump() << "\n";
      return;
    }
    for (const auto& [k, v] : j.items()) render_text(v, key.empty() ? k : key + "." + k, out);
    return;
  }
  if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
    if (flat) {
      out << key << ": " << j.dump() << "\n";
      return;
    }
    for (size_t i = 0; i < j.size(); ++i) render_text(j[i], key + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << key << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

void emit(const Json& j, const RunConfig& c, std::ostream& out) {
  if (c.format == "text")
    render_text(j, "", out);
  else
    out << j.dump(2) << "\n";
}

AlgebraicNumber algebraic_arg(const std::string& text, const std::string& root) {
  if (!root.empty()) return io::parse_algebraic(text + "@" + root);
  return io::parse_algebraic(text);
}

Rational eps_for(const RunConfig& c) { return pow2(-c.precision); }

int cmd_mahler(const RunConfig& c, const std::string& poly, std::ostream& out) {
  IntPoly f = parse_poly(poly);
  Json j;
  j["poly"] = io::to_json(f);
  const Interval m = mahler_measure(f, eps_for(c));
  j["mahler"] = io::to_json(m);
  emit(j, c, out);
  return kHolds;
}

int cmd_height(const RunConfig& c, const std::string& arg, const std::string& root, std::ostream& out) {
  Json j;
  if (arg.ends_with(".json") || arg.starts_with("{") || arg.starts_with("[")) {
    Json in = load(arg);
    if (in.is_array() || in.contains("blocks")) {
      auto p = io::point_from_json(in);
      auto h = point_log_height(p, eps_for(c));
      j["point"] = io::to_json(p, c.precision);
      j["log_height"] = io::to_json(h.log_height);
      j["precision_bits"] = h.precision_bits;
      emit(j, c, out);
      return kHolds;
    }
    auto a = io::algebraic_from_json(in);
    auto h = weil_log_height(a, eps_for(c));
    j["alpha"] = io::to_json(a, c.precision);
    j["log_height"] = io::to_json(h.log_height);
    j["precision_bits"] = h.precision_bits;
    emit(j, c, out);
    return kHolds;
  }
  auto a = algebraic_arg(arg, root);
  auto h = weil_log_height(a, eps_for(c));
  j["alpha"] = io::to_json(a, c.precision);
  j["log_height"] = io::to_json(h.log_height);
  j["precision_bits"] = h.precision_bits;
  emit(j, c, out);
  return kHolds;
}

Json violations_json(const ValidationReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations)
    v.push_back({{"kind", to_string(x.kind)}, {"monomial", x.monomial}, {"message", x.message}});
  return v;
}

int cmd_constants(const RunConfig& c, const std::string& path, std::ostream& out) {
  auto [f, e] = io::polynomial_from_json(load(path));
  auto report = validate(f, e);
  if (!report.ok()) {
    emit(Json{{"violations", violations_json(report)}}, c, out);
    return kNotApplicable;
  }
  emit(io::to_json(bound_constants(f, e, c.precision), c.precision), c, out);
  return kHolds;
}

int cmd_rho(const RunConfig& c, const std::string& cf, const std::string& delta, std::ostream& out) {
  auto t = threshold(Integer(cf), parse_rational(delta), c.precision);
  Json j = io::to_json(t.rho, c.precision);
  j["C_F"] = io::to_json(Integer(cf));
  j["delta"] = io::to_json(parse_rational(delta));
  j["log_rho"] = io::to_json(t.log_rho);
  emit(j, c, out);
  return kHolds;
}

int cmd_lemma33(const RunConfig& c, const std::string& a, const std::string& b, const std::string& g,
                std::ostream& out) {
  auto s = entropy_minimize(parse_rational(a), parse_rational(b), parse_rational(g));
  emit(io::to_json(s), c, out);
  return s.consistent ? kHolds : kUndecided;
}

int cmd_verify(const RunConfig& c, const std::string& fpath, const std::string& ppath, std::ostream& out) {
  auto [f, e] = io::polynomial_from_json(load(fpath));
  auto x = io::point_from_json(load(ppath));
  auto v = verify_theorem(f, e, x, verify_options(c));
  emit(io::to_json(v), c, out);
  return exit_code(v.status);
}

int cmd_corollary(const RunConfig& c, const std::string& path, std::ostream& out) {
  Json in = load(path);
  if (!in.is_array()) {
    auto v = verify_corollary(io::instance_from_json(in), verify_options(c));
    emit(io::to_json(v), c, out);
    return exit_code(v.status);
  }
  std::vector<CorollaryInstance> insts;
  for (const auto& item : in) insts.push_back(io::instance_from_json(item));
  auto verdicts = verify_corollary_batch(insts, verify_options(c), c.jobs);
  Json arr = Json::array();
  int code = kHolds;
  for (const auto& v : verdicts) {
    arr.push_back(io::to_json(v));
    code = std::max(code, exit_code(v.status));
  }
  emit(arr, c, out);
  return code;
}

int cmd_schinzel(const RunConfig& c, const std::string& arg, const std::string& root, std::ostream& out) {
  auto v = schinzel_check(algebraic_arg(arg, root), verify_options(c));
  emit(io::to_json(v), c, out);
  return exit_code(v.status);
}

struct SearchArgs {
  std::string space;
  int hunt = 0;
  std::string checkpoint;
  std::string records;
  std::uint64_t stop_after = 0;
  int top = 10;
};

int cmd_search(const RunConfig& c, const SearchArgs& a, std::ostream& out) {
  SearchSpace s = space_from_json(load(a.space));
  s.precision_bits = c.precision;
  if (a.hunt) {
    auto found = equality_hunt(a.hunt, s, verify_options(c), c.jobs);
    Json j;
    j["r"] = a.hunt;
    j["space"] = to_json(s);
    Json res = Json::array();
    for (const auto& h : found) res.push_back({{"instance", io::to_json(h.instance, c.precision)}, {"verdict", io::to_json(h.verdict)}});
    j["results"] = res;
    emit(j, c, out);
    return kHolds;
  }
  SurveyOptions so;
  so.jobs = c.jobs;
  so.checkpoint_dir = a.checkpoint;
  so.stop_after = a.stop_after;
  auto r = min_height_survey(s, so);
  if (!a.records.empty()) {
    std::ofstream f(a.records, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write " + a.records);
    for (const auto& rec : r.records) f << to_json(rec).dump() << "\n";
  }
  Json j;
  j["space"] = to_json(s);
  j["space_hash"] = space_hash(s);
  j["finished"] = r.finished;
  j["stats"] = to_json(r.stats);
  Json mins = Json::array();
  for (const auto& rec : r.minimum) mins.push_back(to_json(rec));
  j["minimum"] = mins;
  j["separated"] = r.separated;
  Json classes = Json::array();
  for (const auto& cls : r.minimum_classes) {
    Json k = Json::array();
    for (const auto& p : cls) k.push_back(io::to_json(p));
    classes.push_back(k);
  }
  j["minimum_classes"] = classes;
  Json top = Json::array();
  for (size_t i = 0; i < r.records.size() && static_cast<int>(i) < a.top; ++i) top.push_back(to_json(r.records[i]));
  j["top"] = top;
  emit(j, c, out);
  return kHolds;
}

struct SpotArgs {
  std::string poly;
  std::string b;
  int trials = 32;
  int steps = 400;
  std::uint64_t seed = 0x5eed;
};

int cmd_spotcheck(const RunConfig& c, const SpotArgs& a, std::ostream& out) {
  auto [f, e] = io::polynomial_from_json(load(a.poly));
  auto report = validate(f, e);
  if (!report.ok()) {
    emit(Json{{"violations", violations_json(report)}}, c, out);
    return kNotApplicable;
  }
  auto k = bound_constants(f, e, c.precision);
  Rational b;
  if (!a.b.empty()) {
    b = parse_rational(a.b);
  } else {
    b = optimal_b(k.delta, k.c_f).b;
    if (auto cap = max_feasible_b(f, e)) b = std::min(b, *cap);
  }
  auto scheme = weight_scheme(f, e, b);
  SpotcheckOptions so;
  so.trials = a.trials;
  so.steps = a.steps;
  so.seed = a.seed;
  so.neg_log_rho = -k.threshold.log_rho.midpoint().get_d();
  Json j;
  j["weights"] = io::to_json(scheme);
  j["report"] = io::to_json(phi_spotcheck(f, scheme, so));
  emit(j, c, out);
  return kHolds;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heights of zeros of multihomogeneous polynomials: certified bounds and searches", "weilht"};
  app.require_subcommand(1);
  RunConfig c;
  auto* precision = app.add_option("--precision", c.precision, "working precision in bits (default $WEILHT_PRECISION or 64)");
  app.add_option("--format", c.format)->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", c.jobs)->check(CLI::Range(1, 1024));
  app.add_option("--degree-cap", c.degree_cap, "largest composite degree in algebraic arithmetic")
      ->check(CLI::Range(1, 4096));

  std::string p1, p2, root, cf, delta, alpha, beta, gamma;
  auto* mahler = app.add_subcommand("mahler", "Mahler measure of an integer polynomial");
  mahler->add_option("poly", p1)->required();
  auto* height = app.add_subcommand("height", "log Weil height of an algebraic number or projective point");
  height->add_option("alpha", p1, "algebraic number text, JSON, or point JSON")->required();
  height->add_option("--root", root, "approximate root selecting a conjugate of a polynomial");
  auto* constants = app.add_subcommand("constants", "delta, C_F, rho for an F document");
  constants->add_option("F", p1)->required();
  auto* rho = app.add_subcommand("rho", "threshold rho(C_F, delta)");
  rho->add_option("--cf", cf)->required();
  rho->add_option("--delta", delta)->required();
  auto* lemma = app.add_subcommand("lemma33", "entropy minimum against the root rho'");
  lemma->add_option("--alpha", alpha)->required();
  lemma->add_option("--beta", beta)->required();
  lemma->add_option("--gamma", gamma)->required();
  auto* verify = app.add_subcommand("verify", "check the height inequality at a zero of F");
  verify->add_option("F", p1)->required();
  verify->add_option("point", p2)->required();
  auto* corollary = app.add_subcommand("corollary", "alpha_1 + ... + alpha_r = N instance(s)");
  corollary->add_option("instance", p1)->required();
  auto* schinzel = app.add_subcommand("schinzel", "the r = 1 case for a totally real algebraic integer");
  schinzel->add_option("alpha", p1)->required();
  schinzel->add_option("--root", root);
  SearchArgs sa;
  auto* search = app.add_subcommand("search", "exhaustive minimal height survey or equality hunt");
  search->add_option("space", sa.space)->required();
  search->add_option("--hunt", sa.hunt, "equality hunt with r terms")->check(CLI::Range(1, 2));
  search->add_option("--checkpoint", sa.checkpoint, "directory for records.jsonl and cursor.json");
  search->add_option("--records", sa.records, "write all records as JSON lines");
  search->add_option("--stop-after", sa.stop_after, "candidates to process before stopping");
  search->add_option("--top", sa.top)->check(CLI::NonNegativeNumber);
  SpotArgs spa;
  auto* spot = app.add_subcommand("spotcheck", "numerical scan of the phi supremum");
  spot->add_option("F", spa.poly)->required();
  spot->add_option("--b", spa.b);
  spot->add_option("--trials", spa.trials)->check(CLI::PositiveNumber);
  spot->add_option("--steps", spa.steps)->check(CLI::PositiveNumber);
  spot->add_option("--seed", spa.seed);
  for (auto* s : app.get_subcommands({})) s->fallthrough();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }
  if (const char* env = std::getenv("WEILHT_PRECISION"); env && precision->count() == 0) {
    try {
      size_t used = 0;
      c.precision = std::stol(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      err << "weilht: WEILHT_PRECISION is not an integer\n";
      return kUsage;
    }
  }
  if (c.precision < 32 || c.precision > (1L << 20)) {
    err << "weilht: precision must be between 32 and 1048576 bits\n";
    return kUsage;
  }

  try {
    if (*mahler) return cmd_mahler(c, p1, out);
    if (*height) return cmd_height(c, p1, root, out);
    if (*constants) return cmd_constants(c, p1, out);
    if (*rho) return cmd_rho(c, cf, delta, out);
    if (*lemma) return cmd_lemma33(c, alpha, beta, gamma, out);
    if (*verify) return cmd_verify(c, p1, p2, out);
    if (*corollary) return cmd_corollary(c, p1, out);
    if (*schinzel) return cmd_schinzel(c, p1, root, out);
    if (*search) return cmd_search(c, sa, out);
    if (*spot) return cmd_spotcheck(c, spa, out);
  } catch (const weil::ParseError& e) {
    err << "weilht: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    err << "weilht: " << e.what() << "\n";
    return kError;
  }
  return kUsage;
}

}  // namespace weil::cli
