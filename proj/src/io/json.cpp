#include "weil/io/json.hpp"

#include <fstream>
#include <sstream>

#include "weil/errors.hpp"

namespace weil::io {

namespace {

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, size_t k) { return where + "/" + std::to_string(k); }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError("expected an object", where.empty() ? "/" : where);
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"", where.empty() ? "/" : where);
  return *it;
}

const Json& array_at(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError("expected an array", where.empty() ? "/" : where);
  return j;
}

int int_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError("expected an integer", where);
  return j.get<int>();
}

Json pair(const Interval& iv) { return Json::array({to_string(iv.lo), to_string(iv.hi)}); }

Interval interval_from_pair(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected [lo, hi]", where);
  Rational lo = rational_from_json(j[0], at(where, 0)), hi = rational_from_json(j[1], at(where, 1));
  if (lo > hi) throw ParseError("interval with lo > hi", where);
  return Interval(lo, hi);
}

std::string approx_text(const AlgebraicNumber& a, long bits) {
  if (auto q = a.as_rational()) {
    if (q->get_den() == 1) return q->get_num().get_str();
  }
  ComplexBox b = approximate(a, pow2(-bits));
  const int digits = static_cast<int>(bits * 30103 / 100000);
  std::string s = to_decimal(b.re, digits).value;
  if (!a.is_real()) {
    std::string im = to_decimal(b.im, digits).value;
    s += (im[0] == '-' ? "" : "+") + im + "i";
  }
  return s;
}

// "a", "bi", "a+bi", "a-bi", "i", "-i"
std::pair<Rational, Rational> parse_complex(std::string s) {
  std::string t;
  for (char c : s)
    if (c != ' ') t += c;
  if (t.empty()) throw ParseError("empty approximation");
  if (t.back() != 'i') return {parse_rational(t), Rational(0)};
  t.pop_back();
  size_t split = std::string::npos;
  for (size_t k = t.size(); k-- > 1;)
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split = k;
      break;
    }
  auto im_of = [](const std::string& u) -> Rational {
    if (u.empty() || u == "+") return 1;
    if (u == "-") return -1;
    return parse_rational(u[0] == '+' ? u.substr(1) : u);
  };
  if (split == std::string::npos) return {Rational(0), im_of(t)};
  return {parse_rational(t.substr(0, split)), im_of(t.substr(split))};
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), "byte " + std::to_string(e.byte));
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const IntPoly& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const Interval& iv) {
  DecimalEnclosure d = to_decimal(iv);
  return Json{{"lo", to_string(iv.lo)}, {"hi", to_string(iv.hi)}, {"value", d.value}, {"pm", d.plus_minus}};
}

Json to_json(const AlgebraicNumber& a, long precision_bits) {
  Json out;
  out["minpoly"] = to_json(a.minpoly());
  out["index"] = root_index(a);
  out["root"] = Json{{"re", pair(a.location().region.re)}, {"im", pair(a.location().region.im)}};
  out["approx"] = approx_text(a, precision_bits);
  return out;
}

Json to_json(const MultihomogeneousPolynomial& f, const ExceptionalSet& e) {
  Json out;
  out["shape"] = f.shape();
  out["degrees"] = f.degrees();
  Json blocks = Json::array();
  for (int i : e.blocks) blocks.push_back(i + 1);
  out["I"] = blocks;
  Json ms = Json::array();
  for (const auto& m : f.monomials()) {
    Json coeff;
    auto q = m.coeff.as_rational();
    if (q && q->get_den() == 1) coeff = to_json(q->get_num());
    else if (q) coeff = to_json(*q);
    else coeff = to_json(m.coeff);
    ms.push_back(Json{{"exp", m.exponents}, {"coeff", coeff}});
  }
  out["monomials"] = ms;
  return out;
}

Json to_json(const MultiProjectivePoint& p, long precision_bits) {
  Json blocks = Json::array();
  for (const auto& b : p.blocks) {
    Json row = Json::array();
    for (const auto& c : b) {
      auto q = c.as_rational();
      row.push_back(q ? to_json(*q) : to_json(c, precision_bits));
    }
    blocks.push_back(row);
  }
  return Json{{"blocks", blocks}};
}

Json to_json(const CorollaryInstance& inst, long precision_bits) {
  Json alphas = Json::array();
  for (const auto& a : inst.alphas) alphas.push_back(to_json(a, precision_bits));
  return Json{{"alphas", alphas}, {"N", to_json(inst.n, precision_bits)}};
}

Json to_json(const Threshold& t, long precision_bits) {
  return Json{{"rho", to_json(t.rho, precision_bits)}, {"log_rho", to_json(t.log_rho)}};
}

Json to_json(const BoundConstants& k, long precision_bits) {
  Json out;
  out["d_ij"] = k.d;
  out["d_tilde"] = k.d_tilde;
  out["delta"] = to_string(k.delta);
  Json c = Json::array();
  for (const auto& [ij, v] : k.c) c.push_back(Json{{"i", ij.first + 1}, {"j", ij.second}, {"value", to_json(v)}});
  out["c"] = c;
  out["C_F"] = to_json(k.c_f);
  out["rho"] = to_json(k.threshold.rho, precision_bits);
  out["log_rho"] = to_json(k.threshold.log_rho);
  return out;
}

Json to_json(const Verdict& v) {
  Json out;
  out["statement"] = to_string(v.statement);
  out["status"] = to_string(v.status);
  Json hs = Json::array();
  for (const auto& h : v.hypotheses) {
    const char* r = h.result == Check::Pass ? "pass" : h.result == Check::Fail ? "fail" : "undecided";
    Json e{{"name", h.name}, {"result", r}};
    if (!h.witness.empty()) e["witness"] = h.witness;
    hs.push_back(e);
  }
  out["hypotheses"] = hs;
  if (v.lhs) {
    out["lhs"] = to_json(*v.lhs);
    out["log_rho"] = to_json(*v.log_rho);
    out["margin"] = to_json(*v.margin);
    out["delta"] = to_string(v.delta);
    out["C_F"] = to_json(v.c_f);
  }
  out["precision_bits"] = v.precision_bits;
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

Json to_json(const EntropyMinimum& s) {
  return Json{{"u", to_string(s.u)},
              {"v", to_string(s.v)},
              {"l", to_json(s.minimum)},
              {"rho_prime", to_json(s.rho_prime)},
              {"consistent", s.consistent}};
}

Json to_json(const OptimalB& o) { return Json{{"b", to_string(o.b)}, {"bound", to_json(o.bound)}}; }

Json to_json(const WeightScheme& w) {
  Json a = Json::array();
  for (const auto& [ij, v] : w.a) a.push_back(Json{{"i", ij.first + 1}, {"j", ij.second}, {"value", to_string(v)}});
  Json weights = Json::array();
  for (const auto& x : w.weights) weights.push_back(to_string(x));
  return Json{{"b", to_string(w.b)}, {"a", a}, {"weights", weights}};
}

Json to_json(const PhiReport& r) {
  Json out;
  out["feasible"] = r.feasible;
  if (r.feasible) {
    out["best_phi"] = r.best_phi;
    out["moduli"] = r.moduli;
    out["unit_structure"] = r.unit_structure;
    out["below_threshold"] = r.below_threshold;
  }
  return out;
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(e.what(), where);
    }
  }
  throw ParseError("expected an integer or a rational string", where);
}

Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(e.what(), where);
    }
  }
  throw ParseError("expected an integer", where);
}

IntPoly poly_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_poly(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(e.what(), where);
    }
  }
  array_at(j, where);
  std::vector<Integer> c;
  for (size_t k = 0; k < j.size(); ++k) c.push_back(integer_from_json(j[k], at(where, k)));
  return IntPoly(std::move(c));
}

AlgebraicNumber algebraic_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer() || j.is_string()) {
      if (j.is_number_integer()) return AlgebraicNumber::from_rational(Rational(j.get<long>()));
      return parse_algebraic(j.get<std::string>());
    }
    const IntPoly f = poly_from_json(member(j, "minpoly", where), at(where, "minpoly"));
    if (f.degree() < 1) throw ParseError("minimal polynomial must have degree >= 1", at(where, "minpoly"));
    if (j.contains("index")) {
      return AlgebraicNumber::root_by_index(f, int_from_json(j["index"], at(where, "index")));
    }
    if (j.contains("root")) {
      const Json& r = j["root"];
      Interval re = interval_from_pair(member(r, "re", at(where, "root")), at(where, "root/re"));
      Interval im = r.contains("im") ? interval_from_pair(r["im"], at(where, "root/im")) : Interval();
      return AlgebraicNumber::root_in(f, ComplexBox(re, im));
    }
    if (j.contains("approx")) {
      auto [re, im] = parse_complex(j["approx"].get<std::string>());
      return AlgebraicNumber::nearest_root(f, re, im);
    }
    throw ParseError("algebraic number needs \"index\", \"root\" or \"approx\"", where);
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    throw ParseError(e.what(), where.empty() ? "/" : where);
  }
}

std::pair<MultihomogeneousPolynomial, ExceptionalSet> polynomial_from_json(const Json& j) {
  auto ints = [](const Json& a, const std::string& where) {
    array_at(a, where);
    std::vector<int> out;
    for (size_t k = 0; k < a.size(); ++k) out.push_back(int_from_json(a[k], at(where, k)));
    return out;
  };
  std::vector<int> shape = ints(member(j, "shape", ""), "/shape");
  std::vector<int> degrees = ints(member(j, "degrees", ""), "/degrees");
  ExceptionalSet e;
  if (j.contains("I"))
    for (int i : ints(j["I"], "/I")) {
      if (i < 1) throw ParseError("block indices in I are 1-based", "/I");
      e.blocks.insert(i - 1);
    }
  const Json& ms = array_at(member(j, "monomials", ""), "/monomials");
  std::vector<Monomial> monomials;
  for (size_t k = 0; k < ms.size(); ++k) {
    const std::string w = at("/monomials", k);
    const Json& exp = array_at(member(ms[k], "exp", w), at(w, "exp"));
    ExponentMatrix m;
    for (size_t i = 0; i < exp.size(); ++i) m.push_back(ints(exp[i], at(at(w, "exp"), i)));
    monomials.push_back({m, algebraic_from_json(member(ms[k], "coeff", w), at(w, "coeff"))});
  }
  try {
    return {MultihomogeneousPolynomial(shape, degrees, std::move(monomials)), e};
  } catch (const DomainError& err) {
    throw ParseError(err.what(), "/monomials");
  }
}

MultiProjectivePoint point_from_json(const Json& j, const std::string& where) {
  const bool wrapped = j.is_object();
  const Json& blocks = wrapped ? member(j, "blocks", where) : j;
  const std::string w = wrapped ? at(where, "blocks") : where;
  array_at(blocks, w);
  MultiProjectivePoint p;
  for (size_t i = 0; i < blocks.size(); ++i) {
    array_at(blocks[i], at(w, i));
    auto& row = p.blocks.emplace_back();
    for (size_t k = 0; k < blocks[i].size(); ++k) row.push_back(algebraic_from_json(blocks[i][k], at(at(w, i), k)));
  }
  return p;
}

CorollaryInstance instance_from_json(const Json& j) {
  const Json& as = array_at(member(j, "alphas", ""), "/alphas");
  CorollaryInstance inst;
  for (size_t k = 0; k < as.size(); ++k) inst.alphas.push_back(algebraic_from_json(as[k], at("/alphas", k)));
  if (j.contains("N")) {
    inst.n = algebraic_from_json(j["N"], "/N");
  } else {
    AlgebraicNumber s;
    for (const auto& a : inst.alphas) s = s + a;
    inst.n = s;
  }
  return inst;
}

AlgebraicNumber parse_algebraic(std::string_view text) {
  const auto sep = text.find('@');
  if (sep == std::string_view::npos) return AlgebraicNumber::from_rational(parse_rational(text));
  const IntPoly f = parse_poly(text.substr(0, sep));
  if (f.degree() < 1) throw ParseError("polynomial has no roots", std::string(text));
  std::string rest(text.substr(sep + 1));
  try {
    if (!rest.empty() && rest[0] == '#') {
      const Integer k = parse_integer(rest.substr(1));
      if (!k.fits_sint_p()) throw ParseError("root index out of range", rest);
      return AlgebraicNumber::root_by_index(f, static_cast<int>(k.get_si()));
    }
    auto [re, im] = parse_complex(rest);
    return AlgebraicNumber::nearest_root(f, re, im);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), std::string(text));
  }
}

}  // namespace weil::io
