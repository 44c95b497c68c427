#include "weil/kernel/int_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "weil/errors.hpp"

namespace weil {

namespace {
const Integer kZero = 0;
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, int k) {
  std::vector<Integer> v(static_cast<size_t>(k) + 1, Integer(0));
  v[static_cast<size_t>(k)] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::linear_root(const Rational& r) {
  return IntPoly(std::vector<Integer>{-r.get_num(), r.get_den()});
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer IntPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return c_[static_cast<size_t>(k)];
}

const Integer& IntPoly::leading() const { return c_.empty() ? kZero : c_.back(); }
const Integer& IntPoly::constant_term() const { return c_.empty() ? kZero : c_.front(); }

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.c_.size() + b.c_.size() - 1, Integer(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const Integer& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPoly IntPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Integer> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  IntPoly r = *this;
  if (g != 1)
    for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

IntPoly IntPoly::canonical() const {
  IntPoly r = primitive_part();
  if (!r.is_zero() && r.leading() < 0) r = -r;
  return r;
}

IntPoly IntPoly::reversed() const {
  std::vector<Integer> r(c_.rbegin(), c_.rend());
  return IntPoly(std::move(r));
}

IntPoly IntPoly::negated_variable() const {
  IntPoly r = *this;
  for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

IntPoly IntPoly::taylor_shift(const Integer& a) const {
  std::vector<Integer> c = c_;
  const size_t n = c.size();
  if (a == 0 || n < 2) return IntPoly(std::move(c));
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = n - 1; j > i; --j) c[j - 1] += a * c[j];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::scale_variable(const Rational& q) const {
  // den^n * f(num/den x) = sum c_k num^k den^(n-k) x^k
  if (q == 0) throw DomainError("scale_variable by zero");
  const int n = degree();
  std::vector<Integer> r(c_.size());
  Integer np = 1;
  std::vector<Integer> dp(static_cast<size_t>(n) + 1);
  if (n >= 0) {
    dp[0] = 1;
    for (int k = 1; k <= n; ++k) dp[static_cast<size_t>(k)] = dp[static_cast<size_t>(k) - 1] * q.get_den();
  }
  for (int k = 0; k <= n; ++k) {
    r[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)] * np * dp[static_cast<size_t>(n - k)];
    np *= q.get_num();
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::shift_variable(const Rational& q) const {
  // den^n f(x + num/den) = g(den x + num) where g(y) = den^n f(y/den)
  const int n = degree();
  if (n < 1 || q == 0) return *this;
  IntPoly g = scale_variable(make_rational(1, q.get_den()));  // den^n f(y/den)
  g = g.taylor_shift(q.get_num());                             // g(y + num)
  return g.scale_variable(Rational(q.get_den()));              // y = den x
}

IntPoly IntPoly::inflate(int k) const {
  if (k < 1) throw DomainError("inflate exponent must be positive");
  if (is_zero()) return {};
  std::vector<Integer> r(static_cast<size_t>(degree() * k) + 1, Integer(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i * static_cast<size_t>(k)] = c_[i];
  return IntPoly(std::move(r));
}

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPoly::eval(const Rational& x) const {
  // Horner on num/den with a common denominator den^n
  const Integer& p = x.get_num();
  const Integer& q = x.get_den();
  if (c_.empty()) return 0;
  Integer acc = 0, qpow = 1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * p + *it * qpow;
    qpow *= q;
  }
  // acc = q^n f(p/q) with n = degree, qpow = q^(n+1)
  return make_rational(acc * q, qpow);
}

int IntPoly::sign_at(const Rational& x) const {
  const Integer& p = x.get_num();
  const Integer& q = x.get_den();
  Integer acc = 0, qpow = 1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * p + *it * qpow;
    qpow *= q;
  }
  return sgn(acc);
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Integer& c = c_[static_cast<size_t>(k)];
    if (c == 0) continue;
    Integer a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "x";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

PseudoDivision pseudo_divrem(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  const int m = g.degree();
  if (f.degree() < m) return {IntPoly{}, f};
  std::vector<Integer> r = f.coeffs();
  const int n = f.degree();
  std::vector<Integer> q(static_cast<size_t>(n - m) + 1, Integer(0));
  const Integer& lc = g.leading();
  const auto& gc = g.coeffs();
  for (int k = n - m; k >= 0; --k) {
    // multiply everything by lc, then eliminate the top term
    for (auto& c : q) c *= lc;
    Integer t = r[static_cast<size_t>(k + m)];
    for (auto& c : r) c *= lc;
    q[static_cast<size_t>(k)] += t;
    for (int j = 0; j <= m; ++j) r[static_cast<size_t>(k + j)] -= t * gc[static_cast<size_t>(j)];
  }
  r.resize(static_cast<size_t>(m));
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

std::optional<IntPoly> exact_divide(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  if (f.is_zero()) return IntPoly{};
  const int n = f.degree(), m = g.degree();
  if (n < m) return std::nullopt;
  std::vector<Integer> r = f.coeffs();
  std::vector<Integer> q(static_cast<size_t>(n - m) + 1, Integer(0));
  const Integer& lc = g.leading();
  const auto& gc = g.coeffs();
  for (int k = n - m; k >= 0; --k) {
    const Integer& top = r[static_cast<size_t>(k + m)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    Integer t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    q[static_cast<size_t>(k)] = t;
    for (int j = 0; j <= m; ++j) r[static_cast<size_t>(k + j)] -= t * gc[static_cast<size_t>(j)];
  }
  for (int j = 0; j < m; ++j)
    if (r[static_cast<size_t>(j)] != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

IntPoly gcd(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero()) return g.canonical();
  if (g.is_zero()) return f.canonical();
  IntPoly a = f.primitive_part(), b = g.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_divrem(a, b).remainder;
    a = std::move(b);
    b = r.primitive_part();
  }
  return a.canonical();
}

bool canonical_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                      b.coeffs().end());
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  IntPoly parse() {
    skip_ws();
    if (peek() == '[') return parse_list();
    std::vector<Integer> coeffs;
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [c, k] = parse_term();
      if (coeffs.size() <= static_cast<size_t>(k)) coeffs.resize(static_cast<size_t>(k) + 1, Integer(0));
      coeffs[static_cast<size_t>(k)] += sign * c;
    }
    if (first) fail("empty polynomial");
    return IntPoly(std::move(coeffs));
  }

 private:
  IntPoly parse_list() {
    get();  // '['
    std::vector<Integer> coeffs;
    skip_ws();
    if (peek() == ']') {
      get();
      return IntPoly{};
    }
    while (true) {
      skip_ws();
      coeffs.push_back(parse_signed_int());
      skip_ws();
      char c = get();
      if (c == ']') break;
      if (c != ',') fail("expected ',' or ']'");
    }
    skip_ws();
    if (!at_end()) fail("trailing characters");
    return IntPoly(std::move(coeffs));
  }

  std::pair<Integer, int> parse_term() {
    Integer c = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = parse_unsigned();
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        get();
        skip_ws();
        if (peek() != 'x') fail("expected 'x' after '*'");
      }
    }
    if (peek() != 'x') {
      if (!have_coeff) fail("expected a coefficient or 'x'");
      return {c, 0};
    }
    get();  // x
    skip_ws();
    int k = 1;
    if (peek() == '^') {
      get();
      skip_ws();
      Integer e = parse_unsigned();
      if (e > 100000) fail("exponent too large");
      k = static_cast<int>(e.get_si());
    }
    return {c, k};
  }

  Integer parse_signed_int() {
    bool neg = false;
    if (peek() == '-' || peek() == '+') neg = get() == '-';
    skip_ws();
    Integer v = parse_unsigned();
    return neg ? Integer(-v) : v;
  }

  Integer parse_unsigned() {
    size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(s_.substr(start, pos_ - start)), 10);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return at_end() ? '\0' : s_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial: " + msg, "offset " + std::to_string(pos_));
  }

  std::string_view s_;
  size_t pos_ = 0;
};

// Fraction-free Gaussian elimination (Bareiss); destroys m.
Integer bareiss_determinant(std::vector<std::vector<Integer>>& m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(t);
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

IntPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

Integer resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  const int n = f.degree(), m = g.degree();
  if (n == 0 && m == 0) return 1;
  if (n == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), f.leading().get_mpz_t(), static_cast<unsigned long>(m));
    return r;
  }
  if (m == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), g.leading().get_mpz_t(), static_cast<unsigned long>(n));
    return r;
  }
  const size_t size = static_cast<size_t>(n + m);
  std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, Integer(0)));
  // rows 0..m-1: shifts of f (descending coefficients), rows m..m+n-1: shifts of g
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = f.coeff(n - k);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k)
      s[static_cast<size_t>(m + r)][static_cast<size_t>(r + k)] = g.coeff(m - k);
  return bareiss_determinant(s);
}

Integer norm2_squared(const IntPoly& f) {
  Integer s = 0;
  for (const auto& c : f.coeffs()) s += c * c;
  return s;
}

Integer height(const IntPoly& f) {
  Integer h = 0;
  for (const auto& c : f.coeffs())
    if (abs(c) > h) h = abs(c);
  return h;
}

}  // namespace weil
