#include "weil/kernel/numbers.hpp"

#include <algorithm>

#include <cctype>

#include "weil/errors.hpp"

namespace weil {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_fixed(const Rational& q, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::max(digits, 0)));
  Rational scaled = abs(q) * scale + Rational(1, 2);
  Integer n = floor(scaled);
  std::string body = n.get_str();
  if (digits > 0) {
    if (static_cast<int>(body.size()) <= digits) body.insert(0, static_cast<size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<size_t>(digits), ".");
  }
  return (q < 0 && n != 0 ? "-" : "") + body;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view s = trim(text);
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("not an integer: '" + std::string(text) + "'");
  Integer z(std::string(s), 10);
  return neg ? Integer(-z) : z;
}

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(s.substr(0, slash));
    Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    return make_rational(num, den);
  }
  // decimal with optional exponent
  bool neg = false;
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    exponent = parse_integer(body.substr(e + 1)).get_si();
    body = body.substr(0, e);
  }
  std::string digits;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) ||
        (ip.empty() && fp.empty()))
      throw ParseError("not a number: '" + std::string(text) + "'");
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(body)) throw ParseError("not a number: '" + std::string(text) + "'");
    digits = std::string(body);
  }
  Integer mant(digits, 10);
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational q = exponent >= 0 ? Rational(mant * ten_pow) : make_rational(mant, ten_pow);
  return neg ? Rational(-q) : q;
}

long bit_length(const Integer& z) {
  if (z == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2));
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational pow2(long e) {
  Integer p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
  return e >= 0 ? Rational(p) : make_rational(1, p);
}

Rational floor_dyadic(const Rational& q, long bits) {
  Rational scaled = q * pow2(bits);
  return Rational(floor(scaled)) * pow2(-bits);
}

Rational ceil_dyadic(const Rational& q, long bits) {
  Rational scaled = q * pow2(bits);
  return Rational(ceil(scaled)) * pow2(-bits);
}

namespace {

// floor(sqrt(q * 4^bits)) with exactness flag
Integer scaled_isqrt(const Rational& q, long bits, bool& exact) {
  Rational s = q * pow2(2 * bits);
  Integer fl = floor(s);
  Integer r;
  mpz_sqrt(r.get_mpz_t(), fl.get_mpz_t());
  exact = (r * r == fl) && (Rational(fl) == s);
  return r;
}

}  // namespace

Rational sqrt_lower(const Rational& q, long bits) {
  if (q < 0) throw DomainError("sqrt of negative rational");
  bool exact = false;
  Integer r = scaled_isqrt(q, bits, exact);
  return Rational(r) * pow2(-bits);
}

Rational sqrt_upper(const Rational& q, long bits) {
  if (q < 0) throw DomainError("sqrt of negative rational");
  bool exact = false;
  Integer r = scaled_isqrt(q, bits, exact);
  if (!exact) r += 1;
  return Rational(r) * pow2(-bits);
}

long floor_log2(const Rational& q) {
  if (q == 0) throw DomainError("log2 of zero");
  Rational a = abs(q);
  long e = bit_length(a.get_num()) - bit_length(a.get_den());
  // 2^e is within a factor 2 of a; fix up
  while (a < pow2(e)) --e;
  while (a >= pow2(e + 1)) ++e;
  return e;
}

}  // namespace weil
