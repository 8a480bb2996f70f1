#include "badgame/rational.hpp"

#include <cmath>
#include <numeric>

#include "badgame/errors.hpp"

namespace badgame {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw DomainError("empty integer");
  std::string buf(s);
  if (buf.front() == '+') buf.erase(0, 1);
  std::size_t start = buf.front() == '-' ? 1 : 0;
  if (start == buf.size()) throw DomainError("malformed integer: " + buf);
  for (std::size_t i = start; i < buf.size(); ++i) {
    if (buf[i] < '0' || buf[i] > '9') throw DomainError("malformed integer: " + buf);
  }
  return Integer(buf, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in " + std::string(text));
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    Integer w = (whole.empty() || whole == "-" || whole == "+") ? Integer(0) : parse_integer(whole);
    if (frac.empty()) return Rational(w);
    Integer f = parse_integer(frac);
    if (f < 0) throw DomainError("malformed decimal: " + std::string(text));
    Integer scale = pow_int(10, frac.size());
    Rational r(abs(w) * scale + f, scale);
    if (negative) r = -r;
    r.canonicalize();
    return r;
  }
  return Rational(parse_integer(text));
}

std::string format_rational(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

Integer floor_of(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil_of(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

bool fits_int64(const Integer& x) { return mpz_fits_slong_p(x.get_mpz_t()) != 0; }

std::int64_t to_int64(const Integer& x) {
  if (!fits_int64(x)) throw DomainError("integer does not fit in 64 bits: " + x.get_str());
  return x.get_si();
}

Integer pow_int(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow_rat(const Rational& base, unsigned long exponent) {
  Rational r(pow_int(base.get_num(), exponent), pow_int(base.get_den(), exponent));
  r.canonicalize();
  return r;
}

Integer isqrt(const Integer& x) {
  if (x < 0) throw DomainError("isqrt of a negative number");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c) {
  return std::gcd(std::gcd(a, b), c);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

namespace {

using u128 = unsigned __int128;

// Returns false on overflow past 2^126.
bool mul_checked(u128& acc, std::uint64_t factor) {
  constexpr u128 kLimit = static_cast<u128>(1) << 126;
  if (factor == 0) {
    acc = 0;
    return true;
  }
  if (acc > kLimit / factor) return false;
  acc *= factor;
  return true;
}

bool pow_product_128(std::uint64_t a, unsigned ea, std::uint64_t b, unsigned eb, u128& out) {
  u128 acc = 1;
  for (unsigned i = 0; i < ea; ++i) {
    if (!mul_checked(acc, a)) return false;
  }
  for (unsigned i = 0; i < eb; ++i) {
    if (!mul_checked(acc, b)) return false;
  }
  out = acc;
  return true;
}

Integer big(std::uint64_t v) {
  Integer r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

}  // namespace

int cmp_power_products(std::uint64_t a, unsigned ea, std::uint64_t b, unsigned eb,
                       std::uint64_t c, unsigned ec, std::uint64_t d, unsigned ed) {
  u128 lhs = 0;
  u128 rhs = 0;
  if (pow_product_128(a, ea, b, eb, lhs) && pow_product_128(c, ec, d, ed, rhs)) {
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  }
  Integer l = pow_int(big(a), ea) * pow_int(big(b), eb);
  Integer r = pow_int(big(c), ec) * pow_int(big(d), ed);
  int s = cmp(l, r);
  return s < 0 ? -1 : (s > 0 ? 1 : 0);
}

}  // namespace badgame
