#include "badgame/quad.hpp"

#include <cmath>

#include "badgame/errors.hpp"

namespace badgame {

namespace {

int sgn(const Rational& x) {
  int s = ::sgn(x);
  return s < 0 ? -1 : (s > 0 ? 1 : 0);
}

// log|x| for a nonzero rational without overflowing doubles.
double log_abs(const Rational& x) {
  long en = 0;
  long ed = 0;
  double mn = mpz_get_d_2exp(&en, x.get_num_mpz_t());
  double md = mpz_get_d_2exp(&ed, x.get_den_mpz_t());
  return std::log(std::fabs(mn)) - std::log(md) + static_cast<double>(en - ed) * std::log(2.0);
}

}  // namespace

Quad::Quad(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

int Quad::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a^2 and 2b^2 wins; they never tie.
  int c = cmp(a_ * a_, 2 * b_ * b_);
  return c > 0 ? sa : sb;
}

Quad Quad::inverse() const {
  Rational n = norm();
  if (n == 0) throw DomainError("division by zero in Q(sqrt 2)");
  return Quad(a_ / n, -b_ / n);
}

Quad Quad::pow(unsigned long exponent) const {
  Quad result(1);
  Quad base = *this;
  while (exponent > 0) {
    if (exponent & 1UL) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

double Quad::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(2.0);
}

long double Quad::to_long_double() const {
  // Long double keeps the rounding error below what the float filters need.
  auto ld = [](const Rational& r) {
    long en = 0;
    long ed = 0;
    double mn = mpz_get_d_2exp(&en, r.get_num_mpz_t());
    double md = mpz_get_d_2exp(&ed, r.get_den_mpz_t());
    return std::ldexp(static_cast<long double>(mn) / md, static_cast<int>(en - ed));
  };
  return ld(a_) + ld(b_) * std::sqrt(2.0L);
}

double Quad::log() const {
  if (sign() <= 0) throw DomainError("log of a nonpositive value");
  if (b_ == 0) return log_abs(a_);
  if (a_ == 0) return log_abs(b_) + 0.5 * std::log(2.0);
  // a + b sqrt2 = norm / (a - b sqrt2); use whichever form avoids cancellation.
  if (sgn(a_) == sgn(b_)) {
    double la = log_abs(a_);
    double lb = log_abs(b_) + 0.5 * std::log(2.0);
    double hi = std::max(la, lb);
    return hi + std::log1p(std::exp(std::min(la, lb) - hi));
  }
  return log_abs(norm()) - conjugate().log();
}

std::string Quad::to_string() const {
  if (b_ == 0) return a_.get_str();
  std::string s;
  if (a_ != 0) s = a_.get_str() + (sgn(b_) > 0 ? "+" : "-");
  else if (sgn(b_) < 0) s = "-";
  Rational mag = ::abs(b_);
  if (mag != 1) s += mag.get_str() + "*";
  return s + "sqrt2";
}

Quad& Quad::operator+=(const Quad& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Quad& Quad::operator-=(const Quad& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Quad& Quad::operator*=(const Quad& o) {
  Rational na = a_ * o.a_ + 2 * b_ * o.b_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

Quad& Quad::operator/=(const Quad& o) {
  if (o.b_ == 0) {
    if (o.a_ == 0) throw DomainError("division by zero in Q(sqrt 2)");
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

std::strong_ordering operator<=>(const Quad& x, const Quad& y) { return quad_cmp(x, y); }

std::strong_ordering quad_cmp(const Quad& x, const Quad& y) {
  if (x.a() == y.a() && x.b() == y.b()) return std::strong_ordering::equal;
  int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

Integer floor_quad(const Quad& x) {
  // x = (A + B sqrt2) / D with integers A, B and D > 0.
  Integer den = lcm(x.a().get_den(), x.b().get_den());
  Integer A = x.a().get_num() * (den / x.a().get_den());
  Integer B = x.b().get_num() * (den / x.b().get_den());
  Integer s;  // floor(B sqrt2)
  if (B == 0) {
    s = 0;
  } else if (B > 0) {
    s = isqrt(2 * B * B);
  } else {
    // 2B^2 is never a perfect square, so ceil(sqrt) = isqrt + 1.
    s = -(isqrt(2 * B * B) + 1);
  }
  // A + B sqrt2 lies in [A+s, A+s+1); no multiple of den falls strictly inside.
  Integer q;
  Integer n = A + s;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), den.get_mpz_t());
  return q;
}

Integer ceil_quad(const Quad& x) { return -floor_quad(-x); }

Integer floor_scaled(const Quad& x, unsigned bits) {
  Integer scale = pow_int(2, bits);
  return floor_quad(x * Quad(Rational(scale)));
}

Quad min(const Quad& x, const Quad& y) { return x <= y ? x : y; }
Quad max(const Quad& x, const Quad& y) { return x >= y ? x : y; }

}  // namespace badgame
