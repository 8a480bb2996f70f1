#pragma once

#include <compare>
#include <string>

#include "badgame/rational.hpp"

namespace badgame {

/// Exact element a + b*sqrt(2) of the real quadratic field Q(sqrt 2).
///
/// Every length, radius and threshold of the construction lives here: the
/// game ratio (24 sqrt 2)^-1, the scale factor R, level side lengths and the
/// height thresholds. Signs are decided without floating point: when a and b
/// have opposite signs the magnitudes are compared through a^2 versus 2b^2.
class Quad {
 public:
  Quad() = default;
  Quad(Rational a, Rational b = 0);  // NOLINT(google-explicit-constructor)
  Quad(long v) : Quad(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Quad(int v) : Quad(Rational(v)) {}   // NOLINT(google-explicit-constructor)

  static Quad sqrt2() { return Quad(0, 1); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_rational() const { return b_ == 0; }
  int sign() const;

  Quad conjugate() const { return Quad(a_, -b_); }
  // Field norm a^2 - 2b^2; zero only for zero.
  Rational norm() const { return a_ * a_ - 2 * b_ * b_; }
  Quad inverse() const;
  Quad pow(unsigned long exponent) const;
  Quad abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const;
  long double to_long_double() const;
  // Natural log of a positive value, accurate to about double precision even
  // when the value is far outside the double range.
  double log() const;

  std::string to_string() const;

  Quad operator-() const { return Quad(-a_, -b_); }
  Quad& operator+=(const Quad& o);
  Quad& operator-=(const Quad& o);
  Quad& operator*=(const Quad& o);
  Quad& operator/=(const Quad& o);

  friend Quad operator+(Quad x, const Quad& y) { return x += y; }
  friend Quad operator-(Quad x, const Quad& y) { return x -= y; }
  friend Quad operator*(Quad x, const Quad& y) { return x *= y; }
  friend Quad operator/(Quad x, const Quad& y) { return x /= y; }

  friend bool operator==(const Quad& x, const Quad& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const Quad& x, const Quad& y);

 private:
  Rational a_;
  Rational b_;
};

/// Exact three-way comparison.
std::strong_ordering quad_cmp(const Quad& x, const Quad& y);

/// Greatest integer <= x.
Integer floor_quad(const Quad& x);
Integer ceil_quad(const Quad& x);

/// floor(x * 2^bits) computed exactly.
Integer floor_scaled(const Quad& x, unsigned bits);

Quad min(const Quad& x, const Quad& y);
Quad max(const Quad& x, const Quad& y);

}  // namespace badgame
