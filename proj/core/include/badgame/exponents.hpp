#pragma once

#include <compare>
#include <cstdint>

#include "badgame/quad.hpp"
#include "badgame/rational.hpp"

namespace badgame {

/// Weight pair (s, t) = (sigma_s/delta, sigma_t/delta) with s, t >= 0 and
/// s + t = 1, stored over a shared denominator so that any inequality
/// involving q^s or q^t is decided by raising both sides to the delta-th
/// power.
class ExponentPair {
 public:
  ExponentPair(const Rational& s, const Rational& t);
  static ExponentPair from_strings(const std::string& s, const std::string& t);

  std::int64_t sigma_s() const { return sigma_s_; }
  std::int64_t sigma_t() const { return sigma_t_; }
  std::int64_t delta() const { return delta_; }

  Rational s() const { return make_rational(sigma_s_, delta_); }
  Rational t() const { return make_rational(sigma_t_, delta_); }

  // Numerator of max{s,t} over delta.
  std::int64_t sigma_max() const { return sigma_s_ > sigma_t_ ? sigma_s_ : sigma_t_; }
  std::int64_t sigma_min() const { return sigma_s_ > sigma_t_ ? sigma_t_ : sigma_s_; }
  // True when the coordinates must be exchanged to get s <= t.
  bool swapped() const { return sigma_s_ > sigma_t_; }

  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;

 private:
  std::int64_t sigma_s_;
  std::int64_t sigma_t_;
  std::int64_t delta_;
};

/// Orders x against base^(sigma/delta) for x >= 0, base >= 1, by comparing
/// x^delta with base^sigma.
std::strong_ordering cmp_power(const Quad& x, const Integer& base, std::int64_t sigma,
                               std::int64_t delta);

/// Orders y against base^sigma (the delta-th power already taken).
std::strong_ordering cmp_rooted(const Quad& y, const Integer& base, std::int64_t sigma);

/// Least integer q >= 0 with q^sigma >= y.
Integer least_root_at_least(const Quad& y, std::int64_t sigma);

/// Greatest integer q >= 0 with q^sigma < y, or -1 when y <= 0.
Integer greatest_root_below(const Quad& y, std::int64_t sigma);

/// Greatest integer q >= 0 with q^sigma <= y (y >= 0).
Integer greatest_root_at_most(const Quad& y, std::int64_t sigma);

/// floor(q^(sigma/delta)) for q >= 0.
std::int64_t floor_rational_power(std::int64_t q, std::int64_t sigma, std::int64_t delta);

}  // namespace badgame
