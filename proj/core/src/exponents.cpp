#include "badgame/exponents.hpp"

#include <cmath>
#include <numeric>

#include "badgame/errors.hpp"

namespace badgame {

ExponentPair::ExponentPair(const Rational& s, const Rational& t) {
  if (s < 0 || t < 0) throw DomainError("exponents must be nonnegative");
  if (s + t != 1) throw DomainError("exponents must sum to one");
  Integer d = lcm(s.get_den(), t.get_den());
  if (!fits_int64(d)) throw DomainError("exponent denominator too large");
  delta_ = to_int64(d);
  sigma_s_ = to_int64(s.get_num() * (d / s.get_den()));
  sigma_t_ = to_int64(t.get_num() * (d / t.get_den()));
  if (delta_ > 64) throw DomainError("exponent denominator above 64 is not supported");
}

ExponentPair ExponentPair::from_strings(const std::string& s, const std::string& t) {
  return ExponentPair(parse_rational(s), parse_rational(t));
}

namespace {

Integer from_double(double v) {
  Integer r;
  mpz_set_d(r.get_mpz_t(), v);
  return r;
}

// Smallest q in [lo, hi] with pred(q), given pred(hi) and monotone pred.
template <class Pred>
Integer bisect_first(Integer lo, Integer hi, Pred pred) {
  while (lo < hi) {
    Integer mid = (lo + hi) / 2;
    if (pred(mid)) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

// Least q >= 0 with pred(q), where pred is monotone and an estimate is known.
template <class Pred>
Integer search_from_estimate(const Integer& estimate, Pred pred) {
  Integer guess = estimate < 0 ? Integer(0) : estimate;
  if (pred(guess)) {
    Integer step = 1;
    Integer lo = guess - step;
    while (lo >= 0 && pred(lo)) {
      guess = lo;
      step *= 2;
      lo = guess - step;
    }
    if (lo < 0) lo = 0;
    return bisect_first(lo, guess, pred);
  }
  Integer step = 1;
  Integer hi = guess + step;
  while (!pred(hi)) {
    guess = hi;
    step *= 2;
    hi = guess + step;
  }
  return bisect_first(guess, hi, pred);
}

Integer root_estimate(const Quad& y, std::int64_t sigma) {
  if (y.sign() <= 0) return 0;
  double l = y.log() / static_cast<double>(sigma);
  if (l > 700.0) throw DomainError("root estimate out of range");
  return from_double(std::floor(std::exp(l)));
}

}  // namespace

std::strong_ordering cmp_rooted(const Quad& y, const Integer& base, std::int64_t sigma) {
  if (sigma < 0) throw DomainError("negative exponent");
  Quad rhs(Rational(pow_int(base, static_cast<unsigned long>(sigma))));
  return quad_cmp(y, rhs);
}

std::strong_ordering cmp_power(const Quad& x, const Integer& base, std::int64_t sigma,
                               std::int64_t delta) {
  if (x.sign() < 0) throw DomainError("cmp_power requires x >= 0");
  if (base < 1) throw DomainError("cmp_power requires base >= 1");
  if (delta < 1 || sigma < 0) throw DomainError("cmp_power requires sigma >= 0, delta >= 1");
  return cmp_rooted(x.pow(static_cast<unsigned long>(delta)), base, sigma);
}

Integer least_root_at_least(const Quad& y, std::int64_t sigma) {
  if (sigma < 1) throw DomainError("root order must be positive");
  if (y.sign() <= 0) return 0;
  return search_from_estimate(root_estimate(y, sigma), [&](const Integer& q) {
    return cmp_rooted(y, q, sigma) <= 0;
  });
}

Integer greatest_root_below(const Quad& y, std::int64_t sigma) {
  if (y.sign() <= 0) return -1;
  // First q with q^sigma >= y, minus one.
  return least_root_at_least(y, sigma) - 1;
}

Integer greatest_root_at_most(const Quad& y, std::int64_t sigma) {
  if (sigma < 1) throw DomainError("root order must be positive");
  if (y.sign() < 0) throw DomainError("root of a negative value");
  Integer first_above = search_from_estimate(root_estimate(y, sigma), [&](const Integer& q) {
    return cmp_rooted(y, q, sigma) < 0;
  });
  return first_above - 1;
}

std::int64_t floor_rational_power(std::int64_t q, std::int64_t sigma, std::int64_t delta) {
  if (q < 0) throw DomainError("negative base");
  if (delta < 1 || sigma < 0) throw DomainError("invalid rational exponent");
  auto uq = static_cast<std::uint64_t>(q);
  auto d = static_cast<unsigned>(delta);
  auto s = static_cast<unsigned>(sigma);
  // a = floor(q^(sigma/delta)) is the largest a with a^delta <= q^sigma.
  double est = std::floor(std::pow(static_cast<double>(q), static_cast<double>(sigma) / static_cast<double>(delta)));
  auto a = static_cast<std::uint64_t>(std::max(0.0, est));
  while (a > 0 && cmp_power_products(a, d, 1, 0, uq, s, 1, 0) > 0) --a;
  while (cmp_power_products(a + 1, d, 1, 0, uq, s, 1, 0) <= 0) ++a;
  return static_cast<std::int64_t>(a);
}

}  // namespace badgame
