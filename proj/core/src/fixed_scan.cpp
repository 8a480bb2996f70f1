#include <cmath>
#include <cstdlib>

#include "badgame/diophantine.hpp"
#include "badgame/errors.hpp"
#include "fixed_point.hpp"

namespace badgame {

namespace detail {

Fixed Fixed::from_scaled(const Integer& scaled) {
  Fixed f;
  Integer whole;
  mpz_fdiv_q_2exp(whole.get_mpz_t(), scaled.get_mpz_t(), kFracBits);
  Integer rem = scaled - (whole << kFracBits);
  if (mpz_sizeinbase(whole.get_mpz_t(), 2) > 120) throw DomainError("fixed-point value out of range");
  Integer mag = abs(whole);
  unsigned __int128 w = 0;
  w = static_cast<unsigned __int128>(mpz_getlimbn(mag.get_mpz_t(), 0));
  if (mpz_size(mag.get_mpz_t()) > 1) {
    w |= static_cast<unsigned __int128>(mpz_getlimbn(mag.get_mpz_t(), 1)) << 64;
  }
  f.whole = whole < 0 ? -static_cast<__int128>(w) : static_cast<__int128>(w);
  for (int i = 0; i < 3; ++i) {
    f.frac[i] = static_cast<std::uint64_t>(mpz_getlimbn(rem.get_mpz_t(), i));
  }
  return f;
}

long double Fixed::fraction() const {
  return std::ldexp(static_cast<long double>(frac[2]), -64) +
         std::ldexp(static_cast<long double>(frac[1]), -128) +
         std::ldexp(static_cast<long double>(frac[0]), -192);
}

Integer scaled_floor(const Quad& x) { return floor_scaled(x, kFracBits); }
Integer scaled_ceil(const Quad& x) { return -floor_scaled(-x, kFracBits); }
Integer scaled_ceil(const Rational& x) { return ceil_of(x * Rational(pow_int(2, kFracBits))); }

}  // namespace detail

namespace {

using detail::Fixed;

Quad gap_to(const Rational& v, const Quad& lo, const Quad& hi) {
  Quad c(v);
  if (c < lo) return lo - c;
  if (c > hi) return c - hi;
  return Quad(0);
}

// Exact narrowing of a candidate numerator window [lo, hi] along one axis.
// The admissible numerators form an interval, so only its ends are tested.
bool narrow(std::int64_t& lo, std::int64_t& hi, std::int64_t q, const Quad& a, const Quad& b,
            const HalfWidth& half) {
  auto ok = [&](std::int64_t num) { return half.bounds(gap_to(make_rational(num, q), a, b)); };
  while (lo <= hi && !ok(lo)) ++lo;
  while (hi >= lo && !ok(hi)) --hi;
  return lo <= hi;
}

std::int64_t narrow_cast(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw DomainError("numerator out of 64-bit range");
  return static_cast<std::int64_t>(v);
}

}  // namespace

void scan_delta_hits(const Square& region, std::int64_t q_lo, std::int64_t q_hi,
                     const ExponentPair& st, const Rational& c, std::uint64_t q_budget,
                     const std::function<bool(const RatPoint&)>& visit) {
  if (q_lo < 1) q_lo = 1;
  if (q_hi < q_lo) return;
  auto span = static_cast<std::uint64_t>(q_hi - q_lo) + 1;
  if (span > q_budget) {
    throw BudgetExceeded("denominator range of " + std::to_string(span) +
                             " exceeds the q budget of " + std::to_string(q_budget),
                         span, q_budget);
  }
  const Quad x0 = region.x0, x1 = region.x1(), y0 = region.y0, y1 = region.y1();
  double reach = std::max({std::fabs(x0.to_double()), std::fabs(x1.to_double()),
                           std::fabs(y0.to_double()), std::fabs(y1.to_double())}) + 1.0;
  if (reach * static_cast<double>(q_hi) > 1e30) throw DomainError("scan region too far out for the fixed-point filter");

  // c q^-(1+s) <= c and c q^-(1+t) <= c, so q*c bounds the slack in numerators.
  const Integer c_up = detail::scaled_ceil(c) + 1;
  const Integer x_lo = detail::scaled_floor(x0), x_hi = detail::scaled_ceil(x1);
  const Integer y_lo = detail::scaled_floor(y0), y_hi = detail::scaled_ceil(y1);
  const std::int64_t d = st.delta();
  // Exact numerator windows at q, then confirmation of each candidate.
  auto examine = [&](std::int64_t q, __int128 pl, __int128 ph, __int128 rl, __int128 rh) {
    if (pl > ph || rl > rh) return true;
    std::int64_t p_lo = narrow_cast(pl), p_hi = narrow_cast(ph);
    std::int64_t r_lo = narrow_cast(rl), r_hi = narrow_cast(rh);
    HalfWidth hx{c, q, d + st.sigma_s(), d};
    HalfWidth hy{c, q, d + st.sigma_t(), d};
    if (!narrow(p_lo, p_hi, q, x0, x1, hx) || !narrow(r_lo, r_hi, q, y0, y1, hy)) return true;
    for (std::int64_t p = p_lo; p <= p_hi; ++p) {
      for (std::int64_t r = r_lo; r <= r_hi; ++r) {
        if (gcd3(p, r, q) == 1 && !visit(RatPoint{p, r, q})) return false;
      }
    }
    return true;
  };
  auto exact_floor = [](const Integer& scaled) {
    return Fixed::from_scaled(scaled).floor();
  };
  auto exact_ceil = [](const Integer& scaled) {
    return Fixed::from_scaled(scaled).ceil();
  };

  const Integer q0(static_cast<long>(q_lo));
  Fixed ax_lo = Fixed::from_scaled(q0 * x_lo - c_up);
  const Fixed dx_lo = Fixed::from_scaled(x_lo);

  // Width of the x window in units of 2^-64, rounded up at every step.
  const Integer spread = x_hi - x_lo;
  const Integer widest = (Integer(static_cast<long>(q_hi)) * spread + 2 * c_up) >> 128;
  if (widest < (Integer(1) << 60)) {
    std::uint64_t w = Integer((q0 * spread + 2 * c_up) >> 128).get_ui() + 2;
    const std::uint64_t dw = Integer(spread >> 128).get_ui() + 1;
    for (std::int64_t q = q_lo;; ++q) {
      // Some integer lies in [ax_lo, ax_lo + width] only if the fraction of
      // ax_lo is zero or within width of 1.
      if (!ax_lo.has_fraction() || ax_lo.frac[2] >= ~w) {
        const Integer qq(static_cast<long>(q));
        if (!examine(q, ax_lo.ceil(), exact_floor(qq * x_hi + c_up), exact_ceil(qq * y_lo - c_up),
                     exact_floor(qq * y_hi + c_up))) {
          return;
        }
      }
      if (q == q_hi) break;
      ax_lo.add(dx_lo);
      w += dw;
    }
    return;
  }

  Fixed ax_hi = Fixed::from_scaled(q0 * x_hi + c_up);
  Fixed ay_lo = Fixed::from_scaled(q0 * y_lo - c_up), ay_hi = Fixed::from_scaled(q0 * y_hi + c_up);
  const Fixed dx_hi = Fixed::from_scaled(x_hi);
  const Fixed dy_lo = Fixed::from_scaled(y_lo), dy_hi = Fixed::from_scaled(y_hi);
  for (std::int64_t q = q_lo;; ++q) {
    __int128 pl = ax_lo.ceil(), ph = ax_hi.floor();
    if (pl <= ph && !examine(q, pl, ph, ay_lo.ceil(), ay_hi.floor())) return;
    if (q == q_hi) break;
    ax_lo.add(dx_lo);
    ax_hi.add(dx_hi);
    ay_lo.add(dy_lo);
    ay_hi.add(dy_hi);
  }
}

}  // namespace badgame
