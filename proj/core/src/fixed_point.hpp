#pragma once

// Signed fixed-point numbers with 192 fractional bits, used to run the
// denominator scans: q*x is advanced by repeated addition and only the
// integer window it lands in is inspected. Every window derived from these
// values is widened on the safe side and then confirmed exactly.

#include <cstdint>

#include "badgame/quad.hpp"
#include "badgame/rational.hpp"

namespace badgame::detail {

inline constexpr unsigned kFracBits = 192;

struct Fixed {
  __int128 whole = 0;
  std::uint64_t frac[3] = {0, 0, 0};

  // value = scaled / 2^192.
  static Fixed from_scaled(const Integer& scaled);

  void add(const Fixed& o) {
    std::uint64_t s0 = frac[0] + o.frac[0];
    std::uint64_t carry = s0 < frac[0];
    std::uint64_t s1 = frac[1] + o.frac[1];
    std::uint64_t c1 = s1 < frac[1];
    s1 += carry;
    c1 |= s1 < carry;
    std::uint64_t s2 = frac[2] + o.frac[2];
    std::uint64_t c2 = s2 < frac[2];
    s2 += c1;
    c2 |= s2 < c1;
    frac[0] = s0;
    frac[1] = s1;
    frac[2] = s2;
    whole += o.whole + static_cast<__int128>(c2);
  }

  bool has_fraction() const { return (frac[0] | frac[1] | frac[2]) != 0; }
  __int128 floor() const { return whole; }
  __int128 ceil() const { return whole + (has_fraction() ? 1 : 0); }
  // Fractional part in [0, 1) as long double.
  long double fraction() const;
};

// floor(x * 2^192) and ceil(x * 2^192).
Integer scaled_floor(const Quad& x);
Integer scaled_ceil(const Quad& x);
Integer scaled_ceil(const Rational& x);

}  // namespace badgame::detail
