#include <cmath>
#include <numbers>

#include "badgame/errors.hpp"
#include "badgame/game.hpp"
#include "badgame/random.hpp"

namespace badgame {

namespace {

constexpr std::int64_t kGrid = 1024;

// Rational unit vector ((1-u^2)/(1+u^2), 2u/(1+u^2)) with angle close to theta.
std::pair<Rational, Rational> rational_direction(double theta) {
  bool flip = false;
  if (theta > std::numbers::pi / 2) {
    theta -= std::numbers::pi;
    flip = true;
  } else if (theta < -std::numbers::pi / 2) {
    theta += std::numbers::pi;
    flip = true;
  }
  const long scale = 1L << 20;
  Rational u(std::lround(std::tan(theta / 2) * static_cast<double>(scale)), scale);
  u.canonicalize();
  const Rational den = 1 + u * u;
  Rational ux = (1 - u * u) / den, uy = 2 * u / den;
  if (flip) {
    ux = -ux;
    uy = -uy;
  }
  return {ux, uy};
}

}  // namespace

BobStrategy BobStrategy::parse(const std::string& text, std::uint64_t seed) {
  BobStrategy s;
  s.seed = seed;
  if (text == "concentric") {
    s.kind = BobKind::concentric;
  } else if (text == "random" || text == "seeded-random") {
    s.kind = BobKind::seeded_random;
  } else if (text.rfind("steering:", 0) == 0) {
    const std::string rest = text.substr(9);
    const auto comma = rest.find(',');
    if (comma == std::string::npos) throw ParamsError("steering target must read steering:x,y");
    s.kind = BobKind::steering;
    s.target_x = parse_rational(rest.substr(0, comma));
    s.target_y = parse_rational(rest.substr(comma + 1));
  } else {
    throw ParamsError("unknown Bob strategy '" + text + "'");
  }
  return s;
}

std::string BobStrategy::to_string() const {
  switch (kind) {
    case BobKind::concentric:
      return "concentric";
    case BobKind::seeded_random:
      return "seeded-random";
    case BobKind::steering:
      return "steering:" + format_rational(target_x) + "," + format_rational(target_y);
  }
  return "";
}

Disc bob_move(const BobStrategy& strategy, const GameState& state) {
  const Disc& A = state.last_alice();
  const Quad radius = state.next_bob_radius();
  const Quad reach = A.radius - radius;
  switch (strategy.kind) {
    case BobKind::concentric:
      return Disc(A.cx, A.cy, radius);
    case BobKind::seeded_random: {
      Rng rng(strategy.seed, static_cast<std::uint64_t>(state.round() + 1));
      for (;;) {
        auto i = static_cast<std::int64_t>(rng.below(2 * kGrid + 1)) - kGrid;
        auto j = static_cast<std::int64_t>(rng.below(2 * kGrid + 1)) - kGrid;
        if (i * i + j * j > kGrid * kGrid) continue;
        return Disc(A.cx + reach * Quad(make_rational(i, kGrid)),
                    A.cy + reach * Quad(make_rational(j, kGrid)), radius);
      }
    }
    case BobKind::steering: {
      const Quad dx = Quad(strategy.target_x) - A.cx;
      const Quad dy = Quad(strategy.target_y) - A.cy;
      if (dx * dx + dy * dy <= reach * reach) {
        return Disc(Quad(strategy.target_x), Quad(strategy.target_y), radius);
      }
      auto [ux, uy] = rational_direction(std::atan2(dy.to_double(), dx.to_double()));
      return Disc(A.cx + reach * Quad(ux), A.cy + reach * Quad(uy), radius);
    }
  }
  throw DomainError("unknown Bob strategy");
}

}  // namespace badgame
