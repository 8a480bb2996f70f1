#include <doctest.h>

#include "badgame/errors.hpp"
#include "badgame/game.hpp"
#include "oracles.hpp"

using namespace badgame;

namespace {

const ExponentPair kThird(Rational(1, 3), Rational(2, 3));

ConstructionParams defaults(const Rational& beta = Rational(1, 2), Quad l = Quad(2)) {
  return ConstructionParams::strict(kThird, beta, l);
}

Disc default_b0() { return Disc(Quad(0), Quad(0), Quad(0, 24)); }

Point center(const Disc& d) { return Point{d.cx, d.cy}; }

void check_round_invariants(const GameState& g) {
  const ConstructionParams& prm = g.params();
  Disc prev = g.initial_alice();
  for (const RoundRecord& rec : g.rounds()) {
    CHECK(rec.ratios_exact);
    CHECK(rec.alice.radius == ConstructionParams::alpha0() * rec.bob.radius);
    CHECK(rec.bob.radius == Quad(*prm.beta()) * prev.radius);
    CHECK(rec.alice.radius * Quad(2) == prm.side(rec.n));
    Quad slack = prev.radius - rec.bob.radius;
    CHECK(distance_squared(center(prev), center(rec.bob)) <= slack * slack);
    CHECK(contains(rec.bob, rec.alice));
    CHECK(contains(prev, rec.bob));
    CHECK(rec.vertex.level() == rec.n);
    NodeSquare node = g.tessellation().node_square(rec.vertex);
    CHECK(inscribed_disc(node.square).radius == rec.alice.radius);
    CHECK(rec.survivors_in_block >= 1);
    if (rec.n >= 1) CHECK(survives(g.tessellation(), rec.vertex).survived);
    prev = rec.alice;
  }
}

}  // namespace

TEST_CASE("starting positions") {
  GameState g = GameState::start(defaults(), default_b0());
  CHECK(g.initial_alice().radius == Quad(1));
  CHECK(g.current().square.x0 == Quad(-1));
  CHECK(g.current().square.side == Quad(2));
  CHECK(ConstructionParams::alpha0() * Quad(0, 24) == Quad(1));
  GameState small = GameState::start(defaults(Rational(1, 2), Quad(0, Rational(1, 24))), Disc(Quad(0), Quad(0), Quad(1)));
  CHECK(small.initial_alice().radius == Quad(0, Rational(1, 48)));
  CHECK_THROWS(GameState::start(defaults(), Disc(Quad(0), Quad(0), Quad(0))));
  CHECK_THROWS_AS(GameState::start(defaults(), Disc(Quad(0), Quad(0), Quad(1))), ParamsError);
}

TEST_CASE("constant identities") {
  ConstructionParams prm = defaults();
  CHECK(ConstructionParams::alpha0() * Quad(*prm.beta()) * prm.R() == Quad(1));
  CHECK(prm.R() == Quad(0, 48));
  CHECK(prm.blocks_per_side() == 5);
  ConstructionParams b34 = defaults(Rational(3, 4));
  CHECK(ConstructionParams::alpha0() * Quad(Rational(3, 4)) * b34.R() == Quad(1));
  CHECK(b34.blocks_per_side() == 3);
  CHECK(b34.first_active_level() == 13);
}

TEST_CASE("first round geometry") {
  GameState g = GameState::start(defaults(), default_b0());
  BobStrategy bob = BobStrategy::parse("concentric", 0);
  Disc b1 = bob_move(bob, g);
  CHECK(b1.cx == Quad(0));
  CHECK(b1.radius == Quad(Rational(1, 2)));
  const RoundRecord& rec = g.play_round(b1);
  CHECK(rec.alice.radius / rec.bob.radius == ConstructionParams::alpha0());
  const ConstructionParams& prm = g.params();
  CHECK(Quad::sqrt2() * rec.bob.radius == Quad(2 * ConstructionParams::m) * prm.l() / prm.R());
  CHECK(contains(rec.bob, rec.alice));
}

TEST_CASE("illegal Bob moves") {
  GameState g = GameState::start(defaults(), default_b0());
  Quad r = g.next_bob_radius();
  CHECK_THROWS_AS(g.check_bob_move(Disc(Quad(0), Quad(0), r * Quad(Rational(1000000001, 1000000000)))), IllegalMove);
  CHECK_THROWS_AS(g.check_bob_move(Disc(Quad(Rational(1, 2)) + Quad(Rational(1, 1000000)), Quad(0), r)), IllegalMove);
  CHECK_NOTHROW(g.check_bob_move(Disc(Quad(Rational(1, 2)), Quad(0), r)));
  CHECK_THROWS_AS(g.play_round(Disc(Quad(1), Quad(0), r)), IllegalMove);
  CHECK(g.round() == 0);
}

TEST_CASE("Bob strategies") {
  GameState g = GameState::start(defaults(), default_b0());
  BobStrategy rnd = BobStrategy::parse("seeded-random", 5);
  Disc a = bob_move(rnd, g), b = bob_move(rnd, g);
  CHECK(a.cx == b.cx);
  CHECK(a.cy == b.cy);
  CHECK_NOTHROW(g.check_bob_move(a));
  CHECK(BobStrategy::parse("random", 5).kind == BobKind::seeded_random);
  CHECK_THROWS(BobStrategy::parse("sideways", 0));

  BobStrategy steer = BobStrategy::parse("steering:1/2,1/2", 7);
  CHECK(steer.to_string() == "steering:1/2,1/2");
  Disc s = bob_move(steer, g);
  Quad slack = g.last_alice().radius - s.radius;
  CHECK(distance_squared(center(g.last_alice()), center(s)) == slack * slack);
  CHECK(s.cx.sign() > 0);
  CHECK(s.cy.sign() > 0);
  CHECK_NOTHROW(g.check_bob_move(s));

  // target closer than the slack: Bob lands on it
  BobStrategy near = BobStrategy::parse("steering:1/10,0", 0);
  Disc t = bob_move(near, g);
  CHECK(t.cx == Quad(Rational(1, 10)));
  CHECK(t.cy == Quad(0));
}

TEST_CASE("zero-round certification is vacuous") {
  GameState g = GameState::start(defaults(), default_b0());
  Certification cert = certify_transcript(g, 1000000);
  CHECK(cert.passed);
  CHECK(cert.certified_q == 0);
  CHECK(cert.rounds == 0);
}

TEST_CASE("full game against steering Bob") {
  GameState g = GameState::start(defaults(), default_b0());
  BobStrategy bob = BobStrategy::parse("steering:1/2,1/2", 7);
  const int rounds = g.params().first_active_level() + 3;
  for (int i = 0; i < rounds; ++i) g.play_round(bob_move(bob, g));
  CHECK(g.round() == 16);
  CHECK(g.discs().size() == 34);
  check_round_invariants(g);
  Certification cert = certify_transcript(g, 1000000000);
  CHECK(cert.passed);
  CHECK(cert.certified_q >= 10000);
  CHECK(cert.direct_scan_passed);
  CHECK(cert.reverification_passed);
  // the center is far from every q <= 1e5 rational; long double resolves scores down to ~1e-13
  auto [score, q] = oracle::min_score(g.last_alice().cx.to_long_double(), g.last_alice().cy.to_long_double(),
                                      1.0 / 3, 2.0 / 3, std::min<std::int64_t>(cert.certified_q, 100000));
  CHECK(score > 1e-10);
  CHECK(std::fabs(static_cast<double>(score) - cert.direct_min_score) < 1e-9);
  CHECK(q == cert.direct_min_q);
}

TEST_CASE("seeded games are reproducible") {
  auto play = [](std::uint64_t seed) {
    GameState g = GameState::start(defaults(Rational(3, 4)), default_b0());
    BobStrategy bob = BobStrategy::parse("seeded-random", seed);
    for (int i = 0; i < 14; ++i) g.play_round(bob_move(bob, g));
    check_round_invariants(g);
    return g;
  };
  GameState a = play(3), b = play(3);
  REQUIRE(a.round() == b.round());
  for (int i = 0; i < a.round(); ++i) {
    CHECK(a.rounds()[i].vertex == b.rounds()[i].vertex);
    CHECK(a.rounds()[i].bob.cx == b.rounds()[i].bob.cx);
  }
}

TEST_CASE("lookahead two") {
  GameState g = GameState::start(defaults(), default_b0(), 2);
  BobStrategy bob = BobStrategy::parse("concentric", 0);
  for (int i = 0; i < 13; ++i) g.play_round(bob_move(bob, g));
  check_round_invariants(g);
  CHECK(certify_transcript(g, 1000000).passed);
}
