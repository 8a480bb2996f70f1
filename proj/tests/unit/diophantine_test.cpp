#include <doctest.h>

#include <numeric>

#include "badgame/diophantine.hpp"
#include "badgame/errors.hpp"
#include "badgame/random.hpp"
#include "oracles.hpp"

using namespace badgame;

namespace {

const ExponentPair kHalf(Rational(1, 2), Rational(1, 2));
const ExponentPair kThird(Rational(1, 3), Rational(2, 3));
const ExponentPair kAxis(Rational(0), Rational(1));

ConstructionParams toy(const ExponentPair& st, Rational c) {
  return ConstructionParams::toy(st, Quad(1), Quad(10), c);
}

// Oracle for the sub-band: q^(1+t) >= H_n R^(j(1+t)), decided on delta-th powers.
bool above_threshold(std::int64_t q, int j, int n, const ConstructionParams& prm) {
  const ExponentPair& st = prm.st();
  const std::int64_t sig = std::max(st.sigma_s(), st.sigma_t());
  const std::int64_t e = st.delta() + sig;
  Quad lhs(Rational(oracle::ipow(q, e)));
  Quad rhs = prm.H(n).pow(st.delta()) * prm.R().pow(static_cast<unsigned long>(j * e));
  return lhs >= rhs;
}

int sub_band(std::int64_t q, int n, const ConstructionParams& prm) {
  if (above_threshold(q, 0, n, prm) && !above_threshold(q, 10, n, prm)) return 1;
  for (int k = 2; k <= 40; ++k) {
    if (above_threshold(q, 2 * k + 6, n, prm) && !above_threshold(q, 2 * k + 8, n, prm)) return k;
  }
  return 0;
}

}  // namespace

TEST_CASE("attachment examples") {
  AttachedPoint a = attach_line(RatPoint::make(1, 1, 2), kHalf);
  CHECK(a.line == RatLine{1, -1, 0});
  CHECK(a.height == 2);
  a = attach_line(RatPoint::make(0, 0, 1), kHalf);
  CHECK(a.line == RatLine{0, 1, 0});
  CHECK(a.height == 1);
  a = attach_line(RatPoint::make(1, 2, 3), kThird);
  CHECK(a.line == RatLine{1, 1, -1});
  CHECK(a.height == 3);
  CHECK(compare_scaled_norm(1, 1, 1, -2, 3, kThird) == std::strong_ordering::less);
  CHECK(oracle::attach(1, 1, 2, kHalf).admissible == 4);
  CHECK_THROWS_AS(RatPoint::make(2, 4, 6), DomainError);
  CHECK_THROWS_AS(RatPoint::make(1, 1, 0), DomainError);
}

TEST_CASE("attachment matches exhaustive box search") {
  for (const ExponentPair& st : {kHalf, kThird, kAxis, ExponentPair(Rational(3, 5), Rational(2, 5))}) {
    for (std::int64_t q = 1; q <= 40; ++q) {
      for (std::int64_t p = 0; p <= q; ++p) {
        for (std::int64_t r = 0; r <= q; ++r) {
          if (std::gcd(std::gcd(p, r), q) != 1) continue;
          AttachedPoint a = attach_line(RatPoint::make(p, r, q), st);
          oracle::Attached o = oracle::attach(p, r, q, st);
          REQUIRE(o.admissible > 0);
          CHECK(a.line.A == o.A);
          CHECK(a.line.B == o.B);
          CHECK(a.line.C == o.C);
          CHECK(a.height == o.height);
          CHECK(in_attachment_box(a.line.A, a.line.B, q, st));
        }
      }
    }
  }
}

TEST_CASE("attachment on large denominators stays on the line and in the box") {
  Rng rng(17, 0);
  for (int i = 0; i < 3000; ++i) {
    std::int64_t q = rng.between(1, 4'000'000'000LL);
    std::int64_t p = rng.between(-q, 2 * q), r = rng.between(-q, 2 * q);
    if (std::gcd(std::gcd(p, r), q) != 1) continue;
    AttachedPoint a = attach_line(RatPoint::make(p, r, q), kThird);
    Integer on = Integer(static_cast<long>(a.line.A)) * p + Integer(static_cast<long>(a.line.B)) * r +
                 Integer(static_cast<long>(a.line.C)) * q;
    CHECK(on == 0);
    CHECK(in_attachment_box(a.line.A, a.line.B, q, kThird));
    CHECK(a.height >= q);
  }
}

TEST_CASE("removal boxes") {
  Rational c(1, 600);
  Rect b = delta_box(RatPoint::make(0, 0, 1), kThird, c);
  CHECK(b.hx.bounds(Quad(c)));
  CHECK_FALSE(b.hx.bounds(Quad(c * Rational(1001, 1000))));
  CHECK(contains(b, Point{Quad(c), Quad(0)}));
  CHECK_FALSE(contains(b, Point{Quad(c + Rational(1, 1000000)), Quad(0)}));
  Rect h = delta_box(RatPoint::make(1, 1, 2), kHalf, c);
  // c 2^(-3/2) = sqrt2/2400
  CHECK(h.hx.bounds(Quad(0, Rational(1, 2400))));
  CHECK_FALSE(h.hx.bounds(Quad(Rational(1, 1000000000), Rational(1, 2400))));
}

TEST_CASE("toy band examples") {
  ConstructionParams prm = toy(kThird, Rational(1, 600));
  CHECK(prm.H(2) == Quad(1));
  AttachedPoint a = attach_line(RatPoint::make(1, 2, 3), kThird);
  auto band = band_of(a, prm);
  REQUIRE(band);
  CHECK(band->n == 2);
  CHECK(band->k == 1);
  ConstructionParams low = toy(kThird, Rational(1, 100));
  CHECK(height_level(1, low) == 1);
  BandTable t(prm, 2);
  CHECK(t.q_min() == 1);
  CHECK(t.q_max() == 9);
  CHECK(t.k_of(3) == 1);
  // sub-band k = n + 1 never holds
  for (int n = 1; n <= 4; ++n) {
    BandTable bt(prm, n);
    CHECK(bt.k_begin(n + 1) > bt.q_max());
  }
}

TEST_CASE("band indices match threshold arithmetic") {
  for (const ExponentPair& st : {kHalf, kThird}) {
    ConstructionParams prm = toy(st, Rational(1, 600));
    for (std::int64_t q = 1; q <= 30; ++q) {
      for (std::int64_t p = 0; p < q; ++p) {
        for (std::int64_t r = 0; r < q; ++r) {
          if (std::gcd(std::gcd(p, r), q) != 1) continue;
          AttachedPoint a = attach_line(RatPoint::make(p, r, q), st);
          auto band = band_of(a, prm);
          REQUIRE(band);
          Quad h(Rational(a.height));
          CHECK(prm.H(band->n) <= h);
          CHECK(h < prm.H(band->n + 1));
          CHECK(band->k == sub_band(q, band->n, prm));
        }
      }
    }
  }
}

TEST_CASE("strict band table thresholds") {
  ConstructionParams prm = ConstructionParams::strict(kThird, Rational(1, 2), Quad(2));
  CHECK(prm.first_active_level() == 13);
  CHECK(prm.H(12) < Quad(1));
  CHECK(prm.H(13) >= Quad(1));
  for (int n = 13; n <= 16; ++n) {
    BandTable t(prm, n);
    const Integer& lo = t.q_min();
    CHECK(Quad(Rational(oracle::ipow(lo, 5))) >= prm.H(n).pow(3));
    CHECK(Quad(Rational(oracle::ipow(lo - 1, 5))) < prm.H(n).pow(3));
    CHECK(Quad(Rational(t.q_max())) < prm.H(n + 1));
    CHECK(Quad(Rational(t.q_max() + 1)) >= prm.H(n + 1));
  }
  CHECK(BandTable(prm, 16).q_min() == 6067);
  CHECK(BandTable(prm, 16).q_max() == 136973827);
}
