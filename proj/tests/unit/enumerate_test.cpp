#include <doctest.h>

#include <algorithm>
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

std::vector<oracle::Hit> scan(const Square& sq, std::int64_t lo, std::int64_t hi, const ExponentPair& st,
                              const Rational& c) {
  std::vector<oracle::Hit> out;
  scan_delta_hits(sq, lo, hi, st, c, 1'000'000, [&](const RatPoint& P) {
    out.push_back({P.p, P.r, P.q});
    return true;
  });
  return out;
}

void compare(const Rational& x0, const Rational& y0, const Rational& side, std::int64_t lo, std::int64_t hi,
             const ExponentPair& st, const Rational& c) {
  Square sq{Quad(x0), Quad(y0), Quad(side)};
  auto got = scan(sq, lo, hi, st, c);
  auto want = oracle::delta_hits(x0, x0 + side, y0, y0 + side, lo, hi, st, c);
  std::sort(want.begin(), want.end(), [](const oracle::Hit& a, const oracle::Hit& b) {
    return std::tie(a.q, a.p, a.r) < std::tie(b.q, b.p, b.r);
  });
  CHECK(got == want);
}

}  // namespace

TEST_CASE("scan agrees with brute force on wide regions") {
  Rng rng(21, 0);
  for (int i = 0; i < 120; ++i) {
    const ExponentPair& st = i % 3 == 0 ? kHalf : (i % 3 == 1 ? kThird : kAxis);
    Rational x0(rng.between(-2000, 2000), 1024), y0(rng.between(-2000, 2000), 1024);
    Rational side(rng.between(1, 700), 1024);
    Rational c(1, rng.between(8, 200));
    compare(x0, y0, side, 1, 50, st, c);
  }
}

TEST_CASE("scan agrees with brute force on narrow regions") {
  Rng rng(22, 0);
  for (int i = 0; i < 200; ++i) {
    const ExponentPair& st = i % 3 == 0 ? kHalf : (i % 3 == 1 ? kThird : kAxis);
    Rational x0(rng.between(0, 1 << 30), 1 << 30), y0(rng.between(0, 1 << 30), 1 << 30);
    Rational side(rng.between(1, 64), 1 << 20);
    Rational c(1, rng.between(2, 40));
    std::int64_t lo = rng.between(1, 3000);
    compare(x0, y0, side, lo, lo + 400, st, c);
  }
}

TEST_CASE("scan hits regions at exact box boundaries") {
  // box of (1/2, 1/2) with c = 1/8 and (s,t) = (0,1): [1/2 - 1/16, 1/2 + 1/16] x [1/2 - 1/32, 1/2 + 1/32]
  Rational c(1, 8);
  compare(Rational(9, 16), Rational(1, 4), Rational(1, 4), 2, 2, kAxis, c);
  compare(Rational(9, 16) + Rational(1, 1 << 30), Rational(1, 4), Rational(1, 4), 2, 2, kAxis, c);
  compare(Rational(1, 4), Rational(17, 32), Rational(1, 8), 2, 2, kAxis, c);
  compare(Rational(1, 4), Rational(17, 32) + Rational(1, 1 << 30), Rational(1, 8), 2, 2, kAxis, c);
}

TEST_CASE("scan budget") {
  Square sq{Quad(0), Quad(0), Quad(1)};
  CHECK_THROWS_AS(scan_delta_hits(sq, 1, 101, kThird, Rational(1, 100), 100, [](const RatPoint&) { return true; }),
                  BudgetExceeded);
  std::int64_t seen = 0;
  scan_delta_hits(sq, 1, 50, kThird, Rational(1, 100), 100, [&](const RatPoint&) { return ++seen < 3; });
  CHECK(seen == 3);
}

TEST_CASE("enumerate_band on toy parameters") {
  ConstructionParams prm = ConstructionParams::toy(kThird, Quad(1), Quad(10), Rational(1, 600));
  Square unit{Quad(0), Quad(0), Quad(1)};
  auto got = enumerate_band(unit, 2, std::nullopt, prm);
  std::vector<oracle::Hit> want;
  for (const auto& h : oracle::delta_hits(0, 1, 0, 1, 1, 10, kThird, prm.c())) {
    oracle::Attached a = oracle::attach(h.p, h.r, h.q, kThird);
    if (a.height >= 1 && a.height < 10) want.push_back(h);
  }
  std::sort(want.begin(), want.end(), [](const oracle::Hit& a, const oracle::Hit& b) {
    return std::tie(a.q, a.p, a.r) < std::tie(b.q, b.p, b.r);
  });
  std::vector<oracle::Hit> have;
  for (const auto& a : got) have.push_back({a.point.p, a.point.r, a.point.q});
  CHECK(have == want);
  CHECK(!have.empty());
  for (const auto& a : got) CHECK(band_of(a, prm)->n == 2);

  std::size_t total = 0;
  for (int k = 1; k <= 2; ++k) total += enumerate_band(unit, 2, k, prm).size();
  CHECK(total == got.size());
  auto upto = enumerate_bands_upto(unit, 2, prm);
  CHECK(upto.size() == got.size() + enumerate_band(unit, 1, std::nullopt, prm).size());
}

TEST_CASE("enumerate_band edge cases") {
  ConstructionParams prm = ConstructionParams::strict(kThird, Rational(1, 2), Quad(2));
  Square root{Quad(-1), Quad(-1), Quad(2)};
  CHECK(enumerate_band(root, 5, std::nullopt, prm).empty());
  ConstructionParams toyp = ConstructionParams::toy(kThird, Quad(1), Quad(10), Rational(1, 600));
  Square far{Quad(1000000) + Quad(Rational(1, 3)), Quad(1000000) + Quad(Rational(1, 3)), Quad(Rational(1, 1000))};
  CHECK(enumerate_band(far, 1, std::nullopt, toyp).empty());
}

TEST_CASE("badness certificates") {
  Rational c(1, 600);
  Square around_half{Quad(Rational(49, 100)), Quad(Rational(49, 100)), Quad(Rational(1, 50))};
  BadnessCertificate f = certify_badness(around_half, 2, kThird, c, 1000);
  CHECK_FALSE(f.certified);
  REQUIRE(f.witness);
  CHECK(*f.witness == RatPoint{1, 1, 2});
  CHECK(f.certified_q == 1);

  Square dodge{Quad(Rational(1, 10)), Quad(Rational(1, 10)), Quad(Rational(1, 5))};
  BadnessCertificate ok = certify_badness(dodge, 3, kThird, c, 1000);
  CHECK(ok.certified);
  CHECK(ok.certified_q == 3);
  CHECK(oracle::delta_hits(Rational(1, 10), Rational(3, 10), Rational(1, 10), Rational(3, 10), 1, 3, kThird, c)
            .empty());

  BadnessCertificate empty = certify_badness(around_half, 0, kThird, c, 1000);
  CHECK(empty.certified);
  CHECK(empty.certified_q == 0);
}
