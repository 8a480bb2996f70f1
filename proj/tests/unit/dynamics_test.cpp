#include <doctest.h>

#include <cmath>

#include "badgame/dynamics.hpp"
#include "badgame/errors.hpp"
#include "badgame/random.hpp"

using namespace badgame;

namespace {

const ExponentPair kThird(Rational(1, 3), Rational(2, 3));

double image_norm(const Matrix3& m, std::int64_t a, std::int64_t b, std::int64_t c) {
  double best = 0;
  for (const auto& row : m) best = std::max(best, std::fabs(row[0] * a + row[1] * b + row[2] * c));
  return best;
}

}  // namespace

TEST_CASE("systole closed forms") {
  FlowPoint origin(0, 0, kThird, 0);
  CHECK(systole(origin, required_coeff_bound(origin)).value == doctest::Approx(1).epsilon(1e-12));
  for (int i = 0; i <= 6; ++i) {
    double u = 0.5 * i;
    FlowPoint fp(0, 0, kThird, u);
    SystoleResult s = systole(fp, required_coeff_bound(fp));
    CHECK(std::fabs(s.value - std::exp(-u)) < 1e-9);
    FlowPoint half(Rational(1, 2), Rational(1, 2), kThird, u);
    CHECK(systole(half, required_coeff_bound(half)).value <= 2 * std::exp(-u) + 1e-12);
  }
}

TEST_CASE("determinant and canonical candidates") {
  Rng rng(6, 0);
  for (int i = 0; i < 200; ++i) {
    Rational x(rng.between(-1000, 1000), rng.between(1, 97)), y(rng.between(-1000, 1000), rng.between(1, 97));
    double u = static_cast<double>(rng.below(4000)) / 1000;
    FlowPoint fp(x, y, kThird, u);
    Matrix3 m = fp.basis();
    CHECK(std::fabs(determinant(m) - 1) < 1e-12);
    SystoleResult s = systole(fp, required_coeff_bound(fp));
    CHECK(s.value <= image_norm(m, 1, 0, 0) * (1 + 1e-12));
    CHECK(s.value <= image_norm(m, 0, 1, 0) * (1 + 1e-12));
    CHECK(s.value <= image_norm(m, 0, 0, 1) * (1 + 1e-12));
    CHECK(std::fabs(image_norm(m, s.witness[0], s.witness[1], s.witness[2]) - s.value) < 1e-9);
    SystoleResult finer = systole(fp, 2 * required_coeff_bound(fp));
    CHECK(finer.value <= s.value);
  }
}

TEST_CASE("systole matches an exhaustive box search") {
  Rng rng(7, 0);
  for (int i = 0; i < 40; ++i) {
    Rational x(rng.between(-50, 50), rng.between(1, 13)), y(rng.between(-50, 50), rng.between(1, 13));
    double u = static_cast<double>(rng.below(1500)) / 1000;
    FlowPoint fp(x, y, kThird, u);
    const std::int64_t bound = required_coeff_bound(fp);
    if (bound > 60) continue;
    Matrix3 m = fp.basis();
    double best = INFINITY;
    for (std::int64_t a = -bound; a <= bound; ++a)
      for (std::int64_t b = -bound; b <= bound; ++b)
        for (std::int64_t c = -bound; c <= bound; ++c)
          if (a || b || c) best = std::min(best, image_norm(m, a, b, c));
    CHECK(std::fabs(systole(fp, bound).value - best) < 1e-9);
  }
}

TEST_CASE("systole rejects small search boxes") {
  FlowPoint fp(Rational(3, 2), Rational(5, 2), kThird, 2);
  CHECK_THROWS_AS(systole(fp, required_coeff_bound(fp) - 1), DomainError);
}

TEST_CASE("traces") {
  Trace t = trace(0, 0, kThird, {0, 1, 2});
  REQUIRE(t.samples.size() == 3);
  CHECK(t.samples[0].systole.value == doctest::Approx(1));
  CHECK(t.samples[1].systole.value == doctest::Approx(std::exp(-1.0)));
  CHECK(t.samples[2].systole.value == doctest::Approx(std::exp(-2.0)));
  REQUIRE(t.argmin);
  CHECK(*t.argmin == 2);
  Trace r = trace(Rational(1, 2), Rational(1, 2), kThird, uniform_grid(5, 0.1));
  CHECK(r.samples.size() == 51);
  REQUIRE(r.argmin);
  CHECK(r.samples[*r.argmin].systole.value <= 2 * std::exp(-5.0) + 1e-12);
  Trace e = trace(0, 0, kThird, {});
  CHECK(e.samples.empty());
  CHECK_FALSE(e.argmin);
}
