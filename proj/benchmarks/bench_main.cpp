#include <benchmark/benchmark.h>

#include "badgame/cantor.hpp"
#include "badgame/diophantine.hpp"
#include "badgame/random.hpp"

using namespace badgame;

namespace {

const ExponentPair kThird(Rational(1, 3), Rational(2, 3));

ConstructionParams defaults() { return ConstructionParams::strict(kThird, Rational(1, 2), Quad(2)); }

void BM_AttachLine(benchmark::State& state) {
  Rng rng(1, 0);
  std::vector<RatPoint> pts;
  while (pts.size() < 1024) {
    std::int64_t q = rng.between(state.range(0) / 2, state.range(0));
    std::int64_t p = rng.between(0, q - 1), r = rng.between(0, q - 1);
    if (gcd3(p, r, q) == 1) pts.push_back(RatPoint{p, r, q});
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(attach_line(pts[i++ & 1023], kThird));
  }
}
BENCHMARK(BM_AttachLine)->Arg(1000)->Arg(1000000)->Arg(1000000000);

// range(0): log2 of the region side, range(1): largest denominator
void BM_ScanDenominators(benchmark::State& state) {
  ConstructionParams prm = defaults();
  Square sq(Quad(Rational(1234567, 10000000), Rational(1, 7)), Quad(Rational(3, 11), Rational(1, 13)),
            Quad(Rational(1, Integer(1) << state.range(0))));
  const std::int64_t q_hi = state.range(1);
  for (auto _ : state) {
    std::int64_t hits = 0;
    scan_delta_hits(sq, 1, q_hi, kThird, prm.c(), prm.q_budget(), [&](const RatPoint&) {
      ++hits;
      return true;
    });
    benchmark::DoNotOptimize(hits);
  }
  state.SetItemsProcessed(state.iterations() * q_hi);
}
BENCHMARK(BM_ScanDenominators)->Args({20, 100000})->Args({70, 10000000})->Unit(benchmark::kMillisecond);

void BM_SurvivesFirstActive(benchmark::State& state) {
  ConstructionParams prm = defaults();
  Tessellation t(prm, Square(Quad(-1), Quad(-1), Quad(2)));
  NodeSquare node{Vertex{{0}}, Square(Quad(Rational(1, 3)), Quad(Rational(1, 5)), t.side(14)), 14, 1};
  for (auto _ : state) benchmark::DoNotOptimize(survives(t, node));
}
BENCHMARK(BM_SurvivesFirstActive)->Unit(benchmark::kMicrosecond);

void BM_QuadCompare(benchmark::State& state) {
  Quad a(Rational(123456789, 1000), Rational(-87, 1000)), b(Rational(123456788, 1000), Rational(7, 3));
  for (auto _ : state) benchmark::DoNotOptimize(quad_cmp(a, b));
}
BENCHMARK(BM_QuadCompare);

}  // namespace
BENCHMARK_MAIN();
