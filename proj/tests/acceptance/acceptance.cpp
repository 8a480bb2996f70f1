// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance [--criterion N]...
// Exit status is 0 iff every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "badgame/dynamics.hpp"
#include "badgame/errors.hpp"
#include "badgame/game.hpp"
#include "badgame/suites.hpp"
#include "oracles.hpp"

using namespace badgame;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

const ExponentPair kThird(Rational(1, 3), Rational(2, 3));

ConstructionParams defaults(const Rational& beta = Rational(1, 2)) {
  return ConstructionParams::strict(kThird, beta, Quad(2));
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome constants() {
  const Quad alpha0 = ConstructionParams::alpha0();
  ConstructionParams prm = defaults();
  std::vector<std::pair<const char*, bool>> checks = {
      {"alpha0=(24sqrt2)^-1", alpha0 * Quad(0, 24) == Quad(1) && alpha0 == Quad(0, Rational(1, 48))},
      {"alpha0*beta*R=1", alpha0 * Quad(*prm.beta()) * prm.R() == Quad(1)},
      {"m=12", ConstructionParams::m == 12},
      {"3m-2=34", 3 * ConstructionParams::m - 2 == 34},
      {"m^2=144", ConstructionParams::m * ConstructionParams::m == 144},
      {"slack=2392/27", verify_growth({1, 110}).slack == Rational(2392, 27)},
      {"144-88*17/27=2392/27", Rational(144) - 88 * Rational(17, 27) == Rational(2392, 27)},
      {"slack>88", Rational(2392, 27) > 88},
      {"a1>=110", verify_growth({1, 110}).passes() && !verify_growth({1, 109}).passes()},
      {"floor(4sqrt2)=5", floor_quad(Quad(0, 4)) == 5 && prm.blocks_per_side() == 5},
  };
  Outcome o{true, ""};
  int ok = 0;
  for (auto& [name, good] : checks) {
    ok += good;
    if (!good) {
      o.pass = false;
      o.detail += std::string(" broken:") + name;
    }
  }
  o.detail = fmt("%d/%zu exact identities hold", ok, checks.size()) + o.detail;
  return o;
}

const std::vector<ExponentPair>& corpus_pairs() {
  static const std::vector<ExponentPair> pairs = {ExponentPair(Rational(1, 2), Rational(1, 2)), kThird,
                                                  ExponentPair(Rational(0), Rational(1))};
  return pairs;
}

std::vector<SuiteReport>& aug_reports() {
  static std::vector<SuiteReport> reports = [] {
    std::vector<SuiteReport> out;
    for (const auto& st : corpus_pairs()) out.push_back(lemma_aug_suite(st, 200));
    return out;
  }();
  return reports;
}

Outcome lemma_aug() {
  std::int64_t instances = 0, violations = 0, oracle_mismatch = 0;
  for (const SuiteReport& r : aug_reports()) {
    instances += r.instances;
    violations += r.summary["attachment_violations"].get<std::int64_t>();
  }
  // second opinion from the plain box scan on the small denominators
  for (const auto& st : corpus_pairs()) {
    for (std::int64_t q = 1; q <= 60; ++q)
      for (std::int64_t p = 0; p <= q; ++p)
        for (std::int64_t r = 0; r <= q; ++r) {
          if (gcd3(p, r, q) != 1) continue;
          AttachedPoint a = attach_line(RatPoint{p, r, q}, st);
          oracle::Attached o = oracle::attach(p, r, q, st);
          if (o.admissible == 0 || a.line != RatLine{o.A, o.B, o.C}) ++oracle_mismatch;
        }
  }
  return {violations == 0 && oracle_mismatch == 0 && instances > 0,
          fmt("%lld points (q<=200, 3 weight pairs), %lld attachment violations, %lld box-scan mismatches (q<=60)",
              (long long)instances, (long long)violations, (long long)oracle_mismatch)};
}

Outcome height_bound() {
  std::int64_t instances = 0, violations = 0;
  for (const SuiteReport& r : aug_reports()) {
    instances += r.instances;
    violations += r.summary["height_violations"].get<std::int64_t>();
  }
  return {violations == 0 && instances > 0,
          fmt("%lld points, %lld violations of q <= H(P) <= q^(1+max(s,t))", (long long)instances,
              (long long)violations)};
}

Outcome grid() {
  SuiteReport r = grid_suite(defaults(), 100000, 1);
  return {r.passed() && r.instances == 100000,
          fmt("%lld subsquares, %lld block_in_square failures", (long long)r.instances, (long long)r.violations)};
}

Outcome stripcount() {
  SuiteReport one = stripcount_suite(defaults(), 1, 10000, 1);
  SuiteReport two = stripcount_suite(defaults(), 2, 1000, 1);
  const auto max1 = one.summary["max_count"].get<std::uint64_t>(), max2 = two.summary["max_count"].get<std::uint64_t>();
  return {one.passed() && two.passed() && max1 <= 34 && max2 <= 1156,
          fmt("k=1: %lld strips, max %llu <= 34; k=2: %lld strips, max %llu <= 1156; %lld violations",
              (long long)one.instances, (unsigned long long)max1, (long long)two.instances,
              (unsigned long long)max2, (long long)(one.violations + two.violations))};
}

Outcome line_lemma() {
  ConstructionParams prm = defaults();
  SuiteReport constancy = line_lemma_suite(prm, 100, 1, false);
  SuiteReport strip = line_lemma_suite(prm, 100, 1, true);
  const auto multi = constancy.summary.value("multi_point_windows", std::int64_t{0});
  Outcome o;
  o.pass = constancy.passed() && strip.passed();
  o.detail = fmt("n0=%d, %lld windows, %lld with >=2 band points, %lld constancy + %lld strip violations",
                 prm.first_active_level(), (long long)constancy.instances, (long long)multi,
                 (long long)constancy.violations, (long long)strip.violations);
  if (constancy.vacuous || strip.vacuous) o.detail += "; vacuous: no window holds two band points";
  return o;
}

Outcome games() {
  int played = 0, failures = 0;
  std::int64_t min_certified = INT64_MAX;
  double worst_margin = INFINITY;
  std::string first_problem;
  for (const Rational& beta : {Rational(1, 2), Rational(3, 4)}) {
    ConstructionParams prm = defaults(beta);
    const int rounds = prm.first_active_level() + 3;
    for (const char* kind : {"concentric", "seeded-random", "steering:1/2,1/2"}) {
      for (std::uint64_t seed : {1, 2, 3}) {
        ++played;
        std::string problem;
        try {
          GameState g = GameState::start(prm, Disc(Quad(0), Quad(0), Quad(0, 24)), 1);
          BobStrategy bob = BobStrategy::parse(kind, seed);
          for (int i = 0; i < rounds; ++i) {
            const RoundRecord& rec = g.play_round(bob_move(bob, g));
            if (!rec.ratios_exact) problem = "ratio identity";
          }
          Certification cert = certify_transcript(g, 1000000000, 100000);
          min_certified = std::min(min_certified, cert.certified_q);
          const std::int64_t Q = std::min<std::int64_t>(cert.certified_q, 100000);
          auto [score, q] = oracle::min_score(g.last_alice().cx.to_long_double(), g.last_alice().cy.to_long_double(),
                                              1.0 / 3, 2.0 / 3, Q);
          worst_margin = std::min(worst_margin, static_cast<double>(score));
          if (!cert.passed) problem = "certification failed";
          else if (cert.certified_q < 10000) problem = "certified_q < 1e4";
          else if (!cert.direct_scan_passed || cert.direct_scan_q != Q) problem = "direct scan";
          else if (!(score > 1e-10)) problem = "independent center scan";
        } catch (const IllegalMove& e) {
          problem = std::string("illegal move: ") + e.what();
        } catch (const DeadEnd& e) {
          problem = std::string("dead end: ") + e.what();
        } catch (const Error& e) {
          problem = e.what();
        }
        if (!problem.empty()) {
          ++failures;
          if (first_problem.empty())
            first_problem = fmt("; first failure beta=%s bob=%s seed=%llu: %s", beta.get_str().c_str(), kind,
                                (unsigned long long)seed, problem.c_str());
        }
      }
    }
  }
  return {failures == 0,
          fmt("%d games x 16 rounds, %d failures, min certified_q %lld, min center score %.3e (c < 1e-21)", played,
              failures, (long long)min_certified, worst_margin) +
              first_problem};
}

Outcome tree_oracle() {
  TreeShape shape(16, 4, 4);
  int disagreements = 0, invalid = 0, found = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    unsigned permille = 550 + static_cast<unsigned>(seed % 10) * 45;
    SurvivalPredicate alive = hashed_survival(seed, permille);
    auto w = find_type_I(shape, alive, 4);
    if (w.has_value() != oracle::type_I_exists(16, 4, 4, alive)) ++disagreements;
    if (w) {
      ++found;
      if (!is_valid_type_I(shape, alive, *w)) ++invalid;
    }
  }
  return {disagreements == 0 && invalid == 0,
          fmt("200 predicates, %d with a witness, %d disagreements, %d invalid witnesses", found, disagreements,
              invalid)};
}

Outcome dynamics() {
  double worst_axis = 0, worst_det = 0, worst_half = -INFINITY;
  for (int i = 0; i <= 6; ++i) {
    const double u = 0.5 * i;
    FlowPoint o(0, 0, kThird, u);
    worst_axis = std::max(worst_axis, std::fabs(systole(o, required_coeff_bound(o)).value - std::exp(-u)));
    FlowPoint h(Rational(1, 2), Rational(1, 2), kThird, u);
    worst_half = std::max(worst_half, systole(h, required_coeff_bound(h)).value - 2 * std::exp(-u));
    worst_det = std::max({worst_det, std::fabs(determinant(o.basis()) - 1), std::fabs(determinant(h.basis()) - 1)});
  }
  return {worst_axis <= 1e-9 && worst_half <= 0 && worst_det <= 1e-12,
          fmt("max |sys-e^-u| %.2e (<=1e-9), max sys-2e^-u %.2e (<=0), max |det-1| %.2e (<=1e-12)", worst_axis,
              worst_half, worst_det)};
}

Outcome determinism() {
  ConstructionParams prm = defaults();
  std::vector<std::pair<std::string, std::function<std::string()>>> runs = {
      {"lemma-aug", [] { return lemma_aug_suite(kThird, 60).to_json().dump(); }},
      {"grid", [&] { return grid_suite(prm, 5000, 9).to_json().dump(); }},
      {"stripcount", [&] { return stripcount_suite(prm, 1, 500, 9).to_json().dump(); }},
      {"growth", [] { return growth_suite({1, 110, 10944}).to_json().dump(); }},
      {"tree", [] {
         auto w = find_type_I(TreeShape(16, 4, 4), hashed_survival(9, 800), 4);
         return w ? to_json(*w).dump() : std::string("none");
       }},
      {"play", [&] {
         GameState g = GameState::start(prm, Disc(Quad(0), Quad(0), Quad(0, 24)));
         BobStrategy bob = BobStrategy::parse("seeded-random", 9);
         for (int i = 0; i < 15; ++i) g.play_round(bob_move(bob, g));
         return transcript_json(g, bob.to_string(), 9, certify_transcript(g, 1000000000)).dump();
       }},
      {"dynamics", [] {
         std::ostringstream out;
         out.precision(17);
         for (const auto& s : trace(Rational(1, 2), Rational(1, 3), kThird, uniform_grid(3, 0.25)).samples)
           out << s.u << ',' << s.systole.value << '\n';
         return out.str();
       }},
  };
  int same = 0;
  std::string differing;
  for (auto& [name, run] : runs) {
    if (run() == run()) ++same;
    else differing += " " + name;
  }
  return {same == static_cast<int>(runs.size()),
          fmt("%d/%zu suites byte-identical on re-run", same, runs.size()) +
              (differing.empty() ? "" : "; differing:" + differing)};
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "constant identities", 1, constants},
      {2, "line attachment suite", 60, lemma_aug},
      {3, "height bound suite", 60, height_bound},
      {4, "grid property", 60, grid},
      {5, "strip-count suite", 600, stripcount},
      {6, "line constancy and strip cover", 600, line_lemma},
      {7, "end-to-end games", 900, games},
      {8, "type-(I) search oracle", 60, tree_oracle},
      {9, "dynamics", 10, dynamics},
      {10, "determinism", 600, determinism},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      selected.push_back(std::atoi(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]...\n", argv[0]);
      return 2;
    }
  }
  bool all_pass = true;
  for (const Criterion& c : all) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool pass = o.pass && in_time;
    all_pass = all_pass && pass;
    std::printf("[%s] criterion %d %s: %s; %.2fs (limit %.0fs)%s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs, c.limit_seconds, in_time ? "" : " TIME LIMIT EXCEEDED");
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
