#include "badgame/suites.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "badgame/errors.hpp"
#include "badgame/random.hpp"

namespace badgame {

namespace {

constexpr std::size_t kMaxDiagnostics = 20;

void note(SuiteReport& report, Json entry) {
  if (report.diagnostics.size() < kMaxDiagnostics) report.diagnostics.push_back(std::move(entry));
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  // Extended Euclid; a and m coprime.
  std::int64_t r0 = mod(a, m), r1 = m, s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t qt = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - qt * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - qt * s1);
  }
  return mod(s0, m);
}

auto lex_key(std::int64_t A, std::int64_t B) {
  return std::make_tuple(std::llabs(A), std::llabs(B), A, B);
}

Quad rational_fraction(Rng& rng, unsigned bits) {
  const auto den = static_cast<std::int64_t>(1) << bits;
  return Quad(make_rational(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(den) + 1)), den));
}

TypeIISpec hashed_spec(std::uint64_t seed, std::int64_t colors) {
  return [seed, colors](const Vertex& v) {
    std::uint64_t h = splitmix64(seed);
    for (std::int64_t j : v.path) h = splitmix64(h ^ static_cast<std::uint64_t>(j + 1));
    return static_cast<int>(1 + h % static_cast<std::uint64_t>(colors));
  };
}

}  // namespace

Json SuiteReport::to_json() const {
  Json j{{"suite", name}, {"instances", instances}, {"violations", violations}, {"vacuous", vacuous},
         {"passed", passed()}};
  j["summary"] = summary;
  j["diagnostics"] = diagnostics;
  return j;
}

Square centered_root(const ConstructionParams& params) {
  const Quad half = params.l() * Quad(Rational(1, 2));
  return Square(-half, -half, params.l());
}

std::string check_attachment(const RatPoint& P, const ExponentPair& st, const AttachedPoint& ap) {
  if (!(ap.point == P)) return "attached point differs from the input";
  const RatLine& L = ap.line;
  if (L.A == 0 && L.B == 0) return "zero normal";
  const Integer through = Integer(std::to_string(L.A)) * P.p + Integer(std::to_string(L.B)) * P.r +
                          Integer(std::to_string(L.C)) * P.q;
  if (through != 0) return "line misses the point";
  if (!in_attachment_box(L.A, L.B, P.q, st)) return "normal outside the box";

  const std::int64_t q = P.q;
  const std::int64_t a_max = floor_rational_power(q, st.sigma_s(), st.delta());
  const std::int64_t b_max = floor_rational_power(q, st.sigma_t(), st.delta());
  const std::int64_t g = gcd64(mod(P.r, q), q);
  const std::int64_t step = q / g;
  const std::int64_t r_inv = step == 1 ? 0 : inverse_mod(P.r / g, step);
  bool found = false;
  std::int64_t best_a = 0, best_b = 0;
  for (std::int64_t A = 0; A <= a_max; ++A) {
    // r B = -p A (mod q) needs g | p A, then B = B0 (mod q/g).
    const std::int64_t rhs = mod(-P.p * A, q);
    if (rhs % g != 0) continue;
    const std::int64_t b0 = step == 1 ? 0 : mod((rhs / g) % step * r_inv, step);
    std::int64_t B = b0 - ((b0 + b_max) / step) * step;
    for (; B <= b_max; B += step) {
      if (A == 0 && B <= 0) continue;  // sign-normalized: first nonzero positive
      if (!found) {
        found = true;
        best_a = A;
        best_b = B;
        continue;
      }
      auto order = compare_scaled_norm(A, B, best_a, best_b, q, st);
      if (order < 0 || (order == 0 && lex_key(A, B) < lex_key(best_a, best_b))) {
        best_a = A;
        best_b = B;
      }
    }
  }
  if (!found) return "admissible set is empty";
  if (L.A != best_a || L.B != best_b) {
    return "not minimal: best normal is (" + std::to_string(best_a) + ", " + std::to_string(best_b) + ")";
  }
  return "";
}

SuiteReport lemma_aug_suite(const ExponentPair& st, std::int64_t q_max) {
  SuiteReport report;
  report.name = "lemma-aug";
  std::int64_t height_violations = 0, attach_violations = 0;
  for (std::int64_t q = 1; q <= q_max; ++q) {
    for (std::int64_t p = 0; p <= q; ++p) {
      for (std::int64_t r = 0; r <= q; ++r) {
        if (gcd3(p, r, q) != 1) continue;
        ++report.instances;
        RatPoint P{p, r, q};
        AttachedPoint ap = attach_line(P, st);
        std::string problem = check_attachment(P, st, ap);
        if (!problem.empty()) {
          ++attach_violations;
          note(report, Json{{"point", to_json(P)}, {"problem", problem}});
        }
        const Integer qq(static_cast<long>(q));
        const bool low = ap.height >= qq;
        const bool high = pow_int(ap.height, static_cast<unsigned long>(st.delta())) <=
                          pow_int(qq, static_cast<unsigned long>(st.delta() + st.sigma_max()));
        if (!low || !high) {
          ++height_violations;
          note(report, Json{{"point", to_json(P)}, {"problem", "height bound"}, {"height", ap.height.get_str()}});
        }
      }
    }
  }
  report.violations = attach_violations + height_violations;
  report.summary = Json{{"s", format_rational(st.s())},
                        {"t", format_rational(st.t())},
                        {"q_max", q_max},
                        {"attachment_violations", attach_violations},
                        {"height_violations", height_violations}};
  return report;
}

SuiteReport grid_suite(const ConstructionParams& params, std::int64_t samples, std::uint64_t seed) {
  SuiteReport report;
  report.name = "grid";
  Tessellation tess(params, centered_root(params));
  Rng rng(seed, 0x67726964);
  std::vector<std::int64_t> colors_used(static_cast<std::size_t>(tess.colors()) + 1, 0);
  for (std::int64_t i = 0; i < samples; ++i) {
    const int level = static_cast<int>(rng.below(3));
    NodeSquare parent = tess.node_square(Vertex{});
    for (int d = 0; d < level; ++d) {
      const auto n = tess.children_per_side() * tess.children_per_side();
      parent = tess.child(parent, static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(n))));
    }
    const Quad side = Quad(2 * ConstructionParams::m) * tess.side(level + 1);
    const Quad room = parent.square.side - side;
    Quad u, v;
    if (i < 4) {
      u = Quad(i % 2);
      v = Quad(i / 2);
    } else {
      u = rational_fraction(rng, 20);
      v = rational_fraction(rng, 20);
    }
    Square sigma(parent.square.x0 + room * u, parent.square.y0 + room * v, side);
    ++report.instances;
    try {
      const int color = tess.block_in_square(parent, sigma);
      if (!contains(sigma, tess.block_square(parent, color))) {
        ++report.violations;
        note(report, Json{{"sample", i}, {"problem", "returned block not inside sigma"}});
      }
      ++colors_used[static_cast<std::size_t>(color)];
    } catch (const DomainError& e) {
      ++report.violations;
      note(report, Json{{"sample", i}, {"level", level}, {"problem", e.what()}});
    }
  }
  std::int64_t distinct = 0;
  for (std::size_t c = 1; c < colors_used.size(); ++c) distinct += colors_used[c] > 0;
  report.summary = Json{{"samples", samples},
                        {"blocks_per_side", tess.blocks_per_side()},
                        {"children_per_side", tess.children_per_side()},
                        {"distinct_colors", distinct}};
  return report;
}

SuiteReport stripcount_suite(const ConstructionParams& params, int k, std::int64_t samples,
                             std::uint64_t seed) {
  if (k < 1) throw DomainError("strip counts need k >= 1");
  SuiteReport report;
  report.name = "stripcount";
  Tessellation tess(params, centered_root(params));
  Rng rng(seed, 0x7374726970ULL + static_cast<std::uint64_t>(k));
  const std::uint64_t bound = static_cast<std::uint64_t>(std::llround(std::pow(3.0 * ConstructionParams::m - 2, k)));
  const Quad width = Quad(Rational(2, 3)) * tess.side(k);
  const NodeSquare root = tess.node_square(Vertex{});
  std::uint64_t max_count = 0;
  double total = 0;
  std::vector<std::int64_t> histogram;
  for (std::int64_t i = 0; i < samples; ++i) {
    TypeIISpec spec = hashed_spec(splitmix64(seed + static_cast<std::uint64_t>(i)), tess.colors());
    const Square block = tess.block_square(root, spec(root.vertex));
    const double bx = block.x0.to_double(), by = block.y0.to_double(), bs = block.side.to_double();
    const double px = bx + bs * static_cast<double>(rng.below(1u << 30)) / (1u << 30);
    const double py = by + bs * static_cast<double>(rng.below(1u << 30)) / (1u << 30);
    std::int64_t A = 0, B = 0;
    while (A == 0 && B == 0) {
      A = rng.between(-1000000, 1000000);
      B = rng.between(-1000000, 1000000);
    }
    const auto C = static_cast<std::int64_t>(std::llround(-(static_cast<double>(A) * px + static_cast<double>(B) * py)));
    Strip strip(A, B, C, width);
    const std::uint64_t count = count_strip_hits(tess, Vertex{}, spec, strip, k);
    ++report.instances;
    max_count = std::max(max_count, count);
    total += static_cast<double>(count);
    if (histogram.size() <= count) histogram.resize(count + 1, 0);
    ++histogram[count];
    if (count > bound) {
      ++report.violations;
      note(report, Json{{"sample", i}, {"strip", to_json(strip)}, {"count", count}});
    }
  }
  report.summary = Json{{"k", k},
                        {"bound", bound},
                        {"samples", samples},
                        {"max_count", max_count},
                        {"mean_count", samples > 0 ? total / static_cast<double>(samples) : 0.0},
                        {"histogram", histogram}};
  return report;
}

namespace {

// A window of side w containing a random point of band (n, k) near the
// root, or nullopt when none turned up.
std::optional<Square> anchored_window(const ConstructionParams& params, int n, int k,
                                      const Integer& q_lo, const Integer& q_hi, Rng& rng,
                                      const Square& root, RatPoint& anchor) {
  if (q_hi < q_lo || !fits_int64(q_hi)) return std::nullopt;
  const std::int64_t lo = q_lo.get_si(), hi = q_hi.get_si();
  const Quad w = params.side(n - k);
  for (int attempt = 0; attempt < 4000; ++attempt) {
    const std::int64_t q = rng.between(lo, hi);
    const std::int64_t p = rng.between(-q, q), r = rng.between(-q, q);
    if (gcd3(p, r, q) != 1) continue;
    RatPoint P{p, r, q};
    if (!contains(root, Point{Quad(P.x()), Quad(P.y())})) continue;
    auto band = band_of(attach_line(P, params.st()), params);
    if (!band || band->n != n || band->k != k) continue;
    anchor = P;
    Quad u = rational_fraction(rng, 20), v = rational_fraction(rng, 20);
    return Square(Quad(P.x()) - w * u, Quad(P.y()) - w * v, w);
  }
  return std::nullopt;
}

}  // namespace

SuiteReport line_lemma_suite(const ConstructionParams& params, std::int64_t random_windows,
                             std::uint64_t seed, bool strip) {
  SuiteReport report;
  report.name = strip ? "strip" : "constancy";
  const Square root = centered_root(params);
  const int n0 = params.first_active_level();
  Rng rng(seed, 0x636f6e7374ULL);
  Json levels = Json::array();
  std::int64_t constancy_violations = 0, containment_violations = 0, multi = 0, max_points = 0;
  std::int64_t outside_hypothesis = 0;
  std::vector<std::pair<int, int>> cases;
  for (int n = n0; n <= n0 + 1; ++n) {
    for (int k = 1; k <= std::min(2, n); ++k) cases.emplace_back(n, k);
  }
  const auto per_case = cases.empty() ? 0 : random_windows / static_cast<std::int64_t>(cases.size());
  std::int64_t extra = random_windows - per_case * static_cast<std::int64_t>(cases.size());
  for (auto [n, k] : cases) {
    SeedScan scan = directed_seed_scan(n, k, root, params);
    std::vector<Square> windows = scan.windows;
    const std::size_t seeded = windows.size();
    std::int64_t want = per_case + (extra > 0 ? 1 : 0);
    if (extra > 0) --extra;
    std::int64_t anchored = 0, uniform = 0;
    for (std::int64_t i = 0; i < want; ++i) {
      RatPoint anchor;
      if (auto w = anchored_window(params, n, k, scan.q_min, scan.q_max, rng, root, anchor)) {
        windows.push_back(*w);
        ++anchored;
      } else {
        const Quad side = params.side(n - k);
        const Quad room = root.side - side;
        windows.emplace_back(root.x0 + room * rational_fraction(rng, 30),
                             root.y0 + room * rational_fraction(rng, 30), side);
        ++uniform;
      }
    }
    std::int64_t case_max = 0, case_multi = 0;
    for (std::size_t i = 0; i < windows.size(); ++i) {
      ++report.instances;
      ConstancyResult res = verify_line_constancy(n, k, windows[i], params);
      case_max = std::max(case_max, res.instances);
      if (res.instances >= 2) ++case_multi;
      if (!res.hypothesis_holds) ++outside_hypothesis;
      if (!res.constant && res.hypothesis_holds) {
        ++constancy_violations;
        note(report, Json{{"n", n}, {"k", k}, {"window", to_json(windows[i])}, {"problem", "lines differ"}});
      }
      if (res.constant && res.instances > 0) {
        StripCoverResult cover = strip_cover(n, k, windows[i], params);
        if (cover.containment_violations > 0) {
          containment_violations += cover.containment_violations;
          note(report, Json{{"n", n}, {"k", k}, {"window", to_json(windows[i])},
                            {"problem", "box outside strip"}});
        }
      }
      for (const ConstancyDiagnostics& d : res.diagnostics) {
        if (!d.inner_within_bound || (k == 1 && d.scaled_inner != 0)) {
          note(report, Json{{"n", n}, {"k", k}, {"p1", to_json(d.p1)}, {"p2", to_json(d.p2)},
                            {"inner", format_rational(d.inner)}, {"within_bound", d.inner_within_bound}});
        }
      }
    }
    max_points = std::max(max_points, case_max);
    multi += case_multi;
    levels.push_back(Json{{"n", n},
                          {"k", k},
                          {"q_min", scan.q_min.get_str()},
                          {"q_max", scan.q_max.get_str()},
                          {"pairs_possible", scan.pairs_possible},
                          {"seed_band_points", scan.band_points},
                          {"seed_windows", seeded},
                          {"anchored_windows", anchored},
                          {"uniform_windows", uniform},
                          {"max_points_in_window", case_max},
                          {"multi_point_windows", case_multi}});
  }
  report.violations = strip ? containment_violations : constancy_violations;
  report.vacuous = multi == 0;
  report.summary = Json{{"first_active_level", n0},
                        {"levels", levels},
                        {"constancy_violations", constancy_violations},
                        {"containment_violations", containment_violations},
                        {"windows_outside_hypothesis", outside_hypothesis},
                        {"max_points_in_window", max_points},
                        {"multi_point_windows", multi}};
  return report;
}

SuiteReport growth_suite(const std::vector<std::uint64_t>& counts, int m) {
  SuiteReport report;
  report.name = "growth";
  GrowthReport g = verify_growth(counts, m);
  report.instances = counts.empty() ? 0 : static_cast<std::int64_t>(counts.size()) - 1;
  report.violations = static_cast<std::int64_t>(g.recursion_violations.size() + g.growth_violations.size()) +
                      (g.slack_exceeds_88 ? 0 : 1);
  report.summary = Json{{"m", m},
                        {"counts", counts},
                        {"slack", format_rational(g.slack)},
                        {"slack_exceeds_88", g.slack_exceeds_88},
                        {"recursion_violations", g.recursion_violations},
                        {"growth_violations", g.growth_violations}};
  return report;
}

}  // namespace badgame
