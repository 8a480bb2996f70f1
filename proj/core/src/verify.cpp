#include <algorithm>
#include <cmath>
#include <limits>

#include "badgame/cantor.hpp"
#include "badgame/errors.hpp"

namespace badgame {

namespace {

constexpr std::int64_t kM = ConstructionParams::m;

Integer big(std::int64_t v) { return Integer(std::to_string(v)); }

ConstancyDiagnostics compare_pair(const AttachedPoint& a, const AttachedPoint& b, int n, int k,
                                  const ConstructionParams& params) {
  ConstancyDiagnostics d;
  d.p1 = a.point;
  d.p2 = b.point;
  const RatLine& w1 = a.line;
  const RatLine& w2 = b.line;
  d.scaled_inner = big(w2.A) * big(a.point.p) + big(w2.B) * big(a.point.r) + big(w2.C) * big(a.point.q);
  d.inner = Rational(d.scaled_inner, big(a.point.q));
  d.inner.canonicalize();
  d.cross = {big(w1.B) * big(w2.C) - big(w1.C) * big(w2.B),
             big(w1.C) * big(w2.A) - big(w1.A) * big(w2.C),
             big(w1.A) * big(w2.B) - big(w1.B) * big(w2.A)};
  d.lambda_k = k == 1 ? 10 : 2;

  const Quad& R = params.R();
  const Rational& c = params.c();
  Quad bound = Quad(Rational(4 * c / Rational(big(a.point.q)))) * R.pow(static_cast<unsigned long>(d.lambda_k)) +
               Quad(Rational(12 * c / Rational(big(b.point.q)))) * R.pow(static_cast<unsigned long>(k + 1));
  d.inner_within_bound = Quad(abs(d.inner)) <= bound;

  if (k >= 2) {
    const double log_h = params.H(n).log();
    const double log_r = R.log();
    const double t = static_cast<double>(params.st().sigma_max()) / static_cast<double>(params.st().delta());
    const double s = 1.0 - t;
    for (const AttachedPoint* p : {&a, &b}) {
      const double amin = static_cast<double>(params.st().swapped() ? std::llabs(p->line.B)
                                                                   : std::llabs(p->line.A));
      if (amin > 0) d.log_margins.push_back(std::log(amin) - (s / (1 + t) * log_h + (k + 4) * log_r));
      const double mx = static_cast<double>(std::max(std::llabs(p->line.A), std::llabs(p->line.B)));
      if (mx > 0) d.log_margins.push_back(std::log(mx) - (t / (1 + t) * log_h - (2 * k + 5) * log_r));
    }
    if (d.cross[2] != 0) {
      const double q0 = std::fabs(d.cross[2].get_d());
      d.log_margins.push_back(std::log(q0) - (std::log(2.0) + log_h / (1 + t) - (k + 1) * log_r));
    }
  }
  return d;
}

}  // namespace

ConstancyResult verify_line_constancy(int n, int k, const Square& window,
                                      const ConstructionParams& params) {
  if (params.mode() != Mode::strict) {
    throw ParamsError("line constancy needs the strict constants; toy mode is rejected");
  }
  if (k < 1 || k > n) throw DomainError("need 1 <= k <= n");
  if (window.side != params.side(n - k)) {
    throw DomainError("window side must be l R^-(n-k) = " + params.side(n - k).to_string());
  }
  ConstancyResult result;
  result.points = enumerate_band(window, n, k, params);
  result.instances = static_cast<std::int64_t>(result.points.size());
  if (n - k >= 1) result.hypothesis_holds = enumerate_bands_upto(window, n - k, params).empty();
  for (std::size_t i = 0; i < result.points.size(); ++i) {
    for (std::size_t j = i + 1; j < result.points.size(); ++j) {
      result.diagnostics.push_back(compare_pair(result.points[i], result.points[j], n, k, params));
      if (!(result.points[i].line == result.points[j].line)) result.constant = false;
    }
  }
  return result;
}

StripCoverResult strip_cover(int n, int k, const Square& window, const ConstructionParams& params) {
  ConstancyResult constancy = verify_line_constancy(n, k, window, params);
  StripCoverResult result;
  result.instances = constancy.instances;
  if (constancy.points.empty()) return result;
  if (!constancy.constant) {
    throw VerificationFailure("attached lines differ inside a window of band (" +
                              std::to_string(n) + ", " + std::to_string(k) + ")");
  }
  const RatLine& line = constancy.points.front().line;
  Strip strip(line.A, line.B, line.C, Quad(Rational(2, 3)) * params.side(n));
  for (const AttachedPoint& ap : constancy.points) {
    if (!contains(strip, delta_box(ap.point, params))) ++result.containment_violations;
  }
  result.strip = strip;
  return result;
}

namespace {

struct StripFilter {
  const Strip& strip;
  double a, b, c, half;  // half = (width/2) * |(A,B)|

  explicit StripFilter(const Strip& s)
      : strip(s),
        a(static_cast<double>(s.A)),
        b(static_cast<double>(s.B)),
        c(static_cast<double>(s.C)),
        half(s.width.to_double() / 2 * std::hypot(a, b)) {}

  // 1 hit, 0 miss, -1 undecided in floating point.
  int decide(double x0, double y0, double side) const {
    const double spread = (std::fabs(a) + std::fabs(b)) * side / 2;
    const double centre = a * (x0 + side / 2) + b * (y0 + side / 2) + c;
    const double gap = std::fabs(centre) - spread - half;
    const double eps = 1e-7 * (std::fabs(a) + std::fabs(b)) * side + 1e-12 * (std::fabs(c) + 1);
    if (gap > eps) return 0;
    if (gap < -eps) return 1;
    return -1;
  }
};

std::uint64_t count_below(const Tessellation& t, const NodeSquare& node, const TypeIISpec& spec,
                          const StripFilter& filter, int remaining) {
  if (remaining == 0) return 1;
  const int color = spec(node.vertex);
  if (color < 1 || color > t.colors()) throw DomainError("type-(II) spec returned an invalid color");
  const std::int64_t first = (color - 1) * kM * kM;
  const Quad& s = t.side(node.level + 1);
  const double sd = s.to_double();
  const double px = node.square.x0.to_double(), py = node.square.y0.to_double();
  std::uint64_t total = 0;
  for (std::int64_t j = first; j < first + kM * kM; ++j) {
    auto [col, row] = t.cell_of(j);
    int verdict = filter.decide(px + static_cast<double>(col) * sd, py + static_cast<double>(row) * sd, sd);
    if (verdict == 0) continue;
    NodeSquare c = t.child(node, j);
    if (verdict < 0 && !intersects(filter.strip, c.square)) continue;
    total += count_below(t, c, spec, filter, remaining - 1);
  }
  return total;
}

}  // namespace

std::uint64_t count_strip_hits(const Tessellation& t, const Vertex& root, const TypeIISpec& spec,
                               const Strip& strip, int k) {
  if (k < 0) throw DomainError("negative depth");
  NodeSquare node = t.node_square(root);
  if (!intersects(strip, node.square)) return 0;
  StripFilter filter(strip);
  return count_below(t, node, spec, filter, k);
}

SeedScan directed_seed_scan(int n, int k, const Square& region, const ConstructionParams& params) {
  if (k < 1 || k > n) throw DomainError("need 1 <= k <= n");
  SeedScan scan;
  scan.n = n;
  scan.k = k;
  BandTable table(params, n);
  scan.q_min = std::max(table.q_min(), table.k_begin(k));
  scan.q_max = std::min(table.q_max(), Integer(table.k_end(k) - 1));
  if (scan.q_max < scan.q_min || scan.q_max < 1) return scan;

  const Quad w = params.side(n - k);
  const Quad reach = w + Quad(2 * params.c());
  scan.pairs_possible = Quad(Rational(scan.q_max * scan.q_max)) * reach >= Quad(1);
  if (!scan.pairs_possible) return scan;

  std::vector<AttachedPoint> points = enumerate_band(region, n, k, params);
  scan.band_points = static_cast<std::int64_t>(points.size());
  std::sort(points.begin(), points.end(), [](const AttachedPoint& a, const AttachedPoint& b) {
    return a.point.x() < b.point.x() || (a.point.x() == b.point.x() && a.point < b.point);
  });
  const Quad half_w = w * Quad(Rational(1, 2));
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Rational xi = points[i].point.x(), yi = points[i].point.y();
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const Rational xj = points[j].point.x(), yj = points[j].point.y();
      if (Quad(xj - xi) > reach) break;
      if (Quad(abs(yj - yi)) > reach) continue;
      Rational mx = (xi + xj) / 2, my = (yi + yj) / 2;
      scan.windows.emplace_back(Quad(mx) - half_w, Quad(my) - half_w, w);
    }
  }
  return scan;
}

}  // namespace badgame
