#include <cmath>

#include "badgame/errors.hpp"
#include "badgame/game.hpp"

namespace badgame {

namespace {

// Distance from v to the nearest integer, exactly.
Quad nearest_gap(const Quad& v) {
  Integer f = floor_quad(v);
  Quad below = v - Quad(Rational(f));
  Quad above = Quad(Rational(f + 1)) - v;
  return min(below, above);
}

struct DirectScan {
  bool passed = true;
  double min_score = 0;
  std::int64_t min_q = 0;
};

// Lower bounds ||qx'|| >= ||qx|| - q rho for every x' within rho of x, and
// the same for y; a q fails when both bounds fit inside the box widths.
DirectScan direct_scan(const Disc& disc, std::int64_t q_max, const ExponentPair& st,
                       const Rational& c) {
  DirectScan out;
  out.min_score = INFINITY;
  const long double x = disc.cx.to_long_double(), y = disc.cy.to_long_double();
  const long double rho = disc.radius.to_long_double();
  const long double s = static_cast<long double>(st.sigma_s()) / st.delta();
  const long double t = static_cast<long double>(st.sigma_t()) / st.delta();
  const long double cd = c.get_d();
  for (std::int64_t q = 1; q <= q_max; ++q) {
    const long double qd = static_cast<long double>(q);
    const long double qx = qd * x, qy = qd * y;
    long double gx = std::fabs(qx - std::nearbyint(qx)) - qd * rho;
    long double gy = std::fabs(qy - std::nearbyint(qy)) - qd * rho;
    if (gx < 0) gx = 0;
    if (gy < 0) gy = 0;
    const long double score = std::max(std::pow(qd, s) * gx, std::pow(qd, t) * gy);
    if (static_cast<double>(score) < out.min_score) {
      out.min_score = static_cast<double>(score);
      out.min_q = q;
    }
    // Coordinates carry about 1e-16 relative error, so a gap above 1e-9
    // decides the comparison with c (far below 1e-9) in floating point.
    if (gx > 1e-9L || gy > 1e-9L) {
      if (score <= cd) out.passed = false;
      continue;
    }
    const Quad qq(static_cast<long>(q));
    Quad ex = nearest_gap(qq * disc.cx) - qq * disc.radius;
    Quad ey = nearest_gap(qq * disc.cy) - qq * disc.radius;
    if (ex.sign() < 0) ex = Quad(0);
    if (ey.sign() < 0) ey = Quad(0);
    HalfWidth hx{c, q, st.sigma_s(), st.delta()};
    HalfWidth hy{c, q, st.sigma_t(), st.delta()};
    if (hx.bounds(ex) && hy.bounds(ey)) out.passed = false;
  }
  if (q_max < 1) out.min_score = 0;
  return out;
}

}  // namespace

Certification certify_transcript(const GameState& state, std::int64_t q_cap,
                                 std::int64_t direct_cap) {
  const ConstructionParams& params = state.params();
  const ExponentPair& st = params.st();
  Certification cert;
  cert.rounds = state.round();
  cert.q_cap = q_cap;
  cert.direct_cap = direct_cap;
  cert.c = params.c();

  const Quad h = params.H(cert.rounds + 1);
  Integer bound = greatest_root_below(h.pow(static_cast<unsigned long>(st.delta())),
                                      st.delta() + st.sigma_max());
  if (bound < 0) bound = 0;
  if (bound > q_cap) bound = q_cap;
  if (bound > Integer(std::to_string(params.q_budget()))) {
    bound = Integer(std::to_string(params.q_budget()));
    cert.note = "certified_q capped by the q budget";
  }
  cert.certified_q = to_int64(bound);

  const Square& square = state.current().square;
  BadnessCertificate badness =
      certify_badness(square, cert.certified_q, st, params.c(), params.q_budget());
  cert.witness = badness.witness;

  cert.direct_scan_q = std::min(cert.certified_q, direct_cap);
  DirectScan scan = direct_scan(state.last_alice(), cert.direct_scan_q, st, params.c());
  cert.direct_scan_passed = scan.passed;
  cert.direct_min_score = scan.min_score;
  cert.direct_min_q = scan.min_q;

  std::vector<AttachedPoint> left = enumerate_bands_upto(square, cert.rounds, params);
  cert.reverified_points = static_cast<std::int64_t>(left.size());
  cert.reverification_passed = left.empty();

  cert.passed = badness.certified && cert.direct_scan_passed && cert.reverification_passed;
  return cert;
}

}  // namespace badgame
