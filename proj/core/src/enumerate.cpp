#include "badgame/diophantine.hpp"
#include "badgame/errors.hpp"

namespace badgame {

namespace {

std::int64_t clamp_to_int64(const Integer& v, std::uint64_t budget) {
  if (!fits_int64(v)) {
    throw BudgetExceeded("denominator bound " + v.get_str() + " is beyond 64-bit range", ~0ULL,
                         budget);
  }
  return v.get_si();
}

}  // namespace

std::vector<AttachedPoint> enumerate_band(const Square& region, int n, std::optional<int> k,
                                          const ConstructionParams& params) {
  if (k && (*k < 1 || *k > n)) {
    // Sub-bands beyond n are empty.
    if (*k < 1) throw DomainError("sub-band index must be at least 1");
    return {};
  }
  BandTable table(params, n);
  Integer lo = table.q_min();
  Integer hi = table.q_max();
  if (k) {
    if (table.k_begin(*k) > lo) lo = table.k_begin(*k);
    Integer end = table.k_end(*k) - 1;
    if (end < hi) hi = end;
  }
  std::vector<AttachedPoint> out;
  if (hi < lo || hi < 1) return out;
  const std::int64_t q_lo = clamp_to_int64(lo, params.q_budget());
  const std::int64_t q_hi = clamp_to_int64(hi, params.q_budget());
  const Quad& h_n = table.h_n();
  const Quad& h_next = table.h_next();
  scan_delta_hits(region, q_lo, q_hi, params.st(), params.c(), params.q_budget(),
                  [&](const RatPoint& P) {
                    AttachedPoint ap = attach_line(P, params.st());
                    Quad h{Rational(ap.height)};
                    if (h < h_n || h >= h_next) return true;
                    if (k && table.k_of(Integer(static_cast<long>(P.q))) != *k) return true;
                    out.push_back(std::move(ap));
                    return true;
                  });
  return out;
}

std::vector<AttachedPoint> enumerate_bands_upto(const Square& region, int n_max,
                                                const ConstructionParams& params) {
  std::vector<AttachedPoint> out;
  if (n_max < 1) return out;
  const Quad h_next = params.H(n_max + 1);
  Integer hi = ceil_quad(h_next) - 1;
  if (hi < 1) return out;
  const std::int64_t q_hi = clamp_to_int64(hi, params.q_budget());
  scan_delta_hits(region, 1, q_hi, params.st(), params.c(), params.q_budget(),
                  [&](const RatPoint& P) {
                    AttachedPoint ap = attach_line(P, params.st());
                    if (Quad(Rational(ap.height)) < h_next) out.push_back(std::move(ap));
                    return true;
                  });
  return out;
}

BadnessCertificate certify_badness(const Square& region, std::int64_t q_max,
                                   const ExponentPair& st, const Rational& c,
                                   std::uint64_t q_budget) {
  BadnessCertificate cert;
  cert.c = c;
  if (q_max < 1) {
    cert.certified = true;
    cert.certified_q = 0;
    return cert;
  }
  scan_delta_hits(region, 1, q_max, st, c, q_budget, [&](const RatPoint& P) {
    cert.witness = P;
    return false;
  });
  cert.certified = !cert.witness.has_value();
  cert.certified_q = cert.certified ? q_max : cert.witness->q - 1;
  return cert;
}

}  // namespace badgame
