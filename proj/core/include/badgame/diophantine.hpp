#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "badgame/exponents.hpp"
#include "badgame/geometry.hpp"
#include "badgame/params.hpp"

namespace badgame {

/// Rational point (p/q, r/q) with q > 0 and gcd(p, q, r) = 1.
struct RatPoint {
  std::int64_t p = 0;
  std::int64_t r = 0;
  std::int64_t q = 1;

  static RatPoint make(std::int64_t p, std::int64_t r, std::int64_t q);
  Rational x() const { return make_rational(p, q); }
  Rational y() const { return make_rational(r, q); }

  friend bool operator==(const RatPoint&, const RatPoint&) = default;
  friend auto operator<=>(const RatPoint& a, const RatPoint& b) {
    if (a.q != b.q) return a.q <=> b.q;
    if (a.p != b.p) return a.p <=> b.p;
    return a.r <=> b.r;
  }
};

/// Rational line Ax + By + C = 0, gcd(A,B,C) = 1, first nonzero of (A,B) positive.
struct RatLine {
  std::int64_t A = 0;
  std::int64_t B = 1;
  std::int64_t C = 0;

  static RatLine make(std::int64_t A, std::int64_t B, std::int64_t C);
  friend bool operator==(const RatLine&, const RatLine&) = default;
};

/// A rational point together with the small line attached to it and the
/// resulting height H(P) = q max(|A|, |B|).
struct AttachedPoint {
  RatPoint point;
  RatLine line;
  Integer height;
};

struct BandIndex {
  int n = 1;
  int k = 1;
  friend bool operator==(const BandIndex&, const BandIndex&) = default;
};

// --- line attachment -------------------------------------------------------

/// Attaches to P the line through P whose normal (A, B) lies in the box
/// |A| <= q^s, |B| <= q^t and minimizes max(|A| q^-s, |B| q^-t). Ties go to
/// the lexicographically smallest (|A|, |B|, A, B) after sign normalization.
///
/// The normals through P form the lattice {(A,B) : Ap + Br = 0 mod q} of
/// determinant q; the box has area 4q, so Minkowski's theorem makes the
/// admissible set nonempty. A Gauss-reduced basis in the weighted norm gives
/// a first candidate; the exact answer is then certified by scanning every
/// lattice row whose short coordinate can still beat that candidate.
AttachedPoint attach_line(const RatPoint& P, const ExponentPair& st);

/// Exact comparison of the scaled norms max(|A| q^-s, |B| q^-t) of two
/// normals for the same denominator q.
std::strong_ordering compare_scaled_norm(std::int64_t A1, std::int64_t B1, std::int64_t A2,
                                         std::int64_t B2, std::int64_t q, const ExponentPair& st);

/// Exact test |A| <= q^s and |B| <= q^t.
bool in_attachment_box(std::int64_t A, std::int64_t B, std::int64_t q, const ExponentPair& st);

// --- removal boxes and bands ------------------------------------------------

/// Delta(P): |x - p/q| <= c q^-(1+s), |y - r/q| <= c q^-(1+t).
Rect delta_box(const RatPoint& P, const ExponentPair& st, const Rational& c);
Rect delta_box(const RatPoint& P, const ConstructionParams& params);

/// Exact denominators thresholds for one height band n.
///
/// With t the larger exponent, E = delta + sigma_t and j >= 0, the value
/// threshold(j) is the least integer q with q^(1+t) >= H_n R^(j(1+t)), that
/// is q >= H_n^(1/(1+t)) R^j. Sub-band k = 1 is [threshold(0), threshold(10)),
/// sub-band k >= 2 is [threshold(2k+6), threshold(2k+8)). Heights satisfy
/// q <= H(P) < H_{n+1}, so q_max = ceil(H_{n+1}) - 1 bounds every band member.
class BandTable {
 public:
  BandTable(const ConstructionParams& params, int n);

  int n() const { return n_; }
  const Integer& q_min() const { return q_min_; }
  const Integer& q_max() const { return q_max_; }
  // Least q in sub-band k and least q beyond it.
  Integer k_begin(int k) const;
  Integer k_end(int k) const;
  // Sub-band of denominator q (assumes q_min <= q); 0 if q < q_min.
  int k_of(const Integer& q) const;
  const Quad& h_n() const { return h_n_; }
  const Quad& h_next() const { return h_next_; }

 private:
  Integer threshold(int j) const;

  const ConstructionParams* params_;
  int n_;
  Quad h_n_;
  Quad h_next_;
  Integer q_min_;
  Integer q_max_;
  mutable std::vector<std::pair<int, Integer>> cache_;
};

/// Height band n with H_n <= H < H_{n+1}.
int height_level(const Integer& height, const ConstructionParams& params);

/// (n, k) of an attached point; nullopt only when the point violates the
/// band preconditions (which would signal inconsistent constants).
std::optional<BandIndex> band_of(const AttachedPoint& ap, const ConstructionParams& params);

// --- enumeration ------------------------------------------------------------

/// Visits, in increasing (q, p, r) order, every coprime P with
/// q_lo <= q <= q_hi whose box Delta(P) meets the square. A fixed-point
/// filter proposes candidate numerators; each is confirmed exactly.
/// The visitor returns false to stop early. Throws BudgetExceeded when
/// q_hi - q_lo + 1 exceeds the budget.
void scan_delta_hits(const Square& region, std::int64_t q_lo, std::int64_t q_hi,
                     const ExponentPair& st, const Rational& c, std::uint64_t q_budget,
                     const std::function<bool(const RatPoint&)>& visit);

/// Points of band n (and sub-band k, when given) whose removal box meets the
/// region, sorted by (q, p, r).
std::vector<AttachedPoint> enumerate_band(const Square& region, int n, std::optional<int> k,
                                          const ConstructionParams& params);

/// Like enumerate_band for every band 1..n_max at once (q < H_{n_max+1}).
std::vector<AttachedPoint> enumerate_bands_upto(const Square& region, int n_max,
                                                const ConstructionParams& params);

// --- badness certificates ---------------------------------------------------

struct BadnessCertificate {
  bool certified = false;
  std::int64_t certified_q = 0;  // all q <= certified_q covered on success
  Rational c;
  std::optional<RatPoint> witness;  // first box hit on failure
};

/// Checks that no box Delta(P) with q <= q_max meets the region.
///
/// On success every (x, y) in the region satisfies
/// max(q^s ||qx||, q^t ||qy||) > c for all 1 <= q <= q_max: a violation at q
/// with nearest integers p, r reduces, after dividing out g = gcd(p, q, r),
/// to a coprime point P' = (p'/q', r'/q') with q' = q/g <= q_max and
/// |x - p'/q'| = ||qx||/q <= c q^-(1+s) <= c q'^-(1+s) (same for y), i.e.
/// (x, y) in Delta(P'), which the scan has excluded.
BadnessCertificate certify_badness(const Square& region, std::int64_t q_max,
                                   const ExponentPair& st, const Rational& c,
                                   std::uint64_t q_budget);

}  // namespace badgame
