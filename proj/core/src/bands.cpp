#include <algorithm>
#include <cmath>

#include "badgame/diophantine.hpp"
#include "badgame/errors.hpp"

namespace badgame {

Rect delta_box(const RatPoint& P, const ExponentPair& st, const Rational& c) {
  const std::int64_t d = st.delta();
  return Rect{P.x(), P.y(), HalfWidth{c, P.q, d + st.sigma_s(), d},
              HalfWidth{c, P.q, d + st.sigma_t(), d}};
}

Rect delta_box(const RatPoint& P, const ConstructionParams& params) {
  return delta_box(P, params.st(), params.c());
}

BandTable::BandTable(const ConstructionParams& params, int n)
    : params_(&params), n_(n), h_n_(params.H(n)), h_next_(params.H(n + 1)) {
  if (n < 1) throw DomainError("band index must be at least 1");
  q_min_ = threshold(0);
  if (q_min_ < 1) q_min_ = 1;
  q_max_ = ceil_quad(h_next_) - 1;
}

Integer BandTable::threshold(int j) const {
  for (const auto& [jj, value] : cache_) {
    if (jj == j) return value;
  }
  const ExponentPair& st = params_->st();
  const std::int64_t e = st.delta() + st.sigma_max();
  // q >= H_n^(1/(1+t)) R^j  <=>  q^e >= H_n^delta R^(j e)
  Quad y = h_n_.pow(static_cast<unsigned long>(st.delta())) *
           params_->R().pow(static_cast<unsigned long>(j) * static_cast<unsigned long>(e));
  Integer value = least_root_at_least(y, e);
  cache_.emplace_back(j, value);
  return value;
}

Integer BandTable::k_begin(int k) const {
  if (k < 1) throw DomainError("sub-band index must be at least 1");
  return k == 1 ? q_min_ : threshold(2 * k + 6);
}

Integer BandTable::k_end(int k) const {
  if (k < 1) throw DomainError("sub-band index must be at least 1");
  return k == 1 ? threshold(10) : threshold(2 * k + 8);
}

int BandTable::k_of(const Integer& q) const {
  if (q < q_min_) return 0;
  if (q < threshold(10)) return 1;
  for (int k = 2;; ++k) {
    if (q < threshold(2 * k + 8)) return k;
  }
}

int height_level(const Integer& height, const ConstructionParams& params) {
  Quad h{Rational(height)};
  if (h < params.H(1)) throw DomainError("height below H_1: constants are inconsistent");
  double lr = params.R().log();
  double guess = (h.log() - params.H(0).log()) / lr;
  int n = std::max(1, static_cast<int>(std::floor(guess)));
  while (n > 1 && params.H(n) > h) --n;
  while (params.H(n + 1) <= h) ++n;
  return n;
}

std::optional<BandIndex> band_of(const AttachedPoint& ap, const ConstructionParams& params) {
  if (ap.height < 1) return std::nullopt;
  Quad h{Rational(ap.height)};
  if (h < params.H(1)) return std::nullopt;
  int n = height_level(ap.height, params);
  BandTable table(params, n);
  int k = table.k_of(Integer(static_cast<long>(ap.point.q)));
  if (k < 1 || k > n) return std::nullopt;
  return BandIndex{n, k};
}

}  // namespace badgame
