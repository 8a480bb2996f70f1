#include <cmath>
#include <cstdlib>
#include <numeric>

#include "badgame/diophantine.hpp"
#include "badgame/errors.hpp"

namespace badgame {

RatPoint RatPoint::make(std::int64_t p, std::int64_t r, std::int64_t q) {
  if (q <= 0) throw DomainError("denominator must be positive");
  if (gcd3(p, r, q) != 1) throw DomainError("p, q, r must be coprime");
  return RatPoint{p, r, q};
}

RatLine RatLine::make(std::int64_t A, std::int64_t B, std::int64_t C) {
  if (A == 0 && B == 0) throw DomainError("line normal must be nonzero");
  std::int64_t g = gcd3(A, B, C);
  A /= g;
  B /= g;
  C /= g;
  if (A < 0 || (A == 0 && B < 0)) {
    A = -A;
    B = -B;
    C = -C;
  }
  return RatLine{A, B, C};
}

namespace {

using i128 = __int128;

std::uint64_t uabs(std::int64_t v) { return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v); }

std::int64_t mod_floor(i128 a, std::int64_t m) {
  i128 r = a % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

// Inverse of a modulo m for gcd(a, m) = 1, m >= 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t old_r = mod_floor(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t quotient = old_r / r;
    std::int64_t tmp = old_r - quotient * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quotient * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw DomainError("modular inverse does not exist");
  return mod_floor(old_s, m);
}

// One term n * q^(-sigma/delta) of the scaled norm.
struct Term {
  std::uint64_t n;
  std::int64_t sigma;
};

int cmp_terms(const Term& x, const Term& y, std::uint64_t q, std::int64_t delta) {
  // n1 q^(-s1/d) vs n2 q^(-s2/d)  <=>  n1^d q^s2 vs n2^d q^s1
  if (x.n == 0 || y.n == 0) return x.n == y.n ? 0 : (x.n == 0 ? -1 : 1);
  return cmp_power_products(x.n, static_cast<unsigned>(delta), q, static_cast<unsigned>(y.sigma),
                            y.n, static_cast<unsigned>(delta), q, static_cast<unsigned>(x.sigma));
}

Term dominant(std::int64_t A, std::int64_t B, std::uint64_t q, const ExponentPair& st) {
  Term a{uabs(A), st.sigma_s()};
  Term b{uabs(B), st.sigma_t()};
  return cmp_terms(a, b, q, st.delta()) >= 0 ? a : b;
}

// Lattice of normals through P, written in (u, v) coordinates where u is the
// coordinate being scanned: {(d a, v) : v = a b0 mod M}, d M = q.
struct NormalLattice {
  std::int64_t d;
  std::int64_t M;
  std::int64_t b0;
};

NormalLattice normal_lattice(std::int64_t coef_u, std::int64_t coef_v, std::int64_t q) {
  // u coef_u + v coef_v = 0 mod q. With d = gcd(coef_v, q), coprimality of
  // (p, q, r) forces gcd(coef_u, d) = 1 and hence d | u.
  std::int64_t d = std::gcd(coef_v, q);
  std::int64_t M = q / d;
  std::int64_t inv = mod_inverse(coef_v / d, M);
  std::int64_t b0 = M == 1 ? 0 : mod_floor(-static_cast<i128>(coef_u) * inv, M);
  return {d, M, b0};
}

struct Candidate {
  std::int64_t A;
  std::int64_t B;
};

bool lex_less(const Candidate& x, const Candidate& y) {
  auto key = [](const Candidate& c) {
    return std::tuple(uabs(c.A), uabs(c.B), c.A, c.B);
  };
  return key(x) < key(y);
}

Candidate normalized(std::int64_t A, std::int64_t B) {
  if (A < 0 || (A == 0 && B < 0)) return {-A, -B};
  return {A, B};
}

// Gauss reduction of {(d, b0), (0, M)} under the weighted Euclidean norm
// (u w_u)^2 + (v w_v)^2; returns the best admissible combination by float
// scaled norm, if any.
std::optional<std::pair<std::int64_t, std::int64_t>> reduced_guess(const NormalLattice& L,
                                                                    long double wu, long double wv,
                                                                    std::int64_t umax,
                                                                    std::int64_t vmax) {
  using LD = long double;
  std::int64_t b1u = L.d, b1v = L.b0, b2u = 0, b2v = L.M;
  auto dot = [&](std::int64_t xu, std::int64_t xv, std::int64_t yu, std::int64_t yv) {
    return static_cast<LD>(xu) * yu * wu * wu + static_cast<LD>(xv) * yv * wv * wv;
  };
  for (int iter = 0; iter < 200; ++iter) {
    if (dot(b1u, b1v, b1u, b1v) > dot(b2u, b2v, b2u, b2v)) {
      std::swap(b1u, b2u);
      std::swap(b1v, b2v);
    }
    LD n1 = dot(b1u, b1v, b1u, b1v);
    if (n1 == 0) break;
    auto mu = static_cast<std::int64_t>(std::llround(dot(b1u, b1v, b2u, b2v) / n1));
    if (mu == 0) break;
    b2u -= mu * b1u;
    b2v -= mu * b1v;
  }
  std::optional<std::pair<std::int64_t, std::int64_t>> best;
  LD best_nu = 0;
  const std::int64_t combos[][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
  for (const auto& k : combos) {
    std::int64_t u = k[0] * b1u + k[1] * b2u;
    std::int64_t v = k[0] * b1v + k[1] * b2v;
    if ((u == 0 && v == 0) || std::llabs(u) > umax || std::llabs(v) > vmax) continue;
    LD nu = std::max(std::fabs(static_cast<LD>(u)) * wu, std::fabs(static_cast<LD>(v)) * wv);
    if (!best || nu < best_nu) {
      best = std::pair(u, v);
      best_nu = nu;
    }
  }
  return best;
}

}  // namespace

bool in_attachment_box(std::int64_t A, std::int64_t B, std::int64_t q, const ExponentPair& st) {
  auto uq = static_cast<std::uint64_t>(q);
  auto d = static_cast<unsigned>(st.delta());
  return cmp_power_products(uabs(A), d, 1, 0, uq, static_cast<unsigned>(st.sigma_s()), 1, 0) <= 0 &&
         cmp_power_products(uabs(B), d, 1, 0, uq, static_cast<unsigned>(st.sigma_t()), 1, 0) <= 0;
}

std::strong_ordering compare_scaled_norm(std::int64_t A1, std::int64_t B1, std::int64_t A2,
                                         std::int64_t B2, std::int64_t q, const ExponentPair& st) {
  auto uq = static_cast<std::uint64_t>(q);
  int c = cmp_terms(dominant(A1, B1, uq, st), dominant(A2, B2, uq, st), uq, st.delta());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

AttachedPoint attach_line(const RatPoint& P, const ExponentPair& st) {
  if (P.q <= 0) throw DomainError("denominator must be positive");
  if (gcd3(P.p, P.r, P.q) != 1) throw DomainError("p, q, r must be coprime");
  const std::int64_t q = P.q;
  const auto uq = static_cast<std::uint64_t>(q);

  const std::int64_t a_max = floor_rational_power(q, st.sigma_s(), st.delta());
  const std::int64_t b_max = floor_rational_power(q, st.sigma_t(), st.delta());

  // Scan the coordinate with the smaller exponent; it has the shorter range.
  const bool scan_a = st.sigma_s() <= st.sigma_t();
  const std::int64_t coef_u = scan_a ? P.p : P.r;
  const std::int64_t coef_v = scan_a ? P.r : P.p;
  const std::int64_t sigma_u = scan_a ? st.sigma_s() : st.sigma_t();
  const std::int64_t sigma_v = scan_a ? st.sigma_t() : st.sigma_s();
  const std::int64_t umax = scan_a ? a_max : b_max;
  const std::int64_t vmax = scan_a ? b_max : a_max;
  const NormalLattice L = normal_lattice(coef_u, coef_v, q);

  const long double lq = std::log(static_cast<long double>(q));
  const long double wu = std::exp(-lq * sigma_u / st.delta());
  const long double wv = std::exp(-lq * sigma_v / st.delta());

  // Rows |u| <= nu* q^(e_u) contain every normal at least as good as the guess.
  std::int64_t u_limit = umax;
  if (auto guess = reduced_guess(L, wu, wv, umax, vmax)) {
    long double nu = std::max(std::fabs(static_cast<long double>(guess->first)) * wu,
                              std::fabs(static_cast<long double>(guess->second)) * wv);
    auto bound = static_cast<std::int64_t>(std::floor(nu * (1.0L + 1e-12L) / wu)) + 1;
    u_limit = std::min(umax, bound);
  }

  std::vector<Candidate> best;
  Term best_term{0, 0};
  auto offer = [&](std::int64_t u, std::int64_t v) {
    if (std::llabs(v) > vmax) return;
    Candidate cand = scan_a ? normalized(u, v) : normalized(v, u);
    Term t = dominant(cand.A, cand.B, uq, st);
    int c = best.empty() ? -1 : cmp_terms(t, best_term, uq, st.delta());
    if (c < 0) {
      best.assign(1, cand);
      best_term = t;
    } else if (c == 0) {
      best.push_back(cand);
    }
  };

  for (std::int64_t a = 0; a * L.d <= u_limit; ++a) {
    const std::int64_t u = a * L.d;
    if (a == 0) {
      offer(0, L.M);
      continue;
    }
    // Within a row only the residues nearest zero can be optimal.
    std::int64_t v0 = mod_floor(static_cast<i128>(a) * L.b0, L.M);
    std::int64_t v1 = v0 - L.M;
    if (v0 == 0) {
      offer(u, 0);
    } else if (v0 < -v1) {
      offer(u, v0);
    } else if (v0 > -v1) {
      offer(u, v1);
    } else {
      offer(u, v0);
      offer(u, v1);
    }
  }
  if (best.empty()) {
    throw Error("no admissible normal found (Minkowski bound violated?) for q=" + std::to_string(q));
  }
  Candidate chosen = best.front();
  for (const Candidate& c : best) {
    if (lex_less(c, chosen)) chosen = c;
  }
  i128 num = -(static_cast<i128>(chosen.A) * P.p + static_cast<i128>(chosen.B) * P.r);
  if (num % q != 0) throw Error("attached line does not pass through the point");
  auto C = static_cast<std::int64_t>(num / q);
  RatLine line = RatLine::make(chosen.A, chosen.B, C);
  Integer height = Integer(static_cast<long>(q)) *
                   Integer(static_cast<long>(std::max(uabs(line.A), uabs(line.B))));
  return AttachedPoint{P, line, height};
}

}  // namespace badgame
