#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "badgame/cantor.hpp"
#include "badgame/serialize.hpp"

namespace badgame {

/// Outcome of a batch verification: {instances, violations, diagnostics[]}
/// plus suite-specific summary figures.
struct SuiteReport {
  std::string name;
  std::int64_t instances = 0;
  std::int64_t violations = 0;
  // Set when the suite found nothing that could exercise the claim.
  bool vacuous = false;
  Json summary = Json::object();
  Json diagnostics = Json::array();

  bool passed() const { return violations == 0 && !vacuous; }
  Json to_json() const;
};

/// Exhaustive admissible-set check of one attachment: passes through P,
/// lies in the box, and is the nu-least, lex-least admissible normal.
/// Returns an empty string when all hold, else a description.
std::string check_attachment(const RatPoint& P, const ExponentPair& st, const AttachedPoint& ap);

/// Every coprime P in [0,1]^2 with q <= q_max: check_attachment plus the
/// height bound q <= H(P) <= q^(1+max(s,t)).
SuiteReport lemma_aug_suite(const ExponentPair& st, std::int64_t q_max);

/// Random squares of side 2m l R^-n inside random parents (levels 0..2)
/// of the tessellation rooted at [-l/2, l/2]^2; block_in_square must succeed.
SuiteReport grid_suite(const ConstructionParams& params, std::int64_t samples, std::uint64_t seed);

/// Random rational strips of width (2/3) l R^-k through the chosen block of
/// the root, counted against the depth-k descendants of a hashed type-(II)
/// spec; a count above (3m-2)^k is a violation.
SuiteReport stripcount_suite(const ConstructionParams& params, int k, std::int64_t samples,
                             std::uint64_t seed);

/// Line constancy and strip containment at the first two active levels,
/// k in {1, 2}: windows from the directed seed scan over [-l/2, l/2]^2 plus
/// random_windows windows anchored at random band points. With strip set,
/// violations count strip containment failures; otherwise constancy
/// failures. Vacuous unless some window holds two or more band points.
SuiteReport line_lemma_suite(const ConstructionParams& params, std::int64_t random_windows,
                             std::uint64_t seed, bool strip);

/// verify_growth on the given counts (violations: recursion or growth
/// failures, or slack not above 88).
SuiteReport growth_suite(const std::vector<std::uint64_t>& counts, int m = 12);

/// Square [-l/2, l/2]^2 used as root by the suites.
Square centered_root(const ConstructionParams& params);

}  // namespace badgame
