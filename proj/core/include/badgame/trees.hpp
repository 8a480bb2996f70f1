#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "badgame/random.hpp"
#include "badgame/rational.hpp"

namespace badgame {

/// N-regular rooted tree with a regular D-coloring, materialized lazily.
/// Child j of any vertex has color 1 + floor(j / (N/D)), so every color
/// class among the successors has exactly N/D members.
struct TreeShape {
  std::int64_t N;
  std::int64_t D;
  int depth_limit;

  TreeShape(std::int64_t N_, std::int64_t D_, int depth_limit_);

  std::int64_t per_color() const { return N / D; }
  int color_of_child(std::int64_t j) const { return static_cast<int>(1 + j / per_color()); }
  // Child indices of color i (1-based) are [first_of_color(i), first_of_color(i) + N/D).
  std::int64_t first_of_color(int color) const { return (color - 1) * per_color(); }
};

/// Vertex identified by its path of child indices from the root.
struct Vertex {
  std::vector<std::int64_t> path;

  int level() const { return static_cast<int>(path.size()); }
  Vertex child(std::int64_t j) const;
  Vertex parent() const;
  bool is_root() const { return path.empty(); }

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

using SurvivalPredicate = std::function<bool(const Vertex&)>;
/// Bob-side object: at every vertex keep all successors of one color.
using TypeIISpec = std::function<int(const Vertex&)>;

/// Alice-side object truncated at depth h: for each included vertex above
/// depth h, one surviving successor of every color (listed by color).
struct TypeIWitness {
  int depth = 0;
  std::map<Vertex, std::vector<std::int64_t>> choices;
};

/// Depth-first search for a depth-h type-(I) subtree of the survivor tree.
/// Children are tried in index order, so the witness is deterministic. The
/// search is exhaustive: nullopt proves that no such subtree exists at depth h.
std::optional<TypeIWitness> find_type_I(const TreeShape& shape, const SurvivalPredicate& survives,
                                        int h);

/// Checks a witness: one successor per color at every included vertex
/// above its depth, every included vertex alive.
bool is_valid_type_I(const TreeShape& shape, const SurvivalPredicate& survives,
                     const TypeIWitness& witness);

/// a_n = number of survivors at level n inside the type-(II) subtree
/// generated by spec, for n = 0..h.
std::vector<std::uint64_t> type_II_trace(const TreeShape& shape, const SurvivalPredicate& survives,
                                         const TypeIISpec& spec, int h);

/// Minimum over all type-(II) subtrees of the survivor count at level L.
/// Positive exactly when every type-(II) subtree keeps survivors through level L.
std::uint64_t min_type_II_survivors(const TreeShape& shape, const SurvivalPredicate& survives,
                                    int L);

struct GrowthReport {
  // Levels n where a_n < m^2 a_{n-1} - sum_k (3m-2)^k a_{n-k}.
  std::vector<int> recursion_violations;
  // Levels n where a_n <= 88 a_{n-1}.
  std::vector<int> growth_violations;
  // m^2 - 88 sum_{k>=1} ((3m-2)/88)^k, exactly.
  Rational slack;
  bool slack_exceeds_88 = false;

  bool passes() const {
    return recursion_violations.empty() && growth_violations.empty() && slack_exceeds_88;
  }
};

GrowthReport verify_growth(const std::vector<std::uint64_t>& counts, int m = 12);

/// Pseudo-random survival predicate: the root always survives, any other
/// vertex survives with probability alive_permille/1000, decided by hashing
/// (seed, path). Pure and platform independent.
SurvivalPredicate hashed_survival(std::uint64_t seed, unsigned alive_permille);

}  // namespace badgame
