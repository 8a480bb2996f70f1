#include "badgame/trees.hpp"

#include <algorithm>

#include "badgame/errors.hpp"

namespace badgame {

TreeShape::TreeShape(std::int64_t N_, std::int64_t D_, int depth_limit_)
    : N(N_), D(D_), depth_limit(depth_limit_) {
  if (N < 1 || D < 1) throw DomainError("tree needs N >= 1 and D >= 1");
  if (N % D != 0) throw DomainError("regular coloring needs D | N");
  if (depth_limit < 0) throw DomainError("negative depth limit");
}

Vertex Vertex::child(std::int64_t j) const {
  Vertex v = *this;
  v.path.push_back(j);
  return v;
}

Vertex Vertex::parent() const {
  if (path.empty()) throw DomainError("root has no parent");
  Vertex v = *this;
  v.path.pop_back();
  return v;
}

namespace {

bool extend(const TreeShape& shape, const SurvivalPredicate& survives, const Vertex& v,
            int remaining, std::map<Vertex, std::vector<std::int64_t>>& out) {
  if (remaining == 0) return true;
  std::map<Vertex, std::vector<std::int64_t>> local;
  std::vector<std::int64_t> picks;
  picks.reserve(static_cast<std::size_t>(shape.D));
  for (int color = 1; color <= shape.D; ++color) {
    bool found = false;
    const std::int64_t first = shape.first_of_color(color);
    for (std::int64_t j = first; j < first + shape.per_color(); ++j) {
      Vertex c = v.child(j);
      if (!survives(c)) continue;
      std::map<Vertex, std::vector<std::int64_t>> sub;
      if (extend(shape, survives, c, remaining - 1, sub)) {
        picks.push_back(j);
        local.merge(sub);
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  local.emplace(v, std::move(picks));
  out.merge(local);
  return true;
}

}  // namespace

std::optional<TypeIWitness> find_type_I(const TreeShape& shape, const SurvivalPredicate& survives,
                                        int h) {
  if (h < 0 || h > shape.depth_limit) throw DomainError("search depth outside the tree");
  Vertex root;
  if (!survives(root)) throw DomainError("root does not survive");
  TypeIWitness w;
  w.depth = h;
  if (!extend(shape, survives, root, h, w.choices)) return std::nullopt;
  return w;
}

bool is_valid_type_I(const TreeShape& shape, const SurvivalPredicate& survives,
                     const TypeIWitness& witness) {
  std::vector<Vertex> frontier{Vertex{}};
  if (!survives(frontier.front())) return false;
  for (int level = 0; level < witness.depth; ++level) {
    std::vector<Vertex> next;
    for (const Vertex& v : frontier) {
      auto it = witness.choices.find(v);
      if (it == witness.choices.end()) return false;
      const auto& picks = it->second;
      if (static_cast<std::int64_t>(picks.size()) != shape.D) return false;
      for (int color = 1; color <= shape.D; ++color) {
        std::int64_t j = picks[static_cast<std::size_t>(color - 1)];
        if (j < 0 || j >= shape.N || shape.color_of_child(j) != color) return false;
        Vertex c = v.child(j);
        if (!survives(c)) return false;
        next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  return true;
}

std::vector<std::uint64_t> type_II_trace(const TreeShape& shape, const SurvivalPredicate& survives,
                                         const TypeIISpec& spec, int h) {
  if (h < 0 || h > shape.depth_limit) throw DomainError("trace depth outside the tree");
  std::vector<std::uint64_t> counts;
  std::vector<Vertex> level;
  if (survives(Vertex{})) level.emplace_back();
  counts.push_back(level.size());
  for (int n = 1; n <= h; ++n) {
    std::vector<Vertex> next;
    for (const Vertex& v : level) {
      int color = spec(v);
      if (color < 1 || color > shape.D) throw DomainError("type-(II) spec returned an invalid color");
      const std::int64_t first = shape.first_of_color(color);
      for (std::int64_t j = first; j < first + shape.per_color(); ++j) {
        Vertex c = v.child(j);
        if (survives(c)) next.push_back(std::move(c));
      }
    }
    level = std::move(next);
    counts.push_back(level.size());
  }
  return counts;
}

namespace {

std::uint64_t min_survivors(const TreeShape& shape, const SurvivalPredicate& survives,
                            const Vertex& v, int remaining) {
  if (!survives(v)) return 0;
  if (remaining == 0) return 1;
  std::uint64_t best = ~0ULL;
  for (int color = 1; color <= shape.D && best > 0; ++color) {
    std::uint64_t total = 0;
    const std::int64_t first = shape.first_of_color(color);
    for (std::int64_t j = first; j < first + shape.per_color(); ++j) {
      total += min_survivors(shape, survives, v.child(j), remaining - 1);
    }
    best = std::min(best, total);
  }
  return best;
}

}  // namespace

std::uint64_t min_type_II_survivors(const TreeShape& shape, const SurvivalPredicate& survives,
                                    int L) {
  if (L < 0) throw DomainError("negative level");
  return min_survivors(shape, survives, Vertex{}, L);
}

GrowthReport verify_growth(const std::vector<std::uint64_t>& counts, int m) {
  GrowthReport report;
  const Integer square = m * m;
  const Integer strip = 3 * m - 2;
  for (std::size_t n = 1; n < counts.size(); ++n) {
    Integer bound = square * Integer(static_cast<unsigned long>(counts[n - 1]));
    Integer power = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      power *= strip;
      bound -= power * Integer(static_cast<unsigned long>(counts[n - k]));
    }
    Integer an(static_cast<unsigned long>(counts[n]));
    if (an < bound) report.recursion_violations.push_back(static_cast<int>(n));
    if (an <= 88 * Integer(static_cast<unsigned long>(counts[n - 1]))) {
      report.growth_violations.push_back(static_cast<int>(n));
    }
  }
  // sum_{k>=1} r^k = r / (1 - r) with r = (3m-2)/88 < 1.
  Rational r(strip, 88);
  r.canonicalize();
  if (r >= 1) {
    report.slack = Rational(-1);
  } else {
    report.slack = Rational(square) - 88 * (r / (1 - r));
  }
  report.slack.canonicalize();
  report.slack_exceeds_88 = report.slack > 88;
  return report;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

SurvivalPredicate hashed_survival(std::uint64_t seed, unsigned alive_permille) {
  return [seed, alive_permille](const Vertex& v) {
    if (v.is_root()) return true;
    std::uint64_t h = splitmix64(seed);
    for (std::int64_t j : v.path) h = splitmix64(h ^ static_cast<std::uint64_t>(j + 1));
    return h % 1000 < alive_permille;
  };
}

}  // namespace badgame
