#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "badgame/diophantine.hpp"
#include "badgame/geometry.hpp"
#include "badgame/params.hpp"
#include "badgame/trees.hpp"

namespace badgame {

/// Square of a tree vertex. color is the vertex's color among its siblings
/// (0 for the root).
struct NodeSquare {
  Vertex vertex;
  Square square;
  int level = 0;
  int color = 0;
};

/// The embedding Phi of the colored tree into squares.
///
/// The children of a level-(n-1) square form an m[R/m] x m[R/m] grid of
/// squares of side l R^-n anchored at the parent's lower-left corner. Child
/// (col, row) belongs to block (col / m, row / m); block (bc, br) has color
/// 1 + bc + br [R/m]. Child indices enumerate each color class as a
/// contiguous run of m^2 indices, row-major inside the block, so the
/// induced coloring is the one of TreeShape.
class Tessellation {
 public:
  Tessellation(const ConstructionParams& params, Square root);

  const ConstructionParams& params() const { return params_; }
  const Square& root() const { return root_; }
  std::int64_t blocks_per_side() const { return blocks_; }
  std::int64_t children_per_side() const { return grid_; }
  std::int64_t colors() const { return blocks_ * blocks_; }
  TreeShape shape(int depth_limit) const;

  /// Side l R^-level.
  const Quad& side(int level) const;

  /// Grid cell (col, row) of child index j, and back.
  std::pair<std::int64_t, std::int64_t> cell_of(std::int64_t j) const;
  std::int64_t index_of(std::int64_t col, std::int64_t row) const;

  NodeSquare node_square(const Vertex& v) const;
  NodeSquare child(const NodeSquare& parent, std::int64_t j) const;
  /// Union of the children of the given color: a square of side m l R^-n.
  Square block_square(const NodeSquare& parent, int color) const;

  /// Least color whose block square lies inside sigma. Requires sigma inside
  /// the parent square and side(sigma) >= 2m l R^-n for the child level n;
  /// violations raise DomainError with the exact margins.
  int block_in_square(const NodeSquare& parent, const Square& sigma) const;

 private:
  ConstructionParams params_;
  Square root_;
  std::int64_t blocks_;
  std::int64_t grid_;
  mutable std::deque<Quad> sides_;
};

struct SurvivalReport {
  Vertex vertex;
  std::vector<AttachedPoint> removed_points;
  bool survived = true;
};

/// Pruning test at level n = level(v) >= 1: the square survives iff no point
/// of band n has its box Delta(P) meeting it.
SurvivalReport survives(const Tessellation& t, const Vertex& v);
SurvivalReport survives(const Tessellation& t, const NodeSquare& node);

// --- verifiers for the line lemma and the strip bounds ---------------------

struct ConstancyDiagnostics {
  RatPoint p1;
  RatPoint p2;
  // <v1, w2> = A2 p1/q1 + B2 r1/q1 + C2.
  Rational inner;
  // w1 x w2.
  std::array<Integer, 3> cross;
  int lambda_k = 10;
  // 4c q1^-1 R^lambda + 12c q2^-1 R^(k+1), compared exactly with |inner|.
  bool inner_within_bound = true;
  // q1 <v1, w2>, an integer; zero is forced when 16 c R^12 < 1 and k = 1.
  Integer scaled_inner;
  // k >= 2 only: log of the observed quantities against their bounds
  // (|A_i| vs H^(s/(1+t)) R^(k+4), max(|A_i|,|B_i|) vs H^(t/(1+t)) R^(-2k-5),
  // |w1 x w2|_3 vs 2 H^(1/(1+t)) R^(-k-1)); each entry is observed - bound.
  std::vector<double> log_margins;
};

struct ConstancyResult {
  std::int64_t instances = 0;  // # P_{n,k}(window)
  bool constant = true;
  // The lemma assumes the window survived all bands <= n - k.
  bool hypothesis_holds = true;
  std::vector<AttachedPoint> points;
  std::vector<ConstancyDiagnostics> diagnostics;
};

/// Enumerates P_{n,k}(window) and checks that all attached lines agree.
/// Strict mode only (ParamsError otherwise). window must have side
/// l R^-(n-k).
ConstancyResult verify_line_constancy(int n, int k, const Square& window,
                                      const ConstructionParams& params);

struct StripCoverResult {
  std::optional<Strip> strip;
  std::int64_t instances = 0;
  // Boxes Delta(P) not contained in the strip (exact test).
  std::int64_t containment_violations = 0;
};

/// Strip of width (2/3) l R^-n around the common line of P_{n,k}(window),
/// with every Delta(P) checked to lie inside. Raises VerificationFailure if
/// the lines differ.
StripCoverResult strip_cover(int n, int k, const Square& window, const ConstructionParams& params);

/// Number of depth-k descendants of root inside the type-(II) subtree of spec
/// whose squares meet the strip. Exact; a floating prefilter only decides
/// cases far from the boundary.
std::uint64_t count_strip_hits(const Tessellation& t, const Vertex& root, const TypeIISpec& spec,
                               const Strip& strip, int k);

struct SeedScan {
  int n = 0;
  int k = 0;
  Integer q_min;
  Integer q_max;
  // Two distinct points with denominators <= Q are at least 1/Q^2 apart in
  // some coordinate; pairs are possible only if that does not exceed the
  // window side plus both box half-widths.
  bool pairs_possible = false;
  std::int64_t band_points = 0;
  std::vector<Square> windows;
};

/// Directed seed scan: finds the points of P_{n,k} in region and returns
/// windows of side l R^-(n-k) centered at midpoints of pairs close enough to
/// share a window. When the separation bound rules out all pairs the
/// enumeration is skipped.
SeedScan directed_seed_scan(int n, int k, const Square& region, const ConstructionParams& params);

}  // namespace badgame
