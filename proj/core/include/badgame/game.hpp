#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "badgame/cantor.hpp"
#include "badgame/geometry.hpp"
#include "badgame/params.hpp"

namespace badgame {

/// One completed round n >= 1: Bob's disc B_n and Alice's answer A_n, the
/// inscribed disc of the square of vertex (a child of the previous one).
struct RoundRecord {
  int n = 0;
  Disc bob;
  Disc alice;
  Vertex vertex;
  int color = 0;  // block chosen inside the inscribed square of B_n
  std::int64_t survivors_in_block = 0;
  // rho(A_n) = alpha0 rho(B_n), rho(B_n) = beta rho(A_n-1), rho(A_n) = l R^-n / 2.
  bool ratios_exact = false;
};

/// Schmidt (alpha0, beta)-game with Alice playing the pruned-tree strategy.
///
/// Alice answers B_n by taking the inscribed square Sigma of B_n (side
/// exactly 2m l R^-n), the least color block of the current square's
/// children inside Sigma, and the first child of that block, in index
/// order, that survives the pruning (and, with lookahead h > 1, still has a
/// depth-(h-1) type-(I) subtree of survivors below it). A_n is the inscribed
/// disc of that child.
class GameState {
 public:
  /// A_0 is concentric with B_0 of radius alpha0 rho(B_0); the root square
  /// is the square circumscribed about A_0. params must be strict with
  /// l = 2 rho(A_0).
  static GameState start(const ConstructionParams& params, const Disc& B0, int lookahead = 1);

  const ConstructionParams& params() const { return tess_.params(); }
  const Tessellation& tessellation() const { return tess_; }
  int lookahead() const { return lookahead_; }
  int round() const { return static_cast<int>(rounds_.size()); }
  const Disc& initial_bob() const { return b0_; }
  const Disc& initial_alice() const { return a0_; }
  const Disc& last_alice() const { return rounds_.empty() ? a0_ : rounds_.back().alice; }
  const NodeSquare& current() const { return current_; }
  const std::vector<RoundRecord>& rounds() const { return rounds_; }
  /// B_0, A_0, B_1, A_1, ...
  std::vector<Disc> discs() const;

  /// Radius beta rho(A_n-1) required of Bob's next disc.
  Quad next_bob_radius() const;
  /// Throws IllegalMove with an exact diagnosis unless B is a legal next move.
  void check_bob_move(const Disc& B) const;
  /// Validates B, lets Alice answer and records the round. Throws DeadEnd
  /// when no admissible child exists.
  const RoundRecord& play_round(const Disc& B);

 private:
  GameState(Tessellation tess, Disc b0, Disc a0, int lookahead);

  Tessellation tess_;
  Disc b0_;
  Disc a0_;
  int lookahead_;
  NodeSquare current_;
  std::vector<RoundRecord> rounds_;
};

enum class BobKind { concentric, seeded_random, steering };

struct BobStrategy {
  BobKind kind = BobKind::concentric;
  std::uint64_t seed = 0;
  Rational target_x;
  Rational target_y;

  /// "concentric", "random" / "seeded-random", or "steering:x,y".
  static BobStrategy parse(const std::string& text, std::uint64_t seed);
  std::string to_string() const;
};

/// Bob's next disc. concentric keeps the center; seeded-random draws the
/// center uniformly from a 1024-step grid of the legal center disc, keyed by
/// (seed, round); steering moves the center toward the target by
/// min(rho(A) - rho(B), distance) along a rational unit direction.
Disc bob_move(const BobStrategy& strategy, const GameState& state);

struct Certification {
  int rounds = 0;
  std::int64_t q_cap = 0;
  std::int64_t direct_cap = 0;
  std::int64_t certified_q = 0;
  Rational c;
  bool passed = false;
  std::optional<RatPoint> witness;
  // Independent scan at the final center over q <= direct_scan_q.
  std::int64_t direct_scan_q = 0;
  bool direct_scan_passed = false;
  double direct_min_score = 0;  // min over q of max(q^s ||qx||, q^t ||qy||) at the center
  std::int64_t direct_min_q = 0;
  // Re-enumeration of every band n <= N over the final square.
  std::int64_t reverified_points = 0;
  bool reverification_passed = false;
  std::string note;
};

/// Certifies the final square Phi(tau_N): certified_q is the least of q_cap
/// and the largest q with q^(1+max(s,t)) < H_(N+1) (every P with such q has
/// H(P) < H_(N+1), so it was pruned at its own band). The square is then
/// scanned for boxes with q <= certified_q, the center is checked directly
/// for q <= min(certified_q, direct_cap) with slack q rho(A_N), and the
/// bands 1..N are enumerated again over the square.
Certification certify_transcript(const GameState& state, std::int64_t q_cap,
                                 std::int64_t direct_cap = 100000);

}  // namespace badgame
