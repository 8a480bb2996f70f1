#include "badgame/errors.hpp"
#include "badgame/game.hpp"

namespace badgame {

namespace {

constexpr std::int64_t kM = ConstructionParams::m;

const Rational& beta_of(const ConstructionParams& params) {
  if (params.mode() != Mode::strict || !params.beta()) {
    throw ParamsError("the game needs strict parameters with a beta");
  }
  return *params.beta();
}

}  // namespace

GameState::GameState(Tessellation tess, Disc b0, Disc a0, int lookahead)
    : tess_(std::move(tess)),
      b0_(std::move(b0)),
      a0_(std::move(a0)),
      lookahead_(lookahead),
      current_{Vertex{}, tess_.root(), 0, 0} {}

GameState GameState::start(const ConstructionParams& params, const Disc& B0, int lookahead) {
  beta_of(params);
  if (lookahead < 1) throw ParamsError("lookahead must be at least 1");
  Disc a0(B0.cx, B0.cy, ConstructionParams::alpha0() * B0.radius);
  if (Quad(2) * a0.radius != params.l()) {
    throw ParamsError("l must equal 2 rho(A_0) = " + (Quad(2) * a0.radius).to_string() +
                      ", got " + params.l().to_string());
  }
  Tessellation tess(params, circumscribed_square(a0));
  return GameState(std::move(tess), B0, std::move(a0), lookahead);
}

std::vector<Disc> GameState::discs() const {
  std::vector<Disc> out{b0_, a0_};
  for (const RoundRecord& r : rounds_) {
    out.push_back(r.bob);
    out.push_back(r.alice);
  }
  return out;
}

Quad GameState::next_bob_radius() const {
  return Quad(beta_of(params())) * last_alice().radius;
}

void GameState::check_bob_move(const Disc& B) const {
  const Quad want = next_bob_radius();
  if (B.radius != want) {
    throw IllegalMove("round " + std::to_string(round() + 1) + ": Bob's radius " +
                      B.radius.to_string() + " differs from beta rho(A) = " + want.to_string());
  }
  const Disc& A = last_alice();
  if (!contains(A, B)) {
    Quad slack = A.radius - B.radius;
    throw IllegalMove("round " + std::to_string(round() + 1) +
                      ": Bob's disc leaves A; squared center distance " +
                      distance_squared({A.cx, A.cy}, {B.cx, B.cy}).to_string() + " exceeds " +
                      (slack * slack).to_string());
  }
}

const RoundRecord& GameState::play_round(const Disc& B) {
  check_bob_move(B);
  const int n = round() + 1;
  const ConstructionParams& params = tess_.params();
  const Quad& side = tess_.side(n);

  Square sigma = inscribed_square(B);
  if (sigma.side != Quad(2 * kM) * side) {
    throw VerificationFailure("inscribed square side " + sigma.side.to_string() +
                              " differs from 2m l R^-n = " + (Quad(2 * kM) * side).to_string());
  }
  const int color = tess_.block_in_square(current_, sigma);
  const Square block = tess_.block_square(current_, color);
  // One band scan over the block, then each child is tested against the hits.
  std::vector<Rect> boxes;
  for (const AttachedPoint& ap : enumerate_band(block, n, std::nullopt, params)) {
    boxes.push_back(delta_box(ap.point, params));
  }

  const std::int64_t first = (color - 1) * kM * kM;
  std::optional<NodeSquare> chosen;
  std::int64_t survivors = 0;
  for (std::int64_t j = first; j < first + kM * kM; ++j) {
    NodeSquare child = tess_.child(current_, j);
    bool alive = true;
    for (const Rect& box : boxes) {
      if (intersects(box, child.square)) {
        alive = false;
        break;
      }
    }
    if (!alive) continue;
    ++survivors;
    if (chosen) continue;
    if (lookahead_ > 1) {
      const int depth = lookahead_ - 1;
      SurvivalPredicate below = [&](const Vertex& rel) {
        if (rel.is_root()) return true;
        Vertex abs = child.vertex;
        abs.path.insert(abs.path.end(), rel.path.begin(), rel.path.end());
        return survives(tess_, abs).survived;
      };
      if (!find_type_I(tess_.shape(depth), below, depth)) continue;
    }
    chosen = std::move(child);
  }
  if (!chosen) {
    throw DeadEnd("round " + std::to_string(n) + ": no admissible child in block " +
                  std::to_string(color) + " (" + std::to_string(survivors) + " survivors, lookahead " +
                  std::to_string(lookahead_) + ")");
  }
  if (!survives(tess_, *chosen).survived) {
    throw VerificationFailure("round " + std::to_string(n) + ": chosen square fails the survival re-check");
  }

  Disc A = inscribed_disc(chosen->square);
  if (!contains(B, A)) throw VerificationFailure("round " + std::to_string(n) + ": A_n is not inside B_n");
  const bool exact = A.radius == ConstructionParams::alpha0() * B.radius &&
                     B.radius == Quad(*params.beta()) * last_alice().radius &&
                     A.radius == side * Quad(Rational(1, 2));
  if (!exact) throw VerificationFailure("round " + std::to_string(n) + ": radius identities fail");

  RoundRecord record{n, B, std::move(A), chosen->vertex, color, survivors, exact};
  current_ = std::move(*chosen);
  rounds_.push_back(std::move(record));
  return rounds_.back();
}

}  // namespace badgame
