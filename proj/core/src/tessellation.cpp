#include <utility>

#include "badgame/cantor.hpp"
#include "badgame/errors.hpp"

namespace badgame {

namespace {
constexpr std::int64_t kM = ConstructionParams::m;
}

Tessellation::Tessellation(const ConstructionParams& params, Square root)
    : params_(params),
      root_(std::move(root)),
      blocks_(params.blocks_per_side()),
      grid_(params.children_per_side()) {
  if (blocks_ < 1) throw ParamsError("[R/m] must be at least 1 to tessellate");
  if (root_.side != params_.l()) {
    throw ParamsError("root square side " + root_.side.to_string() + " differs from l = " +
                      params_.l().to_string());
  }
  sides_.push_back(root_.side);
}

TreeShape Tessellation::shape(int depth_limit) const {
  return TreeShape(grid_ * grid_, colors(), depth_limit);
}

const Quad& Tessellation::side(int level) const {
  if (level < 0) throw DomainError("negative level");
  while (static_cast<int>(sides_.size()) <= level) {
    sides_.push_back(params_.side(static_cast<int>(sides_.size())));
  }
  return sides_[static_cast<std::size_t>(level)];
}

std::pair<std::int64_t, std::int64_t> Tessellation::cell_of(std::int64_t j) const {
  if (j < 0 || j >= grid_ * grid_) throw DomainError("child index out of range");
  const std::int64_t block = j / (kM * kM), within = j % (kM * kM);
  const std::int64_t bc = block % blocks_, br = block / blocks_;
  return {bc * kM + within % kM, br * kM + within / kM};
}

std::int64_t Tessellation::index_of(std::int64_t col, std::int64_t row) const {
  if (col < 0 || row < 0 || col >= grid_ || row >= grid_) throw DomainError("cell out of range");
  const std::int64_t block = col / kM + (row / kM) * blocks_;
  return block * kM * kM + (row % kM) * kM + col % kM;
}

NodeSquare Tessellation::child(const NodeSquare& parent, std::int64_t j) const {
  auto [col, row] = cell_of(j);
  const Quad& s = side(parent.level + 1);
  NodeSquare node{parent.vertex.child(j),
                  Square(parent.square.x0 + Quad(col) * s, parent.square.y0 + Quad(row) * s, s),
                  parent.level + 1, static_cast<int>(1 + j / (kM * kM))};
  return node;
}

NodeSquare Tessellation::node_square(const Vertex& v) const {
  NodeSquare node{Vertex{}, root_, 0, 0};
  for (std::int64_t j : v.path) node = child(node, j);
  return node;
}

Square Tessellation::block_square(const NodeSquare& parent, int color) const {
  if (color < 1 || color > colors()) throw DomainError("color out of range");
  const std::int64_t block = color - 1;
  const Quad span = Quad(kM) * side(parent.level + 1);
  return Square(parent.square.x0 + Quad(block % blocks_) * span,
                parent.square.y0 + Quad(block / blocks_) * span, span);
}

int Tessellation::block_in_square(const NodeSquare& parent, const Square& sigma) const {
  const Quad span = Quad(kM) * side(parent.level + 1);
  if (!contains(parent.square, sigma)) {
    throw DomainError("sigma is not inside the parent square: margins x0 " +
                      (sigma.x0 - parent.square.x0).to_string() + ", x1 " +
                      (parent.square.x1() - sigma.x1()).to_string() + ", y0 " +
                      (sigma.y0 - parent.square.y0).to_string() + ", y1 " +
                      (parent.square.y1() - sigma.y1()).to_string());
  }
  if (sigma.side < Quad(2) * span) {
    throw DomainError("sigma side falls short of 2m l R^-n by " +
                      (Quad(2) * span - sigma.side).to_string());
  }
  // Block b along an axis fits iff lo <= origin + b*span and origin + (b+1)*span <= hi.
  auto range = [&](const Quad& origin, const Quad& lo, const Quad& hi) {
    Integer first = ceil_quad((lo - origin) / span);
    Integer last = floor_quad((hi - origin) / span) - 1;
    if (first < 0) first = 0;
    if (last > blocks_ - 1) last = blocks_ - 1;
    return std::pair<Integer, Integer>(first, last);
  };
  auto [c0, c1] = range(parent.square.x0, sigma.x0, sigma.x1());
  auto [r0, r1] = range(parent.square.y0, sigma.y0, sigma.y1());
  if (c0 > c1 || r0 > r1) {
    throw DomainError("no color block fits inside sigma (" + describe(sigma) + ")");
  }
  return static_cast<int>(1 + c0.get_si() + r0.get_si() * blocks_);
}

SurvivalReport survives(const Tessellation& t, const NodeSquare& node) {
  if (node.level < 1) throw DomainError("survival is defined for levels n >= 1");
  SurvivalReport report;
  report.vertex = node.vertex;
  report.removed_points = enumerate_band(node.square, node.level, std::nullopt, t.params());
  report.survived = report.removed_points.empty();
  return report;
}

SurvivalReport survives(const Tessellation& t, const Vertex& v) {
  return survives(t, t.node_square(v));
}

}  // namespace badgame
