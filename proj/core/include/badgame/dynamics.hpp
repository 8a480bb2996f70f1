#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "badgame/exponents.hpp"
#include "badgame/rational.hpp"

namespace badgame {

using Matrix3 = std::array<std::array<double, 3>, 3>;

/// The lattice g_u h_(x,y) Z^3 with g_u = diag(e^(su), e^(tu), e^(-u)) and
/// h_(x,y) unipotent with (x, y) in the third column. Floating point.
struct FlowPoint {
  Rational x;
  Rational y;
  ExponentPair st;
  double u = 0;

  FlowPoint(Rational x_, Rational y_, ExponentPair st_, double u_);
  Matrix3 basis() const;
};

double determinant(const Matrix3& m);

struct SystoleResult {
  double value = 0;
  std::array<std::int64_t, 3> witness{};
};

/// Least coefficient bound accepted by systole: ceil(e^u) (1 + ceil(|x|+|y|)).
std::int64_t required_coeff_bound(const FlowPoint& fp);

/// min over nonzero integer v with |v|_inf <= coeff_bound of |basis v|_inf.
/// For each third coordinate the first two are the nearest integers to
/// -v3 x and -v3 y (computed exactly), which minimizes the first two
/// entries independently; v3 = 0 contributes min(e^(su), e^(tu)).
/// DomainError if coeff_bound is below required_coeff_bound.
SystoleResult systole(const FlowPoint& fp, std::int64_t coeff_bound);

struct TraceSample {
  double u = 0;
  SystoleResult systole;
};

struct Trace {
  std::vector<TraceSample> samples;
  // Unset for an empty grid.
  std::optional<std::size_t> argmin;
};

Trace trace(const Rational& x, const Rational& y, const ExponentPair& st,
            const std::vector<double>& u_grid);

/// 0, step, 2 step, ... up to u_max (inclusive up to rounding).
std::vector<double> uniform_grid(double u_max, double step);

}  // namespace badgame
