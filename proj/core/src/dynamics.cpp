#include <algorithm>
#include <cmath>

#include "badgame/dynamics.hpp"
#include "badgame/errors.hpp"

namespace badgame {

FlowPoint::FlowPoint(Rational x_, Rational y_, ExponentPair st_, double u_)
    : x(std::move(x_)), y(std::move(y_)), st(st_), u(u_) {
  if (!std::isfinite(u)) throw DomainError("flow time must be finite");
}

namespace {

double exponent(const ExponentPair& st, std::int64_t sigma) {
  return static_cast<double>(sigma) / static_cast<double>(st.delta());
}

}  // namespace

Matrix3 FlowPoint::basis() const {
  const double es = std::exp(exponent(st, st.sigma_s()) * u);
  const double et = std::exp(exponent(st, st.sigma_t()) * u);
  const double e3 = std::exp(-u);
  return {{{es, 0, es * x.get_d()}, {0, et, et * y.get_d()}, {0, 0, e3}}};
}

double determinant(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::int64_t required_coeff_bound(const FlowPoint& fp) {
  const double eu = std::ceil(std::exp(fp.u));
  Integer span = ceil_of(abs(fp.x) + abs(fp.y));
  if (eu > 4e18) throw DomainError("flow time too large");
  return static_cast<std::int64_t>(eu) * (1 + to_int64(span));
}

SystoleResult systole(const FlowPoint& fp, std::int64_t coeff_bound) {
  const std::int64_t need = required_coeff_bound(fp);
  if (coeff_bound < need) {
    throw DomainError("coefficient bound " + std::to_string(coeff_bound) + " is below the sufficient " +
                      std::to_string(need));
  }
  const double es = std::exp(exponent(fp.st, fp.st.sigma_s()) * fp.u);
  const double et = std::exp(exponent(fp.st, fp.st.sigma_t()) * fp.u);
  const double e3 = std::exp(-fp.u);

  SystoleResult best;
  // v3 = 0: the shortest of (1,0,0) and (0,1,0).
  if (es <= et) {
    best = {es, {1, 0, 0}};
  } else {
    best = {et, {0, 1, 0}};
  }
  // |v3| e^-u alone already exceeds the best value beyond this point.
  const auto v3_max = std::min<std::int64_t>(coeff_bound, static_cast<std::int64_t>(std::floor(best.value / e3)) + 1);
  for (std::int64_t v3 = 1; v3 <= v3_max; ++v3) {
    const double third = static_cast<double>(v3) * e3;
    if (third >= best.value) break;
    for (std::int64_t sign : {1, -1}) {
      const Rational mx = fp.x * static_cast<long>(sign * v3);
      const Rational my = fp.y * static_cast<long>(sign * v3);
      // v1 = nearest integer to -v3 x.
      const Integer v1 = floor_of(-mx + Rational(1, 2));
      const Integer v2 = floor_of(-my + Rational(1, 2));
      if (abs(v1) > coeff_bound || abs(v2) > coeff_bound) continue;
      const Rational rx = mx + Rational(v1), ry = my + Rational(v2);
      const double norm = std::max({std::fabs(es * rx.get_d()), std::fabs(et * ry.get_d()), third});
      if (norm < best.value) best = {norm, {to_int64(v1), to_int64(v2), sign * v3}};
    }
  }
  return best;
}

Trace trace(const Rational& x, const Rational& y, const ExponentPair& st,
            const std::vector<double>& u_grid) {
  Trace out;
  for (double u : u_grid) {
    FlowPoint fp(x, y, st, u);
    out.samples.push_back({u, systole(fp, required_coeff_bound(fp))});
    const std::size_t i = out.samples.size() - 1;
    if (!out.argmin || out.samples[i].systole.value < out.samples[*out.argmin].systole.value) out.argmin = i;
  }
  return out;
}

std::vector<double> uniform_grid(double u_max, double step) {
  if (!(step > 0) || !(u_max >= 0)) throw DomainError("grid needs step > 0 and u_max >= 0");
  std::vector<double> grid;
  const auto count = static_cast<std::int64_t>(std::floor(u_max / step + 1e-9));
  for (std::int64_t i = 0; i <= count; ++i) grid.push_back(static_cast<double>(i) * step);
  return grid;
}

}  // namespace badgame
