#include "badgame/params.hpp"

#include <cmath>

#include "badgame/errors.hpp"

namespace badgame {

std::string to_string(Mode mode) { return mode == Mode::strict ? "strict" : "toy"; }

Mode parse_mode(const std::string& text) {
  if (text == "strict") return Mode::strict;
  if (text == "toy") return Mode::toy;
  throw ParamsError("unknown mode: " + text);
}

ConstructionParams::ConstructionParams(ExponentPair st, std::optional<Rational> beta, Quad l,
                                       Quad R, Rational c, Mode mode)
    : st_(st), beta_(std::move(beta)), l_(std::move(l)), R_(std::move(R)), c_(std::move(c)),
      mode_(mode) {
  if (R_.sign() <= 0) throw ParamsError("R must be positive");
  R_inverse_ = R_.inverse();
}

ConstructionParams ConstructionParams::strict(const ExponentPair& st, const Rational& beta,
                                              const Quad& l, std::optional<Rational> c) {
  if (beta <= 0 || beta >= 1) throw ParamsError("beta must lie in (0, 1)");
  if (l.sign() <= 0) throw ParamsError("l must be positive");
  // R = (alpha0 beta)^-1 = 24 sqrt2 / beta.
  Quad R(0, Rational(24) / beta);
  Rational cc = c ? *c : default_c(l, R);
  ConstructionParams p(st, beta, l, R, cc, Mode::strict);
  p.validate();
  return p;
}

ConstructionParams ConstructionParams::toy(const ExponentPair& st, const Quad& l, const Quad& R,
                                           const Rational& c) {
  if (l.sign() <= 0) throw ParamsError("l must be positive");
  if (R <= Quad(1)) throw ParamsError("R must exceed 1");
  ConstructionParams p(st, std::nullopt, l, R, c, Mode::toy);
  p.validate();
  return p;
}

Rational ConstructionParams::default_c(const Quad& l, const Quad& R) {
  Quad first = l / (Quad(6) * R);
  Quad second = (Quad(16) * R.pow(12)).inverse();
  Quad bound = min(first, second);
  // Start from the float estimate of log2(bound) and fix it exactly.
  long e = static_cast<long>(std::floor(bound.log() / std::log(2.0)));
  auto power = [](long k) {
    return k >= 0 ? Rational(pow_int(2, static_cast<unsigned long>(k)))
                  : Rational(1) / Rational(pow_int(2, static_cast<unsigned long>(-k)));
  };
  while (Quad(power(e)) >= bound) --e;
  while (Quad(power(e + 1)) < bound) ++e;
  return power(e);
}

void ConstructionParams::validate() const {
  if (c_ <= 0) throw ParamsError("c must be positive");
  Quad first = l_ / (Quad(6) * R_);
  if (!(Quad(c_) < first)) throw ParamsError("c must satisfy c < l/(6R) so that H_1 <= 1");
  if (mode_ == Mode::strict) {
    Quad second = (Quad(16) * R_.pow(12)).inverse();
    if (!(Quad(c_) < second)) throw ParamsError("strict mode requires c < 1/(16 R^12)");
    if (blocks_per_side() < 1) throw ParamsError("[R/m] must be at least 1");
  }
}

Quad ConstructionParams::H(int n) const {
  Quad base = Quad(6 * c_) / l_;
  if (n >= 0) return base * R_.pow(static_cast<unsigned long>(n));
  return base * R_inverse_.pow(static_cast<unsigned long>(-n));
}

std::int64_t ConstructionParams::blocks_per_side() const {
  return to_int64(floor_quad(R_ / Quad(m)));
}

int ConstructionParams::first_active_level() const {
  int n = 1;
  while (H(n) < Quad(1)) ++n;
  return n;
}

Quad ConstructionParams::side(int n) const {
  if (n < 0) throw DomainError("negative level");
  return l_ * R_inverse_.pow(static_cast<unsigned long>(n));
}

}  // namespace badgame
