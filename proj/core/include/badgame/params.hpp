#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "badgame/exponents.hpp"
#include "badgame/quad.hpp"

namespace badgame {

enum class Mode { strict, toy };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

inline constexpr std::uint64_t kDefaultQBudget = 2'000'000'000ULL;

/// The constant set of the construction.
///
/// Strict mode ties R to the game: R = (alpha0 beta)^-1 with
/// alpha0 = (24 sqrt2)^-1, and demands c < min{l/(6R), 1/(16 R^12)}.
/// Toy mode takes R directly and keeps only c < l/(6R) (so that H_1 <= 1);
/// it exists for unit tests of band arithmetic at small heights.
class ConstructionParams {
 public:
  static constexpr int m = 12;

  static ConstructionParams strict(const ExponentPair& st, const Rational& beta, const Quad& l,
                                   std::optional<Rational> c = std::nullopt);
  static ConstructionParams toy(const ExponentPair& st, const Quad& l, const Quad& R,
                                const Rational& c);

  /// Largest power of two strictly below min{l/(6R), 1/(16 R^12)}.
  static Rational default_c(const Quad& l, const Quad& R);
  static Quad alpha0() { return Quad(0, Rational(1, 48)); }

  const ExponentPair& st() const { return st_; }
  const std::optional<Rational>& beta() const { return beta_; }
  const Quad& l() const { return l_; }
  const Quad& R() const { return R_; }
  const Rational& c() const { return c_; }
  Mode mode() const { return mode_; }
  std::uint64_t q_budget() const { return q_budget_; }
  void set_q_budget(std::uint64_t budget) { q_budget_ = budget; }

  /// H_n = 6 c l^-1 R^n.
  Quad H(int n) const;
  /// [R/m].
  std::int64_t blocks_per_side() const;
  /// m [R/m], children per side of a tessellated square.
  std::int64_t children_per_side() const { return m * blocks_per_side(); }
  /// Least n with H_n >= 1.
  int first_active_level() const;
  /// Side l R^-n of a level-n square.
  Quad side(int n) const;

 private:
  ConstructionParams(ExponentPair st, std::optional<Rational> beta, Quad l, Quad R, Rational c,
                     Mode mode);
  void validate() const;

  ExponentPair st_;
  std::optional<Rational> beta_;
  Quad l_;
  Quad R_;
  Quad R_inverse_;
  Rational c_;
  Mode mode_;
  std::uint64_t q_budget_ = kDefaultQBudget;
};

}  // namespace badgame
