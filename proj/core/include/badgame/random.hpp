#pragma once

#include <cstdint>

namespace badgame {

/// SplitMix64 finalizer; the single source of pseudo-randomness.
std::uint64_t splitmix64(std::uint64_t x);

/// Counter-based stream keyed by (seed, stream id). Platform independent:
/// bounded draws use rejection instead of std distributions.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream)
      : key_(splitmix64(seed ^ splitmix64(stream))) {}

  std::uint64_t next() { return splitmix64(key_ + counter_++); }

  /// Uniform in [0, n) for n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~0ULL - (~0ULL % n);
    for (;;) {
      std::uint64_t v = next();
      if (v < limit) return v % n;
    }
  }

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace badgame
