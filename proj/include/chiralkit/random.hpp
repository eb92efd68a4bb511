#pragma once

#include <cstdint>
#include <random>

#include "chiralkit/rational.hpp"

namespace chiralkit {

// Deterministic across standard libraries: only the raw mt19937_64 stream is
// used, never the implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi] (inclusive).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return lo + static_cast<std::int64_t>(x % span);
  }

  bool coin() { return (next() & 1U) != 0; }

  /// Uniform rational on the grid {lo + k/den : 0 <= k <= (hi-lo)*den}.
  Rational grid_rational(std::int64_t lo, std::int64_t hi, std::int64_t den) {
    return ratio(uniform_int(lo * den, hi * den), den);
  }

  double uniform_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace chiralkit
