#pragma once

#include "artin/core.hpp"

#include <random>

namespace artin {

struct SamplingOptions {
  Index r = 3;
  Integer max_order = 3;
  std::size_t count = 10;
  std::uint64_t seed = 0;
  bool valid_only = false;
  /// Rejection-sampling attempts allowed per scenario with valid_only.
  std::size_t max_attempts = 100'000;
};

/// Uniform integer in [lo, hi] from a 64-bit Mersenne Twister by rejection,
/// so the stream is identical on every platform.
Integer uniform_integer(std::mt19937_64& rng, Integer lo, Integer hi);

/// Degrees uniform in 1..4, orders uniform in -max_order..max_order, drawn
/// coordinate by coordinate (degree, then order). Names are
/// random-<seed>-<i>. Throws GuardrailError when valid_only cannot be met
/// within max_attempts.
std::vector<Scenario> random_scenarios(const SamplingOptions& options);

}  // namespace artin
