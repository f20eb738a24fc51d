#include "artin/sampling.hpp"

namespace artin {

Integer uniform_integer(std::mt19937_64& rng, Integer lo, Integer hi) {
  if (lo > hi) throw std::invalid_argument("uniform_integer: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<Integer>(rng());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<Integer>(x % span);
}

std::vector<Scenario> random_scenarios(const SamplingOptions& options) {
  if (options.r < 1) throw std::invalid_argument("random: r must be at least 1");
  if (options.max_order < 1) throw std::invalid_argument("random: max-order must be at least 1");
  std::mt19937_64 rng(options.seed);
  std::vector<Scenario> out;
  for (std::size_t i = 0; i < options.count; ++i) {
    const std::string name = "random-" + std::to_string(options.seed) + "-" + std::to_string(i);
    for (std::size_t attempt = 0;; ++attempt) {
      if (attempt == options.max_attempts)
        throw GuardrailError("random: no valid scenario after " +
                             std::to_string(options.max_attempts) + " attempts");
      Exponents d(options.r), l(options.r);
      for (Index j = 0; j < options.r; ++j) {
        d(j) = uniform_integer(rng, 1, 4);
        l(j) = uniform_integer(rng, -options.max_order, options.max_order);
      }
      Scenario s(name, std::move(d), std::move(l));
      if (!options.valid_only || validate(s).valid) {
        out.push_back(std::move(s));
        break;
      }
    }
  }
  return out;
}

}  // namespace artin
