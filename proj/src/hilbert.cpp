#include "artin/hilbert.hpp"

#include <stdexcept>

namespace artin {

namespace {

void check_weights(const Exponents& weights) {
  if ((weights.array() < 1).any())
    throw std::invalid_argument("weights must be positive");
}

void check_degree(Integer n) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
}

}  // namespace

Integer restricted_partition(const Exponents& weights, Integer n) {
  check_weights(weights);
  check_degree(n);
  std::vector<Integer> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (Index j = 0; j < weights.size(); ++j) {
    const auto w = static_cast<std::size_t>(weights(j));
    for (std::size_t k = w; k < ways.size(); ++k)
      ways[k] = checked::add(ways[k], ways[k - w]);
  }
  return ways.back();
}

std::vector<Integer> series_coefficients(const Exponents& weights,
                                         Integer max_degree) {
  check_weights(weights);
  check_degree(max_degree);
  const auto len = static_cast<std::size_t>(max_degree) + 1;
  std::vector<Integer> product(len, 0);
  product[0] = 1;
  for (Index j = 0; j < weights.size(); ++j) {
    const auto w = static_cast<std::size_t>(weights(j));
    // geometric series 1 + t^w + t^{2w} + ...
    std::vector<Integer> factor(len, 0);
    for (std::size_t k = 0; k < len; k += w) factor[k] = 1;
    std::vector<Integer> next(len, 0);
    for (std::size_t a = 0; a < len; ++a) {
      if (product[a] == 0) continue;
      for (std::size_t b = 0; a + b < len; ++b)
        if (factor[b] != 0)
          next[a + b] = checked::add(next[a + b], checked::mul(product[a], factor[b]));
    }
    product = std::move(next);
  }
  return product;
}

Integer hilbert_function(const Scenario& s, Integer n) {
  check_degree(n);
  const Integer window = checked::mul(n, s.max_abs_order());
  const auto width = static_cast<std::size_t>(2 * window + 1);
  const auto degrees = static_cast<std::size_t>(n) + 1;
  // table[d][o + window]: ways to reach degree d with running order o
  std::vector<std::vector<Integer>> table(degrees, std::vector<Integer>(width, 0));
  table[0][static_cast<std::size_t>(window)] = 1;
  for (Index j = 0; j < s.r(); ++j) {
    const Integer l = s.order(j);
    // Unbounded use of coordinate j: ascending sweep over degree.
    for (std::size_t d = 1; d < degrees; ++d) {
      for (std::size_t o = 0; o < width; ++o) {
        const auto prev = static_cast<Integer>(o) - l;
        if (prev < 0 || prev >= static_cast<Integer>(width)) continue;
        const Integer ways = table[d - 1][static_cast<std::size_t>(prev)];
        if (ways != 0) table[d][o] = checked::add(table[d][o], ways);
      }
    }
  }
  Integer total = 0;
  for (auto o = static_cast<std::size_t>(window); o < width; ++o)
    total = checked::add(total, table.back()[o]);
  return total;
}

Exponents hilbert_series_free(const Scenario& s) {
  const Index r = s.r();
  Exponents weights = Exponents::Ones(r);
  if (s.negative_count() == 0) return weights;
  if (s.positive_count() != 1)
    throw std::domain_error(
        "toric ideal nonzero; closed-form series unavailable");
  Index pivot = 0;
  while (s.order(pivot) <= 0) ++pivot;
  const Integer l1 = s.order(pivot);
  for (Index j = 0; j < r; ++j) {
    if (s.order(j) >= 0) continue;
    if (s.order(j) % l1 != 0)
      throw std::domain_error(
          "toric ideal nonzero; closed-form series unavailable");
    weights(j) = -s.order(j) / l1 + 1;
  }
  return weights;
}

}  // namespace artin
