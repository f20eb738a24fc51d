#pragma once

#include "artin/core.hpp"

namespace artin {

/// Number of nonnegative integer solutions of w . x = n (coin counting).
Integer restricted_partition(const Exponents& weights, Integer n);

/// Coefficients 0..max_degree of prod_j 1/(1 - t^{w_j}), by truncated power
/// series multiplication.
std::vector<Integer> series_coefficients(const Exponents& weights,
                                         Integer max_degree);

/// Number of semigroup elements of total degree n.
///
/// Dynamic programme over the coordinates with state (degree used, running
/// order). The running order is clamped to [-n*M, n*M], M = max |l_j|, which
/// contains every reachable value.
Integer hilbert_function(const Scenario& s, Integer n);

/// Denominator weights of the Hilbert series in the free case, one per
/// coordinate in original order: 1 for the zero of positive order and the
/// non-vanishing coordinates, m_j + 1 for each pole. All ones when no pole.
/// Throws std::domain_error outside the free case.
Exponents hilbert_series_free(const Scenario& s);

}  // namespace artin
