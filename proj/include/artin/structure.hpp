#pragma once

#include "artin/semigroup.hpp"
#include "artin/toric.hpp"

#include <optional>

namespace artin {

/// Holomorphy of every L-function at the point: all orders nonnegative.
bool artin_holds(const Scenario& s);

/// Data of the free case: exactly one coordinate (pivot) has positive order
/// l_1 and l_1 divides every other order. Indices are original 0-based
/// coordinates.
struct FreeCaseWitness {
  Index pivot = 0;
  /// Number of coordinates with nonzero order (q in the normalized layout).
  Index q = 0;
  /// (pole coordinate, m_j = -l_j / l_1) in normalized order.
  std::vector<std::pair<Index, Integer>> multipliers;
  /// x_1, x_1^{m_j} x_j for the poles, x_j for the other coordinates.
  GeneratorSet generators;
};

/// Requires that some order is negative (throws std::invalid_argument
/// otherwise). Returns nothing when the scenario is not free.
std::optional<FreeCaseWitness> free_case(const Scenario& s);

/// Generators when every pole is simple: x_j for the non-vanishing
/// coordinates and x_j v with l_j > 0, v supported on the poles,
/// deg v <= l_j.
GeneratorSet simple_pole_generators(const Scenario& s);

/// Generators when every zero is simple: the zeros and non-vanishing
/// coordinates, and v x_j for each pole with v supported on the zeros and
/// deg v = -l_j.
GeneratorSet simple_zero_generators(const Scenario& s);

/// Presentation x_j (zeros and non-vanishing coordinates) and x_j x_k
/// (zero j, pole k) when every nonzero order is +1 or -1, with at least one
/// of each sign. Labels are t<j> and t<j>_<k> with 1-based original indices,
/// in normalized variable order.
Presentation both_simple_generators(const Scenario& s);

struct CriterionReport {
  bool artin_holds = false;
  bool ideal_zero = false;
  std::size_t basis_size = 0;
  std::vector<SupportCounts> support_counts;
  bool some_t_reaches = false;  // exists t with L_t >= N_t
  bool all_t_reach = false;     // every t has L_t >= N_t
  /// Corollary conditions, each including ideal triviality:
  /// product of all-but-one variables in the semigroup,
  bool product_condition = false;
  /// each ordered pair (j, k) separated by some realizable support,
  bool separation_condition = false;
  /// some size t with every support realizable.
  bool full_support_condition = false;
  /// At most one zero, and it is simple; then the conditions above hold
  /// without the ideal hypothesis.
  bool simple_distinct_zeros = false;
  /// Support criteria need 1 <= t <= r-1, so r >= 2.
  bool applicable = false;
  bool consistent = true;
  std::vector<std::string> inconsistencies;
};

CriterionReport criterion_report(const Scenario& s);
CriterionReport criterion_report(const Scenario& s, const GeneratorSet& basis);

}  // namespace artin
