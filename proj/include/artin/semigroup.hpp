#pragma once

#include "artin/core.hpp"

#include <span>

namespace artin {

/// Total degree ascending, then exponent vectors in descending lexicographic
/// order (so x1 sorts before x2 within a degree).
bool monomial_less(const Exponents& a, const Exponents& b);

/// Plain lexicographic order, for use as a map/set comparator.
struct LexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// A finite set of nonzero monomials in r variables, kept sorted by
/// monomial_less without duplicates.
class GeneratorSet {
public:
  explicit GeneratorSet(Index r) : r_(r) {}
  GeneratorSet(Index r, std::vector<Exponents> generators);

  Index r() const { return r_; }
  std::size_t size() const { return generators_.size(); }
  bool empty() const { return generators_.empty(); }
  const std::vector<Exponents>& generators() const { return generators_; }
  auto begin() const { return generators_.begin(); }
  auto end() const { return generators_.end(); }
  const Exponents& operator[](std::size_t i) const { return generators_[i]; }

  bool contains(const Exponents& m) const;
  void insert(Exponents m);

  friend bool operator==(const GeneratorSet& a, const GeneratorSet& b);

private:
  Index r_;
  std::vector<Exponents> generators_;
};

/// Unit vector e_j of length r.
Exponents unit(Index r, Index j);

/// Membership in the semigroup {a in N^r : a . l >= 0}.
bool contains(const Scenario& s, const Exponents& m);

/// Extreme rays of the cone {x >= 0, l . x >= 0}: e_j for l_j >= 0 and the
/// primitive vector on each face spanned by a zero coordinate and a pole.
std::vector<Exponents> extreme_rays(const Scenario& s);

/// Coordinatewise bound on the zonotope sum_k lambda_k * ray_k, 0 <= lambda_k <= 1.
Exponents zonotope_bound(const Scenario& s);

/// Minimal generating set (Hilbert basis) of the semigroup. Every element lies
/// in the zonotope box, which is enumerated exhaustively in order of total
/// degree; a point is kept unless an earlier basis element splits it.
/// Throws GuardrailError when the box has more than max_box_points points.
GeneratorSet hilbert_basis(const Scenario& s,
                           std::uint64_t max_box_points = 50'000'000);

/// x_j for each zero or non-pole coordinate and x_1^{m_j} x_j for each pole,
/// where x_1 is the first coordinate with a positive order and
/// m_j = ceil(|l_j| / l_1). All of them belong to the Hilbert basis.
GeneratorSet guaranteed_generators(const Scenario& s);

/// Whether some monomial with exactly this support lies in the semigroup.
/// support holds 0-based coordinates.
bool support_realizable(const Scenario& s, std::span<const Index> support);

/// Binomial coefficient, zero when k < 0 or k > n.
Integer binomial(Integer n, Integer k);

/// Number of realizable supports of size t, 1 <= t <= r-1.
Integer count_L(const Scenario& s, Integer t);

/// min{C(r-1,t-1) + C(r-2,t) + 1, C(r,t)}, 1 <= t <= r-1.
Integer count_N(Integer r, Integer t);

struct SupportCounts {
  Integer t;
  Integer L;
  Integer N;
};

/// Counts for every t in 1..r-1 (empty when r = 1).
std::vector<SupportCounts> support_counts(const Scenario& s);

/// Whether m is an N-combination of the generators.
bool generated_by(const Scenario& s, const Exponents& m, const GeneratorSet& G);

}  // namespace artin
