#pragma once

#include "artin/core.hpp"

namespace artin {

/// Membership in {a in Z^r : a . l >= 0}.
bool laurent_contains(const Scenario& s, const Exponents& m);

/// The Laurent monomial whose exponent vector is the order vector itself.
struct HeilbronnMonomial {
  Exponents exponents;
  /// ord of the monomial, i.e. the sum of l_j^2.
  Integer ord = 0;
  /// sum of |l_j|, the order of the Heilbronn L-function as usually quoted.
  Integer absolute_order_sum = 0;
  /// No negative exponent; equivalent to holomorphy of every L-function.
  bool polynomial = false;
};

HeilbronnMonomial heilbronn_monomial(const Scenario& s);

/// Generators of a Laurent monomial algebra: plain ones adjoined as-is,
/// invertible ones together with their inverses.
struct LaurentGeneratorSet {
  Index r = 0;
  std::vector<Exponents> plain;
  std::vector<Exponents> invertible;
};

/// x_1 plain; x_1^{m_j} x_j (poles) and the non-vanishing x_j invertible.
/// Requires a pole and the free case.
LaurentGeneratorSet prop_2_2_generators(const Scenario& s);

/// Zeros plain; non-vanishing x_j and x_j x_k (zero j, pole k) invertible.
/// Requires every nonzero order in {-1, 1}, with at least one of each sign.
LaurentGeneratorSet prop_2_3_generators(const Scenario& s);

/// Whether m = sum c_i plain_i + sum z_i invertible_i with c_i >= 0.
///
/// Every invertible generator has order zero, so the plain coefficients
/// satisfy sum c_i ord(plain_i) = ord(m); they are enumerated under that
/// identity with 0 <= c_i <= box. For each candidate the remainder is tested
/// for membership in the group generated by the invertible generators by an
/// exact integer solve.
bool laurent_generated_by(const Scenario& s, const Exponents& m,
                          const LaurentGeneratorSet& G, Integer box);

}  // namespace artin
