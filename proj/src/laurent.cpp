#include "artin/laurent.hpp"

#include "artin/lattice.hpp"
#include "artin/semigroup.hpp"
#include "artin/structure.hpp"

#include <functional>

namespace artin {

bool laurent_contains(const Scenario& s, const Exponents& m) {
  return ord(s, m) >= 0;
}

HeilbronnMonomial heilbronn_monomial(const Scenario& s) {
  HeilbronnMonomial h;
  h.exponents = s.orders();
  h.ord = ord(s, h.exponents);
  for (Index j = 0; j < s.r(); ++j)
    h.absolute_order_sum = checked::add(h.absolute_order_sum, checked::abs(s.order(j)));
  h.polynomial = (h.exponents.array() >= 0).all();
  if (!laurent_contains(s, h.exponents))
    throw std::logic_error("heilbronn monomial has negative order");
  return h;
}

LaurentGeneratorSet prop_2_2_generators(const Scenario& s) {
  const auto witness = free_case(s);
  if (!witness)
    throw std::invalid_argument("prop_2_2_generators: scenario is not free");
  LaurentGeneratorSet G{s.r(), {unit(s.r(), witness->pivot)}, {}};
  for (const auto& g : witness->generators)
    if (g != G.plain.front()) G.invertible.push_back(g);
  return G;
}

LaurentGeneratorSet prop_2_3_generators(const Scenario& s) {
  const Presentation P = both_simple_generators(s);
  LaurentGeneratorSet G{s.r(), {}, {}};
  for (const auto& g : P.generators) {
    if (g.sum() == 1) {
      Index j = 0;
      while (g(j) == 0) ++j;
      (s.order(j) > 0 ? G.plain : G.invertible).push_back(g);
    } else {
      G.invertible.push_back(g);
    }
  }
  return G;
}

bool laurent_generated_by(const Scenario& s, const Exponents& m,
                          const LaurentGeneratorSet& G, Integer box) {
  if (m.size() != s.r() || G.r != s.r())
    throw std::invalid_argument("laurent_generated_by: dimension mismatch");
  std::vector<Integer> weights;
  for (const auto& g : G.plain) {
    weights.push_back(ord(s, g));
    if (weights.back() < 0)
      throw std::invalid_argument("laurent_generated_by: plain generator of negative order");
  }
  for (const auto& g : G.invertible)
    if (ord(s, g) != 0)
      throw std::invalid_argument("laurent_generated_by: invertible generator of nonzero order");

  const Integer target = ord(s, m);
  if (target < 0) return false;

  IntMatrix inv(s.r(), static_cast<Index>(G.invertible.size()));
  for (Index i = 0; i < inv.cols(); ++i) inv.col(i) = G.invertible[static_cast<std::size_t>(i)];

  Exponents rest = m;
  std::function<bool(std::size_t, Integer)> search = [&](std::size_t i, Integer remaining) {
    if (i == G.plain.size()) {
      if (remaining != 0) return false;
      if (inv.cols() == 0) return rest.isZero();
      return lattice::solve(inv, rest).has_value();
    }
    const Integer w = weights[i];
    const Integer top = w == 0 ? box : std::min(box, remaining / w);
    for (Integer c = 0; c <= top; ++c) {
      if (search(i + 1, remaining - c * w)) return true;
      rest -= G.plain[i];
    }
    rest += (top + 1) * G.plain[i];
    return false;
  };
  return search(0, target);
}

}  // namespace artin
