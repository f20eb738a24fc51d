#include "artin/structure.hpp"

#include <algorithm>
#include <bit>

namespace artin {

namespace {

// All monomials of degree d in r variables supported on coords.
void monomials_of_degree(const std::vector<Index>& coords, std::size_t from,
                         Integer d, Exponents& current,
                         std::vector<Exponents>& out) {
  if (d == 0) {
    out.push_back(current);
    return;
  }
  if (from == coords.size()) return;
  const Index j = coords[from];
  for (Integer e = d; e >= 0; --e) {
    current(j) += e;
    monomials_of_degree(coords, from + 1, d - e, current, out);
    current(j) -= e;
  }
}

std::vector<Exponents> monomials_of_degree(Index r, const std::vector<Index>& coords,
                                           Integer d) {
  std::vector<Exponents> out;
  Exponents current = Exponents::Zero(r);
  monomials_of_degree(coords, 0, d, current, out);
  return out;
}

struct Blocks {
  std::vector<Index> zeros;  // positive order, original index order
  std::vector<Index> poles;
  std::vector<Index> units;  // order zero
};

Blocks blocks(const Scenario& s) {
  Blocks b;
  for (Index j = 0; j < s.r(); ++j) {
    if (s.order(j) > 0) b.zeros.push_back(j);
    else if (s.order(j) < 0) b.poles.push_back(j);
    else b.units.push_back(j);
  }
  return b;
}

}  // namespace

bool artin_holds(const Scenario& s) { return s.negative_count() == 0; }

std::optional<FreeCaseWitness> free_case(const Scenario& s) {
  if (artin_holds(s))
    throw std::invalid_argument("free_case: no pole, the semigroup is N^r");
  const Blocks b = blocks(s);
  if (b.zeros.size() != 1) return std::nullopt;
  const Index pivot = b.zeros.front();
  const Integer l1 = s.order(pivot);
  for (Index j : b.poles)
    if (s.order(j) % l1 != 0) return std::nullopt;

  FreeCaseWitness w{pivot, static_cast<Index>(1 + b.poles.size()), {}, GeneratorSet(s.r())};
  for (Index j = 0; j < s.r(); ++j) {
    Exponents g = unit(s.r(), j);
    if (s.order(j) < 0) {
      const Integer m = -s.order(j) / l1;
      g(pivot) = m;
      w.multipliers.emplace_back(j, m);
    }
    w.generators.insert(std::move(g));
  }
  return w;
}

GeneratorSet simple_pole_generators(const Scenario& s) {
  const Blocks b = blocks(s);
  for (Index j : b.poles)
    if (s.order(j) != -1)
      throw std::invalid_argument("simple_pole_generators: pole of order >= 2");
  GeneratorSet out(s.r());
  for (Index j : b.units) out.insert(unit(s.r(), j));
  for (Index j : b.zeros)
    for (Integer d = 0; d <= s.order(j); ++d)
      for (auto v : monomials_of_degree(s.r(), b.poles, d)) {
        v(j) += 1;
        out.insert(std::move(v));
      }
  return out;
}

GeneratorSet simple_zero_generators(const Scenario& s) {
  const Blocks b = blocks(s);
  for (Index j : b.zeros)
    if (s.order(j) != 1)
      throw std::invalid_argument("simple_zero_generators: zero of order >= 2");
  if (b.zeros.empty() && !b.poles.empty())
    throw std::invalid_argument("simple_zero_generators: poles but no zero");
  GeneratorSet out(s.r());
  for (Index j : b.zeros) out.insert(unit(s.r(), j));
  for (Index j : b.units) out.insert(unit(s.r(), j));
  for (Index j : b.poles)
    for (auto v : monomials_of_degree(s.r(), b.zeros, -s.order(j))) {
      v(j) += 1;
      out.insert(std::move(v));
    }
  return out;
}

Presentation both_simple_generators(const Scenario& s) {
  const Blocks b = blocks(s);
  if (b.poles.empty())
    throw std::invalid_argument("both_simple_generators: no pole");
  if (b.zeros.empty())
    throw std::invalid_argument("both_simple_generators: no zero");
  for (Index j = 0; j < s.r(); ++j)
    if (s.order(j) > 1 || s.order(j) < -1)
      throw std::invalid_argument("both_simple_generators: order outside {-1,0,1}");

  std::vector<Exponents> gens;
  std::vector<std::string> labels;
  auto single = [&](Index j) {
    gens.push_back(unit(s.r(), j));
    labels.push_back("t" + std::to_string(j + 1));
  };
  for (Index j : b.zeros) single(j);
  for (Index j : b.units) single(j);
  for (Index j : b.zeros)
    for (Index k : b.poles) {
      Exponents g = unit(s.r(), j);
      g(k) = 1;
      gens.push_back(std::move(g));
      labels.push_back("t" + std::to_string(j + 1) + "_" + std::to_string(k + 1));
    }
  return Presentation(s.r(), std::move(gens), std::move(labels));
}

CriterionReport criterion_report(const Scenario& s) {
  return criterion_report(s, hilbert_basis(s));
}

CriterionReport criterion_report(const Scenario& s, const GeneratorSet& basis) {
  const Index r = s.r();
  CriterionReport rep;
  rep.artin_holds = artin_holds(s);
  rep.basis_size = basis.size();
  rep.ideal_zero = is_toric_ideal_zero(Presentation(basis));
  rep.support_counts = support_counts(s);
  rep.applicable = r >= 2;
  rep.some_t_reaches = std::any_of(rep.support_counts.begin(), rep.support_counts.end(),
                                   [](const SupportCounts& c) { return c.L >= c.N; });
  rep.all_t_reach = rep.applicable &&
                    std::all_of(rep.support_counts.begin(), rep.support_counts.end(),
                                [](const SupportCounts& c) { return c.L >= c.N; });

  bool products = true;
  for (Index i = 0; i < r; ++i) {
    Exponents prod = Exponents::Ones(r);
    prod(i) = 0;
    products = products && contains(s, prod);
  }

  // Supports as bitmasks, checked one by one against the realizability rule.
  const std::uint64_t subsets = std::uint64_t{1} << r;
  std::vector<char> realizable(subsets);
  std::vector<Index> members;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    members.clear();
    for (Index j = 0; j < r; ++j)
      if (mask >> j & 1) members.push_back(j);
    realizable[mask] = support_realizable(s, members);
  }
  bool separated = true;
  for (Index j = 0; j < r && separated; ++j)
    for (Index k = 0; k < r && separated; ++k) {
      if (j == k) continue;
      bool found = false;
      for (std::uint64_t mask = 0; mask < subsets && !found; ++mask)
        found = (mask >> j & 1) && !(mask >> k & 1) && realizable[mask];
      separated = found;
    }
  bool full_support = false;
  for (Index t = 1; t < r && !full_support; ++t) {
    bool every = true;
    for (std::uint64_t mask = 0; mask < subsets && every; ++mask)
      if (std::popcount(mask) == t) every = realizable[mask];
    full_support = every;
  }

  rep.product_condition = rep.ideal_zero && products;
  rep.separation_condition = rep.ideal_zero && separated;
  rep.full_support_condition = rep.ideal_zero && full_support;
  rep.simple_distinct_zeros = s.positive_count() <= 1 && (s.orders().array() <= 1).all();

  if (!rep.applicable) return rep;
  auto check = [&](bool claim, const char* what) {
    if (claim == rep.artin_holds) return;
    rep.consistent = false;
    rep.inconsistencies.emplace_back(what);
  };
  check(rep.ideal_zero && rep.some_t_reaches, "ideal zero and some L_t >= N_t");
  check(rep.ideal_zero && rep.all_t_reach, "ideal zero and every L_t >= N_t");
  check(rep.product_condition, "ideal zero and products of all but one variable");
  check(rep.separation_condition, "ideal zero and pairwise separating supports");
  check(rep.full_support_condition, "ideal zero and all supports of some size");
  if (rep.simple_distinct_zeros) {
    check(rep.some_t_reaches, "simple distinct zeros: some L_t >= N_t");
    check(products, "simple distinct zeros: products of all but one variable");
    check(separated, "simple distinct zeros: pairwise separating supports");
    check(full_support, "simple distinct zeros: all supports of some size");
  }
  return rep;
}

}  // namespace artin
