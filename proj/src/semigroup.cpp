#include "artin/semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace artin {

bool LexLess::operator()(const Exponents& a, const Exponents& b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool monomial_less(const Exponents& a, const Exponents& b) {
  const Integer da = a.sum(), db = b.sum();
  if (da != db) return da < db;
  return LexLess{}(b, a);
}

GeneratorSet::GeneratorSet(Index r, std::vector<Exponents> generators) : r_(r) {
  for (auto& g : generators) insert(std::move(g));
}

bool GeneratorSet::contains(const Exponents& m) const {
  return std::binary_search(generators_.begin(), generators_.end(), m,
                            monomial_less);
}

void GeneratorSet::insert(Exponents m) {
  if (m.size() != r_)
    throw std::invalid_argument("generator has wrong length");
  if (m.isZero()) throw std::invalid_argument("generator is the zero vector");
  if ((m.array() < 0).any())
    throw std::invalid_argument("generator has a negative exponent");
  auto it = std::lower_bound(generators_.begin(), generators_.end(), m,
                             monomial_less);
  if (it != generators_.end() && *it == m) return;
  generators_.insert(it, std::move(m));
}

bool operator==(const GeneratorSet& a, const GeneratorSet& b) {
  return a.r_ == b.r_ && a.generators_ == b.generators_;
}

Exponents unit(Index r, Index j) {
  Exponents e = Exponents::Zero(r);
  e(j) = 1;
  return e;
}

bool contains(const Scenario& s, const Exponents& m) {
  if ((m.array() < 0).any())
    throw std::invalid_argument("contains: monomial has a negative exponent");
  return ord(s, m) >= 0;
}

std::vector<Exponents> extreme_rays(const Scenario& s) {
  const Index r = s.r();
  std::vector<Exponents> rays;
  for (Index j = 0; j < r; ++j)
    if (s.order(j) >= 0) rays.push_back(unit(r, j));
  for (Index i = 0; i < r; ++i) {
    if (s.order(i) <= 0) continue;
    for (Index k = 0; k < r; ++k) {
      if (s.order(k) >= 0) continue;
      const Integer g = std::gcd(s.order(i), -s.order(k));
      Exponents ray = Exponents::Zero(r);
      ray(i) = -s.order(k) / g;
      ray(k) = s.order(i) / g;
      rays.push_back(std::move(ray));
    }
  }
  return rays;
}

Exponents zonotope_bound(const Scenario& s) {
  Exponents bound = Exponents::Zero(s.r());
  for (const auto& ray : extreme_rays(s))
    for (Index j = 0; j < s.r(); ++j) bound(j) = checked::add(bound(j), ray(j));
  return bound;
}

GeneratorSet hilbert_basis(const Scenario& s, std::uint64_t max_box_points) {
  const Index r = s.r();
  const Exponents bound = zonotope_bound(s);

  std::uint64_t points = 1;
  for (Index j = 0; j < r; ++j) {
    const auto extent = static_cast<std::uint64_t>(bound(j)) + 1;
    if (points > max_box_points / extent)
      throw GuardrailError("hilbert_basis: enumeration box exceeds " +
                           std::to_string(max_box_points) + " points");
    points *= extent;
  }

  // Members of the box, bucketed by total degree.
  std::vector<std::vector<Exponents>> by_degree(
      static_cast<std::size_t>(bound.sum()) + 1);
  Exponents a = Exponents::Zero(r);
  for (;;) {
    Index j = 0;
    while (j < r && a(j) == bound(j)) a(j++) = 0;
    if (j == r) break;
    ++a(j);
    if (ord(s, a) >= 0) by_degree[static_cast<std::size_t>(a.sum())].push_back(a);
  }

  std::vector<Exponents> basis;
  for (const auto& bucket : by_degree) {
    std::vector<Exponents> accepted;
    for (const auto& cand : bucket) {
      const bool splits = std::any_of(basis.begin(), basis.end(), [&](const Exponents& g) {
        const Exponents rest = cand - g;
        return (rest.array() >= 0).all() && ord(s, rest) >= 0;
      });
      if (!splits) accepted.push_back(cand);
    }
    basis.insert(basis.end(), accepted.begin(), accepted.end());
  }
  return GeneratorSet(r, std::move(basis));
}

GeneratorSet guaranteed_generators(const Scenario& s) {
  const Index r = s.r();
  Index pivot = -1;
  for (Index j = 0; j < r && pivot < 0; ++j)
    if (s.order(j) > 0) pivot = j;
  if (pivot < 0 && s.negative_count() > 0)
    throw std::invalid_argument("guaranteed_generators: no positive order");

  GeneratorSet out(r);
  for (Index j = 0; j < r; ++j) {
    Exponents g = unit(r, j);
    if (s.order(j) < 0) {
      const Integer l1 = s.order(pivot);
      g(pivot) = (-s.order(j) + l1 - 1) / l1;
    }
    out.insert(std::move(g));
  }
  return out;
}

bool support_realizable(const Scenario& s, std::span<const Index> support) {
  bool any_positive = false;
  bool all_zero = true;
  for (Index j : support) {
    if (j < 0 || j >= s.r())
      throw std::invalid_argument("support_realizable: index out of range");
    any_positive = any_positive || s.order(j) > 0;
    all_zero = all_zero && s.order(j) == 0;
  }
  return any_positive || all_zero;
}

Integer binomial(Integer n, Integer k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer out = 1;
  for (Integer i = 1; i <= k; ++i) out = checked::mul(out, n - k + i) / i;
  return out;
}

namespace {

void check_t(Integer r, Integer t) {
  if (t < 1 || t > r - 1)
    throw std::invalid_argument("support size t=" + std::to_string(t) +
                                " outside 1.." + std::to_string(r - 1));
}

}  // namespace

Integer count_L(const Scenario& s, Integer t) {
  const Integer r = s.r();
  check_t(r, t);
  const Integer p = s.positive_count();
  const Integer q = p + s.negative_count();
  // Unrealizable: no positive coordinate but at least one pole.
  return binomial(r, t) - binomial(r - p, t) + binomial(r - q, t);
}

Integer count_N(Integer r, Integer t) {
  check_t(r, t);
  return std::min(binomial(r - 1, t - 1) + binomial(r - 2, t) + 1,
                  binomial(r, t));
}

std::vector<SupportCounts> support_counts(const Scenario& s) {
  std::vector<SupportCounts> out;
  for (Integer t = 1; t < s.r(); ++t)
    out.push_back({t, count_L(s, t), count_N(s.r(), t)});
  return out;
}

namespace {

bool generated_rec(const Exponents& m, const GeneratorSet& G,
                   std::map<Exponents, bool, LexLess>& memo) {
  if (m.isZero()) return true;
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  bool found = false;
  for (const auto& g : G) {
    const Exponents rest = m - g;
    if ((rest.array() >= 0).all() && generated_rec(rest, G, memo)) {
      found = true;
      break;
    }
  }
  memo.emplace(m, found);
  return found;
}

}  // namespace

bool generated_by(const Scenario& s, const Exponents& m, const GeneratorSet& G) {
  if (m.size() != s.r() || G.r() != s.r())
    throw std::invalid_argument("generated_by: dimension mismatch");
  if ((m.array() < 0).any()) return false;
  std::map<Exponents, bool, LexLess> memo;
  return generated_rec(m, G, memo);
}

}  // namespace artin
