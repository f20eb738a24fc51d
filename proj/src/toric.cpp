#include "artin/toric.hpp"

#include "artin/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace artin {

TermOrder TermOrder::identity(Index variables) {
  TermOrder o;
  o.priority.resize(static_cast<std::size_t>(variables));
  std::iota(o.priority.begin(), o.priority.end(), Index{0});
  return o;
}

int TermOrder::compare(const Exponents& a, const Exponents& b) const {
  const Integer da = a.sum(), db = b.sum();
  if (da != db) return da < db ? -1 : 1;
  const auto n = static_cast<Index>(priority.empty() ? a.size() : priority.size());
  for (Index k = n - 1; k >= 0; --k) {
    const Index v = priority.empty() ? k : priority[static_cast<std::size_t>(k)];
    if (a(v) != b(v)) return a(v) < b(v) ? 1 : -1;
  }
  return 0;
}

Presentation::Presentation(Index r, std::vector<Exponents> gens,
                           std::vector<std::string> names)
    : r(r), generators(std::move(gens)), labels(std::move(names)) {
  for (const auto& g : generators) {
    if (g.size() != r) throw std::invalid_argument("presentation: wrong length");
    if (g.isZero()) throw std::invalid_argument("presentation: zero generator");
  }
  if (labels.empty())
    for (std::size_t i = 0; i < generators.size(); ++i)
      labels.push_back("t" + std::to_string(i + 1));
  if (labels.size() != generators.size())
    throw std::invalid_argument("presentation: label count mismatch");
  auto sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("presentation: duplicate label");
}

Presentation::Presentation(const GeneratorSet& G)
    : Presentation(G.r(), G.generators()) {}

IntMatrix Presentation::matrix() const {
  IntMatrix A(r, variables());
  for (Index i = 0; i < variables(); ++i)
    A.col(i) = generators[static_cast<std::size_t>(i)];
  return A;
}

Exponents Presentation::image(const Exponents& e) const {
  if (e.size() != variables())
    throw std::invalid_argument("presentation: exponent length mismatch");
  Exponents out = Exponents::Zero(r);
  for (Index i = 0; i < variables(); ++i)
    for (Index j = 0; j < r; ++j)
      out(j) = checked::add(out(j),
                            checked::mul(e(i), generators[static_cast<std::size_t>(i)](j)));
  return out;
}

namespace {

std::string monomial_string(const Exponents& e,
                            const std::vector<std::string>& labels) {
  std::string out;
  for (Index i = 0; i < e.size(); ++i) {
    if (e(i) == 0) continue;
    if (!out.empty()) out += "*";
    out += labels[static_cast<std::size_t>(i)];
    if (e(i) > 1) out += "^" + std::to_string(e(i));
  }
  return out.empty() ? "1" : out;
}

bool divides(const Exponents& a, const Exponents& b) {
  return (a.array() <= b.array()).all();
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  return a.cwiseMax(b);
}

// Orients plus as the leading term; optionally cancels the common factor,
// which is only sound when every variable is a unit modulo the ideal.
template <typename Order>
bool orient(Binomial& b, const Order& order, bool cancel) {
  if (cancel) {
    const Exponents common = b.plus.cwiseMin(b.minus);
    b.plus -= common;
    b.minus -= common;
  }
  const int c = order.compare(b.plus, b.minus);
  if (c == 0) return false;
  if (c < 0) std::swap(b.plus, b.minus);
  return true;
}

// w is the last variable; it dominates, then the inner order on the rest.
struct EliminationOrder {
  TermOrder inner;
  Index w;

  int compare(const Exponents& a, const Exponents& b) const {
    if (a(w) != b(w)) return a(w) < b(w) ? -1 : 1;
    return inner.compare(a.head(w), b.head(w));
  }
};

template <typename Order>
class Buchberger {
public:
  Buchberger(const Order& order, const GroebnerLimits& limits, bool cancel)
      : order_(order), limits_(limits), cancel_(cancel) {}

  Exponents reduce(Exponents m) const {
    for (bool again = true; again;) {
      again = false;
      for (const auto& g : basis_) {
        if (divides(g.plus, m)) {
          m = m - g.plus + g.minus;
          again = true;
          break;
        }
      }
    }
    return m;
  }

  void add(Binomial b) {
    b.plus = reduce(std::move(b.plus));
    b.minus = reduce(std::move(b.minus));
    if (!orient(b, order_, cancel_)) return;
    if (basis_.size() >= limits_.max_basis)
      throw GuardrailError("groebner: basis size limit exceeded");
    for (std::size_t i = 0; i < basis_.size(); ++i)
      pairs_.emplace_back(i, basis_.size());
    basis_.push_back(std::move(b));
  }

  void run() {
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      if (++processed > limits_.max_pairs)
        throw GuardrailError("groebner: S-pair limit exceeded");
      // Normal selection strategy: smallest lcm first.
      auto best = pairs_.begin();
      Exponents best_lcm = pair_lcm(*best);
      for (auto it = std::next(pairs_.begin()); it != pairs_.end(); ++it) {
        Exponents l = pair_lcm(*it);
        if (order_.compare(l, best_lcm) < 0) {
          best = it;
          best_lcm = std::move(l);
        }
      }
      const auto [i, j] = *best;
      *best = pairs_.back();
      pairs_.pop_back();

      const Binomial& f = basis_[i];
      const Binomial& g = basis_[j];
      // Coprime leading terms: the S-binomial reduces to zero.
      if ((f.plus.cwiseMin(g.plus).array() == 0).all()) continue;
      Binomial s{best_lcm - f.plus + f.minus, best_lcm - g.plus + g.minus};
      add(std::move(s));
    }
  }

  std::vector<Binomial> reduced() const {
    std::vector<Binomial> sorted = basis_;
    std::sort(sorted.begin(), sorted.end(), [&](const Binomial& a, const Binomial& b) {
      return order_.compare(a.plus, b.plus) < 0;
    });
    std::vector<Binomial> minimal;
    for (auto& g : sorted) {
      const bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                         [&](const Binomial& h) { return divides(h.plus, g.plus); });
      if (!redundant) minimal.push_back(g);
    }
    Buchberger tail(order_, limits_, cancel_);
    tail.basis_ = minimal;
    for (auto& g : minimal) g.minus = tail.reduce(g.minus);
    return minimal;
  }

private:
  Exponents pair_lcm(const std::pair<std::size_t, std::size_t>& pr) const {
    return lcm(basis_[pr.first].plus, basis_[pr.second].plus);
  }

  const Order& order_;
  GroebnerLimits limits_;
  bool cancel_;
  std::vector<Binomial> basis_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

TermOrder resolved(const TermOrder& order, Index variables) {
  if (order.priority.empty()) return TermOrder::identity(variables);
  if (static_cast<Index>(order.priority.size()) != variables)
    throw std::invalid_argument("term order: priority list has wrong length");
  auto check = order.priority;
  std::sort(check.begin(), check.end());
  for (Index i = 0; i < variables; ++i)
    if (check[static_cast<std::size_t>(i)] != i)
      throw std::invalid_argument("term order: priority list is not a permutation");
  return order;
}

}  // namespace

std::string to_string(const Binomial& b, const std::vector<std::string>& labels) {
  return monomial_string(b.plus, labels) + " - " + monomial_string(b.minus, labels);
}

bool normalize_binomial(Binomial& b, const TermOrder& order) {
  return orient(b, order, true);
}

IntMatrix kernel_lattice(const Presentation& P) {
  return lattice::kernel(P.matrix());
}

bool is_toric_ideal_zero(const Presentation& P) {
  return lattice::rank(P.matrix()) == P.variables();
}

bool in_kernel(const Presentation& P, const Binomial& b) {
  return P.image(b.plus) == P.image(b.minus);
}

std::vector<Binomial> binomial_groebner(std::vector<Binomial> generators,
                                        const TermOrder& order,
                                        const GroebnerLimits& limits) {
  if (generators.empty()) return {};
  const Index n = generators.front().plus.size();
  if (n > limits.max_variables)
    throw GuardrailError("groebner: more than " +
                         std::to_string(limits.max_variables) + " variables");
  const TermOrder o = resolved(order, n);
  Buchberger<TermOrder> bb(o, limits, false);
  for (auto& g : generators) bb.add(std::move(g));
  bb.run();
  return bb.reduced();
}

Exponents normal_form(Exponents m, const std::vector<Binomial>& basis) {
  for (bool again = true; again;) {
    again = false;
    for (const auto& g : basis) {
      if (divides(g.plus, m)) {
        m = m - g.plus + g.minus;
        again = true;
        break;
      }
    }
  }
  return m;
}

BinomialIdeal toric_groebner(const Presentation& P, const TermOrder& order,
                             const GroebnerLimits& limits) {
  const Index m = P.variables();
  if (m > limits.max_variables)
    throw GuardrailError("toric_groebner: more than " +
                         std::to_string(limits.max_variables) + " variables");
  BinomialIdeal out;
  out.variables = m;
  out.labels = P.labels;
  out.order = resolved(order, m);
  out.reduced_groebner = true;

  const IntMatrix lat = kernel_lattice(P);
  if (lat.rows() == 0) return out;

  EliminationOrder elim{out.order, m};
  Buchberger<EliminationOrder> bb(elim, limits, true);
  for (Index k = 0; k < lat.rows(); ++k) {
    Binomial b{Exponents::Zero(m + 1), Exponents::Zero(m + 1)};
    for (Index i = 0; i < m; ++i) {
      if (lat(k, i) > 0) b.plus(i) = lat(k, i);
      if (lat(k, i) < 0) b.minus(i) = -lat(k, i);
    }
    bb.add(std::move(b));
  }
  bb.add(Binomial{Exponents::Ones(m + 1), Exponents::Zero(m + 1)});
  bb.run();

  std::vector<Binomial> eliminated;
  for (const auto& g : bb.reduced()) {
    if (g.plus(m) != 0 || g.minus(m) != 0) continue;
    eliminated.push_back({g.plus.head(m), g.minus.head(m)});
  }
  std::sort(eliminated.begin(), eliminated.end(), [&](const Binomial& a, const Binomial& b) {
    return out.order.compare(a.plus, b.plus) < 0;
  });
  out.basis = std::move(eliminated);
  return out;
}

std::vector<std::string> simple_order_labels(Index p, Index q, Index r) {
  std::vector<std::string> labels;
  for (Index j = 1; j <= r; ++j)
    if (j <= p || j > q) labels.push_back("t" + std::to_string(j));
  for (Index j = 1; j <= p; ++j)
    for (Index k = p + 1; k <= q; ++k)
      labels.push_back("t" + std::to_string(j) + "_" + std::to_string(k));
  return labels;
}

BinomialIdeal theorem_1_13_ideal(Index p, Index q, Index r) {
  if (!(1 <= p && p < q && q <= r))
    throw std::invalid_argument("theorem_1_13_ideal: need 1 <= p < q <= r");
  BinomialIdeal out;
  out.labels = simple_order_labels(p, q, r);
  out.variables = static_cast<Index>(out.labels.size());
  out.order = TermOrder::identity(out.variables);

  // 0-based positions: t_j for j < p at j, then t_jk after the r - q units.
  const Index n = q - p;
  auto single = [&](Index j) { return j; };
  auto paired = [&](Index j, Index k) { return p + (r - q) + j * n + (k - p); };

  std::vector<Binomial> found;
  auto emit = [&](std::initializer_list<Index> plus, std::initializer_list<Index> minus) {
    Binomial b{Exponents::Zero(out.variables), Exponents::Zero(out.variables)};
    for (Index v : plus) b.plus(v) += 1;
    for (Index v : minus) b.minus(v) += 1;
    if (!normalize_binomial(b, out.order)) return;
    if (std::find(found.begin(), found.end(), b) == found.end())
      found.push_back(std::move(b));
  };
  for (Index j = 0; j < p; ++j)
    for (Index i = 0; i < p; ++i)
      for (Index k = p; k < q; ++k) {
        emit({single(j), paired(i, k)}, {single(i), paired(j, k)});
        for (Index m = p; m < q; ++m)
          emit({paired(j, k), paired(i, m)}, {paired(j, m), paired(i, k)});
      }
  std::sort(found.begin(), found.end(), [&](const Binomial& a, const Binomial& b) {
    return out.order.compare(a.plus, b.plus) < 0;
  });
  out.basis = std::move(found);
  return out;
}

bool ideal_equal(const Presentation& P, const BinomialIdeal& A,
                 const BinomialIdeal& B, const GroebnerLimits& limits) {
  if (A.variables != P.variables() || B.variables != P.variables())
    throw std::invalid_argument("ideal_equal: variable count mismatch");
  for (const auto* ideal : {&A, &B})
    for (const auto& b : ideal->basis)
      if (!in_kernel(P, b))
        throw std::invalid_argument("ideal_equal: binomial outside the kernel");

  const TermOrder order = TermOrder::identity(P.variables());
  auto contained = [&](const BinomialIdeal& small, const BinomialIdeal& big) {
    const auto gb = binomial_groebner(big.basis, order, limits);
    return std::all_of(small.basis.begin(), small.basis.end(), [&](const Binomial& b) {
      return normal_form(b.plus, gb) == normal_form(b.minus, gb);
    });
  };
  return contained(A, B) && contained(B, A);
}

}  // namespace artin
