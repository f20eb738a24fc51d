#pragma once

#include "artin/core.hpp"
#include "artin/semigroup.hpp"

#include <string>

namespace artin {

/// Graded reverse lexicographic order. priority[0] is the largest variable;
/// an empty priority list means the variables in their listed order.
struct TermOrder {
  std::vector<Index> priority;

  static TermOrder identity(Index variables);
  /// <0, 0, >0 as a is smaller, equal or larger than b.
  int compare(const Exponents& a, const Exponents& b) const;

  friend bool operator==(const TermOrder&, const TermOrder&) = default;
};

/// Images u_1..u_m of the presentation variables t_1..t_m.
struct Presentation {
  Index r = 0;
  std::vector<Exponents> generators;
  std::vector<std::string> labels;

  Presentation() = default;
  /// Labels default to t1..tm.
  Presentation(Index r, std::vector<Exponents> generators,
               std::vector<std::string> labels = {});
  explicit Presentation(const GeneratorSet& G);

  Index variables() const { return static_cast<Index>(generators.size()); }
  /// r x m matrix whose columns are the generator exponent vectors.
  IntMatrix matrix() const;
  /// Exponent vector of the image of t^e.
  Exponents image(const Exponents& e) const;
};

/// plus - minus with disjoint supports, plus the leading term.
struct Binomial {
  Exponents plus;
  Exponents minus;

  friend bool operator==(const Binomial&, const Binomial&) = default;
};

struct BinomialIdeal {
  Index variables = 0;
  std::vector<std::string> labels;
  std::vector<Binomial> basis;
  bool reduced_groebner = false;
  TermOrder order;
};

std::string to_string(const Binomial& b, const std::vector<std::string>& labels);

/// Cancels the common factor and orients the leading term into plus.
/// Returns false for the zero binomial.
bool normalize_binomial(Binomial& b, const TermOrder& order);

/// Basis of the integer kernel of the presentation matrix, one row per
/// lattice vector, in row Hermite normal form.
IntMatrix kernel_lattice(const Presentation& P);

bool is_toric_ideal_zero(const Presentation& P);

/// Phi(plus) == Phi(minus).
bool in_kernel(const Presentation& P, const Binomial& b);

struct GroebnerLimits {
  Index max_variables = 12;
  std::size_t max_basis = 20'000;
  std::size_t max_pairs = 2'000'000;
};

/// Reduced Groebner basis of the ideal generated by the given binomials.
std::vector<Binomial> binomial_groebner(std::vector<Binomial> generators,
                                        const TermOrder& order,
                                        const GroebnerLimits& limits = {});

/// Normal form of a monomial modulo a binomial Groebner basis.
Exponents normal_form(Exponents m, const std::vector<Binomial>& basis);

/// Reduced Groebner basis of the toric ideal: the lattice basis ideal
/// saturated by adjoining an inverter w with w*t_1*...*t_m - 1 and
/// eliminating w.
BinomialIdeal toric_groebner(const Presentation& P, const TermOrder& order = {},
                             const GroebnerLimits& limits = {});

/// Variable labels t_j (j <= p or j > q) then t_j_k (j <= p < k <= q), 1-based.
std::vector<std::string> simple_order_labels(Index p, Index q, Index r);

/// The binomials t_j t_ik - t_i t_jk and t_jk t_im - t_jm t_ik for the
/// presentation with only simple zeros and poles; p zeros, q - p poles.
BinomialIdeal theorem_1_13_ideal(Index p, Index q, Index r);

/// Whether A and B generate the same ideal, by reducing each generator of
/// one modulo a Groebner basis of the other.
bool ideal_equal(const Presentation& P, const BinomialIdeal& A,
                 const BinomialIdeal& B, const GroebnerLimits& limits = {});

}  // namespace artin
