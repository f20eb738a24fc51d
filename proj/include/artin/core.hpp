#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace artin {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Integer = std::int64_t;
using Index = Eigen::Index;

// Exponent vectors. A Monomial has nonnegative entries, a LaurentMonomial
// may have any sign; both are plain dense integer vectors.
using Exponents = Vector<Integer>;
using IntMatrix = Matrix<Integer>;

/// Raised when an operation would exceed one of the hard size limits.
class GuardrailError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace checked {

inline Integer add(Integer a, Integer b) {
  Integer out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in addition");
  return out;
}

inline Integer mul(Integer a, Integer b) {
  Integer out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in multiplication");
  return out;
}

inline Integer abs(Integer a) {
  if (a == std::numeric_limits<Integer>::min())
    throw std::overflow_error("integer overflow in abs");
  return a < 0 ? -a : a;
}

/// Dot product with overflow detection.
template <typename DerivedA, typename DerivedB>
Integer dot(const Eigen::MatrixBase<DerivedA>& a,
            const Eigen::MatrixBase<DerivedB>& b) {
  Integer acc = 0;
  for (Index i = 0; i < a.size(); ++i)
    acc = add(acc, mul(Integer(a(i)), Integer(b(i))));
  return acc;
}

}  // namespace checked

/// Integer data describing a hypothetical point: one irreducible character per
/// coordinate, with its degree and the vanishing order of its L-function there
/// (negative order = pole).
class Scenario {
public:
  Scenario(std::string name, Exponents degrees, Exponents orders);
  Scenario(std::string name, std::vector<Integer> degrees,
           std::vector<Integer> orders);

  const std::string& name() const { return name_; }
  Index r() const { return orders_.size(); }
  const Exponents& degrees() const { return degrees_; }
  const Exponents& orders() const { return orders_; }
  Integer order(Index j) const { return orders_(j); }
  Integer degree(Index j) const { return degrees_(j); }

  Integer max_abs_order() const;
  Index positive_count() const;
  Index negative_count() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;

private:
  std::string name_;
  Exponents degrees_;
  Exponents orders_;
};

/// Order of x^a at the point: sum of a_j * l_j. Accepts any integer vector
/// expression (monomials and Laurent monomials alike).
template <typename Derived>
Integer ord(const Scenario& s, const Eigen::MatrixBase<Derived>& a) {
  if (a.size() != s.r())
    throw std::invalid_argument("ord: exponent vector has length " +
                                std::to_string(a.size()) + ", expected " +
                                std::to_string(s.r()));
  return checked::dot(a, s.orders());
}

/// Orders sorted into positive, negative and zero blocks. permutation[i] is
/// the normalized position of original coordinate i.
struct SignPartition {
  Index p = 0;
  Index q = 0;
  std::vector<Index> permutation;

  /// Original coordinate sitting at normalized position k.
  Index original(Index k) const;
};

struct Normalized {
  Scenario scenario;
  SignPartition partition;
};

Normalized normalize(const Scenario& s);

/// Permute a vector given in normalized coordinates back to the original
/// coordinates.
Exponents denormalize(const SignPartition& part, const Exponents& v);
/// Inverse of denormalize.
Exponents to_normalized(const SignPartition& part, const Exponents& v);

enum class Constraint {
  RegularCharacter,
  Stark,
  RhoadesShift,
  MaxOrderBound,
  SingleZeroDegreeOne,
  SingleZeroDegreeTwo,
};

std::string to_string(Constraint c);

/// One failed constraint. The constraint demands lhs >= rhs; slack = lhs - rhs
/// is negative for a violation. index is the coordinate the finding names, or
/// -1 when it concerns the whole scenario.
struct Finding {
  Constraint constraint;
  Integer lhs = 0;
  Integer rhs = 0;
  Integer slack = 0;
  Index index = -1;

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct ValidityReport {
  bool valid = true;
  std::vector<Finding> violations;

  bool violates(Constraint c) const;
};

/// Checks the constraints a genuine order vector must satisfy whenever some
/// L-function has a pole: the Dedekind zeta factor is holomorphic, Stark's
/// bound on its order, the Rhoades shifts x_j^{+-1} x^d, the max-order bound,
/// and the two single-zero configurations that force holomorphy.
ValidityReport validate(const Scenario& s);

}  // namespace artin
