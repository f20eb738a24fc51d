#include "artin/core.hpp"

#include <algorithm>
#include <numeric>

namespace artin {

namespace {

Exponents from_std(const std::vector<Integer>& v) {
  Exponents out(static_cast<Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Index>(i)) = v[i];
  return out;
}

}  // namespace

Scenario::Scenario(std::string name, Exponents degrees, Exponents orders)
    : name_(std::move(name)),
      degrees_(std::move(degrees)),
      orders_(std::move(orders)) {
  if (orders_.size() < 1)
    throw std::invalid_argument("scenario needs at least one character");
  if (degrees_.size() != orders_.size())
    throw std::invalid_argument("scenario: degrees and orders differ in length");
  for (Index j = 0; j < degrees_.size(); ++j)
    if (degrees_(j) < 1)
      throw std::invalid_argument("scenario: degree " + std::to_string(j + 1) +
                                  " is not positive");
  for (Index j = 0; j < orders_.size(); ++j)
    checked::abs(orders_(j));
}

Scenario::Scenario(std::string name, std::vector<Integer> degrees,
                   std::vector<Integer> orders)
    : Scenario(std::move(name), from_std(degrees), from_std(orders)) {}

Integer Scenario::max_abs_order() const {
  Integer m = 0;
  for (Index j = 0; j < r(); ++j) m = std::max(m, checked::abs(orders_(j)));
  return m;
}

Index Scenario::positive_count() const { return (orders_.array() > 0).count(); }

Index Scenario::negative_count() const { return (orders_.array() < 0).count(); }

Index SignPartition::original(Index k) const {
  auto it = std::find(permutation.begin(), permutation.end(), k);
  return static_cast<Index>(it - permutation.begin());
}

Normalized normalize(const Scenario& s) {
  const Index r = s.r();
  std::vector<Index> order(static_cast<std::size_t>(r));
  std::iota(order.begin(), order.end(), Index{0});
  auto block = [&](Index j) {
    const Integer l = s.order(j);
    return l > 0 ? 0 : (l < 0 ? 1 : 2);
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return block(a) < block(b); });

  SignPartition part;
  part.permutation.assign(static_cast<std::size_t>(r), 0);
  Exponents d(r), l(r);
  for (Index k = 0; k < r; ++k) {
    const Index j = order[static_cast<std::size_t>(k)];
    part.permutation[static_cast<std::size_t>(j)] = k;
    d(k) = s.degree(j);
    l(k) = s.order(j);
  }
  part.p = s.positive_count();
  part.q = part.p + s.negative_count();
  return {Scenario(s.name(), std::move(d), std::move(l)), std::move(part)};
}

Exponents denormalize(const SignPartition& part, const Exponents& v) {
  Exponents out(v.size());
  for (Index j = 0; j < v.size(); ++j)
    out(j) = v(part.permutation[static_cast<std::size_t>(j)]);
  return out;
}

Exponents to_normalized(const SignPartition& part, const Exponents& v) {
  Exponents out(v.size());
  for (Index j = 0; j < v.size(); ++j)
    out(part.permutation[static_cast<std::size_t>(j)]) = v(j);
  return out;
}

std::string to_string(Constraint c) {
  switch (c) {
    case Constraint::RegularCharacter: return "regular-character";
    case Constraint::Stark: return "stark";
    case Constraint::RhoadesShift: return "rhoades-shift";
    case Constraint::MaxOrderBound: return "max-order-bound";
    case Constraint::SingleZeroDegreeOne: return "prop-1.1-case-1";
    case Constraint::SingleZeroDegreeTwo: return "prop-1.1-case-2";
  }
  return "unknown";
}

bool ValidityReport::violates(Constraint c) const {
  return std::any_of(violations.begin(), violations.end(),
                     [c](const Finding& f) { return f.constraint == c; });
}

ValidityReport validate(const Scenario& s) {
  ValidityReport report;
  if (s.negative_count() == 0) return report;

  Integer positive_side = 0;  // sum of d_j l_j over zeros
  Integer negative_side = 0;  // sum of d_j |l_j| over poles
  Index widest = 0;
  for (Index j = 0; j < s.r(); ++j) {
    const Integer term = checked::mul(s.degree(j), checked::abs(s.order(j)));
    if (s.order(j) > 0) positive_side = checked::add(positive_side, term);
    if (s.order(j) < 0) negative_side = checked::add(negative_side, term);
    if (std::abs(s.order(j)) > std::abs(s.order(widest))) widest = j;
  }
  const Integer zeta_order = positive_side - negative_side;
  const Integer max_order = s.max_abs_order();

  auto flag = [&](Constraint c, Integer lhs, Integer rhs, Index index = -1) {
    if (lhs >= rhs) return;
    report.violations.push_back({c, lhs, rhs, lhs - rhs, index});
  };

  flag(Constraint::RegularCharacter, zeta_order, 0);
  flag(Constraint::Stark, positive_side, checked::add(negative_side, 2));
  flag(Constraint::RhoadesShift, zeta_order, max_order, widest);
  flag(Constraint::MaxOrderBound, positive_side,
       checked::add(negative_side, max_order));

  if (s.positive_count() == 1) {
    Index j = 0;
    while (s.order(j) <= 0) ++j;
    const Integer lhs = checked::mul(s.degree(j), s.order(j));
    if (s.degree(j) == 1)
      flag(Constraint::SingleZeroDegreeOne, lhs, checked::add(negative_side, lhs), j);
    if (s.degree(j) == 2 && s.order(j) == 1)
      flag(Constraint::SingleZeroDegreeTwo, lhs, checked::add(negative_side, 2), j);
  }

  report.valid = report.violations.empty();
  return report;
}

}  // namespace artin
