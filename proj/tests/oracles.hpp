#pragma once

// Brute-force references used only by the tests. Nothing here calls into the
// algorithms it is used to check.

#include "artin/core.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using artin::Exponents;
using artin::Index;
using artin::Integer;
using artin::Scenario;

inline Integer dot(const std::vector<Integer>& a, const Scenario& s) {
  Integer acc = 0;
  for (std::size_t j = 0; j < a.size(); ++j) acc += a[j] * s.order(Index(j));
  return acc;
}

inline Exponents to_eigen(const std::vector<Integer>& v) {
  Exponents e(Index(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) e(Index(i)) = v[i];
  return e;
}

inline std::vector<Integer> to_std(const Exponents& v) { return {v.begin(), v.end()}; }

/// Visit every integer vector in the box [lo_j, hi_j].
inline void for_each_in_box(const std::vector<Integer>& lo, const std::vector<Integer>& hi,
                            const std::function<void(const std::vector<Integer>&)>& visit) {
  std::vector<Integer> a = lo;
  for (std::size_t j = 0; j < lo.size(); ++j)
    if (lo[j] > hi[j]) return;
  for (;;) {
    visit(a);
    std::size_t j = 0;
    while (j < a.size() && a[j] == hi[j]) a[j] = lo[j], ++j;
    if (j == a.size()) return;
    ++a[j];
  }
}

/// Box containing the zonotope spanned by the cone's edges, recomputed from
/// the edge description: unit vectors of non-poles and, for each zero i and
/// pole k, the primitive solution of l_i x_i + l_k x_k = 0.
inline std::vector<Integer> zonotope_box(const Scenario& s) {
  std::vector<Integer> box(std::size_t(s.r()), 0);
  for (Index j = 0; j < s.r(); ++j)
    if (s.order(j) >= 0) box[std::size_t(j)] += 1;
  for (Index i = 0; i < s.r(); ++i)
    for (Index k = 0; k < s.r(); ++k)
      if (s.order(i) > 0 && s.order(k) < 0) {
        const Integer g = std::gcd(s.order(i), -s.order(k));
        box[std::size_t(i)] += -s.order(k) / g;
        box[std::size_t(k)] += s.order(i) / g;
      }
  return box;
}

/// Indecomposable nonzero semigroup elements inside [0, box], by checking
/// every splitting a = b + (a - b) with both parts nonzero members.
inline std::set<std::vector<Integer>> indecomposables(const Scenario& s,
                                                      const std::vector<Integer>& box) {
  std::set<std::vector<Integer>> out;
  const std::vector<Integer> zero(box.size(), 0);
  for_each_in_box(zero, box, [&](const std::vector<Integer>& a) {
    if (a == zero || dot(a, s) < 0) return;
    bool splits = false;
    for_each_in_box(zero, a, [&](const std::vector<Integer>& b) {
      if (splits || b == zero || b == a || dot(b, s) < 0) return;
      std::vector<Integer> rest(a.size());
      for (std::size_t j = 0; j < a.size(); ++j) rest[j] = a[j] - b[j];
      if (dot(rest, s) >= 0) splits = true;
    });
    if (!splits) out.insert(a);
  });
  return out;
}

/// Whether some monomial with exactly this support (bitmask) lies in the
/// semigroup. Exponents run over 1..cap with cap = 1 + sum of |l_k| over the
/// poles in the support: if any exponent vector works, raising one positive
/// coordinate to cap and the rest to 1 also works.
inline bool support_search(const Scenario& s, std::uint32_t mask) {
  std::vector<Integer> lo(std::size_t(s.r()), 0), hi(std::size_t(s.r()), 0);
  Integer cap = 1;
  for (Index j = 0; j < s.r(); ++j)
    if ((mask >> j & 1) && s.order(j) < 0) cap += -s.order(j);
  for (Index j = 0; j < s.r(); ++j)
    if (mask >> j & 1) lo[std::size_t(j)] = 1, hi[std::size_t(j)] = cap;
  std::vector<Integer> a = lo;
  for (;;) {
    if (dot(a, s) >= 0) return true;
    std::size_t j = 0;
    while (j < a.size() && a[j] == hi[j]) a[j] = lo[j], ++j;
    if (j == a.size()) return false;
    ++a[j];
  }
}

/// Nonnegative solutions of w . x = n by direct enumeration.
inline Integer partitions(const std::vector<Integer>& w, Integer n) {
  std::vector<Integer> lo(w.size(), 0), hi(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) hi[j] = n / w[j];
  Integer count = 0;
  for_each_in_box(lo, hi, [&](const std::vector<Integer>& x) {
    Integer acc = 0;
    for (std::size_t j = 0; j < w.size(); ++j) acc += w[j] * x[j];
    if (acc == n) ++count;
  });
  return count;
}

/// Semigroup elements of total degree exactly n, by enumeration.
inline Integer degree_count(const Scenario& s, Integer n) {
  std::vector<Integer> lo(std::size_t(s.r()), 0), hi(std::size_t(s.r()), n);
  Integer count = 0;
  for_each_in_box(lo, hi, [&](const std::vector<Integer>& a) {
    if (std::accumulate(a.begin(), a.end(), Integer{0}) == n && dot(a, s) >= 0) ++count;
  });
  return count;
}

/// All order vectors of length r with entries in [-bound, bound], one per
/// permutation class (entries nonincreasing).
inline std::vector<std::vector<Integer>> order_multisets(Index r, Integer bound) {
  std::vector<std::vector<Integer>> out;
  std::vector<Integer> cur;
  std::function<void(Integer)> rec = [&](Integer top) {
    if (Index(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (Integer v = top; v >= -bound; --v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(bound);
  return out;
}

/// All degree vectors in [1, top]^r.
inline std::vector<std::vector<Integer>> degree_vectors(Index r, Integer top) {
  std::vector<std::vector<Integer>> out;
  for_each_in_box(std::vector<Integer>(std::size_t(r), 1), std::vector<Integer>(std::size_t(r), top),
                  [&](const std::vector<Integer>& d) { out.push_back(d); });
  return out;
}

inline Scenario scenario(std::vector<Integer> orders, std::vector<Integer> degrees = {}) {
  if (degrees.empty()) degrees.assign(orders.size(), 1);
  return Scenario("grid", std::move(degrees), std::move(orders));
}

/// Stated constraints evaluated directly from the order and degree lists.
struct DirectValidity {
  bool has_pole = false;
  bool stark = true;      // sum d_j l_j >= 2
  bool max_bound = true;  // positive side >= negative side + max |l|
  bool single_zero = true;    // not a forced-holomorphy configuration
};

inline DirectValidity direct_validity(const std::vector<Integer>& l, const std::vector<Integer>& d) {
  DirectValidity v;
  Integer pos = 0, neg = 0, mx = 0, zeros = 0, zd = 0, zl = 0;
  for (std::size_t j = 0; j < l.size(); ++j) {
    if (l[j] > 0) pos += d[j] * l[j], ++zeros, zd = d[j], zl = l[j];
    if (l[j] < 0) neg += -d[j] * l[j], v.has_pole = true;
    mx = std::max(mx, l[j] < 0 ? -l[j] : l[j]);
  }
  if (!v.has_pole) return v;
  v.stark = pos - neg >= 2;
  v.max_bound = pos >= neg + mx;
  v.single_zero = !(zeros == 1 && (zd == 1 || (zd == 2 && zl == 1)));
  return v;
}

}  // namespace oracle
