#include "artin/laurent.hpp"
#include "artin/semigroup.hpp"
#include "artin/structure.hpp"
#include "../oracles.hpp"

#include <doctest.h>

using namespace artin;

namespace {

Exponents vec(std::initializer_list<Integer> v) { return oracle::to_eigen(std::vector<Integer>(v)); }

std::set<std::vector<Integer>> as_set(const std::vector<Exponents>& G) {
  std::set<std::vector<Integer>> out;
  for (const auto& g : G) out.insert(oracle::to_std(g));
  return out;
}

using Set = std::set<std::vector<Integer>>;

Integer test_box(const Scenario& s, const Exponents& m) {
  return (m.cwiseAbs().sum() + 1) * (s.max_abs_order() + 1);
}

}  // namespace

TEST_CASE("laurent membership") {
  CHECK(laurent_contains(oracle::scenario({1, -1}), vec({-1, -2})));
  CHECK_FALSE(laurent_contains(oracle::scenario({1, -1}), vec({0, 1})));
  CHECK(laurent_contains(oracle::scenario({3, -7}), vec({0, 0})));
  CHECK_THROWS(laurent_contains(oracle::scenario({1, -1}), vec({0})));
}

TEST_CASE("polynomial part of the laurent monoid is the semigroup") {
  for (Index r = 1; r <= 3; ++r)
    for (const auto& l : oracle::order_multisets(r, 2)) {
      const auto s = oracle::scenario(l);
      oracle::for_each_in_box(std::vector<Integer>(std::size_t(r), 0), std::vector<Integer>(std::size_t(r), 5),
                              [&](const std::vector<Integer>& m) {
                                const auto e = oracle::to_eigen(m);
                                CHECK(laurent_contains(s, e) == contains(s, e));
                              });
    }
}

TEST_CASE("heilbronn monomial") {
  const auto a = heilbronn_monomial(oracle::scenario({1, -1, 0}));
  CHECK(a.exponents == vec({1, -1, 0}));
  CHECK(a.ord == 2);
  CHECK(a.absolute_order_sum == 2);
  CHECK_FALSE(a.polynomial);
  const auto b = heilbronn_monomial(oracle::scenario({0, 0}));
  CHECK(b.ord == 0);
  CHECK(b.polynomial);
  const auto c = heilbronn_monomial(oracle::scenario({2, -3}));
  CHECK(c.ord == 13);
  CHECK(c.absolute_order_sum == 5);
}

TEST_CASE("laurent generator sets") {
  const auto a = prop_2_2_generators(oracle::scenario({1, -1, 0}));
  CHECK(as_set(a.plain) == Set{{1, 0, 0}});
  CHECK(as_set(a.invertible) == Set{{1, 1, 0}, {0, 0, 1}});
  const auto b = prop_2_2_generators(oracle::scenario({2, -4}));
  CHECK(as_set(b.plain) == Set{{1, 0}});
  CHECK(as_set(b.invertible) == Set{{2, 1}});
  const auto c = prop_2_2_generators(oracle::scenario({1, -1, -1}));
  CHECK(as_set(c.invertible) == Set{{1, 1, 0}, {1, 0, 1}});
  CHECK_THROWS(prop_2_2_generators(oracle::scenario({2, -3})));
  CHECK_THROWS(prop_2_2_generators(oracle::scenario({2, 3})));

  const auto d = prop_2_3_generators(oracle::scenario({1, -1}));
  CHECK(as_set(d.plain) == Set{{1, 0}});
  CHECK(as_set(d.invertible) == Set{{1, 1}});
  const auto e = prop_2_3_generators(oracle::scenario({1, 1, -1}));
  CHECK(as_set(e.plain) == Set{{1, 0, 0}, {0, 1, 0}});
  CHECK(as_set(e.invertible) == Set{{1, 0, 1}, {0, 1, 1}});
  const auto f = prop_2_3_generators(oracle::scenario({1, -1, 0}));
  CHECK(as_set(f.plain) == Set{{1, 0, 0}});
  CHECK(as_set(f.invertible) == Set{{0, 0, 1}, {1, 1, 0}});
  CHECK_THROWS(prop_2_3_generators(oracle::scenario({2, -1})));
  CHECK_THROWS(prop_2_3_generators(oracle::scenario({0, -1})));
}

TEST_CASE("laurent_generated_by examples") {
  const auto s = oracle::scenario({1, -1});
  const auto G = prop_2_3_generators(s);
  CHECK(laurent_generated_by(s, vec({1, 0}), G, 4));
  CHECK(laurent_generated_by(s, vec({-1, -2}), G, 4));
  CHECK_FALSE(laurent_generated_by(s, vec({0, 1}), G, 4));
  CHECK(laurent_generated_by(s, vec({0, 0}), G, 0));

  // x2 alone has order -2, so only x1 x2 would be admissible as invertible
  const auto t = oracle::scenario({2, -2});
  LaurentGeneratorSet bad{2, {}, {vec({0, 1})}};
  CHECK_THROWS(laurent_generated_by(t, vec({1, 1}), bad, 3));
  LaurentGeneratorSet thin{2, {vec({2, 0})}, {vec({1, 1})}};
  CHECK_FALSE(laurent_generated_by(t, vec({1, 0}), thin, 10));
  CHECK(laurent_generated_by(t, vec({2, 0}), thin, 10));
  // the plain coefficient bound is honoured
  CHECK_FALSE(laurent_generated_by(t, vec({6, 0}), thin, 2));
  CHECK(laurent_generated_by(t, vec({6, 0}), thin, 3));
}

TEST_CASE("laurent generator sets are sound and complete in a box") {
  for (Index r = 2; r <= 4; ++r)
    for (const auto& l : oracle::order_multisets(r, 3)) {
      const auto s = oracle::scenario(l);
      if (artin_holds(s)) continue;
      std::vector<LaurentGeneratorSet> sets;
      if (free_case(s)) sets.push_back(prop_2_2_generators(s));
      bool simple = true;
      for (auto x : l) simple = simple && x >= -1 && x <= 1;
      if (simple && s.positive_count() > 0) sets.push_back(prop_2_3_generators(s));
      for (const auto& G : sets) {
        CAPTURE(s.orders().transpose());
        for (const auto& g : G.plain) CHECK(ord(s, g) >= 0);
        for (const auto& g : G.invertible) CHECK(ord(s, g) == 0);
        oracle::for_each_in_box(std::vector<Integer>(std::size_t(r), -2), std::vector<Integer>(std::size_t(r), 2),
                                [&](const std::vector<Integer>& m) {
                                  const auto e = oracle::to_eigen(m);
                                  CAPTURE(e.transpose());
                                  CHECK(laurent_generated_by(s, e, G, test_box(s, e)) == laurent_contains(s, e));
                                });
      }
    }
}
