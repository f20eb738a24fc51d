#include "artin/core.hpp"
#include "../oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace artin;

namespace {

Exponents vec(std::initializer_list<Integer> v) { return oracle::to_eigen(std::vector<Integer>(v)); }

}  // namespace

TEST_CASE("scenario construction rejects bad shapes") {
  CHECK_THROWS_AS(Scenario("x", std::vector<Integer>{}, std::vector<Integer>{}), std::invalid_argument);
  CHECK_THROWS_AS(Scenario("x", std::vector<Integer>{1, 1}, std::vector<Integer>{1}), std::invalid_argument);
  CHECK_THROWS_AS(Scenario("x", std::vector<Integer>{0}, std::vector<Integer>{1}), std::invalid_argument);
  const Scenario s("ok", std::vector<Integer>{1, 2, 3}, std::vector<Integer>{2, -3, 0});
  CHECK(s.r() == 3);
  CHECK(s.max_abs_order() == 3);
  CHECK(s.positive_count() == 1);
  CHECK(s.negative_count() == 1);
}

TEST_CASE("ord") {
  CHECK(ord(oracle::scenario({1, -1}), vec({0, 0})) == 0);
  CHECK(ord(oracle::scenario({2, -3}), vec({3, 2})) == 0);
  const Scenario s("z", std::vector<Integer>{3, 2, 1, 1}, std::vector<Integer>{2, -1, 0, 0});
  CHECK(ord(s, s.degrees()) == 4);
  CHECK(ord(oracle::scenario({1, -1}), vec({-1, -2})) == 1);
  CHECK_THROWS_AS(ord(oracle::scenario({1, -1}), vec({1})), std::invalid_argument);
  const Integer big = std::numeric_limits<Integer>::max() / 2 + 1;
  CHECK_THROWS_AS(ord(oracle::scenario({big, big}), vec({1, 1})), std::overflow_error);
}

TEST_CASE("normalize") {
  SUBCASE("mixed signs") {
    const auto n = normalize(oracle::scenario({0, -1, 2}));
    CHECK(n.scenario.orders() == vec({2, -1, 0}));
    CHECK(n.partition.p == 1);
    CHECK(n.partition.q == 2);
    CHECK(n.partition.permutation == std::vector<Index>{2, 1, 0});
  }
  SUBCASE("already normalized") {
    const auto n = normalize(oracle::scenario({1, 1, 0}));
    CHECK(n.scenario.orders() == vec({1, 1, 0}));
    CHECK(n.partition.p == 2);
    CHECK(n.partition.q == 2);
  }
  SUBCASE("all zero") {
    const auto n = normalize(oracle::scenario({0, 0}));
    CHECK(n.partition.p == 0);
    CHECK(n.partition.q == 0);
  }
  SUBCASE("degrees travel with orders and the map round-trips") {
    const Scenario s("d", std::vector<Integer>{1, 2, 3, 4}, std::vector<Integer>{0, -2, 3, -1});
    const auto n = normalize(s);
    for (Index i = 0; i < s.r(); ++i) {
      const Index k = n.partition.permutation[std::size_t(i)];
      CHECK(n.scenario.order(k) == s.order(i));
      CHECK(n.scenario.degree(k) == s.degree(i));
      CHECK(n.partition.original(k) == i);
    }
    const Exponents v = vec({5, 6, 7, 8});
    CHECK(denormalize(n.partition, to_normalized(n.partition, v)) == v);
    CHECK(ord(n.scenario, to_normalized(n.partition, v)) == ord(s, v));
  }
}

TEST_CASE("validate examples") {
  const auto ok = validate(Scenario("a", std::vector<Integer>{1, 1, 1}, std::vector<Integer>{1, 0, 0}));
  CHECK(ok.valid);
  CHECK(ok.violations.empty());

  const auto bad = validate(Scenario("b", std::vector<Integer>{1, 1, 1}, std::vector<Integer>{1, -1, 0}));
  CHECK_FALSE(bad.valid);
  CHECK(bad.violates(Constraint::Stark));
  CHECK(bad.violates(Constraint::SingleZeroDegreeOne));
  CHECK_FALSE(bad.violates(Constraint::RegularCharacter));

  // positive side 3*2 = 6, negative side 2*1 = 2, max |l| = 2
  const auto mixed = validate(Scenario("c", std::vector<Integer>{3, 2, 1, 1}, std::vector<Integer>{2, -1, 0, 0}));
  CHECK(mixed.valid);

  const auto shift = validate(Scenario("e", std::vector<Integer>{1, 1, 1}, std::vector<Integer>{3, 3, -4}));
  CHECK_FALSE(shift.valid);
  CHECK(shift.violates(Constraint::RhoadesShift));
  CHECK(shift.violates(Constraint::MaxOrderBound));
  CHECK_FALSE(shift.violates(Constraint::Stark));
  for (const auto& f : shift.violations) {
    CHECK(f.slack == f.lhs - f.rhs);
    CHECK(f.slack < 0);
  }

  const auto case2 = validate(Scenario("f", std::vector<Integer>{2, 1, 1}, std::vector<Integer>{1, 0, -1}));
  CHECK(case2.violates(Constraint::SingleZeroDegreeTwo));
  CHECK(to_string(Constraint::SingleZeroDegreeTwo) == "prop-1.1-case-2");
}

TEST_CASE("validate agrees with the stated inequalities over a grid") {
  for (Index r = 1; r <= 3; ++r)
    for (const auto& l : oracle::order_multisets(r, 3))
      for (const auto& d : oracle::degree_vectors(r, 3)) {
        const auto v = validate(Scenario("g", d, l));
        const auto direct = oracle::direct_validity(l, d);
        CAPTURE(r);
        CHECK(v.violates(Constraint::Stark) == !direct.stark);
        CHECK(v.violates(Constraint::MaxOrderBound) == !direct.max_bound);
        CHECK((v.violates(Constraint::SingleZeroDegreeOne) || v.violates(Constraint::SingleZeroDegreeTwo)) == !direct.single_zero);
        CHECK(v.valid == v.violations.empty());
        if (!direct.has_pole) CHECK(v.valid);
      }
}

TEST_CASE("validate is invariant under permutation of coordinates") {
  std::vector<Integer> l{2, -1, 0, -1}, d{1, 2, 3, 1};
  std::vector<std::size_t> idx(l.size());
  std::iota(idx.begin(), idx.end(), 0);
  const auto base = validate(Scenario("p", d, l));
  do {
    std::vector<Integer> pl, pd;
    for (auto i : idx) pl.push_back(l[i]), pd.push_back(d[i]);
    const auto v = validate(Scenario("p", pd, pl));
    CHECK(v.valid == base.valid);
    REQUIRE(v.violations.size() == base.violations.size());
    for (std::size_t k = 0; k < v.violations.size(); ++k) {
      CHECK(v.violations[k].constraint == base.violations[k].constraint);
      CHECK(v.violations[k].slack == base.violations[k].slack);
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
}
