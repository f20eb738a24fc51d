#include "artin/hilbert.hpp"
#include "artin/semigroup.hpp"
#include "../oracles.hpp"

#include <doctest.h>

using namespace artin;

namespace {

Exponents vec(std::initializer_list<Integer> v) { return oracle::to_eigen(std::vector<Integer>(v)); }

bool free_by_definition(const std::vector<Integer>& l) {
  Integer zero = 0, zeros = 0;
  bool pole = false;
  for (auto x : l) {
    if (x > 0) zero = x, ++zeros;
    if (x < 0) pole = true;
  }
  if (!pole) return true;
  if (zeros != 1) return false;
  for (auto x : l)
    if (x % zero != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("restricted partition") {
  CHECK(restricted_partition(vec({1, 1}), 3) == 4);
  CHECK(restricted_partition(vec({1, 2}), 4) == 3);
  CHECK(restricted_partition(vec({3, 5}), 0) == 1);
  CHECK(restricted_partition(vec({3, 5}), 7) == 0);
  CHECK_THROWS(restricted_partition(vec({1, 0}), 3));
  CHECK_THROWS(restricted_partition(vec({1}), -1));
  for (Integer n = 0; n <= 12; ++n) {
    CHECK(restricted_partition(vec({1, 2, 3}), n) == oracle::partitions({1, 2, 3}, n));
    CHECK(restricted_partition(vec({2, 3, 3, 1}), n) == oracle::partitions({2, 3, 3, 1}, n));
  }
}

TEST_CASE("series coefficients are partition counts") {
  const auto c = series_coefficients(vec({1, 2, 1}), 15);
  REQUIRE(c.size() == 16);
  for (Integer n = 0; n <= 15; ++n) CHECK(c[std::size_t(n)] == oracle::partitions({1, 2, 1}, n));
}

TEST_CASE("hilbert function examples") {
  CHECK(hilbert_function(oracle::scenario({2, -5, 1}), 0) == 1);
  CHECK(hilbert_function(oracle::scenario({1, -1}), 4) == 3);
  CHECK(hilbert_function(oracle::scenario({1, 1}), 2) == 3);
  const std::vector<Integer> expected{1, 2, 4, 6, 9};
  for (Integer n = 0; n <= 4; ++n)
    CHECK(hilbert_function(oracle::scenario({1, -1, 0}), n) == expected[std::size_t(n)]);
  CHECK(hilbert_function(oracle::scenario({-1, -1}), 3) == 0);
}

TEST_CASE("hilbert function agrees with enumeration") {
  for (Index r = 1; r <= 3; ++r)
    for (const auto& l : oracle::order_multisets(r, 3)) {
      const auto s = oracle::scenario(l);
      for (Integer n = 0; n <= 7; ++n) CHECK(hilbert_function(s, n) == oracle::degree_count(s, n));
    }
}

TEST_CASE("hilbert function is bounded by the count of all monomials") {
  for (const auto& l : oracle::order_multisets(4, 2))
    for (Integer n = 0; n <= 6; ++n)
      CHECK(hilbert_function(oracle::scenario(l), n) <= binomial(n + 3, 3));
}

TEST_CASE("free-case series weights") {
  CHECK(hilbert_series_free(oracle::scenario({1, -1, 0})) == vec({1, 2, 1}));
  CHECK(hilbert_series_free(oracle::scenario({1, 1})) == vec({1, 1}));
  CHECK(hilbert_series_free(oracle::scenario({1, -2, -1, 0})) == vec({1, 3, 2, 1}));
  CHECK(hilbert_series_free(oracle::scenario({0, -2, 2})) == vec({1, 2, 1}));
  CHECK_THROWS_AS(hilbert_series_free(oracle::scenario({2, -3})), std::domain_error);
  CHECK_THROWS_AS(hilbert_series_free(oracle::scenario({1, 1, -1})), std::domain_error);

  for (Index r = 1; r <= 4; ++r)
    for (const auto& l : oracle::order_multisets(r, 4)) {
      if (!free_by_definition(l)) continue;
      const auto s = oracle::scenario(l);
      const auto w = hilbert_series_free(s);
      const auto series = series_coefficients(w, 20);
      for (Integer n = 0; n <= 20; ++n) {
        CHECK(hilbert_function(s, n) == restricted_partition(w, n));
        CHECK(series[std::size_t(n)] == restricted_partition(w, n));
      }
    }
}
