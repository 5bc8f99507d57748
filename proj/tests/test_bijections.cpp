#include <doctest.h>

#include "corekit/bijections.hpp"
#include "corekit/enumeration.hpp"
#include "corekit/errors.hpp"
#include "corekit/hooks.hpp"
#include "oracles.hpp"

using namespace corekit;

namespace {

std::vector<int> parts_of(const Partition& p) {
  return {p.parts().begin(), p.parts().end()};
}

}  // namespace

TEST_CASE("sc_to_distinct_odd") {
  CHECK(parts_of(sc_to_distinct_odd(make_partition({7, 5, 4, 4, 2, 1, 1})).partition()) == std::vector<int>{13, 7, 3, 1});
  CHECK(parts_of(sc_to_distinct_odd(make_partition({1})).partition()) == std::vector<int>{1});
  CHECK(sc_to_distinct_odd(Partition{}).size() == 0);
  CHECK_THROWS_AS(sc_to_distinct_odd(make_partition({3})), Error);
}

TEST_CASE("distinct_odd_to_sc") {
  CHECK(parts_of(distinct_odd_to_sc(make_distinct_odd(make_partition({13, 7, 3, 1})))) == std::vector<int>{7, 5, 4, 4, 2, 1, 1});
  CHECK(parts_of(distinct_odd_to_sc(make_distinct_odd(make_partition({1})))) == std::vector<int>{1});
  CHECK(parts_of(distinct_odd_to_sc(make_distinct_odd(make_partition({5, 1})))) == std::vector<int>{3, 2, 1});
  CHECK(distinct_odd_to_sc(DistinctOddPartition{}).empty());
}

TEST_CASE("bijection round trips, n <= 40") {
  const auto expected = oracle::distinct_odd_counts(40);
  for (int n = 0; n <= 40; ++n) {
    std::uint64_t sc_by_filter = 0;
    for (const Partition& g : all_partitions(n)) {
      if (!is_self_conjugate(g)) continue;
      ++sc_by_filter;
      const DistinctOddPartition lam = sc_to_distinct_odd(g);
      REQUIRE(lam.size() == n);
      REQUIRE(distinct_odd_to_sc(lam) == g);
    }
    std::uint64_t dop = 0;
    for (const DistinctOddPartition& lam : distinct_odd_partitions(n)) {
      ++dop;
      const Partition g = distinct_odd_to_sc(lam);
      REQUIRE(g.size() == n);
      REQUIRE(is_self_conjugate(g));
      REQUIRE(sc_to_distinct_odd(g) == lam);
    }
    CHECK(sc_by_filter == dop);
    CHECK(dop == expected[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("perfectly_triangular") {
  CHECK(parts_of(perfectly_triangular(3)) == std::vector<int>{3, 2, 1});
  CHECK(parts_of(perfectly_triangular(1)) == std::vector<int>{1});
  CHECK(parts_of(sc_to_distinct_odd(perfectly_triangular(4)).partition()) == std::vector<int>{7, 3});
  CHECK_THROWS_AS(perfectly_triangular(0), Error);
  for (int k = 1; k <= 12; ++k) {
    const Partition g = perfectly_triangular(k);
    REQUIRE(g.size() == k * (k + 1) / 2);
    REQUIRE(is_self_conjugate(g));
    REQUIRE(oracle::grid_is_t_core(parts_of(g), 2));
  }
}

TEST_CASE("every 2-core is perfectly triangular, n <= 40") {
  for (int n = 1; n <= 40; ++n) {
    std::vector<Partition> cores;
    for (const Partition& p : all_partitions(n)) {
      if (oracle::grid_is_t_core(parts_of(p), 2)) cores.push_back(p);
    }
    int k = 1;
    while (k * (k + 1) / 2 < n) ++k;
    if (k * (k + 1) / 2 == n) {
      REQUIRE(cores.size() == 1);
      CHECK(cores.front() == perfectly_triangular(k));
    } else {
      CHECK(cores.empty());
    }
  }
}

TEST_CASE("three-core constructors") {
  CHECK(parts_of(three_core_minus(1)) == std::vector<int>{1});
  CHECK(parts_of(three_core_minus(2)) == std::vector<int>{4, 2, 1, 1});
  CHECK(parts_of(three_core_plus(1)) == std::vector<int>{3, 1, 1});
  CHECK(oracle::grid_hooks({3, 1, 1}) == std::vector<std::vector<int>>{{5, 2, 1}, {2}, {1}});
  CHECK_THROWS_AS(three_core_minus(0), Error);

  for (int r = 1; r <= 15; ++r) {
    const Partition minus = three_core_minus(r);
    const Partition plus = three_core_plus(r);
    REQUIRE(minus.size() == r * (3 * r - 2));
    REQUIRE(plus.size() == r * (3 * r + 2));
    REQUIRE(is_self_conjugate(minus));
    REQUIRE(is_self_conjugate(plus));
    REQUIRE(oracle::grid_is_t_core(parts_of(minus), 3));
    REQUIRE(oracle::grid_is_t_core(parts_of(plus), 3));
  }
}

TEST_CASE("self-conjugate 3-cores are unique and constructible, n <= 200") {
  std::vector<std::vector<Partition>> found(201);
  for_each_sc_t_core(200, 3, [&](const DistinctOddPartition& lam) {
    found[static_cast<std::size_t>(lam.size())].push_back(distinct_odd_to_sc(lam));
  });
  for (int n = 1; n <= 200; ++n) {
    std::optional<Partition> expected;
    for (int r = 1; r * (3 * r - 2) <= n; ++r) {
      if (r * (3 * r - 2) == n) expected = three_core_minus(r);
      if (r * (3 * r + 2) == n) expected = three_core_plus(r);
    }
    const auto& at_n = found[static_cast<std::size_t>(n)];
    if (expected) {
      REQUIRE(at_n.size() == 1);
      CHECK(at_n.front() == *expected);
    } else {
      CHECK(at_n.empty());
    }
  }
}
