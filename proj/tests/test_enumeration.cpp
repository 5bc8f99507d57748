#include <doctest.h>

#include <set>

#include "corekit/bijections.hpp"
#include "corekit/enumeration.hpp"
#include "corekit/hooks.hpp"
#include "oracles.hpp"

using namespace corekit;

namespace {

std::vector<std::vector<int>> collect(Stream<Partition> s) {
  std::vector<std::vector<int>> out;
  for (const Partition& p : s) out.emplace_back(p.parts().begin(), p.parts().end());
  return out;
}

}  // namespace

TEST_CASE("all_partitions order and small cases") {
  CHECK(collect(all_partitions(4)) == std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(collect(all_partitions(0)) == std::vector<std::vector<int>>{{}});
  CHECK(collect(all_partitions(1)) == std::vector<std::vector<int>>{{1}});
}

TEST_CASE("restricted streams") {
  CHECK(collect(distinct_partitions(3)) == std::vector<std::vector<int>>{{3}, {2, 1}});
  CHECK(collect(odd_partitions(3)) == std::vector<std::vector<int>>{{3}, {1, 1, 1}});
  CHECK(count(distinct_partitions(1)) == 1);
  CHECK(count(odd_partitions(1)) == 1);
  CHECK(count(distinct_partitions(6)) == 4);
  CHECK(count(odd_partitions(6)) == 4);

  CHECK(count(distinct_odd_partitions(2)) == 0);
  std::vector<std::vector<int>> sevens;
  for (const auto& lam : distinct_odd_partitions(7)) sevens.emplace_back(lam.parts().begin(), lam.parts().end());
  CHECK(sevens == std::vector<std::vector<int>>{{7}});

  bool has_example_lambda = false;
  for (const auto& lam : distinct_odd_partitions(24)) has_example_lambda |= lam.partition() == make_partition({13, 7, 3, 1});
  CHECK(has_example_lambda);

  CHECK(collect(self_conjugate_partitions(3)) == std::vector<std::vector<int>>{{2, 1}});
  CHECK(count(self_conjugate_partitions(2)) == 0);
  bool has_example_gamma = false;
  for (const auto& g : self_conjugate_partitions(24)) has_example_gamma |= g == make_partition({7, 5, 4, 4, 2, 1, 1});
  CHECK(has_example_gamma);
}

TEST_CASE("stream counts against independent recurrences, n <= 60") {
  const auto p = oracle::partition_counts(60);
  const auto dop = oracle::distinct_odd_counts(60);
  for (int n = 0; n <= 60; ++n) {
    if (n <= 45) {
      std::set<std::vector<int>> seen;
      std::vector<int> prev;
      for (const Partition& part : all_partitions(n)) {
        std::vector<int> v(part.parts().begin(), part.parts().end());
        REQUIRE(part.size() == n);
        if (!seen.empty()) REQUIRE(v < prev);  // strictly lexicographically descending
        prev = v;
        seen.insert(std::move(v));
      }
      REQUIRE(seen.size() == p[static_cast<std::size_t>(n)]);
    }
    REQUIRE(count(distinct_odd_partitions(n)) == dop[static_cast<std::size_t>(n)]);
    REQUIRE(count(self_conjugate_partitions(n)) == dop[static_cast<std::size_t>(n)]);
    REQUIRE(count(distinct_partitions(n)) == count(odd_partitions(n)));
  }
}

TEST_CASE("streams contain only valid members") {
  for (int n = 0; n <= 30; ++n) {
    for (const Partition& q : distinct_partitions(n)) {
      for (std::size_t i = 1; i < q.length(); ++i) REQUIRE(q.part(i) > q.part(i + 1));
    }
    for (const Partition& q : odd_partitions(n)) {
      for (int v : q.parts()) REQUIRE(v % 2 == 1);
    }
  }
}

TEST_CASE("sc_t_count_bruteforce") {
  CHECK(sc_t_count_bruteforce(6, 2) == 1);
  CHECK(sc_t_count_bruteforce(7, 7) == 0);
  CHECK(sc_t_count_bruteforce(24, 6) >= 1);
  CHECK(sc_t_count_bruteforce(0, 5) == 1);
}

TEST_CASE("pruned search equals the unpruned filter and the grid oracle") {
  for (int t = 1; t <= 9; ++t) {
    const auto counts = sc_t_counts_bruteforce(60, t);
    for (int n = 0; n <= 60; ++n) {
      REQUIRE(counts[static_cast<std::size_t>(n)] == sc_t_count_filtered(n, t));
      if (n <= 36) {
        std::uint64_t grid = 0;
        for (const Partition& g : all_partitions(n)) {
          if (is_self_conjugate(g) && oracle::grid_is_t_core({g.parts().begin(), g.parts().end()}, t)) ++grid;
        }
        REQUIRE(counts[static_cast<std::size_t>(n)] == grid);
      }
    }
  }
}

TEST_CASE("for_each_sc_t_core visits each core once") {
  std::set<std::vector<int>> seen;
  std::size_t visits = 0;
  for_each_sc_t_core(120, 7, [&](const DistinctOddPartition& lam) {
    ++visits;
    seen.emplace(lam.parts().begin(), lam.parts().end());
    REQUIRE(is_t_core_naive(distinct_odd_to_sc(lam), 7).is_core());
  });
  CHECK(visits == seen.size());
}
