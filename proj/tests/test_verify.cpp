#include <doctest.h>

#include "corekit/errors.hpp"
#include "corekit/verify.hpp"

using namespace corekit;

TEST_CASE("suites pass on small n") {
  for (const char* suite : {"hooks", "bijection", "sc7", "supernorm"}) {
    const auto results = run_suite(suite, 30, 2);
    CHECK_FALSE(results.empty());
    for (const auto& r : results) CHECK_MESSAGE(r.passed, r.name << ": " << r.detail);
  }
}

TEST_CASE("all runs every suite") {
  std::size_t separate = 0;
  for (const char* suite : {"hooks", "bijection", "sc7", "supernorm"}) separate += run_suite(suite, 12, 1).size();
  CHECK(run_suite("all", 12, 1).size() == separate);
}

TEST_CASE("unknown suite") {
  CHECK_THROWS_AS(run_suite("nope", 10), Error);
}
