#include <doctest.h>

#include "corekit/errors.hpp"
#include "corekit/json.hpp"

using namespace corekit;

TEST_CASE("hook table json") {
  const HookTable t = hook_table(make_partition({3, 1}));
  CHECK(hook_table_to_json(t) == "[[4,2,1],[1]]");
  const HookTable back = hook_table_from_json(hook_table_to_json(t));
  CHECK(back.rows() == t.rows());
  CHECK(hook_table_from_json("[]").num_rows() == 0);
  CHECK_THROWS_AS(hook_table_from_json("[[1,"), Error);
  CHECK_THROWS_AS(hook_table_from_json("{\"a\":1}"), Error);
  CHECK_THROWS_AS(hook_table_from_json("[[1],[2,3]]"), Error);  // rows must not grow
}

TEST_CASE("integer set json") {
  const std::vector<mpz_class> values{mpz_class(2), mpz_class("123456789012345678901234567890")};
  const std::string text = integer_set_to_json(values);
  CHECK(text == "[\"2\",\"123456789012345678901234567890\"]");
  CHECK(integer_set_from_json(text) == values);
  CHECK(integer_set_to_json({}) == "[]");
  CHECK_THROWS_AS(integer_set_from_json("[\"12x\"]"), Error);
  CHECK_THROWS_AS(integer_set_from_json("[3]"), Error);
}
