#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "corekit/corekit.h"

namespace {

struct PartitionHandle {
  corekit_partition* p = nullptr;
  ~PartitionHandle() { corekit_partition_free(p); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  corekit_string_free(s);
  return out;
}

std::vector<int32_t> parts_of(const corekit_partition* p) {
  std::vector<int32_t> buf(corekit_partition_length(p));
  corekit_partition_parts(p, buf.data(), buf.size());
  return buf;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strlen(corekit_version()) > 0);
  CHECK(std::string(corekit_status_name(COREKIT_OK)) == "ok");
  CHECK(std::string(corekit_status_name(COREKIT_ERR_PARSE)) == "parse error");
}

TEST_CASE("partition handles") {
  PartitionHandle h;
  const int32_t parts[] = {1, 4, 2, 7, 1, 5, 4};
  REQUIRE(corekit_partition_create(parts, 7, &h.p) == COREKIT_OK);
  CHECK(corekit_partition_size(h.p) == 24);
  CHECK(parts_of(h.p) == std::vector<int32_t>{7, 5, 4, 4, 2, 1, 1});
  CHECK(corekit_partition_is_self_conjugate(h.p) == 1);
  CHECK(corekit_partition_is_distinct_odd(h.p) == 0);
  CHECK(corekit_partition_durfee_side(h.p) == 4);
  char* text = nullptr;
  REQUIRE(corekit_partition_format(h.p, &text) == COREKIT_OK);
  CHECK(take(text) == "7,5,4,4,2,1,1");

  PartitionHandle bad;
  const int32_t zero[] = {2, 0};
  CHECK(corekit_partition_create(zero, 2, &bad.p) == COREKIT_ERR_NON_POSITIVE_PART);
  CHECK(bad.p == nullptr);
  CHECK(std::strlen(corekit_last_error()) > 0);
  CHECK(corekit_partition_parse("3,,1", &bad.p) == COREKIT_ERR_PARSE);
  CHECK(corekit_partition_parse(nullptr, &bad.p) == COREKIT_ERR_INVALID_ARGUMENT);

  PartitionHandle freq;
  REQUIRE(corekit_partition_parse("1^3,2,3^2,5,6", &freq.p) == COREKIT_OK);
  CHECK(parts_of(freq.p) == std::vector<int32_t>{6, 5, 3, 3, 2, 1, 1, 1});

  PartitionHandle empty;
  REQUIRE(corekit_partition_parse("()", &empty.p) == COREKIT_OK);
  CHECK(corekit_partition_length(empty.p) == 0);
}

TEST_CASE("bijections through the C API") {
  PartitionHandle gamma, lambda, back, tri, minus;
  REQUIRE(corekit_partition_parse("7,5,4,4,2,1,1", &gamma.p) == COREKIT_OK);
  REQUIRE(corekit_sc_to_distinct_odd(gamma.p, &lambda.p) == COREKIT_OK);
  CHECK(parts_of(lambda.p) == std::vector<int32_t>{13, 7, 3, 1});
  REQUIRE(corekit_distinct_odd_to_sc(lambda.p, &back.p) == COREKIT_OK);
  CHECK(parts_of(back.p) == parts_of(gamma.p));
  PartitionHandle nope;
  CHECK(corekit_sc_to_distinct_odd(lambda.p, &nope.p) == COREKIT_ERR_NOT_SELF_CONJUGATE);
  CHECK(corekit_distinct_odd_to_sc(gamma.p, &nope.p) == COREKIT_ERR_NOT_DISTINCT_ODD);
  REQUIRE(corekit_perfectly_triangular(3, &tri.p) == COREKIT_OK);
  CHECK(parts_of(tri.p) == std::vector<int32_t>{3, 2, 1});
  REQUIRE(corekit_three_core(2, -1, &minus.p) == COREKIT_OK);
  CHECK(corekit_partition_size(minus.p) == 8);
}

TEST_CASE("hooks and cores through the C API") {
  PartitionHandle gamma, lambda;
  REQUIRE(corekit_partition_parse("7,5,4,4,2,1,1", &gamma.p) == COREKIT_OK);
  REQUIRE(corekit_partition_parse("13,7,3,1", &lambda.p) == COREKIT_OK);

  corekit_hook_table* t = nullptr;
  REQUIRE(corekit_hook_table_create(gamma.p, &t) == COREKIT_OK);
  CHECK(corekit_hook_table_rows(t) == 7);
  CHECK(corekit_hook_table_row_length(t, 1) == 7);
  int32_t h = 0;
  REQUIRE(corekit_hook_table_at(t, 1, 1, &h) == COREKIT_OK);
  CHECK(h == 13);
  CHECK(corekit_hook_table_at(t, 1, 8, &h) == COREKIT_ERR_BOX_OUT_OF_DIAGRAM);
  char* json = nullptr;
  REQUIRE(corekit_hook_table_json(t, &json) == COREKIT_OK);
  CHECK(take(json).rfind("[[13,", 0) == 0);
  corekit_hook_table_free(t);

  REQUIRE(corekit_hook_length(gamma.p, 4, 1, &h) == COREKIT_OK);
  CHECK(h == 7);
  REQUIRE(corekit_hook_length_formula(lambda.p, 5, 2, &h) == COREKIT_OK);
  int32_t naive = 0;
  REQUIRE(corekit_hook_length(gamma.p, 5, 2, &naive) == COREKIT_OK);
  CHECK(h == naive);

  int core = -1;
  corekit_box box{};
  int32_t wh = 0;
  REQUIRE(corekit_is_t_core(gamma.p, 7, COREKIT_METHOD_SC, &core, &box, &wh) == COREKIT_OK);
  CHECK(core == 0);
  CHECK(box.row == 4);
  CHECK(box.col == 1);
  CHECK(wh == 7);
  REQUIRE(corekit_is_t_core(gamma.p, 7, COREKIT_METHOD_NAIVE, &core, &box, &wh) == COREKIT_OK);
  CHECK(core == 0);
  CHECK(wh % 7 == 0);
  REQUIRE(corekit_is_t_core(gamma.p, 6, COREKIT_METHOD_SC, &core, nullptr, nullptr) == COREKIT_OK);
  CHECK(core == 1);
  CHECK(corekit_is_t_core(gamma.p, 0, COREKIT_METHOD_SC, &core, nullptr, nullptr) == COREKIT_ERR_INVALID_MODULUS);
  CHECK(corekit_is_t_core(lambda.p, 3, COREKIT_METHOD_SC, &core, nullptr, nullptr) ==
        COREKIT_ERR_NOT_SELF_CONJUGATE);

  int found = 0;
  int32_t idx = 0;
  REQUIRE(corekit_gap_criterion(lambda.p, 2, &found, &idx) == COREKIT_OK);
  CHECK(found == 1);
  CHECK(idx == 1);
}

TEST_CASE("counts and class numbers through the C API") {
  std::vector<uint64_t> counts(31);
  REQUIRE(corekit_sc_counts_bruteforce(30, 7, counts.data(), counts.size()) == COREKIT_OK);
  CHECK(counts[0] == 1);
  CHECK(counts[1] == 1);
  CHECK(corekit_sc_counts_bruteforce(30, 7, counts.data(), 5) == COREKIT_ERR_OUT_OF_RANGE);
  for (int64_t n = 1; n <= 30; ++n) {
    uint64_t f = 0;
    REQUIRE(corekit_sc_count_formula(n, 7, &f) == COREKIT_OK);
    CHECK(f == counts[static_cast<std::size_t>(n)]);
  }
  uint64_t v = 0;
  CHECK(corekit_sc_count_formula(4, 5, &v) == COREKIT_ERR_INVALID_ARGUMENT);
  CHECK(corekit_sc7_ono_raji(2, &v) == COREKIT_ERR_PRECONDITION);
  REQUIRE(corekit_sc7_ono_raji(3, &v) == COREKIT_OK);
  CHECK(v == 1);

  int64_t num = 0, den = 0;
  REQUIRE(corekit_hurwitz(-3, 1, &num, &den) == COREKIT_OK);
  CHECK(num == 1);
  CHECK(den == 3);
  REQUIRE(corekit_hurwitz(-36, 7, &num, &den) == COREKIT_OK);
  CHECK(num == 0);
  CHECK(corekit_hurwitz(5, 1, &num, &den) == COREKIT_ERR_NON_NEGATIVE_ARGUMENT);
  REQUIRE(corekit_parse_rational("-36/7", &num, &den) == COREKIT_OK);
  CHECK(num == -36);
  CHECK(den == 7);
}

TEST_CASE("supernorm through the C API") {
  uint64_t p = 0;
  REQUIRE(corekit_nth_prime(6, &p) == COREKIT_OK);
  CHECK(p == 13);
  CHECK(corekit_nth_prime(0, &p) == COREKIT_ERR_INVALID_ARGUMENT);

  PartitionHandle mu, back;
  REQUIRE(corekit_partition_parse("6,5,3,3,2,1,1,1", &mu.p) == COREKIT_OK);
  char* s = nullptr;
  REQUIRE(corekit_supernorm(mu.p, &s) == COREKIT_OK);
  CHECK(take(s) == "85800");
  REQUIRE(corekit_supernorm_inverse("85800", &back.p) == COREKIT_OK);
  CHECK(parts_of(back.p) == parts_of(mu.p));
  PartitionHandle bad;
  CHECK(corekit_supernorm_inverse("12a", &bad.p) == COREKIT_ERR_PARSE);

  REQUIRE(corekit_t_core_supernorm_set(24, 7, &s) == COREKIT_OK);
  CHECK(take(s) == "[\"737\",\"1271\",\"5170\"]");
}

TEST_CASE("verify through the C API") {
  int passed = 0;
  int calls = 0;
  auto cb = [](const char*, int, const char*, void* user) { ++*static_cast<int*>(user); };
  REQUIRE(corekit_verify("sc7", 20, 1, cb, &calls, &passed) == COREKIT_OK);
  CHECK(passed == 1);
  CHECK(calls > 0);
  CHECK(corekit_verify("bogus", 20, 1, nullptr, nullptr, &passed) == COREKIT_ERR_INVALID_ARGUMENT);
}
