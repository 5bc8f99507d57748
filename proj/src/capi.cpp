#include "corekit/corekit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "corekit/bijections.hpp"
#include "corekit/classnumbers.hpp"
#include "corekit/enumeration.hpp"
#include "corekit/errors.hpp"
#include "corekit/hooks.hpp"
#include "corekit/json.hpp"
#include "corekit/supernorm.hpp"
#include "corekit/verify.hpp"

struct corekit_partition {
  corekit::Partition value;
};

struct corekit_hook_table {
  corekit::HookTable value;
};

namespace {

thread_local std::string last_error;

corekit_status to_status(corekit::Errc code) {
  using corekit::Errc;
  switch (code) {
    case Errc::InvalidArgument: return COREKIT_ERR_INVALID_ARGUMENT;
    case Errc::Parse: return COREKIT_ERR_PARSE;
    case Errc::NonPositivePart: return COREKIT_ERR_NON_POSITIVE_PART;
    case Errc::NotDistinctOdd: return COREKIT_ERR_NOT_DISTINCT_ODD;
    case Errc::NotSelfConjugate: return COREKIT_ERR_NOT_SELF_CONJUGATE;
    case Errc::BoxOutOfDiagram: return COREKIT_ERR_BOX_OUT_OF_DIAGRAM;
    case Errc::InvalidModulus: return COREKIT_ERR_INVALID_MODULUS;
    case Errc::NonNegativeArgument: return COREKIT_ERR_NON_NEGATIVE_ARGUMENT;
    case Errc::PreconditionViolated: return COREKIT_ERR_PRECONDITION;
    case Errc::NonIntegralResult: return COREKIT_ERR_NON_INTEGRAL;
  }
  return COREKIT_ERR_INTERNAL;
}

corekit_status fail(corekit_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
corekit_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const corekit::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(COREKIT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(COREKIT_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

corekit_status emit(corekit::Partition p, corekit_partition** out) {
  *out = new corekit_partition{std::move(p)};
  return COREKIT_OK;
}

#define COREKIT_REQUIRE(cond)                                                  \
  do {                                                                         \
    if (!(cond)) return fail(COREKIT_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* corekit_version(void) { return "0.1.0"; }

const char* corekit_status_name(corekit_status status) {
  switch (status) {
    case COREKIT_OK: return "ok";
    case COREKIT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case COREKIT_ERR_PARSE: return "parse error";
    case COREKIT_ERR_NON_POSITIVE_PART: return "non-positive part";
    case COREKIT_ERR_NOT_DISTINCT_ODD: return "not distinct odd";
    case COREKIT_ERR_NOT_SELF_CONJUGATE: return "not self-conjugate";
    case COREKIT_ERR_BOX_OUT_OF_DIAGRAM: return "box out of diagram";
    case COREKIT_ERR_INVALID_MODULUS: return "invalid modulus";
    case COREKIT_ERR_NON_NEGATIVE_ARGUMENT: return "non-negative argument";
    case COREKIT_ERR_PRECONDITION: return "precondition violated";
    case COREKIT_ERR_NON_INTEGRAL: return "non-integral result";
    case COREKIT_ERR_OUT_OF_RANGE: return "out of range";
    case COREKIT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* corekit_last_error(void) { return last_error.c_str(); }

void corekit_string_free(char* s) { std::free(s); }

corekit_status corekit_partition_create(const int32_t* parts, size_t count, corekit_partition** out) {
  COREKIT_REQUIRE(out);
  COREKIT_REQUIRE(parts || count == 0);
  return guarded([&] { return emit(corekit::Partition::from_parts(std::vector<int>(parts, parts + count)), out); });
}

corekit_status corekit_partition_parse(const char* text, corekit_partition** out) {
  COREKIT_REQUIRE(text && out);
  return guarded([&] { return emit(corekit::parse_partition(text), out); });
}

void corekit_partition_free(corekit_partition* p) { delete p; }

size_t corekit_partition_length(const corekit_partition* p) { return p ? p->value.length() : 0; }

int64_t corekit_partition_size(const corekit_partition* p) { return p ? p->value.size() : 0; }

size_t corekit_partition_parts(const corekit_partition* p, int32_t* buffer, size_t capacity) {
  if (!p || !buffer) return 0;
  const auto parts = p->value.parts();
  const size_t n = std::min(capacity, parts.size());
  std::copy_n(parts.begin(), n, buffer);
  return n;
}

corekit_status corekit_partition_format(const corekit_partition* p, char** out) {
  COREKIT_REQUIRE(p && out);
  return guarded([&] {
    *out = copy_string(corekit::format_partition(p->value));
    return COREKIT_OK;
  });
}

corekit_status corekit_partition_conjugate(const corekit_partition* p, corekit_partition** out) {
  COREKIT_REQUIRE(p && out);
  return guarded([&] { return emit(corekit::conjugate(p->value), out); });
}

int corekit_partition_is_self_conjugate(const corekit_partition* p) {
  return p && corekit::is_self_conjugate(p->value) ? 1 : 0;
}

int corekit_partition_is_distinct_odd(const corekit_partition* p) {
  return p && corekit::is_distinct_odd(p->value) ? 1 : 0;
}

int32_t corekit_partition_durfee_side(const corekit_partition* p) {
  return p ? corekit::durfee_side(p->value) : 0;
}

corekit_status corekit_sc_to_distinct_odd(const corekit_partition* gamma, corekit_partition** out) {
  COREKIT_REQUIRE(gamma && out);
  return guarded([&] { return emit(corekit::sc_to_distinct_odd(gamma->value).partition(), out); });
}

corekit_status corekit_distinct_odd_to_sc(const corekit_partition* lambda, corekit_partition** out) {
  COREKIT_REQUIRE(lambda && out);
  return guarded([&] { return emit(corekit::distinct_odd_to_sc(corekit::make_distinct_odd(lambda->value)), out); });
}

corekit_status corekit_perfectly_triangular(int32_t k, corekit_partition** out) {
  COREKIT_REQUIRE(out);
  return guarded([&] { return emit(corekit::perfectly_triangular(k), out); });
}

corekit_status corekit_three_core(int32_t r, int sign, corekit_partition** out) {
  COREKIT_REQUIRE(out);
  if (sign == 0) return fail(COREKIT_ERR_INVALID_ARGUMENT, "sign must be nonzero");
  return guarded([&] { return emit(sign < 0 ? corekit::three_core_minus(r) : corekit::three_core_plus(r), out); });
}

corekit_status corekit_hook_table_create(const corekit_partition* p, corekit_hook_table** out) {
  COREKIT_REQUIRE(p && out);
  return guarded([&] {
    *out = new corekit_hook_table{corekit::hook_table(p->value)};
    return COREKIT_OK;
  });
}

void corekit_hook_table_free(corekit_hook_table* t) { delete t; }

size_t corekit_hook_table_rows(const corekit_hook_table* t) { return t ? t->value.num_rows() : 0; }

size_t corekit_hook_table_row_length(const corekit_hook_table* t, size_t row) {
  if (!t || row < 1 || row > t->value.num_rows()) return 0;
  return t->value.rows()[row - 1].size();
}

corekit_status corekit_hook_table_at(const corekit_hook_table* t, int32_t row, int32_t col, int32_t* out) {
  COREKIT_REQUIRE(t && out);
  return guarded([&] {
    *out = t->value.at(row, col);
    return COREKIT_OK;
  });
}

corekit_status corekit_hook_table_json(const corekit_hook_table* t, char** out) {
  COREKIT_REQUIRE(t && out);
  return guarded([&] {
    *out = copy_string(corekit::hook_table_to_json(t->value));
    return COREKIT_OK;
  });
}

corekit_status corekit_hook_length(const corekit_partition* p, int32_t row, int32_t col, int32_t* out) {
  COREKIT_REQUIRE(p && out);
  return guarded([&] {
    *out = corekit::hook_length_naive(p->value, row, col);
    return COREKIT_OK;
  });
}

corekit_status corekit_hook_length_formula(const corekit_partition* lambda, int32_t row, int32_t col, int32_t* out) {
  COREKIT_REQUIRE(lambda && out);
  return guarded([&] {
    *out = corekit::hook_length_formula(corekit::make_distinct_odd(lambda->value), row, col);
    return COREKIT_OK;
  });
}

corekit_status corekit_is_t_core(const corekit_partition* p, int32_t t, corekit_core_method method, int* is_core,
                                 corekit_box* witness_box, int32_t* witness_hook) {
  COREKIT_REQUIRE(p && is_core);
  return guarded([&] {
    corekit::TCoreResult result;
    switch (method) {
      case COREKIT_METHOD_NAIVE:
        result = corekit::is_t_core_naive(p->value, t);
        break;
      case COREKIT_METHOD_SC:
        result = corekit::is_t_core_sc(corekit::sc_to_distinct_odd(p->value), t);
        break;
      default:
        return fail(COREKIT_ERR_INVALID_ARGUMENT, "unknown t-core method");
    }
    *is_core = result.is_core() ? 1 : 0;
    if (result.witness) {
      if (witness_box) *witness_box = corekit_box{result.witness->box.row, result.witness->box.col};
      if (witness_hook) *witness_hook = result.witness->hook;
    }
    return COREKIT_OK;
  });
}

corekit_status corekit_gap_criterion(const corekit_partition* lambda, int32_t t, int* found, int32_t* index) {
  COREKIT_REQUIRE(lambda && found);
  return guarded([&] {
    const auto gap = corekit::gap_criterion(corekit::make_distinct_odd(lambda->value), t);
    *found = gap ? 1 : 0;
    if (gap && index) *index = *gap;
    return COREKIT_OK;
  });
}

corekit_status corekit_sc_counts_bruteforce(int32_t n_max, int32_t t, uint64_t* out, size_t capacity) {
  COREKIT_REQUIRE(out);
  if (n_max < 0) return fail(COREKIT_ERR_INVALID_ARGUMENT, "n_max must be nonnegative");
  if (capacity < static_cast<size_t>(n_max) + 1) return fail(COREKIT_ERR_OUT_OF_RANGE, "output buffer too small");
  return guarded([&] {
    const auto counts = corekit::sc_t_counts_bruteforce(n_max, t);
    std::copy(counts.begin(), counts.end(), out);
    return COREKIT_OK;
  });
}

corekit_status corekit_sc_count_formula(int64_t n, int32_t t, uint64_t* out) {
  COREKIT_REQUIRE(out);
  if (n < 1) return fail(COREKIT_ERR_PRECONDITION, "n must be at least 1");
  return guarded([&] {
    switch (t) {
      case 2: *out = static_cast<uint64_t>(corekit::sc2_count(n)); break;
      case 3: *out = static_cast<uint64_t>(corekit::sc3_count(n)); break;
      case 7: *out = corekit::sc7_bkm(n); break;
      default: return fail(COREKIT_ERR_INVALID_ARGUMENT, "no formula for t=" + std::to_string(t));
    }
    return COREKIT_OK;
  });
}

corekit_status corekit_sc7_ono_raji(int64_t n, uint64_t* out) {
  COREKIT_REQUIRE(out);
  return guarded([&] {
    *out = corekit::sc7_ono_raji(n);
    return COREKIT_OK;
  });
}

corekit_status corekit_hurwitz(int64_t num, int64_t den, int64_t* out_num, int64_t* out_den) {
  COREKIT_REQUIRE(out_num && out_den);
  return guarded([&] {
    const auto h = corekit::hurwitz(corekit::ExactRational(num, den));
    *out_num = h.numerator();
    *out_den = h.denominator();
    return COREKIT_OK;
  });
}

corekit_status corekit_parse_rational(const char* text, int64_t* num, int64_t* den) {
  COREKIT_REQUIRE(text && num && den);
  return guarded([&] {
    const auto r = corekit::parse_rational(text);
    *num = r.numerator();
    *den = r.denominator();
    return COREKIT_OK;
  });
}

corekit_status corekit_nth_prime(uint64_t index, uint64_t* out) {
  COREKIT_REQUIRE(out);
  if (index > 100'000'000) return fail(COREKIT_ERR_OUT_OF_RANGE, "prime index too large");
  return guarded([&] {
    *out = corekit::nth_prime(static_cast<std::size_t>(index));
    return COREKIT_OK;
  });
}

corekit_status corekit_supernorm(const corekit_partition* p, char** out) {
  COREKIT_REQUIRE(p && out);
  return guarded([&] {
    *out = copy_string(corekit::supernorm(p->value).value.get_str());
    return COREKIT_OK;
  });
}

corekit_status corekit_supernorm_inverse(const char* decimal, corekit_partition** out) {
  COREKIT_REQUIRE(decimal && out);
  mpz_class n;
  if (*decimal == '\0' || *decimal == '+' || *decimal == '-' || n.set_str(decimal, 10) != 0) {
    return fail(COREKIT_ERR_PARSE, std::string("not a decimal integer: '") + decimal + "'");
  }
  return guarded([&] { return emit(corekit::supernorm_inverse(n), out); });
}

corekit_status corekit_t_core_supernorm_set(int32_t n, int32_t t, char** out_json) {
  COREKIT_REQUIRE(out_json);
  return guarded([&] {
    *out_json = copy_string(corekit::integer_set_to_json(corekit::t_core_supernorm_set(n, t)));
    return COREKIT_OK;
  });
}

corekit_status corekit_verify(const char* suite, int32_t n_max, unsigned threads, corekit_check_callback callback,
                              void* user, int* all_passed) {
  COREKIT_REQUIRE(suite && all_passed);
  return guarded([&] {
    const auto results = corekit::run_suite(suite, n_max, threads);
    int ok = 1;
    for (const auto& r : results) {
      if (!r.passed) ok = 0;
      if (callback) callback(r.name.c_str(), r.passed ? 1 : 0, r.detail.c_str(), user);
    }
    *all_passed = ok;
    return COREKIT_OK;
  });
}

}  // extern "C"
