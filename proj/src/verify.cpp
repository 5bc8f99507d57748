#include "corekit/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "corekit/bijections.hpp"
#include "corekit/classnumbers.hpp"
#include "corekit/detail/parallel.hpp"
#include "corekit/enumeration.hpp"
#include "corekit/errors.hpp"
#include "corekit/hooks.hpp"
#include "corekit/supernorm.hpp"

namespace corekit {

namespace {

// Sweeps that walk every self-conjugate partition stop here; there are about
// 10^4 of size 100 and the count grows exponentially.
constexpr int kEnumerationCap = 100;

// Runs `check(n)` for n in [first, last] in parallel; a non-empty string is a
// failure description. Reports the smallest failing n.
template <class Check>
CheckResult sweep(std::string name, int first, int last, unsigned threads, Check check) {
  CheckResult result{std::move(name), true, {}};
  if (last < first) {
    result.detail = "empty range";
    return result;
  }
  std::vector<std::string> failures(static_cast<std::size_t>(last - first + 1));
  detail::parallel_for(failures.size(), threads, [&](std::size_t i) { failures[i] = check(first + static_cast<int>(i)); });
  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (!failures[i].empty()) {
      result.passed = false;
      result.detail = "n=" + std::to_string(first + static_cast<int>(i)) + ": " + failures[i];
      return result;
    }
  }
  result.detail = "n=" + std::to_string(first) + ".." + std::to_string(last);
  return result;
}

std::string box_text(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void hooks_suite(std::vector<CheckResult>& out, int n_max, unsigned threads) {
  n_max = std::min(n_max, kEnumerationCap);
  out.push_back(sweep("hooks.formula_equals_naive", 0, n_max, threads, [](int n) -> std::string {
    for (const DistinctOddPartition& lam : distinct_odd_partitions(n)) {
      const Partition g = distinct_odd_to_sc(lam);
      const HookTable table = hook_table(g);
      for (int i = 1; i <= static_cast<int>(g.length()); ++i) {
        for (int j = 1; j <= g.part(static_cast<std::size_t>(i)); ++j) {
          if (hook_length_formula(lam, i, j) != table.at(i, j)) return format_partition(g) + " at " + box_text(i, j);
        }
      }
    }
    return {};
  }));
  out.push_back(sweep("hooks.core_decision_equivalence", 0, n_max, threads, [](int n) -> std::string {
    for (const DistinctOddPartition& lam : distinct_odd_partitions(n)) {
      const Partition g = distinct_odd_to_sc(lam);
      for (int t = 2; t <= 15; ++t) {
        if (is_t_core_sc(lam, t).is_core() != is_t_core_naive(g, t).is_core()) {
          return format_partition(g) + " t=" + std::to_string(t);
        }
      }
    }
    return {};
  }));
  out.push_back(sweep("hooks.symmetry_and_diagonal", 0, n_max, threads, [](int n) -> std::string {
    for (const DistinctOddPartition& lam : distinct_odd_partitions(n)) {
      const Partition g = distinct_odd_to_sc(lam);
      const HookTable table = hook_table(g);
      long on_or_below = 0;
      for (int i = 1; i <= static_cast<int>(g.length()); ++i) {
        for (int j = 1; j <= g.part(static_cast<std::size_t>(i)); ++j) {
          if (table.at(i, j) != table.at(j, i)) return "asymmetric " + format_partition(g);
          if (j <= i) ++on_or_below;
        }
      }
      for (std::size_t i = 1; i <= lam.length(); ++i) {
        const int d = static_cast<int>(i);
        if (table.at(d, d) != lam.part(i)) return "diagonal mismatch " + format_partition(g);
      }
      if (on_or_below != sc_hook_calc_count(lam)) return "calc count " + format_partition(g);
    }
    return {};
  }));
  out.push_back(sweep("hooks.gap_soundness", 0, n_max, threads, [](int n) -> std::string {
    for (const DistinctOddPartition& lam : distinct_odd_partitions(n)) {
      for (int t = 1; t <= 15; ++t) {
        const auto gap = gap_criterion(lam, t);
        if (!gap) continue;
        const Partition g = distinct_odd_to_sc(lam);
        const Box b = gap_witness_box(lam, *gap, t);
        if (is_t_core_naive(g, t).is_core() || hook_length_naive(g, b.row, b.col) != t) {
          return format_partition(g) + " t=" + std::to_string(t);
        }
      }
    }
    return {};
  }));
}

void bijection_suite(std::vector<CheckResult>& out, int n_max, unsigned threads) {
  out.push_back(sweep("bijection.roundtrip", 0, std::min(n_max, kEnumerationCap), threads, [](int n) -> std::string {
    for (const DistinctOddPartition& lam : distinct_odd_partitions(n)) {
      const Partition g = distinct_odd_to_sc(lam);
      if (g.size() != n || !is_self_conjugate(g)) return "not self-conjugate of size n: " + format_partition(g);
      if (sc_to_distinct_odd(g) != lam) return "roundtrip " + format_partition(lam.partition());
    }
    return {};
  }));
  const int filter_max = std::min(n_max, 50);
  out.push_back(sweep("bijection.count_identity", 0, filter_max, threads, [](int n) -> std::string {
    std::uint64_t sc = 0;
    for (const Partition& p : all_partitions(n)) sc += is_self_conjugate(p) ? 1 : 0;
    const std::uint64_t dop = count(distinct_odd_partitions(n));
    if (sc != dop) return std::to_string(sc) + " self-conjugate vs " + std::to_string(dop) + " distinct-odd";
    return {};
  }));
  const int two_core_max = std::min(n_max, 40);
  out.push_back(sweep("bijection.two_cores_are_triangular", 0, two_core_max, threads, [](int n) -> std::string {
    std::vector<Partition> cores;
    for (const Partition& p : all_partitions(n)) {
      if (is_t_core_naive(p, 2).is_core()) cores.push_back(p);
    }
    std::vector<Partition> expected;
    if (n == 0) expected.emplace_back();
    for (int k = 1; k * (k + 1) / 2 <= n; ++k) {
      if (k * (k + 1) / 2 == n) expected.push_back(perfectly_triangular(k));
    }
    if (cores != expected) return std::to_string(cores.size()) + " two-cores found";
    return {};
  }));

  auto counts2 = sc_t_counts_bruteforce(n_max, 2);
  auto counts3 = sc_t_counts_bruteforce(n_max, 3);
  out.push_back(sweep("bijection.sc2_formula", 1, n_max, threads, [&](int n) -> std::string {
    if (counts2[static_cast<std::size_t>(n)] != static_cast<std::uint64_t>(sc2_count(n))) return "count mismatch";
    return {};
  }));
  out.push_back(sweep("bijection.sc3_formula", 1, n_max, threads, [&](int n) -> std::string {
    if (counts3[static_cast<std::size_t>(n)] != static_cast<std::uint64_t>(sc3_count(n))) return "count mismatch";
    return {};
  }));

  std::vector<Partition> three_cores(static_cast<std::size_t>(n_max) + 1);
  for_each_sc_t_core(n_max, 3, [&](const DistinctOddPartition& lam) {
    three_cores[static_cast<std::size_t>(lam.size())] = distinct_odd_to_sc(lam);
  });
  CheckResult ctor{"bijection.three_core_constructors", true, {}};
  int checked = 0;
  for (int r = 1; r * (3 * r + 2) <= n_max || r * (3 * r - 2) <= n_max; ++r) {
    for (const auto& [size, built] : {std::pair{r * (3 * r - 2), three_core_minus(r)}, std::pair{r * (3 * r + 2), three_core_plus(r)}}) {
      if (size > n_max) continue;
      ++checked;
      if (built.size() != size || three_cores[static_cast<std::size_t>(size)] != built) {
        ctor.passed = false;
        ctor.detail = "r=" + std::to_string(r) + " size " + std::to_string(size);
      }
    }
  }
  if (ctor.passed) ctor.detail = std::to_string(checked) + " constructions";
  out.push_back(std::move(ctor));
}

void sc7_suite(std::vector<CheckResult>& out, int n_max, unsigned threads) {
  const auto brute = sc_t_counts_bruteforce(n_max, 7);
  out.push_back(sweep("sc7.bkm_equals_bruteforce", 1, n_max, threads, [&](int n) -> std::string {
    const std::uint64_t v = sc7_bkm(n);
    if (v != brute[static_cast<std::size_t>(n)]) {
      return "formula " + std::to_string(v) + " vs brute force " + std::to_string(brute[static_cast<std::size_t>(n)]);
    }
    return {};
  }));
  out.push_back(sweep("sc7.ono_raji_equals_bruteforce", 1, n_max, threads, [&](int n) -> std::string {
    if (!sc7_ono_raji_applies(n)) return {};
    const std::uint64_t v = sc7_ono_raji(n);
    if (v != brute[static_cast<std::size_t>(n)]) {
      return "formula " + std::to_string(v) + " vs brute force " + std::to_string(brute[static_cast<std::size_t>(n)]);
    }
    return {};
  }));
}

void supernorm_suite(std::vector<CheckResult>& out, int n_max, unsigned threads) {
  out.push_back(sweep("supernorm.roundtrip_partitions", 0, std::min(n_max, 25), threads, [](int n) -> std::string {
    for (const Partition& p : all_partitions(n)) {
      if (supernorm_inverse(supernorm(p).value) != p) return format_partition(p);
    }
    return {};
  }));
  out.push_back(sweep("supernorm.euler_pair", 1, std::min(n_max, 40), threads, [](int n) -> std::string {
    auto [a, b] = euler_count_pair(n);
    if (a != b) return std::to_string(a) + " vs " + std::to_string(b);
    return {};
  }));
  const int set_max = std::min(n_max, 120);
  for (int t : {2, 3, 5, 7}) {
    const auto brute = sc_t_counts_bruteforce(set_max, t);
    out.push_back(sweep("supernorm.core_set_size_t" + std::to_string(t), 1, set_max, threads, [&, t](int n) -> std::string {
      const auto set = t_core_supernorm_set(n, t);
      if (set.size() != brute[static_cast<std::size_t>(n)]) return std::to_string(set.size()) + " members";
      for (const auto& v : set) {
        if (!is_squarefree_odd_indexed(v) || supernorm_inverse(v).size() != n) return "bad member " + v.get_str();
      }
      return {};
    }));
  }
}

}  // namespace

std::vector<CheckResult> run_suite(std::string_view suite, int n_max, unsigned threads) {
  if (n_max < 0) throw Error(Errc::InvalidArgument, "n_max must be nonnegative");
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (!all && suite != "hooks" && suite != "bijection" && suite != "sc7" && suite != "supernorm") {
    throw Error(Errc::InvalidArgument, "unknown suite '" + std::string(suite) + "'");
  }
  if (all || suite == "hooks") hooks_suite(out, n_max, threads);
  if (all || suite == "bijection") bijection_suite(out, n_max, threads);
  if (all || suite == "sc7") sc7_suite(out, n_max, threads);
  if (all || suite == "supernorm") supernorm_suite(out, n_max, threads);
  return out;
}

}  // namespace corekit
