#include "corekit/enumeration.hpp"

#include <memory>

#include "corekit/bijections.hpp"
#include "corekit/errors.hpp"
#include "corekit/hooks.hpp"

namespace corekit {

namespace {

bool allowed(PartKind kind, int p) {
  return (kind == PartKind::Odd || kind == PartKind::DistinctOdd) ? (p % 2 == 1) : true;
}

bool strict(PartKind kind) {
  return kind == PartKind::Distinct || kind == PartKind::DistinctOdd;
}

// Depth-first walk in lexicographically descending order. feasible_[r][m]
// says whether r can be completed with parts <= m; it keeps the walk from
// entering dead branches, so each pull costs O(n).
class RestrictedWalk {
 public:
  RestrictedWalk(int n, PartKind kind) : n_(n), kind_(kind) {
    if (n < 0) throw Error(Errc::InvalidArgument, "partition size must be nonnegative");
    const auto width = static_cast<std::size_t>(n) + 1;
    feasible_.assign(width, std::vector<char>(width, 0));
    for (int m = 0; m <= n; ++m) feasible_[0][static_cast<std::size_t>(m)] = 1;
    for (int r = 1; r <= n; ++r) {
      for (int m = 1; m <= n; ++m) {
        bool ok = feasible_[static_cast<std::size_t>(r)][static_cast<std::size_t>(m - 1)];
        if (!ok && m <= r && allowed(kind_, m)) ok = feasible_at(r - m, next_bound(m));
        feasible_[static_cast<std::size_t>(r)][static_cast<std::size_t>(m)] = ok;
      }
    }
  }

  std::optional<Partition> pull() {
    if (done_) return std::nullopt;
    if (!started_) {
      started_ = true;
      if (!feasible_at(n_, n_)) {
        done_ = true;
        return std::nullopt;
      }
      fill(n_, n_);
      return emit();
    }
    int remaining = 0;
    while (!parts_.empty()) {
      const int last = parts_.back();
      parts_.pop_back();
      remaining += last;
      for (int q = last - 1; q >= 1; --q) {
        if (allowed(kind_, q) && q <= remaining && feasible_at(remaining - q, next_bound(q))) {
          parts_.push_back(q);
          fill(remaining - q, next_bound(q));
          return emit();
        }
      }
    }
    done_ = true;
    return std::nullopt;
  }

 private:
  int next_bound(int p) const { return strict(kind_) ? p - 1 : p; }

  bool feasible_at(int r, int m) const {
    if (m < 0) return r == 0;
    if (m > n_) m = n_;
    return feasible_[static_cast<std::size_t>(r)][static_cast<std::size_t>(m)];
  }

  // Greedy largest completion of `remaining` with parts <= bound.
  void fill(int remaining, int bound) {
    while (remaining > 0) {
      for (int p = std::min(bound, remaining); p >= 1; --p) {
        if (allowed(kind_, p) && feasible_at(remaining - p, next_bound(p))) {
          parts_.push_back(p);
          remaining -= p;
          bound = next_bound(p);
          break;
        }
      }
    }
  }

  Partition emit() const { return Partition::from_parts(parts_); }

  int n_;
  PartKind kind_;
  std::vector<std::vector<char>> feasible_;
  std::vector<int> parts_;
  bool started_ = false;
  bool done_ = false;
};

void sc_core_dfs(std::vector<int>& ascending, long size, int n_max, int t,
                 const std::function<void(const DistinctOddPartition&)>& visit) {
  const int smallest_next = ascending.empty() ? 1 : ascending.back() + 2;
  for (int q = smallest_next; size + q <= n_max; q += 2) {
    ascending.push_back(q);
    DistinctOddPartition lam(Partition::from_parts(ascending));
    if (is_t_core_naive(distinct_odd_to_sc(lam), t).is_core()) {
      visit(lam);
      sc_core_dfs(ascending, size + q, n_max, t, visit);
    }
    ascending.pop_back();
  }
}

}  // namespace

Stream<Partition> restricted_partitions(int n, PartKind kind) {
  auto walk = std::make_shared<RestrictedWalk>(n, kind);
  return Stream<Partition>([walk] { return walk->pull(); });
}

Stream<DistinctOddPartition> distinct_odd_partitions(int n) {
  auto inner = std::make_shared<Stream<Partition>>(restricted_partitions(n, PartKind::DistinctOdd));
  return Stream<DistinctOddPartition>([inner]() -> std::optional<DistinctOddPartition> {
    auto p = inner->next();
    if (!p) return std::nullopt;
    return DistinctOddPartition(std::move(*p));
  });
}

Stream<Partition> self_conjugate_partitions(int n) {
  auto inner = std::make_shared<Stream<DistinctOddPartition>>(distinct_odd_partitions(n));
  return Stream<Partition>([inner]() -> std::optional<Partition> {
    auto lam = inner->next();
    if (!lam) return std::nullopt;
    return distinct_odd_to_sc(*lam);
  });
}

void for_each_sc_t_core(int n_max, int t, const std::function<void(const DistinctOddPartition&)>& visit) {
  if (t < 1) throw Error(Errc::InvalidModulus, "t must be at least 1");
  if (n_max < 0) return;
  // The empty partition has no hooks.
  visit(DistinctOddPartition());
  std::vector<int> ascending;
  sc_core_dfs(ascending, 0, n_max, t, visit);
}

std::vector<std::uint64_t> sc_t_counts_bruteforce(int n_max, int t) {
  if (n_max < 0) throw Error(Errc::InvalidArgument, "n_max must be nonnegative");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n_max) + 1, 0);
  for_each_sc_t_core(n_max, t, [&](const DistinctOddPartition& lam) { ++counts[static_cast<std::size_t>(lam.size())]; });
  return counts;
}

std::uint64_t sc_t_count_bruteforce(int n, int t) {
  return sc_t_counts_bruteforce(n, t).back();
}

std::uint64_t sc_t_count_filtered(int n, int t) {
  if (t < 1) throw Error(Errc::InvalidModulus, "t must be at least 1");
  std::uint64_t c = 0;
  for (const Partition& g : self_conjugate_partitions(n)) {
    if (is_t_core_naive(g, t).is_core()) ++c;
  }
  return c;
}

}  // namespace corekit
