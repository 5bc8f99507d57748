#pragma once

#include <cstdint>
#include <functional>
#include <iterator>
#include <optional>
#include <utility>
#include <vector>

#include "corekit/partition.hpp"

namespace corekit {

/// Single-pass lazy sequence, usable with range-for.
template <class T>
class Stream {
 public:
  using Pull = std::function<std::optional<T>()>;

  explicit Stream(Pull pull) : pull_(std::move(pull)) {}

  std::optional<T> next() { return pull_(); }

  class iterator {
   public:
    using value_type = T;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(Stream* s) : stream_(s) { ++*this; }

    const T& operator*() const { return *current_; }
    const T* operator->() const { return &*current_; }
    iterator& operator++() {
      current_ = stream_->next();
      return *this;
    }
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return !current_.has_value(); }

   private:
    Stream* stream_ = nullptr;
    std::optional<T> current_;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() { return {}; }

 private:
  Pull pull_;
};

enum class PartKind { Any, Distinct, Odd, DistinctOdd };

/// Partitions of n restricted by kind, lexicographically descending.
Stream<Partition> restricted_partitions(int n, PartKind kind);

inline Stream<Partition> all_partitions(int n) { return restricted_partitions(n, PartKind::Any); }
inline Stream<Partition> distinct_partitions(int n) { return restricted_partitions(n, PartKind::Distinct); }
inline Stream<Partition> odd_partitions(int n) { return restricted_partitions(n, PartKind::Odd); }
Stream<DistinctOddPartition> distinct_odd_partitions(int n);
/// Image of distinct_odd_partitions(n) under distinct_odd_to_sc.
Stream<Partition> self_conjugate_partitions(int n);

template <class T>
std::uint64_t count(Stream<T> s) {
  std::uint64_t c = 0;
  while (s.next()) ++c;
  return c;
}

/// Visits every self-conjugate t-core of size <= n_max exactly once, via its
/// distinct-odd partner. Each candidate is accepted by is_t_core_naive on the
/// self-conjugate partition. Removing the largest part of lam strips the first
/// row and column of gamma and keeps every other hook, so any extension of a
/// rejected candidate is also rejected and its subtree is skipped.
void for_each_sc_t_core(int n_max, int t, const std::function<void(const DistinctOddPartition&)>& visit);

/// sc_t(n) for every n in [0, n_max].
std::vector<std::uint64_t> sc_t_counts_bruteforce(int n_max, int t);
std::uint64_t sc_t_count_bruteforce(int n, int t);

/// Unpruned filter over self_conjugate_partitions(n); slow, kept as a cross-check.
std::uint64_t sc_t_count_filtered(int n, int t);

}  // namespace corekit
