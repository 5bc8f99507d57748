#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace corekit {

/// An integer partition: parts are positive and stored in non-increasing
/// order. Immutable once constructed; the empty partition has size 0.
class Partition {
 public:
  Partition() = default;

  /// Sorts `parts` descending. Throws Errc::NonPositivePart on any entry <= 0.
  static Partition from_parts(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  long size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }

  /// 1-indexed part access; rows past the end have length 0.
  int part(std::size_t i) const noexcept {
    return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  long size_ = 0;
};

inline Partition make_partition(std::vector<int> parts) { return Partition::from_parts(std::move(parts)); }

Partition conjugate(const Partition& p);
bool is_self_conjugate(const Partition& p);
int durfee_side(const Partition& p);

/// Multiplicity form <1^m1, 2^m2, ...>; zero multiplicities are never stored.
class FrequencyForm {
 public:
  FrequencyForm() = default;
  /// Throws Errc::InvalidArgument on a non-positive part or multiplicity.
  explicit FrequencyForm(std::map<int, int> multiplicities);

  const std::map<int, int>& multiplicities() const noexcept { return mult_; }
  int multiplicity(int part) const;
  bool empty() const noexcept { return mult_.empty(); }

  friend bool operator==(const FrequencyForm&, const FrequencyForm&) = default;

 private:
  std::map<int, int> mult_;
};

FrequencyForm to_frequency(const Partition& p);
Partition from_frequency(const FrequencyForm& f);

/// A partition whose parts are odd and pairwise distinct.
class DistinctOddPartition {
 public:
  DistinctOddPartition() = default;
  /// Throws Errc::NotDistinctOdd unless every part is odd and strictly decreasing.
  explicit DistinctOddPartition(Partition p);

  const Partition& partition() const noexcept { return inner_; }
  std::span<const int> parts() const noexcept { return inner_.parts(); }
  std::size_t length() const noexcept { return inner_.length(); }
  long size() const noexcept { return inner_.size(); }
  int part(std::size_t i) const noexcept { return inner_.part(i); }

  friend bool operator==(const DistinctOddPartition&, const DistinctOddPartition&) = default;

 private:
  Partition inner_;
};

inline DistinctOddPartition make_distinct_odd(Partition p) { return DistinctOddPartition(std::move(p)); }
bool is_distinct_odd(const Partition& p) noexcept;

// Canonical text: "7,5,4,4,2,1,1". The empty partition prints as "()".
std::string format_partition(const Partition& p);
// Accepts plain parts and frequency tokens ("1^2,3"), in any order.
// Throws Errc::Parse on malformed text, Errc::NonPositivePart on parts <= 0.
Partition parse_partition(std::string_view text);

}  // namespace corekit
