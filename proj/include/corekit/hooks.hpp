#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "corekit/partition.hpp"

namespace corekit {

/// Box coordinates in a Young diagram, 1-indexed (row, column).
struct Box {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Box&, const Box&) = default;
};

/// Hook length of every box of a Young diagram, laid out row by row.
class HookTable {
 public:
  HookTable() = default;
  explicit HookTable(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  std::size_t num_rows() const noexcept { return rows_.size(); }
  std::size_t entry_count() const noexcept;
  /// 1-indexed lookup; throws Errc::BoxOutOfDiagram outside the diagram.
  int at(int row, int col) const;
  bool contains(int row, int col) const noexcept;

  friend bool operator==(const HookTable&, const HookTable&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// A box whose hook length is divisible by t.
struct TCoreWitness {
  Box box;
  int hook = 0;
  friend bool operator==(const TCoreWitness&, const TCoreWitness&) = default;
};

struct TCoreResult {
  std::optional<TCoreWitness> witness;
  bool is_core() const noexcept { return !witness.has_value(); }
};

/// arm + leg + 1 by walking the diagram. Throws Errc::BoxOutOfDiagram.
int hook_length_naive(const Partition& p, int row, int col);
HookTable hook_table(const Partition& p);

/// Hook length of box (row, col) of the self-conjugate partition paired with
/// `lam`, computed from the parts of `lam` alone. The box is mirrored to
/// row >= col first. Throws Errc::BoxOutOfDiagram.
int hook_length_formula(const DistinctOddPartition& lam, int row, int col);

/// Scans row-major and reports the first hook divisible by t.
/// Throws Errc::InvalidModulus if t < 1.
TCoreResult is_t_core_naive(const Partition& p, int t);

/// Same decision for the self-conjugate partition paired with `lam`, using
/// only the parts of `lam`. Durfee-square pairs are checked first, then the
/// boxes below the Durfee square; in both families the column j is the outer
/// loop. Witness boxes satisfy row >= col.
TCoreResult is_t_core_sc(const DistinctOddPartition& lam, int t);

/// Smallest i (1-indexed) with lam_i - lam_{i+1} >= 2(t+1), if any.
std::optional<int> gap_criterion(const DistinctOddPartition& lam, int t);

/// The box (i + (lam_i - 1)/2 - (t - 1), i) whose hook is exactly t when
/// gap_criterion returned i.
Box gap_witness_box(const DistinctOddPartition& lam, int gap_index, int t);

/// (|lam| + l(lam)) / 2: boxes on or below the main diagonal.
long sc_hook_calc_count(const DistinctOddPartition& lam);

}  // namespace corekit
