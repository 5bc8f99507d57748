#include "corekit/hooks.hpp"

#include <string>

#include "corekit/errors.hpp"

namespace corekit {

namespace {

[[noreturn]] void out_of_diagram(int row, int col) {
  throw Error(Errc::BoxOutOfDiagram,
              "box (" + std::to_string(row) + "," + std::to_string(col) + ") is not in the diagram");
}

void check_modulus(int t) {
  if (t < 1) throw Error(Errc::InvalidModulus, "t must be at least 1, got " + std::to_string(t));
}

// Hook below the Durfee square: row > k >= col.
int below_durfee_hook(const DistinctOddPartition& lam, int row, int col) {
  const int k = static_cast<int>(lam.length());
  int reaching = 0;
  for (int m = col; m <= k; ++m) {
    if (lam.part(static_cast<std::size_t>(m)) >= 2 * row - 2 * m + 1) ++reaching;
  }
  return (lam.part(static_cast<std::size_t>(col)) + 1) / 2 + col - row - 1 + reaching;
}

}  // namespace

HookTable::HookTable(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {}

std::size_t HookTable::entry_count() const noexcept {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

bool HookTable::contains(int row, int col) const noexcept {
  return row >= 1 && col >= 1 && static_cast<std::size_t>(row) <= rows_.size() &&
         static_cast<std::size_t>(col) <= rows_[static_cast<std::size_t>(row - 1)].size();
}

int HookTable::at(int row, int col) const {
  if (!contains(row, col)) out_of_diagram(row, col);
  return rows_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)];
}

int hook_length_naive(const Partition& p, int row, int col) {
  if (row < 1 || col < 1 || col > p.part(static_cast<std::size_t>(row))) out_of_diagram(row, col);
  const Partition conj = conjugate(p);
  const int arm = p.part(static_cast<std::size_t>(row)) - col;
  const int leg = conj.part(static_cast<std::size_t>(col)) - row;
  return arm + leg + 1;
}

HookTable hook_table(const Partition& p) {
  const Partition conj = conjugate(p);
  std::vector<std::vector<int>> rows(p.length());
  for (std::size_t i = 1; i <= p.length(); ++i) {
    const int len = p.part(i);
    auto& row = rows[i - 1];
    row.reserve(static_cast<std::size_t>(len));
    for (int j = 1; j <= len; ++j) {
      row.push_back((len - j) + (conj.part(static_cast<std::size_t>(j)) - static_cast<int>(i)) + 1);
    }
  }
  return HookTable(std::move(rows));
}

int hook_length_formula(const DistinctOddPartition& lam, int row, int col) {
  if (row < col) std::swap(row, col);
  const int k = static_cast<int>(lam.length());
  if (col < 1) out_of_diagram(row, col);
  if (row <= k) {
    return (lam.part(static_cast<std::size_t>(row)) + lam.part(static_cast<std::size_t>(col))) / 2;
  }
  if (col > k || lam.part(static_cast<std::size_t>(col)) < 2 * row - 2 * col + 1) out_of_diagram(row, col);
  return below_durfee_hook(lam, row, col);
}

TCoreResult is_t_core_naive(const Partition& p, int t) {
  check_modulus(t);
  const Partition conj = conjugate(p);
  for (std::size_t i = 1; i <= p.length(); ++i) {
    const int len = p.part(i);
    for (int j = 1; j <= len; ++j) {
      const int h = (len - j) + (conj.part(static_cast<std::size_t>(j)) - static_cast<int>(i)) + 1;
      if (h % t == 0) return {TCoreWitness{Box{static_cast<int>(i), j}, h}};
    }
  }
  return {};
}

TCoreResult is_t_core_sc(const DistinctOddPartition& lam, int t) {
  check_modulus(t);
  const int k = static_cast<int>(lam.length());
  for (int j = 1; j <= k; ++j) {
    for (int i = j; i <= k; ++i) {
      const int h = (lam.part(static_cast<std::size_t>(i)) + lam.part(static_cast<std::size_t>(j))) / 2;
      if (h % t == 0) return {TCoreWitness{Box{i, j}, h}};
    }
  }
  const int rows = (lam.part(1) + 1) / 2;
  for (int j = 1; j <= k; ++j) {
    for (int i = k + 1; i <= rows; ++i) {
      if (lam.part(static_cast<std::size_t>(j)) < 2 * i - 2 * j + 1) continue;
      const int h = below_durfee_hook(lam, i, j);
      if (h % t == 0) return {TCoreWitness{Box{i, j}, h}};
    }
  }
  return {};
}

std::optional<int> gap_criterion(const DistinctOddPartition& lam, int t) {
  check_modulus(t);
  for (std::size_t i = 1; i < lam.length(); ++i) {
    if (lam.part(i) - lam.part(i + 1) >= 2 * (t + 1)) return static_cast<int>(i);
  }
  return std::nullopt;
}

Box gap_witness_box(const DistinctOddPartition& lam, int gap_index, int t) {
  return Box{gap_index + (lam.part(static_cast<std::size_t>(gap_index)) - 1) / 2 - (t - 1), gap_index};
}

long sc_hook_calc_count(const DistinctOddPartition& lam) {
  return (lam.size() + static_cast<long>(lam.length())) / 2;
}

}  // namespace corekit
