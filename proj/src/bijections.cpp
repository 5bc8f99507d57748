#include "corekit/bijections.hpp"

#include <map>
#include <string>

#include "corekit/errors.hpp"

namespace corekit {

DistinctOddPartition sc_to_distinct_odd(const Partition& g) {
  if (!is_self_conjugate(g)) {
    throw Error(Errc::NotSelfConjugate, "partition is not self-conjugate: " + format_partition(g));
  }
  // Diagonal hook at (i, i) of a symmetric diagram: arm = leg = g_i - i.
  std::vector<int> parts;
  const int d = durfee_side(g);
  for (int i = 1; i <= d; ++i) parts.push_back(2 * (g.part(static_cast<std::size_t>(i)) - i) + 1);
  return DistinctOddPartition(Partition::from_parts(std::move(parts)));
}

Partition distinct_odd_to_sc(const DistinctOddPartition& lam) {
  const int k = static_cast<int>(lam.length());
  const int rows = (lam.part(1) + 1) / 2;
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(rows));
  for (int i = 1; i <= rows; ++i) {
    int len = 0;
    // One box per earlier hook whose leg reaches down to row i.
    for (int m = 1; m <= k && m < i; ++m) {
      if (m + (lam.part(static_cast<std::size_t>(m)) - 1) / 2 >= i) ++len;
    }
    // Corner plus arm of the hook centred on this row.
    if (i <= k) len += (lam.part(static_cast<std::size_t>(i)) + 1) / 2;
    parts.push_back(len);
  }
  return Partition::from_parts(std::move(parts));
}

Partition perfectly_triangular(int k) {
  if (k < 1) throw Error(Errc::InvalidArgument, "perfectly_triangular needs k >= 1");
  std::vector<int> parts;
  for (int v = k; v >= 1; --v) parts.push_back(v);
  return Partition::from_parts(std::move(parts));
}

namespace {

// <1^2, ..., (r-1)^2, r^{head}, odd steps from tail_first to tail_last>
Partition robbins_shape(int r, int head, int tail_first, int tail_last) {
  if (r < 1) throw Error(Errc::InvalidArgument, "3-core constructors need r >= 1");
  std::map<int, int> mult;
  for (int v = 1; v < r; ++v) mult[v] = 2;
  mult[r] += head;
  for (int v = tail_first; v <= tail_last; v += 2) mult[v] += 1;
  return from_frequency(FrequencyForm(std::move(mult)));
}

}  // namespace

Partition three_core_minus(int r) {
  return robbins_shape(r, 0, r, 3 * r - 2);
}

Partition three_core_plus(int r) {
  return robbins_shape(r, 2, r + 2, 3 * r);
}

}  // namespace corekit
