#pragma once

#include "corekit/partition.hpp"

namespace corekit {

/// Diagonal hooks of a self-conjugate partition. Throws Errc::NotSelfConjugate.
DistinctOddPartition sc_to_distinct_odd(const Partition& g);

/// Folds each part lam_i into a hook with corner (i, i) and arm = leg = (lam_i - 1)/2.
Partition distinct_odd_to_sc(const DistinctOddPartition& lam);

/// (k, k-1, ..., 1). Throws Errc::InvalidArgument if k < 1.
Partition perfectly_triangular(int k);

/// Self-conjugate 3-cores of size r(3r-2) and r(3r+2) respectively.
Partition three_core_minus(int r);
Partition three_core_plus(int r);

}  // namespace corekit
