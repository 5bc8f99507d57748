#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "corekit/partition.hpp"

namespace corekit {

/// Growable table of primes, p_1 = 2. Safe for concurrent use; extension
/// appends only, so earlier entries never change.
class PrimeIndexer {
 public:
  static PrimeIndexer& global();

  /// The i-th prime, 1-indexed. Throws Errc::InvalidArgument if i < 1.
  std::uint64_t nth(std::size_t i);
  std::size_t cached() const;

 private:
  void extend_to(std::size_t count);

  mutable std::shared_mutex mutex_;
  std::vector<std::uint64_t> primes_{2, 3, 5, 7, 11, 13};
};

std::uint64_t nth_prime(std::size_t i);

struct SupernormImage {
  mpz_class value{1};
  std::map<int, int> factor_indices;  // prime index -> exponent
};

/// prod p_i^{m_i} where m_i is the multiplicity of part i.
SupernormImage supernorm(const Partition& p);

/// Trial division over the prime table. Throws Errc::InvalidArgument if n < 1
/// or if the remaining cofactor is a prime too large to index (> 2^40).
Partition supernorm_inverse(const mpz_class& n);

bool is_squarefree_odd_indexed(const mpz_class& n);

/// Number of distinct supernorm images of distinct-part and odd-part partitions of n.
std::pair<std::uint64_t, std::uint64_t> euler_count_pair(int n);

/// (N(perfectly_triangular(k)), N(its distinct-odd partner)).
std::pair<mpz_class, mpz_class> two_core_supernorm_pair(int k);

/// Sorted supernorms of distinct-odd partitions of n whose self-conjugate
/// partners are t-cores.
std::vector<mpz_class> t_core_supernorm_set(int n, int t);

}  // namespace corekit
