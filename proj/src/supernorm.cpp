#include "corekit/supernorm.hpp"

#include <set>

#include "corekit/bijections.hpp"
#include "corekit/enumeration.hpp"
#include "corekit/errors.hpp"
#include "corekit/hooks.hpp"

namespace corekit {

PrimeIndexer& PrimeIndexer::global() {
  static PrimeIndexer instance;
  return instance;
}

std::size_t PrimeIndexer::cached() const {
  std::shared_lock lock(mutex_);
  return primes_.size();
}

std::uint64_t PrimeIndexer::nth(std::size_t i) {
  if (i < 1) throw Error(Errc::InvalidArgument, "prime index must be at least 1");
  {
    std::shared_lock lock(mutex_);
    if (i <= primes_.size()) return primes_[i - 1];
  }
  extend_to(i);
  std::shared_lock lock(mutex_);
  return primes_[i - 1];
}

void PrimeIndexer::extend_to(std::size_t count) {
  std::unique_lock lock(mutex_);
  for (std::uint64_t candidate = primes_.back() + 2; primes_.size() < count; candidate += 2) {
    bool prime = true;
    for (std::uint64_t p : primes_) {
      if (p * p > candidate) break;
      if (candidate % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes_.push_back(candidate);
  }
}

std::uint64_t nth_prime(std::size_t i) {
  return PrimeIndexer::global().nth(i);
}

SupernormImage supernorm(const Partition& p) {
  SupernormImage image;
  const FrequencyForm freq = to_frequency(p);
  for (auto [part, mult] : freq.multiplicities()) {
    image.factor_indices[part] = mult;
    mpz_class factor;
    mpz_ui_pow_ui(factor.get_mpz_t(), nth_prime(static_cast<std::size_t>(part)), static_cast<unsigned long>(mult));
    image.value *= factor;
  }
  return image;
}

namespace {

constexpr std::uint64_t kMaxIndexablePrime = std::uint64_t{1} << 40;

std::map<int, int> factor_indices(const mpz_class& n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "supernorm_inverse needs a positive integer");
  std::map<int, int> out;
  mpz_class rest = n;
  for (std::size_t idx = 1; rest != 1; ++idx) {
    const std::uint64_t p = nth_prime(idx);
    const mpz_class pz(static_cast<unsigned long>(p));
    if (pz * pz > rest) {
      // rest is prime; keep walking the table until it shows up.
      if (rest > static_cast<unsigned long>(kMaxIndexablePrime)) {
        throw Error(Errc::InvalidArgument, "prime factor " + rest.get_str() + " is too large to index");
      }
      const std::uint64_t target = rest.get_ui();
      while (nth_prime(idx) != target) ++idx;
      out[static_cast<int>(idx)] += 1;
      break;
    }
    while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(p))) {
      rest /= pz;
      out[static_cast<int>(idx)] += 1;
    }
  }
  return out;
}

}  // namespace

Partition supernorm_inverse(const mpz_class& n) {
  return from_frequency(FrequencyForm(factor_indices(n)));
}

bool is_squarefree_odd_indexed(const mpz_class& n) {
  for (auto [idx, exp] : factor_indices(n)) {
    if (exp != 1 || idx % 2 == 0) return false;
  }
  return true;
}

std::pair<std::uint64_t, std::uint64_t> euler_count_pair(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "euler_count_pair needs n >= 1");
  auto squarefree = [](const mpz_class& v) {
    for (auto [idx, exp] : factor_indices(v)) {
      if (exp != 1) return false;
    }
    return true;
  };
  auto odd_indexed = [](const mpz_class& v) {
    for (auto [idx, exp] : factor_indices(v)) {
      if (idx % 2 == 0) return false;
    }
    return true;
  };
  std::set<mpz_class> distinct_images;
  for (const Partition& p : distinct_partitions(n)) {
    mpz_class v = supernorm(p).value;
    if (squarefree(v)) distinct_images.insert(std::move(v));
  }
  std::set<mpz_class> odd_images;
  for (const Partition& p : odd_partitions(n)) {
    mpz_class v = supernorm(p).value;
    if (odd_indexed(v)) odd_images.insert(std::move(v));
  }
  return {distinct_images.size(), odd_images.size()};
}

std::pair<mpz_class, mpz_class> two_core_supernorm_pair(int k) {
  const Partition gamma = perfectly_triangular(k);
  return {supernorm(gamma).value, supernorm(sc_to_distinct_odd(gamma).partition()).value};
}

std::vector<mpz_class> t_core_supernorm_set(int n, int t) {
  if (n < 1 || t < 2) throw Error(Errc::InvalidArgument, "t_core_supernorm_set needs n >= 1 and t >= 2");
  std::vector<mpz_class> out;
  for (const DistinctOddPartition& lam : distinct_odd_partitions(n)) {
    if (is_t_core_sc(lam, t).is_core()) out.push_back(supernorm(lam.partition()).value);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace corekit
