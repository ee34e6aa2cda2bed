#pragma once

#include <cstdint>
#include <vector>

#include "pfd/rational.hpp"

namespace pfd {

// Table of Omega(m) = number of prime factors with multiplicity for
// 2 <= m <= limit. Built by a linear smallest-prime-factor sieve up to the
// segmenting threshold and by a segmented divide-out sieve above it; never by
// per-element factorization.
class OmegaSieve {
 public:
  static constexpr std::uint64_t kDefaultCap = 100'000'000;
  static constexpr std::uint64_t kSegmentThreshold = 10'000'000;

  explicit OmegaSieve(std::uint64_t limit, std::uint64_t cap = kDefaultCap);

  // Adopts a precomputed table (cache loads); spot-checked against a fresh
  // sieve over a sample window before use.
  static OmegaSieve from_table(std::uint64_t limit, std::vector<std::uint8_t> table);

  std::uint64_t limit() const { return limit_; }
  std::uint8_t big_omega(std::uint64_t m) const { return table_[m]; }
  const std::vector<std::uint8_t>& table() const { return table_; }

 private:
  std::uint64_t limit_;
  std::vector<std::uint8_t> table_;
};

struct ReciprocalSums {
  Rat S;  // sum of 1/m   over 2 <= m <= X with Omega(m) = k
  Rat Q;  // sum of 1/m^2 over the same range
};

// Exact restricted reciprocal sums; balanced-tree summation keeps the
// rational merges near-linear in output size.
ReciprocalSums restricted_reciprocal_sums(const OmegaSieve& sieve, std::uint64_t k);

// Float counterpart for the asymptotic monitors.
double restricted_reciprocal_sum_fp(const OmegaSieve& sieve, std::uint64_t k);

// Smallest m <= X with Omega(m) = k (so 1/m is the class maximum), or 0 if
// the class is empty.
std::uint64_t min_in_omega_class(const OmegaSieve& sieve, std::uint64_t k);

std::uint64_t prime_pi(std::uint64_t x);

std::vector<std::uint64_t> primes_upto(std::uint64_t x);

}  // namespace pfd
