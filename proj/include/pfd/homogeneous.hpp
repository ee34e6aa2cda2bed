#pragma once

#include <cstdint>
#include <vector>

#include "pfd/rational.hpp"

namespace pfd {

// Reciprocal sums over P-smooth integers grouped by Omega. With
// N_P = {integers whose prime factors all lie in P},
//   h[j] = sum over n in N_P with Omega(n) = j of 1/n,
// computed from the power sums p_i = sum_{p in P} 1/p^i by Newton's
// identities: j*h[j] = sum_{i=1..j} p_i * h[j-i].
struct HomogeneousSums {
  std::vector<std::uint64_t> primes;
  Rat s;                       // h[1] = sum 1/p
  std::vector<Rat> power_sums;  // power_sums[i-1] = sum 1/p^i
  std::vector<Rat> h;           // h[0..j_max]
};

// Default guard: exact rationals only up to 25 primes (denominators grow
// multiplicatively in |P|).
HomogeneousSums homogeneous_sums(const std::vector<std::uint64_t>& primes,
                                 std::uint64_t j_max, std::size_t prime_cap = 25);

// Float counterpart for large P (monitors only).
std::vector<double> homogeneous_sums_fp(const std::vector<std::uint64_t>& primes,
                                        std::uint64_t j_max);

// prod_{p in P} (1 - 1/p)^{-1} = sum of all h[j], j >= 0.
Rat smooth_full_product(const std::vector<std::uint64_t>& primes);

}  // namespace pfd
