#include "pfd/homogeneous.hpp"

#include <algorithm>
#include <cmath>

namespace pfd {

HomogeneousSums homogeneous_sums(const std::vector<std::uint64_t>& primes,
                                 std::uint64_t j_max, std::size_t prime_cap) {
  if (primes.empty()) throw PreconditionError("homogeneous_sums: P must be non-empty");
  if (primes.size() > prime_cap)
    throw PreconditionError("homogeneous_sums: |P| exceeds exact-arithmetic cap");
  HomogeneousSums out;
  out.primes = primes;
  std::sort(out.primes.begin(), out.primes.end());

  out.power_sums.resize(j_max);
  for (std::uint64_t i = 1; i <= j_max; ++i) {
    Rat pi = 0;
    for (std::uint64_t p : out.primes)
      pi += Rat(1, boost::multiprecision::pow(Int(p), static_cast<unsigned>(i)));
    out.power_sums[i - 1] = pi;
  }
  out.s = j_max >= 1 ? out.power_sums[0] : [&] {
    Rat s = 0;
    for (std::uint64_t p : out.primes) s += Rat(1, p);
    return s;
  }();

  out.h.resize(j_max + 1);
  out.h[0] = 1;
  for (std::uint64_t j = 1; j <= j_max; ++j) {
    Rat acc = 0;
    for (std::uint64_t i = 1; i <= j; ++i) acc += out.power_sums[i - 1] * out.h[j - i];
    out.h[j] = acc / j;
  }
  return out;
}

std::vector<double> homogeneous_sums_fp(const std::vector<std::uint64_t>& primes,
                                        std::uint64_t j_max) {
  if (primes.empty()) throw PreconditionError("homogeneous_sums_fp: P must be non-empty");
  std::vector<double> power(j_max + 1, 0.0), h(j_max + 1, 0.0);
  for (std::uint64_t i = 1; i <= j_max; ++i)
    for (std::uint64_t p : primes) power[i] += std::pow(static_cast<double>(p), -static_cast<double>(i));
  h[0] = 1.0;
  for (std::uint64_t j = 1; j <= j_max; ++j) {
    double acc = 0;
    for (std::uint64_t i = 1; i <= j; ++i) acc += power[i] * h[j - i];
    h[j] = acc / static_cast<double>(j);
  }
  return h;
}

Rat smooth_full_product(const std::vector<std::uint64_t>& primes) {
  Rat prod = 1;
  for (std::uint64_t p : primes) prod *= Rat(p, p - 1);
  return prod;
}

}  // namespace pfd
