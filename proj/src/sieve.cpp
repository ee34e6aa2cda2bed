#include "pfd/sieve.hpp"

#include <algorithm>
#include <cmath>

namespace pfd {

namespace {

std::vector<std::uint64_t> simple_primes(std::uint64_t x) {
  std::vector<bool> comp(x + 1, false);
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p <= x; ++p) {
    if (comp[p]) continue;
    ps.push_back(p);
    for (std::uint64_t m = p * p; m <= x; m += p) comp[m] = true;
  }
  return ps;
}

}  // namespace

OmegaSieve::OmegaSieve(std::uint64_t limit, std::uint64_t cap) : limit_(limit) {
  if (limit < 2) throw PreconditionError("OmegaSieve: limit must be >= 2");
  if (limit > cap) throw PreconditionError("OmegaSieve: limit exceeds configured cap");
  table_.assign(limit + 1, 0);

  if (limit <= kSegmentThreshold) {
    // Linear sieve on the smallest prime factor: Omega(m) = Omega(m/spf) + 1.
    std::vector<std::uint32_t> spf(limit + 1, 0);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t m = 2; m <= limit; ++m) {
      if (spf[m] == 0) {
        spf[m] = static_cast<std::uint32_t>(m);
        primes.push_back(static_cast<std::uint32_t>(m));
      }
      table_[m] = table_[m / spf[m]] + 1;
      for (std::uint32_t p : primes) {
        if (p > spf[m] || m * p > limit) break;
        spf[m * p] = p;
      }
    }
    return;
  }

  // Segmented: for each block, divide out all primes <= sqrt(limit); a
  // remainder > 1 is a single large prime factor.
  std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  auto ps = simple_primes(root);
  constexpr std::uint64_t kBlock = 1u << 20;
  std::vector<std::uint64_t> rem(kBlock);
  for (std::uint64_t lo = 2; lo <= limit; lo += kBlock) {
    std::uint64_t hi = std::min(lo + kBlock - 1, limit);
    for (std::uint64_t m = lo; m <= hi; ++m) rem[m - lo] = m;
    for (std::uint64_t p : ps) {
      for (std::uint64_t m = ((lo + p - 1) / p) * p; m <= hi; m += p) {
        std::uint64_t& r = rem[m - lo];
        while (r % p == 0) {
          r /= p;
          ++table_[m];
        }
      }
    }
    for (std::uint64_t m = lo; m <= hi; ++m)
      if (rem[m - lo] > 1) ++table_[m];
  }
}

OmegaSieve OmegaSieve::from_table(std::uint64_t limit, std::vector<std::uint8_t> table) {
  if (table.size() != limit + 1)
    throw PreconditionError("OmegaSieve::from_table: size mismatch");
  std::uint64_t window = std::min<std::uint64_t>(limit, 1000);
  OmegaSieve probe(std::max<std::uint64_t>(window, 2));
  for (std::uint64_t m = 2; m <= window; ++m)
    if (table[m] != probe.big_omega(m))
      throw VerificationError("OmegaSieve::from_table: table fails spot check");
  OmegaSieve out(2);
  out.limit_ = limit;
  out.table_ = std::move(table);
  return out;
}

namespace {

// Balanced merge of sum(1/m) and sum(1/m^2) over members[first..last).
ReciprocalSums sum_range(const std::vector<std::uint64_t>& ms, std::size_t first,
                         std::size_t last) {
  if (first == last) return {0, 0};
  if (last - first == 1) {
    Int m(ms[first]);
    return {Rat(1, m), Rat(1, m * m)};
  }
  std::size_t mid = first + (last - first) / 2;
  auto a = sum_range(ms, first, mid);
  auto b = sum_range(ms, mid, last);
  return {a.S + b.S, a.Q + b.Q};
}

std::vector<std::uint64_t> omega_class(const OmegaSieve& sieve, std::uint64_t k) {
  std::vector<std::uint64_t> ms;
  for (std::uint64_t m = 2; m <= sieve.limit(); ++m)
    if (sieve.big_omega(m) == k) ms.push_back(m);
  return ms;
}

}  // namespace

ReciprocalSums restricted_reciprocal_sums(const OmegaSieve& sieve, std::uint64_t k) {
  auto ms = omega_class(sieve, k);
  return sum_range(ms, 0, ms.size());
}

double restricted_reciprocal_sum_fp(const OmegaSieve& sieve, std::uint64_t k) {
  double s = 0;
  for (std::uint64_t m = 2; m <= sieve.limit(); ++m)
    if (sieve.big_omega(m) == k) s += 1.0 / static_cast<double>(m);
  return s;
}

std::uint64_t min_in_omega_class(const OmegaSieve& sieve, std::uint64_t k) {
  for (std::uint64_t m = 2; m <= sieve.limit(); ++m)
    if (sieve.big_omega(m) == k) return m;
  return 0;
}

std::uint64_t prime_pi(std::uint64_t x) {
  if (x < 2) return 0;
  return primes_upto(x).size();
}

std::vector<std::uint64_t> primes_upto(std::uint64_t x) {
  if (x < 2) return {};
  return simple_primes(x);
}

}  // namespace pfd
