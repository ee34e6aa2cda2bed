#pragma once

#include <cstdint>
#include <vector>

#include "pfd/rational.hpp"

namespace pfd {

// Ordered prime factorization. Primes strictly increasing, exponents >= 1;
// the empty list represents 1. Exponents are kept separate from values so a
// factorization can describe integers far too large to enumerate (the
// auxiliary modulus N below is the motivating case).
struct Factorization {
  struct Pair {
    std::uint64_t prime;
    std::uint64_t exponent;
    bool operator==(const Pair&) const = default;
  };
  std::vector<Pair> pairs;

  bool operator==(const Factorization&) const = default;

  // Exponent of p (0 when p does not occur).
  std::uint64_t valuation(std::uint64_t p) const;

  // The represented integer. May be astronomically large; callers that only
  // need ratios should use phi_ratio/sigma_ratio instead.
  Int value() const;
};

struct ArithFunctions {
  Int phi;
  Int sigma;
  Int rad;
  std::uint64_t omega;
  std::uint64_t big_omega;
};

Factorization factorize(std::uint64_t n);
Factorization factorize(const Int& n);

ArithFunctions arithmetic_functions(const Factorization& f);

// phi(n)/n and sigma(n)/n straight from the exponent data.
Rat phi_ratio(const Factorization& f);
Rat sigma_ratio(const Factorization& f);

// All divisors of the represented integer, ascending. Refuses to enumerate
// more than `cap` divisors.
std::vector<Int> divisors(const Factorization& f, std::size_t cap = 1u << 20);

// ell_x = lcm(1..x): every prime p <= x at exponent floor(log_p x).
Factorization lcm_upto(std::uint64_t x);

// Auxiliary lifted modulus: X = floor(log n), N = (n prod_{p<=X} p)^X.
struct AuxiliaryModulus {
  std::uint64_t X;
  Factorization N;
};
AuxiliaryModulus auxiliary_modulus(std::uint64_t n);

// Unitary-divisor reciprocal sum: sum over b || N, b > 1 of 1/b, exact.
Rat unitary_reciprocal_sum(const Factorization& f);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t euler_phi_u64(std::uint64_t n);

}  // namespace pfd
