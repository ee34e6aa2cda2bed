#pragma once

#include <cstdint>
#include <vector>

#include "pfd/factorization.hpp"
#include "pfd/rational.hpp"

namespace pfd {

// Subset of Z/nZ as a membership bitmap.
struct ResidueSet {
  std::uint64_t n = 0;
  std::vector<bool> bits;

  ResidueSet() = default;
  explicit ResidueSet(std::uint64_t modulus) : n(modulus), bits(modulus, false) {
    if (modulus == 0) throw PreconditionError("ResidueSet: modulus must be positive");
  }
  ResidueSet(std::uint64_t modulus, std::initializer_list<std::uint64_t> members)
      : ResidueSet(modulus) {
    for (auto a : members) insert(a);
  }

  bool contains(std::uint64_t a) const { return bits[a]; }
  void insert(std::uint64_t a) {
    if (a >= n) throw PreconditionError("ResidueSet: member out of range");
    bits[a] = true;
  }
  std::uint64_t size() const;
  std::vector<std::uint64_t> members() const;
  Rat density() const { return Rat(size(), n); }

  bool operator==(const ResidueSet&) const = default;
};

// True iff no a, b, c in S (a = b allowed) with a*b == c (mod n).
bool is_product_free(const ResidueSet& s);

// Normalized gcd-class occupancy: alpha[u] = |{a in S : gcd(a,n) = u}| / phi(n/u)
// for every divisor u of n, with gcd(0, n) = n.
struct GcdProfile {
  std::uint64_t n;
  std::vector<std::pair<std::uint64_t, Rat>> alpha;  // ascending by divisor

  Rat at(std::uint64_t u) const;
};
GcdProfile gcd_profile(const ResidueSet& s);

// S + {0, n, ..., (m-1)n} mod mn; rejects S that is not product-free and
// re-verifies the lifted set.
ResidueSet lift_set(const ResidueSet& s, std::uint64_t m);

}  // namespace pfd
