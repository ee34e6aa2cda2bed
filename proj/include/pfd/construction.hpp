#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pfd/factorization.hpp"
#include "pfd/residue_set.hpp"

namespace pfd {

// Lower-bound family mod n_x = ell_x^2: residues whose gcd with n_x is a
// divisor u of ell_x with lo <= Omega(u) <= hi. 2*lo > hi makes the family
// product-free structurally: products of members land in gcd classes with
// Omega >= 2*lo > hi.
struct IntervalFamily {
  std::uint64_t x;
  Factorization ell_x;
  Factorization n_x;
  std::uint64_t lo, hi;
  std::vector<std::uint64_t> allowed;  // divisors u of ell_x with Omega in [lo,hi]
  Rat density;                         // (phi(n_x)/n_x) * sum_{allowed} 1/u
};

IntervalFamily build_family(std::uint64_t x, std::uint64_t lo, std::uint64_t hi);

// Valuation-level product-freeness proof: for every ordered pair of allowed
// classes, no prime caps (v_p(u)+v_p(v) <= v_p(n_x)), hence the product class
// is exactly uv, and Omega(uv) >= 2*lo > hi keeps it outside the family.
struct StructuralProof {
  bool valid;
  std::vector<std::string> transcript;
  std::string digest;  // FNV-1a over the transcript lines
  Rat off_lattice_mass;  // exact mass of classes u not dividing ell_x
  Rat pi_over_x;         // its pi(x)/x majorant
};
StructuralProof verify_product_free_structural(const IntervalFamily& fam,
                                               std::size_t pair_budget = 1'000'000);

// Materializes the family as an actual residue set (n_x must fit memory).
ResidueSet materialize(const IntervalFamily& fam, std::uint64_t cap = 10'000'000);

struct LowerBoundComparison {
  Rat family_density;
  Rat formula_rhs;  // 1 - pi(x)/x - (phi/n) sum_{d | ell_x, Omega(d) not in [lo,hi]} 1/d
  bool holds;     // family_density >= formula_rhs, exact
};
LowerBoundComparison lower_bound_formula(std::uint64_t x, std::uint64_t lo,
                                         std::uint64_t hi);

// sum over x-smooth d with Omega(d) outside the open interval (k, 2k) of 1/d,
// as full product minus the inside-h_j slice. Exact for pi(x) <= 25 primes;
// float beyond. ratio_to_target compares against
// (log x)^{(e/2)log 2}/sqrt(log log x).
struct BetterestSum {
  bool exact;
  Rat value_exact;
  double value_fp;
  double ratio_to_target;
};
BetterestSum betterest_sum(std::uint64_t x, std::uint64_t k);

// sum over x-smooth n with Omega(n) >= J of 1/n; monitored against (log x)^0.8.
struct TailSum {
  bool exact;
  Rat value_exact;
  double value_fp;
  double ratio_to_monitor;
};
TailSum tail_sum(std::uint64_t x, std::uint64_t J);

std::string family_to_json(const IntervalFamily& fam);

}  // namespace pfd
