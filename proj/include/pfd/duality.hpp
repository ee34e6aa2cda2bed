#pragma once

#include <cstdint>

#include "pfd/lp.hpp"
#include "pfd/simplex.hpp"

namespace pfd {

struct WeakDuality {
  bool holds;  // always true for verified-feasible inputs
  Rat gap;     // l_D(beta) - l_P(alpha), exact
};

// Verifies both assignments are feasible (error names the violated row) and
// returns the exact duality gap.
WeakDuality check_weak_duality(const std::vector<Rat>& primal_feasible,
                               const std::vector<Rat>& dual_feasible,
                               std::uint64_t n);

// (2/3)(sigma(n)/n - 1): objective of the all-2/3 primal point.
Rat primal_lower_bound(std::uint64_t n);

// For beta attaining equality in every C(alpha_u) (checked, error names the
// slack row): sum_{u|n,u>1} 1/u - sum_{pairs} beta_{v,w}. Always equals the
// direct l_D(beta).
Rat restated_dual_objective(const std::vector<Rat>& beta, std::uint64_t n);

// Lifted-modulus bound (phi(N)/N)(1 + L_P^opt(N)) with N = auxiliary_modulus(n).N.
// Only usable when N fits the LP cap; L_P^opt(1) = 0 by convention.
Rat upper_bound_via_lp(std::uint64_t n);

// Same bound with N supplied directly.
Rat upper_bound_via_lp_at(std::uint64_t N);

}  // namespace pfd
