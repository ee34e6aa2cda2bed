#pragma once

#include <cstdint>
#include <vector>

#include "pfd/lp.hpp"

namespace pfd {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status;
  std::vector<Rat> assignment;  // parallel to model.vars
  Rat objective_value;          // in the model's own sense
  std::vector<std::size_t> basis;
  std::uint64_t pivot_count;
};

// Exact rational two-phase primal simplex with Bland's anti-cycling rule.
// Deterministic: identical model gives identical basis and pivot count.
LpSolution solve(const LpModel& model);

}  // namespace pfd
