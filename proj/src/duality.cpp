#include "pfd/duality.hpp"

#include "pfd/factorization.hpp"

namespace pfd {

WeakDuality check_weak_duality(const std::vector<Rat>& primal_feasible,
                               const std::vector<Rat>& dual_feasible,
                               std::uint64_t n) {
  LpModel p = build_primal(n);
  LpModel d = build_dual(n);
  if (long r = first_violated_row(p, primal_feasible); r >= 0)
    throw PreconditionError("weak duality: primal point violates " +
                            (static_cast<std::size_t>(r) < p.rows.size()
                                 ? p.rows[r].name
                                 : "nonnegativity"));
  if (long r = first_violated_row(d, dual_feasible); r >= 0)
    throw PreconditionError("weak duality: dual point violates " +
                            (static_cast<std::size_t>(r) < d.rows.size()
                                 ? d.rows[r].name
                                 : "nonnegativity"));
  Rat gap = objective_value(d, dual_feasible) - objective_value(p, primal_feasible);
  return {gap >= 0, gap};
}

Rat primal_lower_bound(std::uint64_t n) {
  if (n < 2) throw PreconditionError("primal_lower_bound: n must be >= 2");
  return Rat(2, 3) * (sigma_ratio(factorize(n)) - 1);
}

Rat restated_dual_objective(const std::vector<Rat>& beta, std::uint64_t n) {
  LpModel d = build_dual(n);
  if (beta.size() != d.vars.size())
    throw PreconditionError("restated_dual_objective: assignment size mismatch");
  if (long r = first_violated_row(d, beta); r >= 0)
    throw PreconditionError("restated_dual_objective: assignment infeasible");
  Rat divisor_sum = 0, pair_sum = 0;
  for (std::size_t r = 0; r < d.rows.size(); ++r) {
    Rat lhs = 0;
    for (const auto& [j, c] : d.rows[r].coeffs) lhs += c * beta[j];
    if (lhs != d.rows[r].rhs)
      throw VerificationError("restated_dual_objective: slack in " + d.rows[r].name);
  }
  for (std::size_t i = 0; i < d.vars.size(); ++i) {
    if (d.vars[i].is_pair())
      pair_sum += beta[i];
    else
      divisor_sum += Rat(1, d.vars[i].u);
  }
  Rat restated = divisor_sum - pair_sum;
  if (restated != objective_value(d, beta))
    throw VerificationError("restated_dual_objective: evaluation paths disagree");
  return restated;
}

Rat upper_bound_via_lp_at(std::uint64_t N) {
  if (N == 0) throw PreconditionError("upper_bound_via_lp: N must be positive");
  if (N == 1) return 1;  // L_P^opt(1) = 0 for the empty program
  Rat lp_opt = solve(build_primal(N)).objective_value;
  return phi_ratio(factorize(N)) * (1 + lp_opt);
}

Rat upper_bound_via_lp(std::uint64_t n) {
  auto aux = auxiliary_modulus(n);
  if (aux.X == 0) return 1;
  Int N = aux.N.value();
  if (N > Int(UINT64_MAX))
    throw PreconditionError("upper_bound_via_lp: N exceeds the LP size cap");
  return upper_bound_via_lp_at(N.convert_to<std::uint64_t>());
}

}  // namespace pfd
