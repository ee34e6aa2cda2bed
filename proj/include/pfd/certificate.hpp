#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfd/factorization.hpp"
#include "pfd/sieve.hpp"

namespace pfd {

// Mass-shifted feasible point of the dual LP (D_N). Pair variables get
//   beta_{u,v} = 1/(uvA)  when u, v <= X and Omega(u) = Omega(v) = k,
// and the singleton beta_u keep every constraint C(alpha_u) tight. The
// weight A = max(binom(2k,k), 2 S_k, S_k + 1/2) is the least value for which
// all three nonnegativity case checks go through at finite X.
struct DualCertificate {
  std::uint64_t X;
  std::uint64_t k;
  Rat A;
  Rat S_k;  // sum 1/m over m <= X, Omega(m) = k
  Rat Q_k;  // sum 1/m^2 over the same class
  Factorization N;                          // symbolic; may be astronomically large
  std::vector<std::uint64_t> class_members;  // the m <= X with Omega(m) = k
  Rat pair_mass;  // sum of all beta_{u,v} = (S_k^2 + Q_k)/(2A)
  Rat objective;  // l_D(beta) = (sigma(N)/N - 1) - pair_mass
  bool feasible;
};

struct FeasibilityReport {
  bool feasible;
  std::vector<std::string> checks;  // one line per verified inequality
  std::string witness;              // failing divisor / inequality, if any
};

struct BoundReport {
  std::uint64_t n;
  std::uint64_t X;
  std::uint64_t k;
  Rat A;
  Rat certified_upper_bound_on_DN;  // exact (phi(N)/N)(1 + l_D(beta))
  Rat mertens_floor;                // certified lower bound of the Mertens product (0 if X < 2)
  double empirical_c;               // c realized by the chain, 1 - c/(log log n)... shape
  std::vector<std::string> trail;   // provenance of each inequality used
};

struct CertificateOverrides {
  std::optional<std::uint64_t> X;
  std::optional<std::uint64_t> k;
  std::optional<Factorization> N;
};

// Requires: every class member m and every class product uv divides N
// (error names a violator). k defaults to max(1, critical_k(X)).
DualCertificate build_certificate(std::uint64_t X,
                                  std::optional<std::uint64_t> k_override,
                                  const Factorization& N);

// Three exact checks: (i) A >= S_k + max_{class} 1/m; (ii) A >= binom(2k,k)/2;
// (iii) explicit beta_u >= 0 for every divisor u of N up to `divisor_budget`.
FeasibilityReport verify_feasibility(const DualCertificate& cert,
                                     std::uint64_t divisor_budget = 200'000);

// For N small enough to solve: materializes beta densely, feasibility-checks
// it against build_dual(N), and asserts l_D(beta) >= L_P^opt(N).
bool full_dual_check(const DualCertificate& cert, std::uint64_t n_small);

// Dense (D_N) assignment in build_dual(N) variable order.
std::vector<Rat> materialize_beta(const DualCertificate& cert, std::uint64_t N);

// The full chain: X = floor(log n), N auxiliary, k critical, certificate,
// then D(n) <= D(N) <= (phi(N)/N)(1 + l_D(beta)).
BoundReport density_upper_bound(std::uint64_t n,
                                const CertificateOverrides& overrides = {});

// Truncated mass-shift ceiling sum_{2<=u<=X, Omega(u) not in [k+1,2k]} 1/u;
// asserts pair_mass <= ceiling.
Rat mass_shift_ceiling(const DualCertificate& cert);

// Unitary-sum inequality: sum_{b||N, b>1} 1/b <= phi(N)/N, exact.
struct BstackCheck {
  Rat unitary_sum;
  Rat phi_over_n;
  bool holds;
};
BstackCheck bstack_check(const Factorization& N);

// Asymptotic-ratio monitor for the binomial weight (floats; never asserted).
struct MonitorRow {
  std::uint64_t X;
  std::uint64_t k;
  double binom_2k_k;
  double four_k_sqrt_k;   // 4^k / sqrt(k)
  double logx_power;      // (log X)^{(e/2)log 2} / sqrt(log log X)
  double loglog_k_fact;   // (log log X)^k / k!
  double s_k;             // sum 1/m over the Omega = k class
  double min_ratio;
  double max_ratio;
  bool in_window;
};
std::vector<MonitorRow> asymptotic_ratio_monitor(const std::vector<std::uint64_t>& X_grid,
                                        std::optional<std::uint64_t> k_override = {},
                                        double window_lo = 0.02,
                                        double window_hi = 50.0);

// Self-contained JSON round trip; the document carries everything an
// independent checker needs.
std::string certificate_to_json(const DualCertificate& cert);
DualCertificate certificate_from_json(const std::string& text);

// Re-verifies a parsed certificate from scratch: recomputes S_k, Q_k, the
// required minimal A, the objective, and runs verify_feasibility.
FeasibilityReport recheck_certificate(const DualCertificate& cert);

Int binomial(std::uint64_t n, std::uint64_t k);

}  // namespace pfd
