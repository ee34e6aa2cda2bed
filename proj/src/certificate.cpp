#include "pfd/certificate.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pfd/duality.hpp"
#include "pfd/floors.hpp"
#include "pfd/lp.hpp"
#include "pfd/simplex.hpp"

namespace pfd {

using nlohmann::json;

Int binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  Int r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

std::uint64_t default_k(std::uint64_t X) {
  if (X < 3) return 1;
  return std::max<std::uint64_t>(1, critical_k(X));
}

// beta_u for an explicit divisor u of N, from the sparse pair rule.
Rat explicit_beta(const DualCertificate& c, const Int& u_big,
                  const Factorization& N) {
  Rat beta = Rat(1) / Rat(u_big);

  if (u_big <= Int(c.X)) {
    std::uint64_t u = u_big.convert_to<std::uint64_t>();
    Factorization uf = factorize(u);
    if (arithmetic_functions(uf).big_omega == c.k) {
      // Starred sum over v in the class with uv | N, v = u counted twice.
      Rat t = 0;
      for (std::uint64_t v : c.class_members) {
        Factorization vf = factorize(v);
        bool divides = true;
        for (const auto& pe : vf.pairs)
          if (uf.valuation(pe.prime) + pe.exponent > N.valuation(pe.prime)) {
            divides = false;
            break;
          }
        for (const auto& pe : uf.pairs)
          if (pe.exponent + vf.valuation(pe.prime) > N.valuation(pe.prime)) {
            divides = false;
            break;
          }
        if (!divides) continue;
        t += Rat(1, v);
        if (v == u) t += Rat(1, v);  // starred doubling
      }
      beta -= t / (Rat(u) * c.A);
    }
  }

  // Contributions of pair variables via factorizations u = v*w with v, w in
  // the class. Such u never exceed X^2.
  if (u_big <= Int(c.X) * Int(c.X)) {
    std::uint64_t u = u_big.convert_to<std::uint64_t>();
    Rat t = 0;
    for (std::uint64_t v : c.class_members) {
      if (v * v > u) break;
      if (u % v) continue;
      std::uint64_t w = u / v;
      if (w <= c.X && std::binary_search(c.class_members.begin(),
                                         c.class_members.end(), w))
        t += Rat(1);
    }
    beta -= t / (Rat(u) * c.A);
  }
  return beta;
}

}  // namespace

DualCertificate build_certificate(std::uint64_t X,
                                  std::optional<std::uint64_t> k_override,
                                  const Factorization& N) {
  if (X < 2) throw PreconditionError("build_certificate: X must be >= 2");
  std::uint64_t k = k_override ? *k_override : default_k(X);
  if (k == 0) throw PreconditionError("build_certificate: k must be >= 1");

  OmegaSieve sieve(X);
  DualCertificate cert;
  cert.X = X;
  cert.k = k;
  cert.N = N;
  for (std::uint64_t m = 2; m <= X; ++m)
    if (sieve.big_omega(m) == k) cert.class_members.push_back(m);

  // Divisibility preconditions: every class member and every class product
  // must divide N. Per prime it suffices that twice the maximal valuation in
  // the class stays below v_p(N).
  for (std::uint64_t m : cert.class_members)
    for (const auto& pe : factorize(m).pairs) {
      if (2 * pe.exponent > N.valuation(pe.prime)) {
        throw PreconditionError(
            "build_certificate: class product " + std::to_string(m) + "*" +
            std::to_string(m) + " does not divide N");
      }
    }
  // Cross products u*v: valuations add across distinct members too; check the
  // per-prime sum of the two largest valuations in the class.
  {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t m : cert.class_members)
      for (const auto& pe : factorize(m).pairs) primes.push_back(pe.prime);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (std::uint64_t p : primes) {
      std::uint64_t top1 = 0, top2 = 0;
      for (std::uint64_t m : cert.class_members) {
        std::uint64_t v = factorize(m).valuation(p);
        if (v >= top1) {
          top2 = top1;
          top1 = v;
        } else {
          top2 = std::max(top2, v);
        }
      }
      if (top1 + top2 > N.valuation(p))
        throw PreconditionError("build_certificate: a class product with prime " +
                                std::to_string(p) + " does not divide N");
    }
  }

  auto sums = restricted_reciprocal_sums(sieve, k);
  cert.S_k = sums.S;
  cert.Q_k = sums.Q;
  cert.A = Rat(binomial(2 * k, k));
  cert.A = std::max(cert.A, Rat(2 * cert.S_k));
  cert.A = std::max(cert.A, Rat(cert.S_k + Rat(1, 2)));
  cert.pair_mass = (cert.S_k * cert.S_k + cert.Q_k) / (2 * cert.A);
  cert.objective = (sigma_ratio(N) - 1) - cert.pair_mass;
  cert.feasible = verify_feasibility(cert).feasible;
  return cert;
}

FeasibilityReport verify_feasibility(const DualCertificate& cert,
                                     std::uint64_t divisor_budget) {
  FeasibilityReport rep{true, {}, ""};
  auto fail = [&](const std::string& w) {
    rep.feasible = false;
    rep.witness = w;
  };

  // (i) exact starred-sum bound: A >= S_k + max_{class} 1/m.
  if (!cert.class_members.empty()) {
    Rat need = cert.S_k + Rat(1, cert.class_members.front());
    std::ostringstream os;
    os << "check(i): A = " << cert.A << " >= S_k + 1/min = " << need;
    rep.checks.push_back(os.str());
    if (cert.A < need) fail("check(i) " + os.str());
  } else {
    rep.checks.push_back("check(i): empty class, trivially holds");
  }

  // (ii) partition count bound: A >= binom(2k,k)/2.
  {
    Rat need = Rat(binomial(2 * cert.k, cert.k)) / 2;
    std::ostringstream os;
    os << "check(ii): A = " << cert.A << " >= binom(2k,k)/2 = " << need;
    rep.checks.push_back(os.str());
    if (cert.A < need) fail("check(ii) " + os.str());
  }

  // (iii) explicit beta_u over the enumerable divisors of N.
  std::vector<Int> ds;
  bool truncated = false;
  try {
    ds = divisors(cert.N, divisor_budget);
  } catch (const PreconditionError&) {
    // Too many divisors to enumerate: restrict to divisors not exceeding X^2,
    // which covers every u the pair rule can touch (u <= X and products <= X^2).
    truncated = true;
    Int cap = Int(cert.X) * Int(cert.X);
    std::vector<Int> partial{1};
    for (const auto& pe : cert.N.pairs) {
      std::size_t sz = partial.size();
      Int pk = 1;
      for (std::uint64_t e = 1; e <= pe.exponent; ++e) {
        pk *= pe.prime;
        if (pk > cap) break;
        for (std::size_t i = 0; i < sz; ++i)
          if (partial[i] * pk <= cap) partial.push_back(partial[i] * pk);
      }
    }
    std::sort(partial.begin(), partial.end());
    ds = std::move(partial);
  }
  std::size_t checked = 0;
  for (const Int& u : ds) {
    if (u == 1) continue;
    Rat beta = explicit_beta(cert, u, cert.N);
    ++checked;
    if (beta < 0) {
      std::ostringstream os;
      os << "check(iii): beta_u < 0 at u = " << u << " (beta = " << beta << ")";
      rep.checks.push_back(os.str());
      fail(os.str());
      break;
    }
  }
  {
    std::ostringstream os;
    os << "check(iii): " << checked << " explicit beta_u >= 0"
       << (truncated ? " (divisors truncated to u <= X^2; beyond, the case analysis applies)"
                     : "")
       << "; constraints C(alpha_u) tight by construction";
    rep.checks.push_back(os.str());
  }
  return rep;
}

std::vector<Rat> materialize_beta(const DualCertificate& cert, std::uint64_t N) {
  LpModel d = build_dual(N);
  Factorization nf = factorize(N);
  auto in_class = [&](std::uint64_t m) {
    return std::find(cert.class_members.begin(), cert.class_members.end(), m) !=
           cert.class_members.end();
  };
  std::vector<Rat> beta(d.vars.size(), Rat(0));
  for (std::size_t i = 0; i < d.vars.size(); ++i) {
    const LpVar& v = d.vars[i];
    if (v.is_pair()) {
      if (v.u <= cert.X && v.pair_v <= cert.X && in_class(v.u) && in_class(v.pair_v))
        beta[i] = Rat(1) / (Rat(v.u) * Rat(v.pair_v) * cert.A);
    } else {
      beta[i] = explicit_beta(cert, Int(v.u), nf);
    }
  }
  return beta;
}

bool full_dual_check(const DualCertificate& cert, std::uint64_t n_small) {
  LpModel d = build_dual(n_small);
  auto beta = materialize_beta(cert, n_small);
  if (long r = first_violated_row(d, beta); r >= 0)
    throw VerificationError(
        "full_dual_check: materialized beta violates " +
        (static_cast<std::size_t>(r) < d.rows.size() ? d.rows[r].name
                                                     : "nonnegativity"));
  Rat ld = objective_value(d, beta);
  Rat lp_opt = solve(build_primal(n_small)).objective_value;
  if (ld < lp_opt)
    throw VerificationError("full_dual_check: l_D(beta) < L_P^opt(N)");
  return true;
}

namespace {

Rat mertens_floor_rat(std::uint64_t X) {
  if (X < 2) return 0;
  // Lower bound of (1/(3 e^gamma log X)) (1 - 1/log^2 X), directed rounding.
  mpfr_t g, l, t;
  mpfr_init2(g, 192);
  mpfr_init2(l, 192);
  mpfr_init2(t, 192);
  mpfr_const_euler(g, MPFR_RNDU);
  mpfr_exp(g, g, MPFR_RNDU);
  mpfr_set_ui(l, X, MPFR_RNDN);
  mpfr_log(l, l, MPFR_RNDU);
  mpfr_mul(t, g, l, MPFR_RNDU);
  mpfr_mul_ui(t, t, 3, MPFR_RNDU);
  mpfr_ui_div(t, 1, t, MPFR_RNDD);  // 1/(3 e^gamma log X), rounded down
  mpfr_t u;
  mpfr_init2(u, 192);
  mpfr_set_ui(u, X, MPFR_RNDN);
  mpfr_log(u, u, MPFR_RNDD);
  mpfr_sqr(u, u, MPFR_RNDD);
  mpfr_ui_div(u, 1, u, MPFR_RNDU);
  mpfr_ui_sub(u, 1, u, MPFR_RNDD);    // 1 - 1/log^2 X, rounded down
  mpfr_mul(t, t, u, MPFR_RNDD);
  mpq_t q;
  mpq_init(q);
  mpfr_get_q(q, t);
  Rat out(q);
  mpq_clear(q);
  mpfr_clear(g);
  mpfr_clear(l);
  mpfr_clear(t);
  mpfr_clear(u);
  return out;
}

}  // namespace

BoundReport density_upper_bound(std::uint64_t n, const CertificateOverrides& ov) {
  if (n < 2) throw PreconditionError("density_upper_bound: n must be >= 2");
  BoundReport rep;
  rep.n = n;
  rep.X = ov.X ? *ov.X : floor_log(n);
  Factorization N = ov.N ? *ov.N : auxiliary_modulus(n).N;
  rep.trail.push_back("D(n) <= D(N) for n | N (lifting of product-free sets)");

  if (rep.X <= 1) {
    // The chain degenerates: N = n (X = 1) or N = 1, and the LP bound applies
    // directly.
    rep.k = 0;
    rep.A = 0;
    rep.certified_upper_bound_on_DN = upper_bound_via_lp(n);
    rep.mertens_floor = 0;
    rep.trail.push_back("X <= 1: exact LP bound (phi(N)/N)(1 + L_P^opt(N))");
  } else {
    std::uint64_t k = ov.k ? *ov.k : default_k(rep.X);
    DualCertificate cert = build_certificate(rep.X, k, N);
    if (!cert.feasible)
      throw VerificationError("density_upper_bound: certificate infeasible");
    rep.k = cert.k;
    rep.A = cert.A;
    rep.certified_upper_bound_on_DN = phi_ratio(N) * (1 + cert.objective);
    rep.mertens_floor = mertens_floor_rat(rep.X);
    rep.trail.push_back("beta feasible for (D_N), so l_D(beta) >= L_P^opt(N)");
    rep.trail.push_back("D(N) <= (phi(N)/N)(1 + L_P^opt(N)) <= (phi(N)/N)(1 + l_D(beta))");
    rep.trail.push_back("phi(N)/N > (1/(3 e^gamma log X))(1 - 1/log^2 X) [reported]");
  }

  // Constant c realized by this bound in the 1 - c/(log log n)... shape.
  rep.empirical_c = 0;
  if (n >= 20 && rep.certified_upper_bound_on_DN < 1) {
    double lln = std::log(std::log(static_cast<double>(n)));
    double llln = std::log(lln);
    if (llln > 0) {
      double expo = 1.0 - (std::exp(1.0) / 2.0) * std::log(2.0);
      rep.empirical_c = (1.0 - to_double(rep.certified_upper_bound_on_DN)) *
                        std::pow(lln, expo) * std::sqrt(llln);
      rep.trail.push_back("empirical c: (1 - bound) (log log n)^{1-(e/2)log2} sqrt(log log log n)");
    }
  }
  return rep;
}

Rat mass_shift_ceiling(const DualCertificate& cert) {
  OmegaSieve sieve(cert.X);
  std::vector<std::uint64_t> ms;
  for (std::uint64_t m = 2; m <= cert.X; ++m) {
    std::uint64_t om = sieve.big_omega(m);
    if (om < cert.k + 1 || om > 2 * cert.k) ms.push_back(m);
  }
  Rat ceiling = 0;
  for (std::uint64_t m : ms) ceiling += Rat(1, m);
  if (cert.pair_mass > ceiling)
    throw VerificationError("mass_shift_ceiling: pair mass exceeds the ceiling");
  return ceiling;
}

BstackCheck bstack_check(const Factorization& N) {
  BstackCheck c;
  c.unitary_sum = unitary_reciprocal_sum(N);
  c.phi_over_n = phi_ratio(N);
  c.holds = c.unitary_sum <= c.phi_over_n;
  return c;
}

std::vector<MonitorRow> asymptotic_ratio_monitor(const std::vector<std::uint64_t>& grid,
                                        std::optional<std::uint64_t> k_override,
                                        double window_lo, double window_hi) {
  std::vector<MonitorRow> rows;
  for (std::uint64_t X : grid) {
    MonitorRow r;
    r.X = X;
    r.k = k_override ? *k_override : default_k(X);
    double k = static_cast<double>(r.k);
    double lx = std::log(static_cast<double>(X));
    double llx = std::log(lx);
    r.binom_2k_k = to_double(Rat(binomial(2 * r.k, r.k)));
    r.four_k_sqrt_k = std::pow(4.0, k) / std::sqrt(k);
    r.logx_power = std::pow(lx, (std::exp(1.0) / 2.0) * std::log(2.0)) / std::sqrt(llx);
    r.loglog_k_fact = std::pow(llx, k) / std::tgamma(k + 1);
    OmegaSieve sieve(X);
    r.s_k = restricted_reciprocal_sum_fp(sieve, r.k);
    double qs[] = {r.binom_2k_k, r.four_k_sqrt_k, r.logx_power, r.loglog_k_fact, r.s_k};
    r.min_ratio = 1e300;
    r.max_ratio = 0;
    for (double a : qs)
      for (double b : qs) {
        if (b == 0) continue;
        r.min_ratio = std::min(r.min_ratio, a / b);
        r.max_ratio = std::max(r.max_ratio, a / b);
      }
    r.in_window = r.min_ratio >= window_lo && r.max_ratio <= window_hi;
    rows.push_back(r);
  }
  return rows;
}

namespace {

json fact_to_json(const Factorization& f) {
  json a = json::array();
  for (const auto& pe : f.pairs) a.push_back({pe.prime, pe.exponent});
  return a;
}

Factorization fact_from_json(const json& a) {
  Factorization f;
  for (const auto& pe : a) f.pairs.push_back({pe[0].get<std::uint64_t>(), pe[1].get<std::uint64_t>()});
  return f;
}

}  // namespace

std::string certificate_to_json(const DualCertificate& cert) {
  FeasibilityReport rep = verify_feasibility(cert);
  json j{{"format", "pfd-certificate"},
         {"version", 1},
         {"X", cert.X},
         {"k", cert.k},
         {"A", to_string(cert.A)},
         {"S_k", to_string(cert.S_k)},
         {"Q_k", to_string(cert.Q_k)},
         {"N", fact_to_json(cert.N)},
         {"pair_rule", "beta_{u,v} = 1/(uvA) when u,v <= X and Omega(u)=Omega(v)=k, else 0"},
         {"beta_u_rule", "beta_u = 1/u minus the pair mass entering C(alpha_u)"},
         {"pair_mass", to_string(cert.pair_mass)},
         {"objective", to_string(cert.objective)},
         {"feasible", cert.feasible},
         {"transcript", rep.checks}};
  return j.dump(2);
}

DualCertificate certificate_from_json(const std::string& text) {
  json j = json::parse(text);
  if (j.value("format", "") != "pfd-certificate" || j.value("version", 0) != 1)
    throw PreconditionError("certificate_from_json: not a pfd-certificate v1 document");
  DualCertificate c;
  c.X = j.at("X").get<std::uint64_t>();
  c.k = j.at("k").get<std::uint64_t>();
  c.A = parse_rat(j.at("A").get<std::string>());
  c.S_k = parse_rat(j.at("S_k").get<std::string>());
  c.Q_k = parse_rat(j.at("Q_k").get<std::string>());
  c.N = fact_from_json(j.at("N"));
  c.pair_mass = parse_rat(j.at("pair_mass").get<std::string>());
  c.objective = parse_rat(j.at("objective").get<std::string>());
  c.feasible = j.at("feasible").get<bool>();
  OmegaSieve sieve(c.X);
  for (std::uint64_t m = 2; m <= c.X; ++m)
    if (sieve.big_omega(m) == c.k) c.class_members.push_back(m);
  return c;
}

FeasibilityReport recheck_certificate(const DualCertificate& cert) {
  FeasibilityReport rep{true, {}, ""};
  OmegaSieve sieve(cert.X);
  auto sums = restricted_reciprocal_sums(sieve, cert.k);
  if (sums.S != cert.S_k || sums.Q != cert.Q_k) {
    rep.feasible = false;
    rep.witness = "recheck: stored S_k/Q_k disagree with the sieve";
    return rep;
  }
  Rat pair_mass = (cert.S_k * cert.S_k + cert.Q_k) / (2 * cert.A);
  if (pair_mass != cert.pair_mass) {
    rep.feasible = false;
    rep.witness = "recheck: stored pair mass disagrees with (S_k^2+Q_k)/(2A)";
    return rep;
  }
  Rat obj = (sigma_ratio(cert.N) - 1) - pair_mass;
  if (obj != cert.objective) {
    rep.feasible = false;
    rep.witness = "recheck: stored objective disagrees with (sigma(N)/N-1) - pair mass";
    return rep;
  }
  rep = verify_feasibility(cert);
  rep.checks.insert(rep.checks.begin(), "recheck: S_k, Q_k, pair mass, objective reproduced");
  return rep;
}

}  // namespace pfd
