#include "pfd/construction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "pfd/homogeneous.hpp"
#include "pfd/sieve.hpp"

namespace pfd {

IntervalFamily build_family(std::uint64_t x, std::uint64_t lo, std::uint64_t hi) {
  if (x < 2) throw PreconditionError("build_family: x must be >= 2");
  if (lo < 1 || 2 * lo <= hi)
    throw PreconditionError("build_family: interval must satisfy 2*lo > hi, lo >= 1");
  IntervalFamily fam;
  fam.x = x;
  fam.lo = lo;
  fam.hi = hi;
  fam.ell_x = lcm_upto(x);
  fam.n_x = fam.ell_x;
  for (auto& pe : fam.n_x.pairs) pe.exponent *= 2;

  Rat recip = 0;
  for (const Int& d : divisors(fam.ell_x)) {
    if (d == 1) continue;
    std::uint64_t om = arithmetic_functions(factorize(d)).big_omega;
    if (om < lo || om > hi) continue;
    if (d > Int(UINT64_MAX))
      throw PreconditionError("build_family: divisor exceeds 64-bit range");
    fam.allowed.push_back(d.convert_to<std::uint64_t>());
    recip += Rat(1) / Rat(d);
  }
  fam.density = phi_ratio(fam.n_x) * recip;
  return fam;
}

namespace {

std::string fnv1a(const std::vector<std::string>& lines) {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& s : lines)
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ull;
    }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace

StructuralProof verify_product_free_structural(const IntervalFamily& fam,
                                               std::size_t pair_budget) {
  StructuralProof proof;
  proof.valid = true;

  bool per_pair = fam.allowed.size() * fam.allowed.size() <= pair_budget;
  for (std::uint64_t u : fam.allowed) {
    Factorization uf = factorize(u);
    for (std::uint64_t v : fam.allowed) {
      Factorization vf = factorize(v);
      // (a) no capping: valuations of uv stay within n_x = ell_x^2.
      bool no_cap = true;
      for (const auto& pe : uf.pairs)
        if (pe.exponent + vf.valuation(pe.prime) > fam.n_x.valuation(pe.prime))
          no_cap = false;
      for (const auto& pe : vf.pairs)
        if (pe.exponent + uf.valuation(pe.prime) > fam.n_x.valuation(pe.prime))
          no_cap = false;
      std::uint64_t om = arithmetic_functions(uf).big_omega +
                         arithmetic_functions(vf).big_omega;
      bool excluded = om > fam.hi;
      if (!no_cap || !excluded) {
        proof.valid = false;
        proof.transcript.push_back("FAIL pair u=" + std::to_string(u) +
                                   " v=" + std::to_string(v));
      } else if (per_pair) {
        std::ostringstream os;
        os << "u=" << u << " v=" << v << ": gcd class of products is uv=" << u
           << "*" << v << ", Omega=" << om << " > hi=" << fam.hi << ", excluded";
        proof.transcript.push_back(os.str());
      }
    }
  }
  if (!per_pair)
    proof.transcript.push_back("pair transcript elided (" +
                               std::to_string(fam.allowed.size()) +
                               "^2 pairs over budget); aggregate checks only");

  // The classes u not dividing ell_x carry total mass
  // 1 - (phi(n_x)/n_x) sigma(ell_x)/ell_x, majorized by pi(x)/x.
  proof.off_lattice_mass = 1 - phi_ratio(fam.n_x) * sigma_ratio(fam.ell_x);
  proof.pi_over_x = Rat(prime_pi(fam.x), fam.x);
  {
    std::ostringstream os;
    os << "off-lattice class mass " << proof.off_lattice_mass
       << " <= pi(x)/x = " << proof.pi_over_x;
    proof.transcript.push_back(os.str());
  }
  if (proof.off_lattice_mass > proof.pi_over_x) proof.valid = false;

  proof.digest = fnv1a(proof.transcript);
  return proof;
}

ResidueSet materialize(const IntervalFamily& fam, std::uint64_t cap) {
  Int n_big = fam.n_x.value();
  if (n_big > Int(cap))
    throw PreconditionError("materialize: n_x exceeds the materialization cap");
  std::uint64_t n = n_big.convert_to<std::uint64_t>();
  std::unordered_set<std::uint64_t> allowed(fam.allowed.begin(), fam.allowed.end());
  ResidueSet s(n);
  for (std::uint64_t a = 1; a < n; ++a)
    if (allowed.count(gcd_u64(a, n))) s.insert(a);
  return s;
}

LowerBoundComparison lower_bound_formula(std::uint64_t x, std::uint64_t lo,
                                         std::uint64_t hi) {
  IntervalFamily fam = build_family(x, lo, hi);
  Rat outside = 0;  // sum over d | ell_x with Omega(d) outside [lo,hi], d = 1 included
  for (const Int& d : divisors(fam.ell_x)) {
    std::uint64_t om = d == 1 ? 0 : arithmetic_functions(factorize(d)).big_omega;
    if (om >= lo && om <= hi) continue;
    outside += Rat(1) / Rat(d);
  }
  LowerBoundComparison cmp;
  cmp.family_density = fam.density;
  cmp.formula_rhs = 1 - Rat(prime_pi(x), x) - phi_ratio(fam.n_x) * outside;
  cmp.holds = cmp.family_density >= cmp.formula_rhs;
  return cmp;
}

BetterestSum betterest_sum(std::uint64_t x, std::uint64_t k) {
  auto ps = primes_upto(x);
  if (ps.empty()) throw PreconditionError("betterest_sum: no primes up to x");
  BetterestSum out;
  double lx = std::log(static_cast<double>(x));
  double target = std::pow(lx, (std::exp(1.0) / 2.0) * std::log(2.0)) /
                  std::sqrt(std::max(std::log(lx), 1e-9));
  std::uint64_t j_lo = k + 1, j_hi = 2 * k - 1;  // open interval (k, 2k)
  if (ps.size() <= 25) {
    out.exact = true;
    Rat full = smooth_full_product(ps);
    Rat inside = 0;
    if (k >= 1 && j_hi >= j_lo) {
      auto h = homogeneous_sums(ps, j_hi);
      for (std::uint64_t j = j_lo; j <= j_hi; ++j) inside += h.h[j];
    }
    out.value_exact = full - inside;
    out.value_fp = to_double(out.value_exact);
  } else {
    out.exact = false;
    double full = 1;
    for (auto p : ps) full *= static_cast<double>(p) / (p - 1);
    double inside = 0;
    if (k >= 1 && j_hi >= j_lo) {
      auto h = homogeneous_sums_fp(ps, j_hi);
      for (std::uint64_t j = j_lo; j <= j_hi; ++j) inside += h[j];
    }
    out.value_fp = full - inside;
  }
  out.ratio_to_target = out.value_fp / target;
  return out;
}

TailSum tail_sum(std::uint64_t x, std::uint64_t J) {
  auto ps = primes_upto(x);
  if (ps.empty()) throw PreconditionError("tail_sum: no primes up to x");
  TailSum out;
  if (ps.size() <= 25) {
    out.exact = true;
    Rat full = smooth_full_product(ps);
    Rat head = 0;
    if (J > 0) {
      auto h = homogeneous_sums(ps, J - 1);
      for (std::uint64_t j = 0; j < J; ++j) head += h.h[j];
    }
    out.value_exact = full - head;
    out.value_fp = to_double(out.value_exact);
  } else {
    out.exact = false;
    double full = 1;
    for (auto p : ps) full *= static_cast<double>(p) / (p - 1);
    double head = 0;
    if (J > 0) {
      auto h = homogeneous_sums_fp(ps, J - 1);
      for (std::uint64_t j = 0; j < J; ++j) head += h[j];
    }
    out.value_fp = full - head;
  }
  out.ratio_to_monitor =
      out.value_fp / std::pow(std::log(static_cast<double>(x)), 0.8);
  return out;
}

std::string family_to_json(const IntervalFamily& fam) {
  StructuralProof proof = verify_product_free_structural(fam);
  nlohmann::json j{{"x", fam.x},
                   {"lo", fam.lo},
                   {"hi", fam.hi},
                   {"ell_x", fam.ell_x.value().str()},
                   {"n_x", fam.n_x.value().str()},
                   {"allowed", fam.allowed},
                   {"density", to_string(fam.density)},
                   {"transcript_digest", proof.digest},
                   {"structurally_product_free", proof.valid}};
  return j.dump(2);
}

}  // namespace pfd
