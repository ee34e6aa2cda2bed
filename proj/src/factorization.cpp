#include "pfd/factorization.hpp"

#include <algorithm>
#include <numeric>

#include "pfd/floors.hpp"

namespace pfd {

std::uint64_t Factorization::valuation(std::uint64_t p) const {
  for (const auto& pe : pairs)
    if (pe.prime == p) return pe.exponent;
  return 0;
}

Int Factorization::value() const {
  Int v = 1;
  for (const auto& pe : pairs) v *= boost::multiprecision::pow(Int(pe.prime), static_cast<unsigned>(pe.exponent));
  return v;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw PreconditionError("factorize: n must be positive");
  Factorization f;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    std::uint64_t e = 0;
    while (n % p == 0) n /= p, ++e;
    f.pairs.push_back({p, e});
  }
  if (n > 1) f.pairs.push_back({n, 1});
  return f;
}

Factorization factorize(const Int& n) {
  if (n <= 0 || n > Int(UINT64_MAX))
    throw PreconditionError("factorize: out of supported range");
  return factorize(n.convert_to<std::uint64_t>());
}

ArithFunctions arithmetic_functions(const Factorization& f) {
  ArithFunctions r{1, 1, 1, f.pairs.size(), 0};
  for (const auto& pe : f.pairs) {
    Int p(pe.prime);
    Int pe1 = boost::multiprecision::pow(p, static_cast<unsigned>(pe.exponent - 1));
    r.phi *= pe1 * (p - 1);
    // sigma = (p^{e+1} - 1)/(p - 1)
    r.sigma *= (pe1 * p * p - 1) / (p - 1);
    r.rad *= p;
    r.big_omega += pe.exponent;
  }
  return r;
}

Rat phi_ratio(const Factorization& f) {
  Rat r = 1;
  for (const auto& pe : f.pairs) r *= Rat(pe.prime - 1, pe.prime);
  return r;
}

Rat sigma_ratio(const Factorization& f) {
  Rat r = 1;
  for (const auto& pe : f.pairs) {
    Int p(pe.prime);
    Int pk = boost::multiprecision::pow(p, static_cast<unsigned>(pe.exponent));
    r *= Rat(pk * p - 1, pk * (p - 1));
  }
  return r;
}

std::vector<Int> divisors(const Factorization& f, std::size_t cap) {
  std::size_t count = 1;
  for (const auto& pe : f.pairs) {
    count *= pe.exponent + 1;
    if (count > cap) throw PreconditionError("divisors: count exceeds cap");
  }
  std::vector<Int> ds{1};
  for (const auto& pe : f.pairs) {
    std::size_t sz = ds.size();
    Int pk = 1;
    for (std::uint64_t e = 1; e <= pe.exponent; ++e) {
      pk *= pe.prime;
      for (std::size_t i = 0; i < sz; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

Factorization lcm_upto(std::uint64_t x) {
  if (x == 0) throw PreconditionError("lcm_upto: x must be positive");
  Factorization f;
  for (std::uint64_t p = 2; p <= x; ++p) {
    if (factorize(p).pairs.size() != 1 || factorize(p).pairs[0].exponent != 1) continue;
    std::uint64_t e = 1, pk = p;
    while (pk <= x / p) pk *= p, ++e;
    f.pairs.push_back({p, e});
  }
  return f;
}

AuxiliaryModulus auxiliary_modulus(std::uint64_t n) {
  if (n == 0) throw PreconditionError("auxiliary_modulus: n must be positive");
  std::uint64_t X = floor_log(n);
  Factorization nf = factorize(n);
  Factorization N;
  if (X == 0) return {0, N};
  // v_p(N) = X*(v_p(n)+1) for p <= X, and X*v_p(n) for p | n with p > X.
  for (std::uint64_t p = 2; p <= X; ++p) {
    if (factorize(p).pairs.size() != 1 || factorize(p).pairs[0].exponent != 1) continue;
    N.pairs.push_back({p, X * (nf.valuation(p) + 1)});
  }
  for (const auto& pe : nf.pairs)
    if (pe.prime > X) N.pairs.push_back({pe.prime, X * pe.exponent});
  std::sort(N.pairs.begin(), N.pairs.end(),
            [](const auto& a, const auto& b) { return a.prime < b.prime; });
  return {X, N};
}

Rat unitary_reciprocal_sum(const Factorization& f) {
  // sum_{b || N, b > 1} 1/b = prod_p (1 + p^{-e_p}) - 1
  Rat prod = 1;
  for (const auto& pe : f.pairs) {
    Int pk = boost::multiprecision::pow(Int(pe.prime), static_cast<unsigned>(pe.exponent));
    prod *= Rat(pk + 1, pk);
  }
  return prod - 1;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t euler_phi_u64(std::uint64_t n) {
  std::uint64_t r = 1;
  for (const auto& pe : factorize(n).pairs) {
    std::uint64_t pk = 1;
    for (std::uint64_t e = 1; e < pe.exponent; ++e) pk *= pe.prime;
    r *= pk * (pe.prime - 1);
  }
  return r;
}

}  // namespace pfd
