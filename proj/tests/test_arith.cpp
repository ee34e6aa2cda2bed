#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <map>
#include <random>

#include "pfd/factorization.hpp"
#include "pfd/floors.hpp"
#include "pfd/homogeneous.hpp"
#include "pfd/rational.hpp"
#include "pfd/sieve.hpp"

using namespace pfd;

namespace {

// Direct-count oracle for phi, independent of the factorization path.
std::uint64_t phi_by_count(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t a = 1; a <= n; ++a)
    if (gcd_u64(a, n) == 1) ++c;
  return c;
}

// Divisor-scan oracle for sigma.
std::uint64_t sigma_by_scan(std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) s += d;
  return s;
}

// Repeated-division oracle for Omega.
std::uint64_t big_omega_by_division(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      n /= p;
      ++c;
    }
  return c + (n > 1 ? 1 : 0);
}

}  // namespace

TEST_CASE("factorize round-trips and orders primes") {
  for (std::uint64_t n : {1ull, 2ull, 12ull, 97ull, 360ull, 1ull << 32, 999'999'937ull}) {
    auto f = factorize(n);
    CHECK(f.value() == Int(n));
    for (std::size_t i = 1; i < f.pairs.size(); ++i)
      CHECK(f.pairs[i - 1].prime < f.pairs[i].prime);
    for (const auto& [p, e] : f.pairs) CHECK(e >= 1);
  }
  CHECK(factorize(std::uint64_t{1}).pairs.empty());
}

TEST_CASE("arithmetic functions match direct-count oracles") {
  std::mt19937_64 rng(7);
  std::vector<std::uint64_t> panel;
  for (std::uint64_t n = 1; n <= 200; ++n) panel.push_back(n);
  for (int i = 0; i < 60; ++i) panel.push_back(rng() % 10'000 + 1);
  for (auto n : panel) {
    auto af = arithmetic_functions(factorize(n));
    CHECK(af.phi == Int(phi_by_count(n)));
    CHECK(af.sigma == Int(sigma_by_scan(n)));
    CHECK(af.big_omega == big_omega_by_division(n));
    CHECK(euler_phi_u64(n) == phi_by_count(n));
  }
}

TEST_CASE("ratio helpers agree with the integer functions") {
  for (std::uint64_t n : {2ull, 6ull, 144ull, 1440ull, 3600ull}) {
    auto f = factorize(n);
    auto af = arithmetic_functions(f);
    CHECK(phi_ratio(f) == Rat(af.phi, Int(n)));
    CHECK(sigma_ratio(f) == Rat(af.sigma, Int(n)));
    // sigma(n)/n <= n/phi(n), both being prod bounds of the same Euler factors
    CHECK(sigma_ratio(f) <= Rat(Int(n), af.phi));
  }
}

TEST_CASE("divisors enumerates exactly the divisors, ascending") {
  auto ds = divisors(factorize(std::uint64_t{144}));
  CHECK(ds.size() == 15);
  std::uint64_t found = 0;
  for (std::uint64_t d = 1; d <= 144; ++d)
    if (144 % d == 0) {
      CHECK(ds[found] == Int(d));
      ++found;
    }
  CHECK(found == 15);
  CHECK_THROWS_AS(divisors(lcm_upto(100), 100), PreconditionError);
}

TEST_CASE("lcm_upto matches an iterated-lcm oracle") {
  auto lcm2 = [](Int a, std::uint64_t b) -> Int {
    Int g = boost::multiprecision::gcd(a, Int(b));
    return Int(a / g * b);
  };
  Int acc = 1;
  for (std::uint64_t x = 1; x <= 60; ++x) {
    acc = lcm2(acc, x);
    CHECK(lcm_upto(x).value() == acc);
  }
}

TEST_CASE("auxiliary modulus: hand values and valuation law") {
  auto am = auxiliary_modulus(8);
  CHECK(am.X == 2);
  CHECK(am.N.value() == 256);  // (8*2)^2

  // For n = 100: X = floor(ln 100) = 4, N = (100*2*3)^4 = 600^4.
  auto am2 = auxiliary_modulus(100);
  CHECK(am2.X == 4);
  CHECK(am2.N.valuation(2) == 4 * (2 + 1));
  CHECK(am2.N.valuation(3) == 4 * (0 + 1));
  CHECK(am2.N.valuation(5) == 4 * 2);  // p | n, p > X: X * v_p(n)
  CHECK(am2.N.value() == boost::multiprecision::pow(Int(600), 4));
}

TEST_CASE("unitary reciprocal sum against divisor-scan oracle") {
  for (std::uint64_t n : {2ull, 36ull, 144ull, 1440ull, 30030ull}) {
    Rat direct(0);
    for (std::uint64_t b = 2; b <= n; ++b)
      if (n % b == 0 && gcd_u64(b, n / b) == 1) direct += Rat(1, b);
    CHECK(unitary_reciprocal_sum(factorize(n)) == direct);
  }
}

TEST_CASE("omega sieve agrees with per-element factorization") {
  OmegaSieve sieve(5000);
  for (std::uint64_t m = 2; m <= 5000; ++m)
    CHECK(sieve.big_omega(m) == big_omega_by_division(m));
}

TEST_CASE("segmented sieve region agrees with the linear sieve") {
  // Force the segmented path and compare a window against direct division.
  OmegaSieve big(OmegaSieve::kSegmentThreshold + 2000);
  for (std::uint64_t m = OmegaSieve::kSegmentThreshold + 1;
       m <= OmegaSieve::kSegmentThreshold + 2000; ++m)
    CHECK(big.big_omega(m) == big_omega_by_division(m));
}

TEST_CASE("from_table rejects corrupt cached tables") {
  OmegaSieve sieve(3000);
  auto table = sieve.table();
  auto adopted = OmegaSieve::from_table(3000, table);
  CHECK(adopted.big_omega(2048) == 11);
  table[100] ^= 1;
  CHECK_THROWS_AS(OmegaSieve::from_table(3000, table), VerificationError);
}

TEST_CASE("restricted reciprocal sums against a direct loop") {
  OmegaSieve sieve(300);
  for (std::uint64_t k = 1; k <= 8; ++k) {
    Rat S(0), Q(0);
    for (std::uint64_t m = 2; m <= 300; ++m)
      if (big_omega_by_division(m) == k) {
        S += Rat(1, m);
        Q += Rat(1, Int(m) * m);
      }
    auto rs = restricted_reciprocal_sums(sieve, k);
    CHECK(rs.S == S);
    CHECK(rs.Q == Q);
    double fp = restricted_reciprocal_sum_fp(sieve, k);
    CHECK(std::abs(fp - to_double(S)) < 1e-12);
  }
  CHECK(min_in_omega_class(sieve, 1) == 2);
  CHECK(min_in_omega_class(sieve, 3) == 8);
  CHECK(min_in_omega_class(sieve, 9) == 0);  // 512 > 300: class empty
}

TEST_CASE("prime utilities") {
  CHECK(prime_pi(2) == 1);
  CHECK(prime_pi(30) == 10);
  CHECK(prime_pi(1000) == 168);
  auto ps = primes_upto(30);
  CHECK(ps == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("homogeneous sums satisfy the Newton recurrence") {
  auto hs = homogeneous_sums({2, 3, 5, 7, 11}, 8);
  CHECK(hs.h[0] == 1);
  CHECK(hs.h[1] == hs.s);
  for (std::uint64_t j = 1; j <= 8; ++j) {
    Rat rhs(0);
    for (std::uint64_t i = 1; i <= j; ++i) rhs += hs.power_sums[i - 1] * hs.h[j - i];
    CHECK(Rat(j) * hs.h[j] == rhs);
  }
}

TEST_CASE("homogeneous sums on {2,3} equal truncated direct enumeration") {
  // All {2,3}-smooth integers with Omega = j are 2^a 3^(j-a); enumerate.
  auto hs = homogeneous_sums({2, 3}, 6);
  for (std::uint64_t j = 0; j <= 6; ++j) {
    Rat direct(0);
    for (std::uint64_t a = 0; a <= j; ++a) {
      Int m = boost::multiprecision::pow(Int(2), unsigned(a)) *
              boost::multiprecision::pow(Int(3), unsigned(j - a));
      direct += Rat(1, m);
    }
    CHECK(hs.h[j] == direct);
  }
  CHECK(smooth_full_product({2, 3}) == Rat(3));  // 2 * 3/2
}

TEST_CASE("floor_log certified values") {
  CHECK(floor_log(1) == 0);
  CHECK(floor_log(2) == 0);
  CHECK(floor_log(3) == 1);
  CHECK(floor_log(8) == 2);
  CHECK(floor_log(100) == 4);
  CHECK(floor_log(1'000'000) == 13);
}

TEST_CASE("critical_k certified values") {
  CHECK(critical_k(16) == 0);
  CHECK(critical_k(1'000'000) == 1);
  CHECK(critical_k(200'000'000) == 2);
}

TEST_CASE("simple_bound_lower is a valid lower bound and tightens with precision") {
  for (std::uint64_t n : {8ull, 40ull, 100ull}) {
    Rat lo = simple_bound_lower(n);
    double target = 1.0 - 1.0 / (3.0 * std::log(std::log(double(n))));
    CHECK(to_double(lo) <= target + 1e-15);
    CHECK(target - to_double(lo) < 1e-9);
  }
}
