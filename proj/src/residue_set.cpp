#include "pfd/residue_set.hpp"

#include <algorithm>

namespace pfd {

std::uint64_t ResidueSet::size() const {
  return static_cast<std::uint64_t>(std::count(bits.begin(), bits.end(), true));
}

std::vector<std::uint64_t> ResidueSet::members() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 0; a < n; ++a)
    if (bits[a]) out.push_back(a);
  return out;
}

bool is_product_free(const ResidueSet& s) {
  auto ms = s.members();
  for (auto a : ms)
    for (auto b : ms)
      if (s.contains(static_cast<std::uint64_t>(
              static_cast<unsigned __int128>(a) * b % s.n)))
        return false;
  return true;
}

Rat GcdProfile::at(std::uint64_t u) const {
  for (const auto& [d, a] : alpha)
    if (d == u) return a;
  throw PreconditionError("GcdProfile: not a divisor of n");
}

GcdProfile gcd_profile(const ResidueSet& s) {
  GcdProfile prof{s.n, {}};
  auto ds = divisors(factorize(s.n));
  for (const Int& dd : ds) {
    std::uint64_t u = dd.convert_to<std::uint64_t>();
    std::uint64_t count = 0;
    for (std::uint64_t a = 0; a < s.n; ++a)
      if (s.bits[a] && gcd_u64(a == 0 ? s.n : a, s.n) == u) ++count;
    prof.alpha.emplace_back(u, Rat(count, euler_phi_u64(s.n / u)));
  }
  return prof;
}

ResidueSet lift_set(const ResidueSet& s, std::uint64_t m) {
  if (m == 0) throw PreconditionError("lift_set: m must be positive");
  if (!is_product_free(s)) throw PreconditionError("lift_set: input set is not product-free");
  ResidueSet lifted(s.n * m);
  for (std::uint64_t j = 0; j < m; ++j)
    for (std::uint64_t a = 0; a < s.n; ++a)
      if (s.bits[a]) lifted.insert(a + j * s.n);
  if (!is_product_free(lifted))
    throw VerificationError("lift_set: lifted set failed verification");
  return lifted;
}

}  // namespace pfd
