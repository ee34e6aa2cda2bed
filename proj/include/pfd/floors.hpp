#pragma once

#include <cstdint>

#include "pfd/rational.hpp"

namespace pfd {

// Certified floors of transcendental expressions. Both evaluate the
// expression as an MPFR interval (directed rounding down/up), escalating the
// working precision until both endpoints share the same floor. A boundary
// that stays ambiguous past the precision cap raises PrecisionError rather
// than guessing.

// floor(ln n); n = 1 gives 0.
std::uint64_t floor_log(std::uint64_t n);

// floor((e/4) * ln ln X); requires X >= 3 so that ln ln X > 0.
std::uint64_t critical_k(std::uint64_t x);

// Lower bound of 1 - 1/(3 ln ln n) rounded toward -infinity with `bits` of
// precision; comparing D(n) against this certifies the true inequality.
Rat simple_bound_lower(std::uint64_t n, unsigned bits = 128);

}  // namespace pfd
