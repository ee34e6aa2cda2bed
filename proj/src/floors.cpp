#include "pfd/floors.hpp"

#include <mpfr.h>

#include <cmath>

namespace pfd {

namespace {

// Evaluates f at precision `prec` with directed rounding and returns the
// floors of both endpoints through the out-parameters.
template <typename F>
void interval_floors(F f, unsigned prec, long& lo_floor, long& hi_floor) {
  mpfr_t lo, hi;
  mpfr_init2(lo, prec);
  mpfr_init2(hi, prec);
  f(lo, MPFR_RNDD);
  f(hi, MPFR_RNDU);
  mpfr_floor(lo, lo);
  mpfr_floor(hi, hi);
  lo_floor = mpfr_get_si(lo, MPFR_RNDN);
  hi_floor = mpfr_get_si(hi, MPFR_RNDN);
  mpfr_clear(lo);
  mpfr_clear(hi);
}

template <typename F>
std::uint64_t certified_floor(F f, const char* what) {
  for (unsigned prec = 96; prec <= 4096; prec *= 2) {
    long lo, hi;
    interval_floors(f, prec, lo, hi);
    if (lo == hi && lo >= 0) return static_cast<std::uint64_t>(lo);
  }
  throw PrecisionError(std::string("floor boundary unresolved for ") + what);
}

}  // namespace

std::uint64_t floor_log(std::uint64_t n) {
  if (n == 0) throw PreconditionError("floor_log: n must be positive");
  if (n == 1) return 0;
  return certified_floor(
      [n](mpfr_t out, mpfr_rnd_t rnd) {
        mpfr_set_ui(out, n, MPFR_RNDN);  // exact for 64-bit n
        mpfr_log(out, out, rnd);
      },
      "floor(log n)");
}

std::uint64_t critical_k(std::uint64_t x) {
  if (x < 3) throw PreconditionError("critical_k: requires X >= 3");
  return certified_floor(
      [x](mpfr_t out, mpfr_rnd_t rnd) {
        mpfr_t e4;
        mpfr_init2(e4, mpfr_get_prec(out));
        mpfr_set_ui(e4, 1, MPFR_RNDN);
        mpfr_exp(e4, e4, rnd);
        mpfr_div_ui(e4, e4, 4, rnd);
        mpfr_set_ui(out, x, MPFR_RNDN);
        mpfr_log(out, out, rnd);
        mpfr_log(out, out, rnd);
        mpfr_mul(out, out, e4, rnd);
        mpfr_clear(e4);
      },
      "floor((e/4) log log X)");
}

Rat simple_bound_lower(std::uint64_t n, unsigned bits) {
  if (n < 8) throw PreconditionError("simple_bound_lower: requires n >= 8");
  mpfr_t t;
  mpfr_init2(t, bits);
  // 1 - 1/(3 ln ln n), every step rounded so the result is a lower bound.
  mpfr_set_ui(t, n, MPFR_RNDN);
  mpfr_log(t, t, MPFR_RNDU);
  mpfr_log(t, t, MPFR_RNDU);
  mpfr_mul_ui(t, t, 3, MPFR_RNDU);
  mpfr_ui_div(t, 1, t, MPFR_RNDU);
  mpfr_ui_sub(t, 1, t, MPFR_RNDD);
  mpq_t q;
  mpq_init(q);
  mpfr_get_q(q, t);
  Rat out(q);
  mpq_clear(q);
  mpfr_clear(t);
  return out;
}

}  // namespace pfd
