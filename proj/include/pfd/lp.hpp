#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pfd/rational.hpp"

namespace pfd {

enum class LpKind { primal, dual };
enum class Relation { le, ge };

// Variable index: a divisor u > 1 of n, or an unordered pair {u, v} with
// u, v > 1 and uv | n (u = v allowed only when u^2 | n). pair_v == 0 marks a
// singleton.
struct LpVar {
  std::uint64_t u = 0;
  std::uint64_t pair_v = 0;

  bool is_pair() const { return pair_v != 0; }
  std::string name() const;
  bool operator==(const LpVar&) const = default;
};

struct LpRow {
  std::string name;
  std::vector<std::pair<std::size_t, Rat>> coeffs;  // (variable index, coefficient)
  Relation rel;
  Rat rhs;
};

// Nonnegativity of every variable is implicit.
struct LpModel {
  LpKind kind;
  std::uint64_t n;
  bool maximize;
  std::vector<LpVar> vars;
  std::vector<Rat> objective;  // parallel to vars
  std::vector<LpRow> rows;
};

inline constexpr std::size_t kLpVarCap = 5000;

// Divisors of n exceeding 1 (delta_1 index set), ascending.
std::vector<std::uint64_t> proper_divisor_list(std::uint64_t n);

// Admissible unordered pairs (delta_2 index set), lexicographic by (min, max).
std::vector<std::pair<std::uint64_t, std::uint64_t>> divisor_pairs(std::uint64_t n);

// Primal (P_n): maximize sum alpha_u / u subject to alpha_u <= 1 and
// alpha_u + alpha_v + alpha_uv <= 2 (2 alpha_u + alpha_{u^2} <= 2 when u = v).
LpModel build_primal(std::uint64_t n);

// Dual (D_n): minimize sum beta_u + 2 sum beta_{u,v} subject to C(alpha_u):
// beta_u + sum_{vw=u} beta_{v,w} + sum*_{v: uv|n} beta_{u,v} >= 1/u, the
// starred summand counted twice when v = u.
LpModel build_dual(std::uint64_t n);

// Exact row evaluation; returns the index of the first violated row, or -1.
long first_violated_row(const LpModel& model, const std::vector<Rat>& x);

Rat objective_value(const LpModel& model, const std::vector<Rat>& x);

// Plain-text interchange format (objective and rows with "p/q" rationals).
void write_lp(std::ostream& os, const LpModel& model);
LpModel read_lp(std::istream& is);

}  // namespace pfd
