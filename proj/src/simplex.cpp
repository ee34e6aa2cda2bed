#include "pfd/simplex.hpp"

#include <algorithm>

namespace pfd {

namespace {

// Dense tableau in standard maximization form. Rows 0..m-1 hold the
// constraints; the last row holds the (negated) objective. Column layout:
// structural vars | slacks | artificials | rhs.
struct Tableau {
  std::size_t m, total;
  std::vector<std::vector<Rat>> t;
  std::vector<std::size_t> basis;
  std::uint64_t pivots = 0;

  void pivot(std::size_t prow, std::size_t pcol) {
    Rat piv = t[prow][pcol];
    for (auto& x : t[prow]) x /= piv;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == prow || t[r][pcol] == 0) continue;
      Rat f = t[r][pcol];
      for (std::size_t c = 0; c <= total; ++c) t[r][c] -= f * t[prow][c];
    }
    basis[prow] = pcol;
    ++pivots;
  }

  // Bland: entering = lowest-index column with positive objective-row
  // coefficient; leaving = lexicographic min ratio with lowest basis index.
  // Returns false when optimal, throws on unboundedness.
  bool step(std::size_t ncols) {
    std::size_t pcol = total;
    for (std::size_t c = 0; c < ncols; ++c)
      if (t[m][c] > 0) {
        pcol = c;
        break;
      }
    if (pcol == total) return false;
    std::size_t prow = m;
    Rat best;
    for (std::size_t r = 0; r < m; ++r) {
      if (t[r][pcol] <= 0) continue;
      Rat ratio = t[r][total] / t[r][pcol];
      if (prow == m || ratio < best ||
          (ratio == best && basis[r] < basis[prow])) {
        prow = r;
        best = ratio;
      }
    }
    if (prow == m) throw VerificationError("simplex: unbounded program");
    pivot(prow, pcol);
    return true;
  }
};

}  // namespace

LpSolution solve(const LpModel& model) {
  if (model.vars.size() > kLpVarCap)
    throw PreconditionError("solve: variable cap exceeded");
  std::size_t nv = model.vars.size();
  std::size_t m = model.rows.size();

  // Normalize every row to <= with nonnegative rhs; rows that flip sign get
  // an artificial variable for phase 1.
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(nv, Rat(0)));
  std::vector<Rat> b(m);
  for (std::size_t r = 0; r < m; ++r) {
    Rat sign = model.rows[r].rel == Relation::le ? 1 : -1;
    for (const auto& [j, c] : model.rows[r].coeffs) a[r][j] += sign * c;
    b[r] = sign * model.rows[r].rhs;
  }
  std::vector<std::size_t> art_rows;
  for (std::size_t r = 0; r < m; ++r)
    if (b[r] < 0) {
      for (auto& x : a[r]) x = -x;
      b[r] = -b[r];
      art_rows.push_back(r);  // slack now has coefficient -1: needs artificial
    }

  std::size_t nslack = m, nart = art_rows.size();
  Tableau tab;
  tab.m = m;
  tab.total = nv + nslack + nart;
  tab.t.assign(m + 1, std::vector<Rat>(tab.total + 1, Rat(0)));
  tab.basis.assign(m, 0);

  std::vector<bool> negated(m, false);
  for (auto r : art_rows) negated[r] = true;
  std::size_t art_at = nv + nslack;
  std::size_t next_art = art_at;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < nv; ++j) tab.t[r][j] = a[r][j];
    tab.t[r][nv + r] = negated[r] ? Rat(-1) : Rat(1);
    tab.t[r][tab.total] = b[r];
    if (negated[r]) {
      tab.t[r][next_art] = 1;
      tab.basis[r] = next_art++;
    } else {
      tab.basis[r] = nv + r;
    }
  }

  if (nart > 0) {
    // Phase 1: maximize -sum(artificials).
    for (std::size_t c = art_at; c < art_at + nart; ++c) tab.t[m][c] = -1;
    for (std::size_t r = 0; r < m; ++r)
      if (tab.basis[r] >= art_at)
        for (std::size_t c = 0; c <= tab.total; ++c) tab.t[m][c] += tab.t[r][c];
    while (tab.step(tab.total)) {
    }
    if (tab.t[m][tab.total] != 0)
      return {LpStatus::infeasible, {}, 0, {}, tab.pivots};
    // Drive any artificial still basic at zero level out of the basis.
    for (std::size_t r = 0; r < m; ++r) {
      if (tab.basis[r] < art_at) continue;
      std::size_t pcol = tab.total;
      for (std::size_t c = 0; c < art_at; ++c)
        if (tab.t[r][c] != 0) {
          pcol = c;
          break;
        }
      if (pcol != tab.total) tab.pivot(r, pcol);
      // A fully zero row is redundant; its artificial stays basic at 0.
    }
    for (std::size_t r = 0; r <= m; ++r)
      for (std::size_t c = art_at; c < art_at + nart; ++c) tab.t[r][c] = 0;
    for (std::size_t c = 0; c <= tab.total; ++c) tab.t[m][c] = 0;
  }

  // Phase 2 objective (always stated as maximization internally).
  Rat osign = model.maximize ? 1 : -1;
  for (std::size_t j = 0; j < nv; ++j) tab.t[m][j] = osign * model.objective[j];
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.t[m][tab.basis[r]] == 0) continue;
    Rat f = tab.t[m][tab.basis[r]];
    for (std::size_t c = 0; c <= tab.total; ++c) tab.t[m][c] -= f * tab.t[r][c];
  }
  while (tab.step(nv + nslack)) {
  }

  LpSolution sol;
  sol.status = LpStatus::optimal;
  sol.assignment.assign(nv, Rat(0));
  for (std::size_t r = 0; r < m; ++r)
    if (tab.basis[r] < nv) sol.assignment[tab.basis[r]] = tab.t[r][tab.total];
  sol.objective_value = objective_value(model, sol.assignment);
  sol.basis = tab.basis;
  sol.pivot_count = tab.pivots;
  return sol;
}

}  // namespace pfd
