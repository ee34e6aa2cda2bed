#include "pfd/search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

namespace pfd {

namespace {

struct Ctx {
  std::uint64_t n;
  std::vector<std::vector<std::uint8_t>> prod;  // prod[a][b] = a*b mod n
  std::vector<int> order;                       // candidate residues, search order
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::uint64_t best_size = 0;
  std::uint64_t best_mask = 0;
  std::uint64_t unit_cap;  // max size of a set containing a unit: (n-1)/2

  bool unit(std::uint64_t a) const { return gcd_u64(a, n) == 1; }

  bool tick() {
    if (++nodes > budget) {
      exhausted = true;
      return false;
    }
    return true;
  }
};

// Can x join S (given as a bitmask) without creating a product relation?
// S is assumed product-free, so only relations involving x need checking.
bool can_add(const Ctx& c, std::uint64_t smask, std::uint64_t prodmask, int x) {
  std::uint64_t with_x = smask | (1ull << x);
  if (prodmask & (1ull << x)) return false;  // x = a*b with a,b in S
  if (with_x & (1ull << c.prod[x][x])) return false;
  for (std::uint64_t rest = smask; rest;) {
    int a = std::countr_zero(rest);
    rest &= rest - 1;
    if (with_x & (1ull << c.prod[x][a])) return false;
  }
  return true;
}

std::uint64_t grown_prodmask(const Ctx& c, std::uint64_t smask, std::uint64_t prodmask,
                             int x) {
  prodmask |= 1ull << c.prod[x][x];
  for (std::uint64_t rest = smask; rest;) {
    int a = std::countr_zero(rest);
    rest &= rest - 1;
    prodmask |= 1ull << c.prod[x][a];
  }
  return prodmask;
}

// Phase 1: maximum size, branch and bound over c.order.
void search_max(Ctx& c, std::size_t idx, std::uint64_t smask, std::uint64_t prodmask,
                std::uint64_t size, bool has_unit) {
  if (size > c.best_size) {
    c.best_size = size;
    c.best_mask = smask;
  }
  if (idx >= c.order.size() || c.exhausted) return;
  std::uint64_t ceiling = size + (c.order.size() - idx);
  if (has_unit) ceiling = std::min(ceiling, c.unit_cap);
  if (ceiling <= c.best_size) return;
  if (!c.tick()) return;
  int x = c.order[idx];
  if (can_add(c, smask, prodmask, x)) {
    search_max(c, idx + 1, smask | (1ull << x), grown_prodmask(c, smask, prodmask, x),
               size + 1, has_unit || c.unit(static_cast<std::uint64_t>(x)));
  }
  search_max(c, idx + 1, smask, prodmask, size, has_unit);
}

// Phase 2: lexicographically least witness of the known optimal size.
// Candidates ascending, include-first: the first full-size set found is the
// least bitmap.
bool search_lex(Ctx& c, const std::vector<int>& cands, std::size_t idx,
                std::uint64_t smask, std::uint64_t prodmask, std::uint64_t size,
                bool has_unit, std::uint64_t target, std::uint64_t& out) {
  if (size == target) {
    out = smask;
    return true;
  }
  if (idx >= cands.size() || c.exhausted) return false;
  std::uint64_t ceiling = size + (cands.size() - idx);
  if (has_unit) ceiling = std::min(ceiling, c.unit_cap);
  if (ceiling < target) return false;
  if (!c.tick()) return false;
  int x = cands[idx];
  if (can_add(c, smask, prodmask, x) &&
      search_lex(c, cands, idx + 1, smask | (1ull << x),
                 grown_prodmask(c, smask, prodmask, x), size + 1,
                 has_unit || c.unit(static_cast<std::uint64_t>(x)), target, out))
    return true;
  return search_lex(c, cands, idx + 1, smask, prodmask, size, has_unit, target, out);
}

SearchResult greedy_fallback(std::uint64_t n, std::uint64_t budget) {
  ResidueSet s(n);
  std::uint64_t nodes = 0;
  for (std::uint64_t a = 1; a < n && nodes < budget; ++a, ++nodes) {
    if (static_cast<unsigned __int128>(a) * a % n == a) continue;
    s.insert(a);
    if (!is_product_free(s)) s.bits[a] = false;
  }
  return {n, s, s.density(), nodes, false};
}

}  // namespace

SearchResult max_product_free(std::uint64_t n, std::uint64_t budget, std::uint64_t cap) {
  if (n == 0) throw PreconditionError("max_product_free: n must be positive");
  if (n > cap) return greedy_fallback(n, budget);

  Ctx c;
  c.n = n;
  c.budget = budget;
  c.unit_cap = (n - 1) / 2;
  c.prod.assign(n, std::vector<std::uint8_t>(n));
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b)
      c.prod[a][b] = static_cast<std::uint8_t>(a * b % n);

  // Candidates: non-idempotent nonzero residues, ordered by descending degree
  // in the triple hypergraph {(a,b,c) : ab = c}.
  std::vector<int> cands;
  for (std::uint64_t a = 1; a < n; ++a)
    if (a * a % n != a) cands.push_back(static_cast<int>(a));
  std::vector<std::uint64_t> degree(n, 0);
  for (std::uint64_t a = 1; a < n; ++a)
    for (std::uint64_t b = 1; b < n; ++b) {
      std::uint64_t p = a * b % n;
      ++degree[a];
      ++degree[b];
      if (p < n) ++degree[p];
    }
  c.order = cands;
  std::stable_sort(c.order.begin(), c.order.end(),
                   [&](int a, int b) { return degree[a] > degree[b]; });

  search_max(c, 0, 0, 0, 0, false);

  std::uint64_t lex_mask = c.best_mask;
  if (!c.exhausted && c.best_size > 0)
    search_lex(c, cands, 0, 0, 0, 0, false, c.best_size, lex_mask);

  ResidueSet best(n);
  for (std::uint64_t a = 0; a < n; ++a)
    if (lex_mask & (1ull << a)) best.insert(a);
  return {n, best, Rat(c.best_size, n), c.nodes, !c.exhausted};
}

}  // namespace pfd
