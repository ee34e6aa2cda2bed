#pragma once

#include <cstdint>
#include <optional>

#include "pfd/residue_set.hpp"

namespace pfd {

struct SearchResult {
  std::uint64_t n;
  ResidueSet best_set;
  Rat density;
  std::uint64_t nodes_explored;
  bool proof_of_optimality;
};

inline constexpr std::uint64_t kSearchCap = 64;

// Exact maximum-density product-free set by branch and bound over residues.
// Residue 0 and all idempotents (a^2 == a mod n) are excluded up front;
// candidates are ordered by degree in the triple hypergraph {(a,b,c): ab=c};
// a set containing a unit is capped at size (n-1)/2. Among maximum sets the
// lexicographically least witness bitmap is returned. A spent node budget
// yields the best set found with proof_of_optimality = false.
SearchResult max_product_free(std::uint64_t n,
                              std::uint64_t budget = UINT64_MAX,
                              std::uint64_t cap = kSearchCap);

}  // namespace pfd
