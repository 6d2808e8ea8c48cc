#ifndef SCLD_HOMOLOGY_HPP
#define SCLD_HOMOLOGY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "scld/complex.hpp"

namespace scld {

/// Unreduced Betti numbers (beta_0 counts components) via boundary-matrix
/// ranks; GF(2) uses packed-word elimination, odd primes a modular one.
std::vector<std::int64_t> betti_vector(const SimplicialComplex& K,
                                       int field_char = 2, int threads = 1);

/// rank of the boundary map from j-faces to (j-1)-faces (0 for j <= 0).
std::int64_t boundary_rank(const SimplicialComplex& K, int j, int field_char = 2);

struct MorseGap {
  std::int64_t lower_slack = 0;  // beta_j - (s_j - s_{j-1} - s_{j+1})
  std::int64_t upper_slack = 0;  // s_j - beta_j
};

MorseGap morse_gap(const SimplicialComplex& K, int j, int field_char = 2);

/// j-faces contained in no (j+1)-face.
std::int64_t free_count(const SimplicialComplex& K, int j);

std::int64_t euler_characteristic(const SimplicialComplex& K);

}  // namespace scld

#endif
