#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lambent/quad_ext.hpp"

namespace lambent {

class InconsistentSystem : public std::runtime_error {
 public:
  InconsistentSystem() : std::runtime_error("linear system has no solution") {}
};

/// Solution set {particular + sum t_k basis_k} of A u = b.
struct AffineSolution {
  std::vector<QuadExt> particular;
  std::vector<std::vector<QuadExt>> nullspace;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;

  std::size_t dimension() const { return nullspace.size(); }
};

/// Exact reduced row echelon solve over Q(sqrt d). Throws InconsistentSystem.
AffineSolution solve_linear_system(std::vector<std::vector<QuadExt>> a, std::vector<QuadExt> b,
                                   std::size_t unknowns);

}  // namespace lambent
