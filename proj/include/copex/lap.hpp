#pragma once

#include <cstddef>
#include <vector>

#include "copex/matrix.hpp"

namespace copex {

enum class Sense { Min, Max };

// An optimal assignment: row i is matched to column perm[i]. The potentials
// certify optimality: sum(u) + sum(v) equals the objective, u[i] + v[j] is
// below (min) or above (max) cost(i,j) everywhere, with equality on matched
// entries.
struct Assignment {
  std::vector<std::size_t> perm;
  double value = 0.0;  // sum_i cost(i, perm[i]), accumulated in row order
  std::vector<double> row_potential;
  std::vector<double> col_potential;
  Sense sense = Sense::Min;
};

// Exact O(m^3) solver (augmenting-path Hungarian with dual potentials).
// Ties are broken toward the lexicographically smallest optimal permutation.
// Throws std::invalid_argument for m == 0, m > 2^14, or non-finite entries.
Assignment solve_lap(const SquareMatrix& cost, Sense sense);

// Exhaustive oracle for m <= 10; same objective and tie-break as solve_lap.
// The oracle does not produce potentials.
Assignment brute_force_lap(const SquareMatrix& cost, Sense sense);

}  // namespace copex
