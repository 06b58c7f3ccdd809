#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "copex/costfn.hpp"
#include "copex/lap.hpp"
#include "copex/matrix.hpp"

namespace copex {

// Candidate support of a coupling, with the optimization sense it claims to
// solve.
struct SupportSet {
  std::vector<std::pair<double, double>> points;
  Sense sense = Sense::Max;
};

struct CycleReport {
  bool pass = true;
  double worst_gap = 0.0;  // most violating (largest) gap encountered
  std::vector<std::pair<double, double>> violating_cycle;  // empty when pass
};

// Checks c-cyclical monotonicity of the support: all length-2 cycles
// exhaustively, then `trials` random cycles per length 3..max_cycle drawn
// from generators seeded with seed + running trial index. A cycle violates
// when its gap exceeds 1e-10.
CycleReport check_cyclical_monotonicity(const SupportSet& support,
                                        const CostFunction& c, int max_cycle,
                                        int trials, std::uint64_t seed);
CycleReport check_cyclical_monotonicity_serial(const SupportSet& support,
                                               const CostFunction& c,
                                               int max_cycle, int trials,
                                               std::uint64_t seed);

enum class MassConvention { CellMass, RowSumOne };  // rows sum to 1/m or 1

struct StochasticReport {
  bool pass = true;
  double worst_deviation = 0.0;
  std::string detail;  // names the first failing row/column
};

StochasticReport check_doubly_stochastic(const SquareMatrix& m, double tol,
                                         MassConvention convention);

}  // namespace copex
