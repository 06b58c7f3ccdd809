#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "copex/costfn.hpp"
#include "copex/lap.hpp"
#include "copex/matrix.hpp"

namespace copex {

enum class GridMode { Lower, Upper, Midpoint };
enum class SingularPolicy { Clamp, ExcludeBoundarySample };

// Dyadic discretization spec: 2^level x 2^level cells
// [ (i-1)/2^n, i/2^n ) x [ (j-1)/2^n, j/2^n ).
struct GridSpec {
  int level = 1;           // n
  GridMode mode = GridMode::Midpoint;
  int subsamples = 9;      // points per axis per cell in extremum modes
  SingularPolicy singular_policy = SingularPolicy::ExcludeBoundarySample;

  void validate() const;
};

struct GridCostMatrix {
  int level = 1;
  GridMode mode = GridMode::Midpoint;
  SquareMatrix values;
};

// A discrete coupling at level n: cell (i, perm[i]) carries mass 2^-n.
struct DiscreteCoupling {
  int level = 1;
  std::vector<std::size_t> perm;

  double cell_mass() const;
  // Induced 2^n x 2^n matrix with entries 2^-n * [j == perm[i]].
  SquareMatrix induced_matrix() const;
};

// Entry (i, j) summarizes the cost over cell I^n_{i+1,j+1}: sampled min/max
// over the subsample lattice (corners included, center included for
// subsamples >= 3), or the cell-center value in midpoint mode.
GridCostMatrix build_matrix(const CostFunction& c, const GridSpec& spec);
GridCostMatrix build_matrix_serial(const CostFunction& c, const GridSpec& spec);

struct BoundResult {
  double value = 0.0;
  DiscreteCoupling coupling;
  Assignment assignment;
};

// value = 2^-n * assignment value of the discretized cost.
BoundResult bound(const CostFunction& c, const GridSpec& spec, Sense sense);

// Bounds for n = 1..n_max (n_max <= 10).
std::vector<std::pair<int, double>> bound_sequence(
    const CostFunction& c, int n_max, GridMode mode, Sense sense,
    int subsamples = 9,
    SingularPolicy policy = SingularPolicy::ExcludeBoundarySample);

// Cell-center support of the coupling, ordered by x.
std::vector<std::pair<double, double>> support_points(
    const DiscreteCoupling& coupling);

}  // namespace copex
