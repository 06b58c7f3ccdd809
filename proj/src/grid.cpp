#include "copex/grid.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>

namespace copex {
namespace {

// Per-axis sample coordinates of the closed cell [lo, lo + h]. Extremum modes
// use the inclusive uniform lattice; an even lattice of >= 3 points gains the
// cell center so sampled min <= center value <= sampled max holds.
std::vector<double> cell_samples(double lo, double h, int subsamples) {
  std::vector<double> xs;
  if (subsamples == 1) {
    xs.push_back(lo + 0.5 * h);
    return xs;
  }
  xs.reserve(subsamples + 1);
  for (int k = 0; k < subsamples; ++k)
    xs.push_back(lo + h * (static_cast<double>(k) / (subsamples - 1)));
  if (subsamples >= 3 && subsamples % 2 == 0) xs.push_back(lo + 0.5 * h);
  return xs;
}

double cell_value(const CostFunction& c, const GridSpec& spec, std::size_t i,
                  std::size_t j, double h) {
  const double xlo = static_cast<double>(i) * h;
  const double ylo = static_cast<double>(j) * h;
  if (spec.mode == GridMode::Midpoint) {
    double v = c(xlo + 0.5 * h, ylo + 0.5 * h);
    if (!std::isfinite(v))
      throw std::runtime_error("grid: evaluation failed at cell (" +
                               std::to_string(i + 1) + "," +
                               std::to_string(j + 1) + ")");
    return v;
  }
  const bool skip_singular =
      spec.singular_policy == SingularPolicy::ExcludeBoundarySample &&
      !c.singular_points().empty();
  const std::vector<double> xs = cell_samples(xlo, h, spec.subsamples);
  const std::vector<double> ys = cell_samples(ylo, h, spec.subsamples);
  bool any = false;
  double acc = 0.0;
  for (double x : xs) {
    for (double y : ys) {
      if (skip_singular && c.singular_sample(x, y)) continue;
      double v = c(x, y);
      if (!std::isfinite(v))
        throw std::runtime_error("grid: evaluation failed at cell (" +
                                 std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ")");
      if (!any) {
        acc = v;
        any = true;
      } else if (spec.mode == GridMode::Lower) {
        acc = std::min(acc, v);
      } else {
        acc = std::max(acc, v);
      }
    }
  }
  if (!any)
    throw std::runtime_error("grid: all samples excluded in cell (" +
                             std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ")");
  return acc;
}

}  // namespace

void GridSpec::validate() const {
  if (level < 1 || level > 14)
    throw std::invalid_argument("grid: level must be in [1, 14]");
  if (subsamples < 1)
    throw std::invalid_argument("grid: subsamples must be >= 1");
}

double DiscreteCoupling::cell_mass() const { return std::ldexp(1.0, -level); }

SquareMatrix DiscreteCoupling::induced_matrix() const {
  const std::size_t m = perm.size();
  SquareMatrix out(m, 0.0);
  const double mass = cell_mass();
  for (std::size_t i = 0; i < m; ++i) out(i, perm[i]) = mass;
  return out;
}

GridCostMatrix build_matrix(const CostFunction& c, const GridSpec& spec) {
  spec.validate();
  const std::size_t m = std::size_t{1} << spec.level;
  const double h = std::ldexp(1.0, -spec.level);
  GridCostMatrix out{spec.level, spec.mode, SquareMatrix(m)};

  std::exception_ptr failure;
  std::atomic<bool> failed{false};
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
    if (failed.load(std::memory_order_relaxed)) continue;
    try {
      for (std::size_t j = 0; j < m; ++j)
        out.values(static_cast<std::size_t>(i), j) =
            cell_value(c, spec, static_cast<std::size_t>(i), j, h);
    } catch (...) {
#pragma omp critical
      {
        if (!failure) failure = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

GridCostMatrix build_matrix_serial(const CostFunction& c,
                                   const GridSpec& spec) {
  spec.validate();
  const std::size_t m = std::size_t{1} << spec.level;
  const double h = std::ldexp(1.0, -spec.level);
  GridCostMatrix out{spec.level, spec.mode, SquareMatrix(m)};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      out.values(i, j) = cell_value(c, spec, i, j, h);
  return out;
}

BoundResult bound(const CostFunction& c, const GridSpec& spec, Sense sense) {
  GridCostMatrix mat = build_matrix(c, spec);
  Assignment a = solve_lap(mat.values, sense);
  BoundResult out;
  out.value = std::ldexp(a.value, -spec.level);
  out.coupling = DiscreteCoupling{spec.level, a.perm};
  out.assignment = std::move(a);
  return out;
}

std::vector<std::pair<int, double>> bound_sequence(const CostFunction& c,
                                                   int n_max, GridMode mode,
                                                   Sense sense, int subsamples,
                                                   SingularPolicy policy) {
  if (n_max < 1 || n_max > 10)
    throw std::invalid_argument("bound_sequence: n_max must be in [1, 10]");
  std::vector<std::pair<int, double>> out;
  out.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) {
    GridSpec spec{n, mode, subsamples, policy};
    out.emplace_back(n, bound(c, spec, sense).value);
  }
  return out;
}

std::vector<std::pair<double, double>> support_points(
    const DiscreteCoupling& coupling) {
  const double h = coupling.cell_mass();
  std::vector<std::pair<double, double>> pts;
  pts.reserve(coupling.perm.size());
  for (std::size_t i = 0; i < coupling.perm.size(); ++i)
    pts.emplace_back((static_cast<double>(i) + 0.5) * h,
                     (static_cast<double>(coupling.perm[i]) + 0.5) * h);
  return pts;
}

}  // namespace copex
