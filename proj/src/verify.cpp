#include "copex/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace copex {
namespace {

constexpr double kGapTolerance = 1e-10;

// Signed gap of a cycle; positive means the cyclic reassignment improves on
// the support pairing, i.e. a monotonicity violation for the given sense.
double cycle_gap(const SupportSet& s, const CostFunction& c,
                 const std::vector<std::size_t>& idx) {
  double matched = 0.0, shifted = 0.0;
  const std::size_t L = idx.size();
  for (std::size_t k = 0; k < L; ++k) {
    const auto& [xk, yk] = s.points[idx[k]];
    const auto& [xn, yn] = s.points[idx[(k + 1) % L]];
    matched += c(xk, yk);
    shifted += c(xn, yk);
  }
  return s.sense == Sense::Min ? matched - shifted : shifted - matched;
}

std::vector<std::size_t> sample_cycle(std::uint64_t seed, std::size_t m,
                                      int length) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  std::vector<std::size_t> idx(length);
  for (auto& v : idx) v = pick(rng);
  return idx;
}

CycleReport run_check(const SupportSet& support, const CostFunction& c,
                      int max_cycle, int trials, std::uint64_t seed,
                      bool parallel) {
  if (support.points.empty())
    throw std::invalid_argument("cyclical monotonicity: empty support");
  if (max_cycle < 2)
    throw std::invalid_argument("cyclical monotonicity: max_cycle < 2");
  if (trials < 1)
    throw std::invalid_argument("cyclical monotonicity: trials < 1");

  const std::size_t m = support.points.size();
  CycleReport rep;
  rep.worst_gap = -std::numeric_limits<double>::infinity();
  std::vector<std::size_t> first_violation;

  // Length 2: exhaustive over unordered pairs. Row-wise results are combined
  // in index order so the report does not depend on scheduling.
  {
    std::vector<double> row_worst(m, -std::numeric_limits<double>::infinity());
    std::vector<std::size_t> row_first(m, m);
#pragma omp parallel for schedule(static) if (parallel)
    for (std::ptrdiff_t p = 0; p < static_cast<std::ptrdiff_t>(m); ++p) {
      std::vector<std::size_t> idx(2);
      for (std::size_t q = static_cast<std::size_t>(p) + 1; q < m; ++q) {
        idx[0] = static_cast<std::size_t>(p);
        idx[1] = q;
        const double gap = cycle_gap(support, c, idx);
        if (gap > row_worst[p]) row_worst[p] = gap;
        if (gap > kGapTolerance && row_first[p] == m) row_first[p] = q;
      }
    }
    for (std::size_t p = 0; p < m; ++p) {
      rep.worst_gap = std::max(rep.worst_gap, row_worst[p]);
      if (row_first[p] != m && first_violation.empty())
        first_violation = {p, row_first[p]};
    }
  }

  // Lengths 3..max_cycle: seeded random cycles, seed advances with a running
  // trial index so results are order-independent.
  std::uint64_t trial_base = 0;
  for (int length = 3; length <= max_cycle && m >= 2; ++length) {
    std::vector<double> gaps(trials);
#pragma omp parallel for schedule(static) if (parallel)
    for (int t = 0; t < trials; ++t) {
      const auto idx = sample_cycle(seed + trial_base + t, m, length);
      gaps[t] = cycle_gap(support, c, idx);
    }
    for (int t = 0; t < trials; ++t) {
      rep.worst_gap = std::max(rep.worst_gap, gaps[t]);
      if (gaps[t] > kGapTolerance && first_violation.empty())
        first_violation = sample_cycle(seed + trial_base + t, m, length);
    }
    trial_base += static_cast<std::uint64_t>(trials);
  }

  if (!std::isfinite(rep.worst_gap)) rep.worst_gap = 0.0;  // single point
  if (!first_violation.empty()) {
    rep.pass = false;
    for (std::size_t i : first_violation)
      rep.violating_cycle.push_back(support.points[i]);
  }
  return rep;
}

}  // namespace

CycleReport check_cyclical_monotonicity(const SupportSet& support,
                                        const CostFunction& c, int max_cycle,
                                        int trials, std::uint64_t seed) {
  return run_check(support, c, max_cycle, trials, seed, true);
}

CycleReport check_cyclical_monotonicity_serial(const SupportSet& support,
                                               const CostFunction& c,
                                               int max_cycle, int trials,
                                               std::uint64_t seed) {
  return run_check(support, c, max_cycle, trials, seed, false);
}

StochasticReport check_doubly_stochastic(const SquareMatrix& m, double tol,
                                         MassConvention convention) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("doubly stochastic: empty matrix");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) < 0.0)
        throw std::invalid_argument("doubly stochastic: negative entry at (" +
                                    std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ")");
  const double target = convention == MassConvention::CellMass
                            ? 1.0 / static_cast<double>(n)
                            : 1.0;
  StochasticReport rep;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += m(i, j);
    const double dr = std::abs(row - target);
    rep.worst_deviation = std::max(rep.worst_deviation, dr);
    if (dr > tol && rep.pass) {
      rep.pass = false;
      rep.detail = "row " + std::to_string(i + 1) + " sums to " +
                   std::to_string(row);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < n; ++i) col += m(i, j);
    const double dc = std::abs(col - target);
    rep.worst_deviation = std::max(rep.worst_deviation, dc);
    if (dc > tol && rep.pass) {
      rep.pass = false;
      rep.detail = "column " + std::to_string(j + 1) + " sums to " +
                   std::to_string(col);
    }
  }
  return rep;
}

}  // namespace copex
