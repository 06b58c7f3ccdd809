#include "copex/lap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace copex {
namespace {

void check_input(const SquareMatrix& cost) {
  const std::size_t m = cost.size();
  if (m == 0) throw std::invalid_argument("assignment: empty matrix");
  if (m > (std::size_t{1} << 14))
    throw std::invalid_argument("assignment: matrix larger than 2^14");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (!std::isfinite(cost(i, j)))
        throw std::invalid_argument("assignment: non-finite entry at (" +
                                    std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ")");
}

double direct_value(const SquareMatrix& cost,
                    const std::vector<std::size_t>& perm) {
  double s = 0.0;
  for (std::size_t i = 0; i < perm.size(); ++i) s += cost(i, perm[i]);
  return s;
}

// Shortest-augmenting-path Hungarian on the min-sense matrix. Rows are
// inserted and columns scanned in increasing index order, with strict
// comparisons, so the run is deterministic.
void hungarian_min(const SquareMatrix& a, std::vector<std::size_t>& perm,
                   std::vector<double>& u_out, std::vector<double>& v_out) {
  const int n = static_cast<int>(a.size());
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);

  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), char{0});
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = 0;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = a(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }

  perm.assign(n, 0);
  for (int j = 1; j <= n; ++j)
    if (p[j]) perm[p[j] - 1] = static_cast<std::size_t>(j - 1);
  u_out.assign(n, 0.0);
  v_out.assign(n, 0.0);
  for (int i = 1; i <= n; ++i) u_out[i - 1] = u[i];
  for (int j = 1; j <= n; ++j) v_out[j - 1] = v[j];
}

// Moves the optimal permutation to the lexicographically smallest one among
// exact optima. All optimal assignments live inside the dual-tight edge set;
// row by row we probe smaller tight columns and keep a change only when the
// repaired matching still attains the incumbent objective exactly.
void lexicographic_refine(const SquareMatrix& w,
                          std::vector<std::size_t>& perm,
                          const std::vector<double>& u,
                          const std::vector<double>& v) {
  const std::size_t m = w.size();
  double scale = 0.0, assigned_slack = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) scale = std::max(scale, std::abs(w(i, j)));
    assigned_slack =
        std::max(assigned_slack, std::abs(w(i, perm[i]) - u[i] - v[perm[i]]));
  }
  const double tol =
      std::max(4.0 * assigned_slack, 1e-13 * std::max(1.0, scale));
  auto tight = [&](std::size_t i, std::size_t j) {
    return w(i, j) - u[i] - v[j] <= tol;
  };

  double best = direct_value(w, perm);
  std::vector<std::size_t> owner(m);
  for (std::size_t i = 0; i < m; ++i) owner[perm[i]] = i;
  std::vector<char> col_fixed(m, 0);
  std::vector<char> visited(m);

  // Kuhn-style augmenting search over tight, non-fixed columns.
  auto augment = [&](auto&& self, std::vector<std::size_t>& pm,
                     std::vector<std::size_t>& ow, std::size_t row) -> bool {
    for (std::size_t j = 0; j < m; ++j) {
      if (col_fixed[j] || visited[j] || !tight(row, j)) continue;
      visited[j] = 1;
      if (ow[j] == m || self(self, pm, ow, ow[j])) {
        pm[row] = j;
        ow[j] = row;
        return true;
      }
    }
    return false;
  };

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < perm[i]; ++j) {
      if (col_fixed[j] || !tight(i, j)) continue;
      std::vector<std::size_t> pm = perm, ow = owner;
      std::size_t displaced = ow[j];
      ow[pm[i]] = m;  // row i's old column becomes free
      pm[i] = j;
      ow[j] = i;
      std::fill(visited.begin(), visited.end(), char{0});
      visited[j] = 1;
      if (!augment(augment, pm, ow, displaced)) continue;
      double cand = direct_value(w, pm);
      if (cand <= best) {
        best = cand;
        perm.swap(pm);
        owner.swap(ow);
        break;
      }
    }
    col_fixed[perm[i]] = 1;
  }
}

}  // namespace

Assignment solve_lap(const SquareMatrix& cost, Sense sense) {
  check_input(cost);
  const std::size_t m = cost.size();

  SquareMatrix w = cost;
  if (sense == Sense::Max)
    for (double& x : w.data()) x = -x;

  Assignment out;
  out.sense = sense;
  hungarian_min(w, out.perm, out.row_potential, out.col_potential);
  lexicographic_refine(w, out.perm, out.row_potential, out.col_potential);
  if (sense == Sense::Max) {
    for (double& x : out.row_potential) x = -x;
    for (double& x : out.col_potential) x = -x;
  }
  out.value = direct_value(cost, out.perm);
  (void)m;
  return out;
}

Assignment brute_force_lap(const SquareMatrix& cost, Sense sense) {
  check_input(cost);
  const std::size_t m = cost.size();
  if (m > 10)
    throw std::invalid_argument("brute_force_lap: m > 10 not supported");

  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), std::size_t{0});

  Assignment out;
  out.sense = sense;
  out.perm = idx;
  out.value = direct_value(cost, idx);
  // next_permutation enumerates in lexicographic order; strict improvement
  // keeps the lexicographically smallest optimizer.
  while (std::next_permutation(idx.begin(), idx.end())) {
    double v = direct_value(cost, idx);
    if ((sense == Sense::Min && v < out.value) ||
        (sense == Sense::Max && v > out.value)) {
      out.value = v;
      out.perm = idx;
    }
  }
  return out;
}

}  // namespace copex
