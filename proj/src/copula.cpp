#include "copex/copula.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "copex/quadrature.hpp"

namespace copex {
namespace {

void check_domain(double x, double y) {
  if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0))
    throw std::invalid_argument("copula: point outside the unit square");
}

}  // namespace

double frechet_upper(double x, double y) {
  check_domain(x, y);
  return std::min(x, y);
}

double frechet_lower(double x, double y) {
  check_domain(x, y);
  return std::max(x + y - 1.0, 0.0);
}

ShuffleOfM::ShuffleOfM(std::vector<double> s, std::vector<std::size_t> pi,
                       std::vector<int> omega)
    : s_(std::move(s)), pi_(std::move(pi)), omega_(std::move(omega)) {
  const std::size_t n = omega_.size();
  if (n == 0) throw std::invalid_argument("shuffle: needs at least one piece");
  if (s_.size() != n + 1 || pi_.size() != n)
    throw std::invalid_argument("shuffle: inconsistent parameter sizes");
  if (s_.front() != 0.0 || s_.back() != 1.0)
    throw std::invalid_argument("shuffle: partition must span [0, 1]");
  for (std::size_t i = 0; i + 1 < s_.size(); ++i)
    if (!(s_[i] < s_[i + 1]))
      throw std::invalid_argument("shuffle: partition not strictly increasing");
  std::vector<char> seen(n, 0);
  for (std::size_t v : pi_) {
    if (v >= n || seen[v])
      throw std::invalid_argument("shuffle: pi is not a permutation");
    seen[v] = 1;
  }
  for (int w : omega_)
    if (w != 1 && w != -1)
      throw std::invalid_argument("shuffle: omega values must be +1 or -1");

  // t-block pi_[i] has the width of s-block i.
  std::vector<double> widths(n);
  for (std::size_t i = 0; i < n; ++i) widths[pi_[i]] = s_[i + 1] - s_[i];
  t_.assign(n + 1, 0.0);
  for (std::size_t b = 0; b < n; ++b) t_[b + 1] = t_[b] + widths[b];
  t_.back() = 1.0;
}

double ShuffleOfM::cdf(double x, double y) const {
  check_domain(x, y);
  double total = 0.0;
  for (std::size_t i = 0; i < pieces(); ++i) {
    const double slo = s_[i], shi = s_[i + 1];
    const double tlo = t_[pi_[i]], thi = t_[pi_[i] + 1];
    const double xcap = std::min(x, shi);
    if (xcap <= slo) continue;
    double lo = slo, hi = xcap;
    if (omega_[i] == 1) {
      // support y = tlo + (x - slo): below the threshold while x <= slo+(y-tlo)
      hi = std::min(hi, slo + std::max(0.0, y - tlo));
    } else {
      // support y = thi - (x - slo): below the threshold once x >= slo+(thi-y)
      lo = std::max(lo, slo + std::min(thi - y, shi - slo));
    }
    if (hi > lo) total += hi - lo;
  }
  return total;
}

double ShuffleOfM::support_map(double x) const {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::invalid_argument("shuffle: x outside [0, 1]");
  std::size_t i =
      static_cast<std::size_t>(std::upper_bound(s_.begin(), s_.end(), x) -
                               s_.begin());
  i = (i == 0) ? 0 : i - 1;
  if (i >= pieces()) i = pieces() - 1;  // x == 1 falls into the last piece
  const double slo = s_[i];
  if (omega_[i] == 1) return t_[pi_[i]] + (x - slo);
  return t_[pi_[i] + 1] - (x - slo);
}

ShuffleOfM shuffle_from_coupling(const DiscreteCoupling& coupling) {
  const std::size_t m = coupling.perm.size();
  const double h = coupling.cell_mass();
  std::vector<double> s(m + 1);
  for (std::size_t i = 0; i <= m; ++i) s[i] = static_cast<double>(i) * h;
  s.back() = 1.0;
  return ShuffleOfM(std::move(s), coupling.perm, std::vector<int>(m, 1));
}

double integrate_against_shuffle(const CostFunction& c, const ShuffleOfM& s,
                                 int quad_nodes) {
  if (quad_nodes < 2)
    throw std::invalid_argument("integrate_against_shuffle: quad_nodes < 2");
  const GaussRule rule = gauss_legendre_rule(quad_nodes);
  double total = 0.0;
  for (std::size_t i = 0; i < s.pieces(); ++i) {
    const double slo = s.s()[i], shi = s.s()[i + 1];
    const double tlo = s.t()[s.permutation()[i]];
    const double thi = s.t()[s.permutation()[i] + 1];
    const int w = s.omega()[i];
    const double mid = 0.5 * (slo + shi), hw = 0.5 * (shi - slo);
    double piece = 0.0;
    for (int q = 0; q < quad_nodes; ++q) {
      const double x = mid + hw * rule.nodes[q];
      const double y = (w == 1) ? tlo + (x - slo) : thi - (x - slo);
      piece += rule.weights[q] * c(x, y);
    }
    total += piece * hw;
  }
  return total;
}

CopulaCheckReport validate_copula(const CopulaFn& c, int grid) {
  if (grid < 2) throw std::invalid_argument("validate_copula: grid < 2");
  const int g = grid;
  const double eq_tol = 1e-9;
  const double mass_slack = -1e-12;

  std::vector<double> nodes(g + 1);
  for (int a = 0; a <= g; ++a) nodes[a] = static_cast<double>(a) / g;
  std::vector<std::vector<double>> v(g + 1, std::vector<double>(g + 1));
  for (int a = 0; a <= g; ++a)
    for (int b = 0; b <= g; ++b) v[a][b] = c(nodes[a], nodes[b]);

  CopulaCheckReport rep;
  auto fail = [&](const std::string& what, double x1, double y1, double x2,
                  double y2) {
    if (!rep.pass) return;
    rep.pass = false;
    rep.violation = what;
    rep.x1 = x1;
    rep.y1 = y1;
    rep.x2 = x2;
    rep.y2 = y2;
  };

  for (int a = 0; a <= g; ++a) {
    double ex = std::abs(v[a][0]);
    rep.worst_equality_error = std::max(rep.worst_equality_error, ex);
    if (ex > eq_tol) fail("grounding C(x,0) != 0", nodes[a], 0, nodes[a], 0);
    ex = std::abs(v[0][a]);
    rep.worst_equality_error = std::max(rep.worst_equality_error, ex);
    if (ex > eq_tol) fail("grounding C(0,y) != 0", 0, nodes[a], 0, nodes[a]);
    ex = std::abs(v[a][g] - nodes[a]);
    rep.worst_equality_error = std::max(rep.worst_equality_error, ex);
    if (ex > eq_tol) fail("margin C(x,1) != x", nodes[a], 1, nodes[a], 1);
    ex = std::abs(v[g][a] - nodes[a]);
    rep.worst_equality_error = std::max(rep.worst_equality_error, ex);
    if (ex > eq_tol) fail("margin C(1,y) != y", 1, nodes[a], 1, nodes[a]);
  }
  for (int a = 0; a <= g; ++a) {
    for (int b = 0; b <= g; ++b) {
      const double lower = std::max(nodes[a] + nodes[b] - 1.0, 0.0);
      const double upper = std::min(nodes[a], nodes[b]);
      if (v[a][b] < lower - eq_tol || v[a][b] > upper + eq_tol)
        fail("Frechet sandwich violated", nodes[a], nodes[b], nodes[a],
             nodes[b]);
    }
  }
  rep.worst_rectangle_mass = 0.0;
  for (int a1 = 0; a1 <= g; ++a1)
    for (int a2 = a1 + 1; a2 <= g; ++a2)
      for (int b1 = 0; b1 <= g; ++b1)
        for (int b2 = b1 + 1; b2 <= g; ++b2) {
          const double mass =
              v[a2][b2] - v[a2][b1] - v[a1][b2] + v[a1][b1];
          rep.worst_rectangle_mass = std::min(rep.worst_rectangle_mass, mass);
          if (mass < mass_slack) {
            fail("rectangle mass negative", nodes[a1], nodes[b1], nodes[a2],
                 nodes[b2]);
          }
        }
  return rep;
}

EmpiricalCopula::EmpiricalCopula(
    int resolution, std::span<const std::pair<double, double>> pts)
    : r_(resolution), n_(static_cast<std::int64_t>(pts.size())) {
  if (r_ < 1) throw std::invalid_argument("empirical copula: resolution < 1");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(r_) * r_, 0);
  for (std::size_t idx = 0; idx < pts.size(); ++idx) {
    const auto [x, y] = pts[idx];
    if (!(x >= 0.0 && x < 1.0 && y >= 0.0 && y < 1.0))
      throw std::invalid_argument("empirical copula: point " +
                                  std::to_string(idx) +
                                  " outside [0,1) x [0,1)");
    const int kx = std::min(r_ - 1, static_cast<int>(x * r_));
    const int ky = std::min(r_ - 1, static_cast<int>(y * r_));
    ++counts[static_cast<std::size_t>(kx) * r_ + ky];
  }
  prefix_.assign(static_cast<std::size_t>(r_ + 1) * (r_ + 1), 0);
  auto pref = [&](int k, int l) -> std::int64_t& {
    return prefix_[static_cast<std::size_t>(k) * (r_ + 1) + l];
  };
  for (int k = 1; k <= r_; ++k)
    for (int l = 1; l <= r_; ++l)
      pref(k, l) = counts[static_cast<std::size_t>(k - 1) * r_ + (l - 1)] +
                   pref(k - 1, l) + pref(k, l - 1) - pref(k - 1, l - 1);
}

double EmpiricalCopula::node_cdf(int k, int l) const {
  if (k < 0 || k > r_ || l < 0 || l > r_)
    throw std::invalid_argument("empirical copula: node outside grid");
  if (n_ == 0) return 0.0;
  return static_cast<double>(
             prefix_[static_cast<std::size_t>(k) * (r_ + 1) + l]) /
         static_cast<double>(n_);
}

double EmpiricalCopula::cdf(double x, double y) const {
  check_domain(x, y);
  const int k = std::min(r_, static_cast<int>(std::floor(x * r_)));
  const int l = std::min(r_, static_cast<int>(std::floor(y * r_)));
  return node_cdf(k, l);
}

EmpiricalCopula empirical_copula(std::span<const std::pair<double, double>> pts,
                                 int resolution) {
  return EmpiricalCopula(resolution, pts);
}

}  // namespace copex
