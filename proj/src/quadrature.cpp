#include "copex/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace copex {

GaussRule gauss_legendre_rule(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre_rule: n < 1");
  GaussRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration on P_n from the Chebyshev-like initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

double gauss_legendre(const std::function<double(double)>& f, double a,
                      double b, int nodes) {
  GaussRule r = gauss_legendre_rule(nodes);
  const double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < nodes; ++i) s += r.weights[i] * f(mid + hw * r.nodes[i]);
  return s * hw;
}

RootResult find_root_bisect(const std::function<double(double)>& g, double lo,
                            double hi, double tol, int max_iter) {
  if (!(lo < hi)) throw std::invalid_argument("find_root_bisect: lo >= hi");
  double glo = g(lo), ghi = g(hi);
  if (!std::isfinite(glo) || !std::isfinite(ghi))
    throw std::runtime_error("find_root_bisect: non-finite evaluation");
  if (glo == 0.0) return {lo, 0.0, 0};
  if (ghi == 0.0) return {hi, 0.0, 0};
  if ((glo < 0.0) == (ghi < 0.0))
    throw std::invalid_argument("find_root_bisect: no sign change on bracket");

  RootResult out;
  for (int it = 0; it < max_iter && (hi - lo) > tol; ++it) {
    double mid = 0.5 * (lo + hi);
    double gm = g(mid);
    if (!std::isfinite(gm))
      throw std::runtime_error("find_root_bisect: non-finite evaluation");
    out.iterations = it + 1;
    if (gm == 0.0) {
      out.root = mid;
      out.residual = 0.0;
      return out;
    }
    if ((gm < 0.0) == (glo < 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  if ((hi - lo) > tol)
    throw std::runtime_error("find_root_bisect: no convergence within " +
                             std::to_string(max_iter) + " iterations");
  out.root = 0.5 * (lo + hi);
  out.residual = g(out.root);
  return out;
}

}  // namespace copex
