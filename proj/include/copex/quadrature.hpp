#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace copex {

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre_rule(int n);

// Integrates f over [a, b] with an n-point Gauss-Legendre rule.
double gauss_legendre(const std::function<double(double)>& f, double a,
                      double b, int nodes);

struct RootResult {
  double root = 0.0;
  double residual = 0.0;  // g(root)
  int iterations = 0;
};

// Bisection on [lo, hi]; requires a sign change. Stops when the bracket is
// narrower than tol or after max_iter halvings.
RootResult find_root_bisect(const std::function<double(double)>& g, double lo,
                            double hi, double tol, int max_iter = 200);

}  // namespace copex
