#pragma once

#include <functional>
#include <string>

#include "copex/costfn.hpp"
#include "copex/lap.hpp"
#include "copex/quadrature.hpp"

namespace copex {

// Closed-form extremal solution for costs with positive cross derivative:
// the diagonal coupling maximizes, the antidiagonal minimizes.
struct SupermodularResult {
  double value = 0.0;
  bool upper_frechet = true;  // true: copula M (diagonal), false: W
};

// Requires c.claims_positive_cross_derivative(); the hypothesis is
// sanity-checked by central differences on a 17x17 interior lattice, and the
// first violating lattice point is reported on failure.
// max -> integral of c(x,x); min -> integral of c(x,1-x), Gauss-Legendre.
SupermodularResult solve_supermodular(const CostFunction& c, Sense sense,
                                      int quad_nodes = 64);

// A concave-convex profile phi on [0, 2] for costs of the form c(x,y) =
// phi(x+y): concave left of the inflection, convex right of it.
struct PhiSpec {
  std::function<double(double)> phi;
  std::function<double(double)> dphi;  // optional; central differences if empty
  double inflection = 1.0;             // k in (0, 2)

  double derivative(double z) const;
  // Shape check: sampled second differences <= 0 on [0,k), >= 0 on (k,2]
  // (tolerance 1e-6). Throws std::invalid_argument on failure.
  void validate() const;
};

enum class PhiBranch { Interior, Antidiagonal };

// Optimal coupling for c(x,y) = phi(x+y): either the two-piece map
// x -> beta - x on [0,beta), x on [beta,1], or the antidiagonal x -> 1-x
// when the concave part dominates (no interior root).
struct PhiSolution {
  PhiBranch branch = PhiBranch::Interior;
  double beta = 0.0;       // meaningful for the interior branch
  double value = 0.0;      // optimal integral value
  double residual = 0.0;   // phi(2b) - phi(b) - b phi'(b) at beta

  double support_map(double x) const;
};

// beta solves phi(2b) - phi(b) = b phi'(b), bracketed by a 1024-point sign
// scan over (k/2, min(k,1)) (the root satisfies beta < k < 2 beta) and then
// bisected. No sign change means the antidiagonal branch, with value phi(1).
PhiSolution solve_phi_concave_convex(const PhiSpec& spec, double tol = 1e-14);

struct CertificateReport {
  bool pass = true;
  double root_residual = 0.0;
  double worst_diagonal_error = 0.0;  // |psi_{Gamma(x)}(x) - f(x)| max
  double worst_margin = 0.0;          // max of psi_{Gamma(x)}(xi) - f(xi)
  bool has_violation = false;
  double violation_x = 0.0, violation_xi = 0.0;
};

// Verifies the explicit dual certificate of optimality on a grid x grid
// lattice of (x, xi): the potential f equals psi along the support and
// dominates it everywhere (tolerance 1e-9). Passing certifies the coupling
// through the c-subdifferential criterion.
CertificateReport certify_phi_solution(const PhiSpec& spec,
                                       const PhiSolution& sol, int grid);
CertificateReport certify_phi_solution_serial(const PhiSpec& spec,
                                              const PhiSolution& sol,
                                              int grid);

// Numerically locates the inflection of phi by a sign scan of second
// differences on (0, 2).
double find_inflection(const std::function<double(double)>& phi);

}  // namespace copex
