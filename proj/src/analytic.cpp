#include "copex/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace copex {
namespace {

constexpr double kShapeTol = 1e-6;
constexpr double kCertTol = 1e-9;

double second_difference(const std::function<double(double)>& f, double z,
                         double h) {
  return (f(z + h) - 2.0 * f(z) + f(z - h)) / (h * h);
}

struct Certificate {
  // Potential f and touching functions psi for the two-piece support map.
  const PhiSpec& spec;
  double beta;
  double phi_beta, phi_2beta, dphi_beta;

  explicit Certificate(const PhiSpec& s, double b)
      : spec(s),
        beta(b),
        phi_beta(s.phi(b)),
        phi_2beta(s.phi(2.0 * b)),
        dphi_beta(s.derivative(b)) {}

  double f(double x) const {
    if (x < beta) return x * dphi_beta;
    return 0.5 * (spec.phi(2.0 * x) - phi_2beta) + beta * dphi_beta;
  }
  double psi(double x, double xi) const {
    if (x < beta)
      return spec.phi(beta - x + xi) + x * dphi_beta - phi_beta;
    return spec.phi(x + xi) - 0.5 * spec.phi(2.0 * x) - 0.5 * phi_2beta +
           beta * dphi_beta;
  }
};

CertificateReport run_certificate(const PhiSpec& spec, const PhiSolution& sol,
                                  int grid, bool parallel) {
  if (sol.branch != PhiBranch::Interior)
    throw std::invalid_argument(
        "certify: solution has no interior beta to certify");
  if (grid < 2) throw std::invalid_argument("certify: grid must be >= 2");

  const Certificate cert(spec, sol.beta);
  CertificateReport rep;
  rep.root_residual = std::abs(cert.phi_2beta - cert.phi_beta -
                               sol.beta * cert.dphi_beta);

  std::vector<double> xs(grid), fv(grid);
  for (int a = 0; a < grid; ++a) {
    xs[a] = static_cast<double>(a) / (grid - 1);
    fv[a] = cert.f(xs[a]);
  }

  std::vector<double> row_diag(grid), row_margin(grid);
  std::vector<int> row_arg(grid);
#pragma omp parallel for schedule(static) if (parallel)
  for (int a = 0; a < grid; ++a) {
    const double x = xs[a];
    double worst = -std::numeric_limits<double>::infinity();
    int arg = 0;
    for (int b = 0; b < grid; ++b) {
      const double margin = cert.psi(x, xs[b]) - fv[b];
      if (margin > worst) {
        worst = margin;
        arg = b;
      }
    }
    row_margin[a] = worst;
    row_arg[a] = arg;
    row_diag[a] = std::abs(cert.psi(x, x) - fv[a]);
  }
  for (int a = 0; a < grid; ++a) {
    rep.worst_diagonal_error = std::max(rep.worst_diagonal_error, row_diag[a]);
    if (row_margin[a] > rep.worst_margin || a == 0) {
      rep.worst_margin = row_margin[a];
      rep.violation_x = xs[a];
      rep.violation_xi = xs[row_arg[a]];
    }
  }
  rep.has_violation =
      rep.worst_margin > kCertTol || rep.worst_diagonal_error > kCertTol;
  rep.pass = !rep.has_violation;
  if (rep.pass) {
    rep.violation_x = 0.0;
    rep.violation_xi = 0.0;
  }
  return rep;
}

}  // namespace

double PhiSpec::derivative(double z) const {
  if (dphi) return dphi(z);
  const double h = 1e-6;
  return (phi(z + h) - phi(z - h)) / (2.0 * h);
}

void PhiSpec::validate() const {
  if (!phi) throw std::invalid_argument("phi spec: phi is empty");
  if (!(inflection > 0.0 && inflection < 2.0))
    throw std::invalid_argument("phi spec: inflection must lie in (0, 2)");
  const double k = inflection;
  const double h = 1e-4;
  const int samples = 32;
  for (int i = 0; i < samples; ++i) {
    const double z = k * (i + 0.5) / samples;
    if (z - h < 0.0 || z + h > 2.0) continue;
    if (second_difference(phi, z, h) > kShapeTol)
      throw std::invalid_argument(
          "phi spec: second difference positive on the concave side at z = " +
          std::to_string(z));
  }
  for (int i = 0; i < samples; ++i) {
    const double z = k + (2.0 - k) * (i + 0.5) / samples;
    if (z - h < 0.0 || z + h > 2.0) continue;
    if (second_difference(phi, z, h) < -kShapeTol)
      throw std::invalid_argument(
          "phi spec: second difference negative on the convex side at z = " +
          std::to_string(z));
  }
}

SupermodularResult solve_supermodular(const CostFunction& c, Sense sense,
                                      int quad_nodes) {
  if (!c.claims_positive_cross_derivative())
    throw std::invalid_argument(
        "solve_supermodular: cost does not claim a positive cross derivative");
  // Sanity-check the asserted hypothesis at a 17x17 interior lattice.
  const double h = 1e-4;
  for (int i = 1; i <= 17; ++i) {
    for (int j = 1; j <= 17; ++j) {
      const double x = i / 18.0, y = j / 18.0;
      const double cross = (c(x + h, y + h) - c(x + h, y - h) -
                            c(x - h, y + h) + c(x - h, y - h)) /
                           (4.0 * h * h);
      if (!(cross > 0.0))
        throw std::runtime_error(
            "solve_supermodular: cross derivative not positive at (" +
            std::to_string(x) + ", " + std::to_string(y) + ")");
    }
  }
  SupermodularResult out;
  if (sense == Sense::Max) {
    out.value = gauss_legendre([&](double x) { return c(x, x); }, 0.0, 1.0,
                               quad_nodes);
    out.upper_frechet = true;
  } else {
    out.value = gauss_legendre([&](double x) { return c(x, 1.0 - x); }, 0.0,
                               1.0, quad_nodes);
    out.upper_frechet = false;
  }
  return out;
}

PhiSolution solve_phi_concave_convex(const PhiSpec& spec, double tol) {
  spec.validate();
  auto g = [&](double b) {
    return spec.phi(2.0 * b) - spec.phi(b) - b * spec.derivative(b);
  };

  // The interior root satisfies beta < k < 2 beta, so it lives in
  // (k/2, min(k, 1)); scanning there skips spurious crossings where the
  // shape hypothesis only holds approximately.
  const double lo = 0.5 * spec.inflection;
  const double hi = std::min(spec.inflection, 1.0);
  const int scan = 1024;
  double prev_b = lo, prev_g = g(lo);
  double blo = 0.0, bhi = 0.0;
  bool bracketed = false;
  for (int i = 1; i < scan; ++i) {
    const double b = lo + (hi - lo) * i / (scan - 1);
    const double gb = g(b);
    if (prev_g == 0.0) {
      blo = bhi = prev_b;
      bracketed = true;
      break;
    }
    if ((gb < 0.0) != (prev_g < 0.0)) {
      blo = prev_b;
      bhi = b;
      bracketed = true;
      break;
    }
    prev_b = b;
    prev_g = gb;
  }

  PhiSolution out;
  if (!bracketed) {
    // Concave behaviour dominates: the antidiagonal coupling is optimal.
    out.branch = PhiBranch::Antidiagonal;
    out.value = spec.phi(1.0);
    out.residual = 0.0;
    return out;
  }
  out.branch = PhiBranch::Interior;
  if (blo == bhi) {
    out.beta = blo;
  } else {
    out.beta = find_root_bisect(g, blo, bhi, tol).root;
  }
  out.residual = g(out.beta);
  out.value = out.beta * spec.phi(out.beta) +
              gauss_legendre([&](double x) { return spec.phi(2.0 * x); },
                             out.beta, 1.0, 64);
  return out;
}

double PhiSolution::support_map(double x) const {
  if (branch == PhiBranch::Antidiagonal) return 1.0 - x;
  return x < beta ? beta - x : x;
}

CertificateReport certify_phi_solution(const PhiSpec& spec,
                                       const PhiSolution& sol, int grid) {
  return run_certificate(spec, sol, grid, true);
}

CertificateReport certify_phi_solution_serial(const PhiSpec& spec,
                                              const PhiSolution& sol,
                                              int grid) {
  return run_certificate(spec, sol, grid, false);
}

double find_inflection(const std::function<double(double)>& phi) {
  const double h = 1e-4;
  const int scan = 4096;
  double prev_z = 0.0, prev_d = 0.0;
  bool have_prev = false;
  for (int i = 1; i < scan; ++i) {
    const double z = 2.0 * i / scan;
    if (z - h <= 0.0 || z + h >= 2.0) continue;
    const double d = second_difference(phi, z, h);
    if (have_prev && (d >= 0.0) != (prev_d >= 0.0) && prev_d < 0.0)
      return 0.5 * (prev_z + z);
    prev_z = z;
    prev_d = d;
    have_prev = true;
  }
  throw std::runtime_error(
      "find_inflection: no concave-to-convex sign change located");
}

}  // namespace copex
