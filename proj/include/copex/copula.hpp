#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "copex/costfn.hpp"
#include "copex/grid.hpp"

namespace copex {

using CopulaFn = std::function<double(double, double)>;

// Frechet-Hoeffding bounds M(x,y) = min(x,y), W(x,y) = max(x+y-1, 0).
double frechet_upper(double x, double y);
double frechet_lower(double x, double y);

// A shuffle of M: mass s_i - s_{i-1} spread along the diagonal (omega +1) or
// antidiagonal (omega -1) of the square [s_{i-1}, s_i) x [t_{pi(i)-1}, t_pi(i)).
// The t-partition is derived so every block is square.
class ShuffleOfM {
 public:
  // `s` has n+1 points 0 = s_0 < ... < s_n = 1; `pi` is a 0-based
  // permutation of {0..n-1}; omega[i] is +1 or -1.
  ShuffleOfM(std::vector<double> s, std::vector<std::size_t> pi,
             std::vector<int> omega);

  std::size_t pieces() const { return omega_.size(); }
  const std::vector<double>& s() const { return s_; }
  const std::vector<double>& t() const { return t_; }
  const std::vector<std::size_t>& permutation() const { return pi_; }
  const std::vector<int>& omega() const { return omega_; }

  // Cumulative mass on [0, x] x [0, y].
  double cdf(double x, double y) const;

  // The piecewise-linear support map: the y carried by mass at x.
  double support_map(double x) const;

 private:
  std::vector<double> s_, t_;
  std::vector<std::size_t> pi_;
  std::vector<int> omega_;
};

// Diagonal shuffle on the dyadic partition matching a discrete coupling.
ShuffleOfM shuffle_from_coupling(const DiscreteCoupling& coupling);

// Integral of c against the shuffle measure: sum of per-piece line integrals
// along the support, composite Gauss-Legendre with quad_nodes per piece.
double integrate_against_shuffle(const CostFunction& c, const ShuffleOfM& s,
                                 int quad_nodes = 32);

struct CopulaCheckReport {
  bool pass = true;
  std::string violation;          // empty when pass
  double x1 = 0, y1 = 0, x2 = 0, y2 = 0;  // first offending rectangle/point
  double worst_equality_error = 0.0;
  double worst_rectangle_mass = 0.0;  // most negative rectangle mass seen
};

// Checks grounding, margins, 2-increasingness and the Frechet sandwich on a
// (grid+1)^2 lattice; equality tolerance 1e-9, rectangle-mass slack 1e-12.
CopulaCheckReport validate_copula(const CopulaFn& c, int grid);

// Cumulative frequencies of a point set on an r x r grid.
class EmpiricalCopula {
 public:
  EmpiricalCopula(int resolution, std::span<const std::pair<double, double>> pts);

  int resolution() const { return r_; }
  std::int64_t sample_count() const { return n_; }

  // Exact at dyadic nodes (k/r, l/r); elsewhere the query floors to the node
  // at or below.
  double cdf(double x, double y) const;
  double node_cdf(int k, int l) const;  // k, l in 0..r
  double margin_x(int k) const { return node_cdf(k, r_); }
  double margin_y(int l) const { return node_cdf(r_, l); }

 private:
  int r_ = 1;
  std::int64_t n_ = 0;
  std::vector<std::int64_t> prefix_;  // (r+1)^2 inclusive prefix counts
};

EmpiricalCopula empirical_copula(std::span<const std::pair<double, double>> pts,
                                 int resolution);

}  // namespace copex
