#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "copex/expr.hpp"

namespace copex {

// A deterministic cost function c(x, y) on the unit square. Immutable after
// construction; safe to evaluate concurrently.
class CostFunction {
 public:
  CostFunction() = default;
  CostFunction(std::string source, std::function<double(double, double)> eval)
      : source_(std::move(source)), eval_(std::move(eval)) {}

  double operator()(double x, double y) const { return eval_(x, y); }

  const std::string& source() const { return source_; }

  // User-asserted hypothesis flags; checked numerically where they matter.
  bool claims_positive_cross_derivative() const { return cross_positive_; }
  bool claims_separable_phi() const { return separable_phi_; }

  // Declared singular points (axis-aligned); the discretizer's singular
  // policy decides how samples there are treated.
  const std::vector<AxisPoint>& singular_points() const { return singular_; }
  bool singular_sample(double x, double y) const {
    for (const AxisPoint& p : singular_) {
      if (p.slot == 0 && x == p.value) return true;
      if (p.slot == 1 && y == p.value) return true;
    }
    return false;
  }

  CostFunction& assert_positive_cross_derivative(bool v = true) {
    cross_positive_ = v;
    return *this;
  }
  CostFunction& assert_separable_phi(bool v = true) {
    separable_phi_ = v;
    return *this;
  }
  CostFunction& declare_singular(AxisPoint p) {
    singular_.push_back(p);
    return *this;
  }

 private:
  std::string source_;
  std::function<double(double, double)> eval_;
  bool cross_positive_ = false;
  bool separable_phi_ = false;
  std::vector<AxisPoint> singular_;
};

// Builds a cost function from an expression in x and y. Divisions whose
// divisor is a monomial in one variable register the zero locus as a
// declared singular point.
CostFunction parse_cost(std::string_view expr_text);

// Built-in costs: sin_sum, sinsin, sincos, sin_recip_cos, product, abs_diff.
CostFunction registry_cost(std::string_view name);
std::vector<std::string> registry_names();

}  // namespace copex
