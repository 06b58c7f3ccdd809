#include "copex/costfn.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace copex {
namespace {

constexpr double kPi = std::numbers::pi;

double clamped_recip_arg(double x) { return std::max(x, 1e-12); }

}  // namespace

CostFunction parse_cost(std::string_view expr_text) {
  ExprPtr tree = parse_expr(expr_text, {"x", "y"});
  CostFunction c(std::string(expr_text),
                 [tree](double x, double y) { return eval_expr(*tree, x, y); });
  for (const AxisPoint& p : divisor_singularities(*tree)) c.declare_singular(p);
  return c;
}

CostFunction registry_cost(std::string_view name) {
  if (name == "sin_sum") {
    CostFunction c("sin(pi*(x+y))",
                   [](double x, double y) { return std::sin(kPi * (x + y)); });
    c.assert_separable_phi();
    return c;
  }
  if (name == "sinsin") {
    return CostFunction("sin(pi*x)*sin(pi*y)", [](double x, double y) {
      return std::sin(kPi * x) * std::sin(kPi * y);
    });
  }
  if (name == "sincos") {
    return CostFunction("sin(pi*x)*cos(pi*y)", [](double x, double y) {
      return std::sin(kPi * x) * std::cos(kPi * y);
    });
  }
  if (name == "sin_recip_cos") {
    CostFunction c("sin(pi/x)*cos(pi*y)", [](double x, double y) {
      return std::sin(kPi / clamped_recip_arg(x)) * std::cos(kPi * y);
    });
    c.declare_singular({0, 0.0});
    return c;
  }
  if (name == "product") {
    CostFunction c("x*y", [](double x, double y) { return x * y; });
    c.assert_positive_cross_derivative();
    return c;
  }
  if (name == "abs_diff") {
    return CostFunction("abs(x-y)",
                        [](double x, double y) { return std::abs(x - y); });
  }
  throw std::invalid_argument("unknown registry cost '" + std::string(name) +
                              "'");
}

std::vector<std::string> registry_names() {
  return {"sin_sum", "sinsin", "sincos", "sin_recip_cos", "product",
          "abs_diff"};
}

}  // namespace copex
