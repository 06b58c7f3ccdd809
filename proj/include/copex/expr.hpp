#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace copex {

// Arithmetic expression tree over scalar variables. The grammar is small on
// purpose: numeric literals, named variables, pi, binary + - * /, unary minus,
// sin/cos/exp/abs, and powers by integer literal.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Number, Pi, Var, Add, Sub, Mul, Div, Neg, Call, Pow };

  Kind kind = Kind::Number;
  double number = 0.0;  // Number
  int slot = 0;         // Var: argument slot the variable binds to
  int exponent = 0;     // Pow
  std::string symbol;   // Var: variable name; Call: function name
  ExprPtr lhs, rhs;     // operands (only lhs for Neg/Call/Pow)
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Parses `text`; `vars[i]` is the variable name bound to argument slot i.
ExprPtr parse_expr(std::string_view text,
                   const std::vector<std::string>& vars = {"x", "y"});

// Evaluates with slot 0 = a, slot 1 = b. Division by a near-zero denominator
// is clamped to magnitude 1e-12 so evaluators stay total.
double eval_expr(const Expr& e, double a, double b = 0.0);

// Pretty-prints with minimal parentheses; re-parsing yields a structurally
// equal tree.
std::string to_string(const Expr& e);

bool structurally_equal(const Expr& a, const Expr& b);

// A potential singularity on a coordinate axis: variable `slot` == `value`.
struct AxisPoint {
  int slot;
  double value;
};

// Zero loci of divisors that are monomials in a single variable.
std::vector<AxisPoint> divisor_singularities(const Expr& e);

}  // namespace copex
