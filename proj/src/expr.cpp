#include "copex/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>

namespace copex {
namespace {

constexpr double kDivClamp = 1e-12;

ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

ExprPtr number(double v) {
  Expr e;
  e.kind = Expr::Kind::Number;
  e.number = v;
  return make(std::move(e));
}

ExprPtr binary(Expr::Kind k, ExprPtr l, ExprPtr r) {
  Expr e;
  e.kind = k;
  e.lhs = std::move(l);
  e.rhs = std::move(r);
  return make(std::move(e));
}

bool is_func_name(std::string_view s) {
  return s == "sin" || s == "cos" || s == "exp" || s == "abs";
}

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  ExprPtr run() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("empty expression", pos_);
    ExprPtr e = parse_sum();
    skip_ws();
    if (pos_ < text_.size())
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  ExprPtr parse_sum() {
    ExprPtr e = parse_term();
    for (;;) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        ExprPtr r = parse_term();
        e = binary(c == '+' ? Expr::Kind::Add : Expr::Kind::Sub, e, r);
      } else {
        return e;
      }
    }
  }

  ExprPtr parse_term() {
    ExprPtr e = parse_unary();
    for (;;) {
      char c = peek();
      if (c == '*' || c == '/') {
        ++pos_;
        ExprPtr r = parse_unary();
        e = binary(c == '*' ? Expr::Kind::Mul : Expr::Kind::Div, e, r);
      } else {
        return e;
      }
    }
  }

  ExprPtr parse_unary() {
    if (peek() == '-') {
      ++pos_;
      Expr e;
      e.kind = Expr::Kind::Neg;
      e.lhs = parse_unary();
      return make(std::move(e));
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    std::size_t at = pos_;
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected integer exponent", pos_);
    long v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000) throw ParseError("exponent too large", at);
      ++pos_;
    }
    Expr e;
    e.kind = Expr::Kind::Pow;
    e.exponent = static_cast<int>(neg ? -v : v);
    e.lhs = std::move(base);
    return make(std::move(e));
  }

  ExprPtr parse_atom() {
    char c = peek();
    std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      ExprPtr e = parse_sum();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
      return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      return parse_ident(at);
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  ExprPtr parse_number() {
    const char* begin = text_.data() + pos_;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin) throw ParseError("malformed number", pos_);
    pos_ += static_cast<std::size_t>(end - begin);
    return number(v);
  }

  ExprPtr parse_ident(std::size_t at) {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (name == "pi") {
      Expr e;
      e.kind = Expr::Kind::Pi;
      return make(std::move(e));
    }
    if (is_func_name(name)) {
      if (peek() != '(')
        throw ParseError("function '" + name + "' requires an argument list",
                         at);
      ++pos_;
      ExprPtr arg = parse_sum();
      if (peek() == ',')
        throw ParseError("arity mismatch: '" + name + "' takes one argument",
                         pos_);
      expect(')');
      Expr e;
      e.kind = Expr::Kind::Call;
      e.symbol = name;
      e.lhs = std::move(arg);
      return make(std::move(e));
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name) {
        Expr e;
        e.kind = Expr::Kind::Var;
        e.slot = static_cast<int>(i);
        e.symbol = name;
        return make(std::move(e));
      }
    }
    throw ParseError("unknown identifier '" + name + "'", at);
  }

  void expect(char c) {
    if (peek() != c) {
      if (pos_ >= text_.size())
        throw ParseError("unexpected end of input", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }
};

double ipow(double base, int e) {
  if (e < 0) {
    double d = ipow(base, -e);
    if (std::abs(d) < kDivClamp) d = std::copysign(kDivClamp, d == 0 ? 1 : d);
    return 1.0 / d;
  }
  double r = 1.0;
  double b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return 2;
    case Expr::Kind::Neg:
      return 3;
    case Expr::Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

void print(const Expr& e, std::string& out, int parent, bool right_operand) {
  int prec = precedence(e);
  bool parens = prec < parent || (prec == parent && right_operand &&
                                  (e.kind == Expr::Kind::Add ||
                                   e.kind == Expr::Kind::Sub ||
                                   e.kind == Expr::Kind::Mul ||
                                   e.kind == Expr::Kind::Div));
  if (parens) out += '(';
  switch (e.kind) {
    case Expr::Kind::Number: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", e.number);
      out += buf;
      break;
    }
    case Expr::Kind::Pi:
      out += "pi";
      break;
    case Expr::Kind::Var:
      out += e.symbol;
      break;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Mul:
    case Expr::Kind::Div: {
      const char* op = e.kind == Expr::Kind::Add   ? "+"
                       : e.kind == Expr::Kind::Sub ? "-"
                       : e.kind == Expr::Kind::Mul ? "*"
                                                   : "/";
      print(*e.lhs, out, prec, false);
      out += op;
      print(*e.rhs, out, prec, true);
      break;
    }
    case Expr::Kind::Neg:
      out += '-';
      print(*e.lhs, out, prec, true);
      break;
    case Expr::Kind::Call:
      out += e.symbol;
      out += '(';
      print(*e.lhs, out, 0, false);
      out += ')';
      break;
    case Expr::Kind::Pow:
      print(*e.lhs, out, prec + 1, false);
      out += '^';
      out += std::to_string(e.exponent);
      break;
  }
  if (parens) out += ')';
}

// A monomial divisor in one variable: product of constants and powers of a
// single variable. Returns the slot, or -1.
int monomial_slot(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
    case Expr::Kind::Pi:
      return -1;
    case Expr::Kind::Var:
      return e.slot;
    case Expr::Kind::Neg:
      return monomial_slot(*e.lhs);
    case Expr::Kind::Pow:
      return e.exponent > 0 ? monomial_slot(*e.lhs) : -2;
    case Expr::Kind::Mul: {
      int a = monomial_slot(*e.lhs);
      int b = monomial_slot(*e.rhs);
      if (a == -2 || b == -2) return -2;
      if (a == -1) return b;
      if (b == -1) return a;
      return -2;  // two variable occurrences: not a monomial in one variable
    }
    default:
      return -2;
  }
}

void collect_singularities(const Expr& e, std::vector<AxisPoint>& out) {
  if (e.kind == Expr::Kind::Div) {
    int slot = monomial_slot(*e.rhs);
    if (slot >= 0) {
      bool seen = false;
      for (const AxisPoint& p : out)
        if (p.slot == slot && p.value == 0.0) seen = true;
      if (!seen) out.push_back({slot, 0.0});
    }
  }
  if (e.kind == Expr::Kind::Pow && e.exponent < 0) {
    int slot = monomial_slot(*e.lhs);
    if (slot >= 0) {
      bool seen = false;
      for (const AxisPoint& p : out)
        if (p.slot == slot && p.value == 0.0) seen = true;
      if (!seen) out.push_back({slot, 0.0});
    }
  }
  if (e.lhs) collect_singularities(*e.lhs, out);
  if (e.rhs) collect_singularities(*e.rhs, out);
}

}  // namespace

ExprPtr parse_expr(std::string_view text, const std::vector<std::string>& vars) {
  return Parser(text, vars).run();
}

double eval_expr(const Expr& e, double a, double b) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return e.number;
    case Expr::Kind::Pi:
      return std::numbers::pi;
    case Expr::Kind::Var:
      return e.slot == 0 ? a : b;
    case Expr::Kind::Add:
      return eval_expr(*e.lhs, a, b) + eval_expr(*e.rhs, a, b);
    case Expr::Kind::Sub:
      return eval_expr(*e.lhs, a, b) - eval_expr(*e.rhs, a, b);
    case Expr::Kind::Mul:
      return eval_expr(*e.lhs, a, b) * eval_expr(*e.rhs, a, b);
    case Expr::Kind::Div: {
      double den = eval_expr(*e.rhs, a, b);
      if (std::abs(den) < kDivClamp)
        den = std::copysign(kDivClamp, den == 0.0 ? 1.0 : den);
      return eval_expr(*e.lhs, a, b) / den;
    }
    case Expr::Kind::Neg:
      return -eval_expr(*e.lhs, a, b);
    case Expr::Kind::Call: {
      double v = eval_expr(*e.lhs, a, b);
      if (e.symbol == "sin") return std::sin(v);
      if (e.symbol == "cos") return std::cos(v);
      if (e.symbol == "exp") return std::exp(v);
      return std::abs(v);
    }
    case Expr::Kind::Pow:
      return ipow(eval_expr(*e.lhs, a, b), e.exponent);
  }
  return 0.0;
}

std::string to_string(const Expr& e) {
  std::string out;
  print(e, out, 0, false);
  return out;
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Number:
      return a.number == b.number;
    case Expr::Kind::Pi:
      return true;
    case Expr::Kind::Var:
      return a.slot == b.slot && a.symbol == b.symbol;
    case Expr::Kind::Pow:
      return a.exponent == b.exponent && structurally_equal(*a.lhs, *b.lhs);
    case Expr::Kind::Neg:
      return structurally_equal(*a.lhs, *b.lhs);
    case Expr::Kind::Call:
      return a.symbol == b.symbol && structurally_equal(*a.lhs, *b.lhs);
    default:
      return structurally_equal(*a.lhs, *b.lhs) &&
             structurally_equal(*a.rhs, *b.rhs);
  }
}

std::vector<AxisPoint> divisor_singularities(const Expr& e) {
  std::vector<AxisPoint> out;
  collect_singularities(e, out);
  return out;
}

}  // namespace copex
