#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "grid.hpp"

namespace rdaopt {

// Comparison operators allowed in piecewise conditions.
enum class CmpOp { Le, Lt, Ge, Gt };

// Immutable arithmetic expression over the variables x and t.
//
// Grammar (whitespace insignificant):
//   expr    := term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?            right associative
//   primary := number | 'x' | 't' | 'pi'
//            | ('sin'|'cos'|'exp'|'abs') '(' expr ')'
//            | 'pw' '(' (expr cmp expr ':' expr ';')* expr ')'
//            | '(' expr ')'
//   cmp     := '<=' | '<' | '>=' | '>'
//
// A pw(...) node evaluates the first branch whose condition holds, else the
// trailing default. Angle unit is radians; pi is the double closest to pi.
class Expr {
 public:
  struct Node;

  Expr() = default;

  // Throws ParseError (with byte offset) on malformed input.
  static Expr parse(std::string_view source);

  // Throws EvalError on division by zero; otherwise total and pure.
  double eval(double x, double t) const;

  // Minimal-parenthesis text form; parse(str()) reproduces the same tree.
  std::string str() const;

  bool operator==(const Expr& other) const;
  bool operator!=(const Expr& other) const { return !(*this == other); }

  explicit operator bool() const { return root_ != nullptr; }

 private:
  explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  std::shared_ptr<const Node> root_;
  friend struct ExprBuilder;
};

// Pointwise evaluation at every grid node (x_i, t_n).
Field sample_on_grid(const Expr& expr, const Grid1D& grid);

// Pointwise evaluation at (x_i, 0): the time-independent slice form.
SpaceProfile sample_profile(const Expr& expr, const Grid1D& grid);

}  // namespace rdaopt
