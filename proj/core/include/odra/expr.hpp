#ifndef ODRA_EXPR_HPP
#define ODRA_EXPR_HPP

#include "odra/rational.hpp"

#include <string>
#include <vector>

namespace odra {

enum class ExprOp {
  Num,    // rational literal
  Bool,   // boolean literal
  Ident,  // unresolved name (only before resolution)
  Var,    // resolved state-variable reference
  Param,  // resolved model-parameter reference
  Neg,
  Add,
  Sub,
  Mul,
  Div,
  Eq,
  Ne,
  Lt,
  Le,
  Gt,
  Ge,
  And,
  Or,
  Not,
  Min,
  Max,
};

/// Expression tree of the modeling language. Plain value type; structural
/// equality ignores source locations.
struct Expr {
  ExprOp op = ExprOp::Num;
  Rational num;
  bool bval = false;
  std::string name;   // Ident/Var/Param
  std::size_t index = 0;  // Var/Param: position in the resolved model
  std::vector<Expr> args;
  int line = 0;
  int column = 0;

  static Expr number(Rational value) {
    Expr e;
    e.op = ExprOp::Num;
    e.num = std::move(value);
    return e;
  }
  static Expr boolean(bool value) {
    Expr e;
    e.op = ExprOp::Bool;
    e.bval = value;
    return e;
  }
  static Expr ident(std::string name, int line = 0, int column = 0) {
    Expr e;
    e.op = ExprOp::Ident;
    e.name = std::move(name);
    e.line = line;
    e.column = column;
    return e;
  }
  static Expr unary(ExprOp op, Expr arg) {
    Expr e;
    e.op = op;
    e.args.push_back(std::move(arg));
    return e;
  }
  static Expr binary(ExprOp op, Expr lhs, Expr rhs) {
    Expr e;
    e.op = op;
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    return e;
  }

  bool operator==(const Expr& other) const;
};

/// True for Num/Bool/Ident/Var/Param.
bool is_leaf(ExprOp op);

/// Stable infix rendering with minimal parentheses; reparsing the output
/// reproduces the tree.
std::string render_expr(const Expr& expr);

}  // namespace odra

#endif  // ODRA_EXPR_HPP
