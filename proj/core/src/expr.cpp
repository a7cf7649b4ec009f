#include "odra/expr.hpp"

#include <sstream>

namespace odra {

bool is_leaf(ExprOp op) {
  switch (op) {
    case ExprOp::Num:
    case ExprOp::Bool:
    case ExprOp::Ident:
    case ExprOp::Var:
    case ExprOp::Param:
      return true;
    default:
      return false;
  }
}

bool Expr::operator==(const Expr& other) const {
  if (op != other.op) return false;
  switch (op) {
    case ExprOp::Num:
      return num == other.num;
    case ExprOp::Bool:
      return bval == other.bval;
    case ExprOp::Ident:
    case ExprOp::Var:
    case ExprOp::Param:
      return name == other.name;
    default:
      break;
  }
  return args == other.args;
}

namespace {

// precedence: | < & < comparisons < +- < */ < unary
int precedence(ExprOp op) {
  switch (op) {
    case ExprOp::Or: return 1;
    case ExprOp::And: return 2;
    case ExprOp::Eq:
    case ExprOp::Ne:
    case ExprOp::Lt:
    case ExprOp::Le:
    case ExprOp::Gt:
    case ExprOp::Ge: return 3;
    case ExprOp::Add:
    case ExprOp::Sub: return 4;
    case ExprOp::Mul:
    case ExprOp::Div: return 5;
    case ExprOp::Neg:
    case ExprOp::Not: return 6;
    default: return 7;
  }
}

const char* op_symbol(ExprOp op) {
  switch (op) {
    case ExprOp::Add: return "+";
    case ExprOp::Sub: return "-";
    case ExprOp::Mul: return "*";
    case ExprOp::Div: return "/";
    case ExprOp::Eq: return "=";
    case ExprOp::Ne: return "!=";
    case ExprOp::Lt: return "<";
    case ExprOp::Le: return "<=";
    case ExprOp::Gt: return ">";
    case ExprOp::Ge: return ">=";
    case ExprOp::And: return "&";
    case ExprOp::Or: return "|";
    default: return "?";
  }
}

void render(const Expr& e, std::ostream& out);

void render_child(const Expr& child, int parent_prec, bool needs_parens_on_tie,
                  std::ostream& out) {
  const int child_prec = precedence(child.op);
  const bool parens =
      child_prec < parent_prec || (child_prec == parent_prec && needs_parens_on_tie);
  if (parens) out << "(";
  render(child, out);
  if (parens) out << ")";
}

void render(const Expr& e, std::ostream& out) {
  switch (e.op) {
    case ExprOp::Num: {
      if (e.num < 0) {
        out << "-" << to_string(Rational(-e.num));
      } else {
        out << to_string(e.num);
      }
      return;
    }
    case ExprOp::Bool:
      out << (e.bval ? "true" : "false");
      return;
    case ExprOp::Ident:
    case ExprOp::Var:
    case ExprOp::Param:
      out << e.name;
      return;
    case ExprOp::Neg:
      out << "-";
      render_child(e.args[0], precedence(ExprOp::Neg), false, out);
      return;
    case ExprOp::Not:
      out << "!";
      render_child(e.args[0], precedence(ExprOp::Not), false, out);
      return;
    case ExprOp::Min:
    case ExprOp::Max:
      out << (e.op == ExprOp::Min ? "min(" : "max(");
      render(e.args[0], out);
      out << ", ";
      render(e.args[1], out);
      out << ")";
      return;
    default: {
      const int prec = precedence(e.op);
      // - and / are left-associative and not commutative: parenthesize
      // same-precedence right children; comparisons are non-associative.
      const bool tie_right = e.op == ExprOp::Sub || e.op == ExprOp::Div ||
                             precedence(e.op) == 3;
      render_child(e.args[0], prec, false, out);
      out << " " << op_symbol(e.op) << " ";
      render_child(e.args[1], prec, tie_right, out);
      return;
    }
  }
}

}  // namespace

std::string render_expr(const Expr& expr) {
  std::ostringstream out;
  render(expr, out);
  return out.str();
}

}  // namespace odra
