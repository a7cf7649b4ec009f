#include "odra/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace odra {

namespace {

enum class Tok {
  Ident, Int, Decimal, String,
  KwCtmc, KwConst, KwParam, KwFormula, KwModule, KwEndmodule, KwLabel, KwInit, KwBool,
  KwTrue, KwFalse, KwMin, KwMax,
  LParen, RParen, LBracket, RBracket,
  Semi, Colon, Comma, DotDot, Arrow, Prime,
  Assign,  // '=' (also the equality comparison)
  Neq, Lt, Le, Gt, Ge,
  Plus, Minus, Star, Slash, Amp, Pipe, Bang,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

const std::map<std::string, Tok> kKeywords = {
    {"ctmc", Tok::KwCtmc},     {"const", Tok::KwConst},   {"param", Tok::KwParam},
    {"formula", Tok::KwFormula}, {"module", Tok::KwModule}, {"endmodule", Tok::KwEndmodule},
    {"label", Tok::KwLabel},   {"init", Tok::KwInit},     {"bool", Tok::KwBool},
    {"true", Tok::KwTrue},     {"false", Tok::KwFalse},   {"min", Tok::KwMin},
    {"max", Tok::KwMax},
};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  size_t i = 0;
  int line = 1, col = 1;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (src[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  auto push = [&](Tok kind, size_t len) {
    out.push_back({kind, src.substr(i, len), line, col});
    advance(len);
  };

  while (i < src.size()) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t len = 1;
      while (i + len < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i + len])) || src[i + len] == '_'))
        ++len;
      const std::string word = src.substr(i, len);
      auto kw = kKeywords.find(word);
      push(kw == kKeywords.end() ? Tok::Ident : kw->second, len);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t len = 1;
      while (i + len < src.size() && std::isdigit(static_cast<unsigned char>(src[i + len]))) ++len;
      bool decimal = false;
      // "0.5" is a decimal literal, but "0..5" is INT DOTDOT INT
      if (i + len + 1 < src.size() && src[i + len] == '.' &&
          std::isdigit(static_cast<unsigned char>(src[i + len + 1]))) {
        decimal = true;
        ++len;
        while (i + len < src.size() && std::isdigit(static_cast<unsigned char>(src[i + len])))
          ++len;
      }
      push(decimal ? Tok::Decimal : Tok::Int, len);
      continue;
    }
    if (c == '"') {
      size_t len = 1;
      while (i + len < src.size() && src[i + len] != '"' && src[i + len] != '\n') ++len;
      if (i + len >= src.size() || src[i + len] != '"')
        throw SourceError(SourceError::Kind::Lex, line, col, "unterminated string literal");
      out.push_back({Tok::String, src.substr(i + 1, len - 1), line, col});
      advance(len + 1);
      continue;
    }
    auto two = [&](char a, char b) {
      return c == a && i + 1 < src.size() && src[i + 1] == b;
    };
    if (two('-', '>')) { push(Tok::Arrow, 2); continue; }
    if (two('.', '.')) { push(Tok::DotDot, 2); continue; }
    if (two('!', '=')) { push(Tok::Neq, 2); continue; }
    if (two('<', '=')) { push(Tok::Le, 2); continue; }
    if (two('>', '=')) { push(Tok::Ge, 2); continue; }
    switch (c) {
      case '(': push(Tok::LParen, 1); continue;
      case ')': push(Tok::RParen, 1); continue;
      case '[': push(Tok::LBracket, 1); continue;
      case ']': push(Tok::RBracket, 1); continue;
      case ';': push(Tok::Semi, 1); continue;
      case ':': push(Tok::Colon, 1); continue;
      case ',': push(Tok::Comma, 1); continue;
      case '\'': push(Tok::Prime, 1); continue;
      case '=': push(Tok::Assign, 1); continue;
      case '<': push(Tok::Lt, 1); continue;
      case '>': push(Tok::Gt, 1); continue;
      case '+': push(Tok::Plus, 1); continue;
      case '-': push(Tok::Minus, 1); continue;
      case '*': push(Tok::Star, 1); continue;
      case '/': push(Tok::Slash, 1); continue;
      case '&': push(Tok::Amp, 1); continue;
      case '|': push(Tok::Pipe, 1); continue;
      case '!': push(Tok::Bang, 1); continue;
      default:
        throw SourceError(SourceError::Kind::Lex, line, col,
                          std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : tokens_(lex(src)) {}

  ModelAst parse_model() {
    expect(Tok::KwCtmc, "expected 'ctmc' model header");
    ModelAst ast;
    while (true) {
      if (at(Tok::KwConst)) {
        ConstDecl d;
        d.line = cur().line;
        d.column = cur().column;
        next();
        d.name = expect_ident();
        expect(Tok::Assign, "expected '='");
        d.value = parse_number();
        expect(Tok::Semi, "expected ';'");
        ast.constants.push_back(std::move(d));
      } else if (at(Tok::KwParam)) {
        ParamDecl d;
        d.line = cur().line;
        d.column = cur().column;
        next();
        d.name = expect_ident();
        expect(Tok::Semi, "expected ';'");
        ast.parameters.push_back(std::move(d));
      } else if (at(Tok::KwFormula)) {
        FormulaDecl d;
        d.line = cur().line;
        d.column = cur().column;
        next();
        d.name = expect_ident();
        expect(Tok::Assign, "expected '='");
        d.body = parse_expr();
        expect(Tok::Semi, "expected ';'");
        ast.formulas.push_back(std::move(d));
      } else {
        break;
      }
    }
    if (!at(Tok::KwModule))
      throw error(SourceError::Kind::Parse, "expected at least one module");
    while (at(Tok::KwModule)) ast.modules.push_back(parse_module());
    while (at(Tok::KwLabel)) {
      LabelDef d;
      d.line = cur().line;
      d.column = cur().column;
      next();
      if (!at(Tok::String)) throw error(SourceError::Kind::Parse, "expected label name string");
      d.name = cur().text;
      next();
      expect(Tok::Assign, "expected '='");
      d.predicate = parse_expr();
      expect(Tok::Semi, "expected ';'");
      ast.labels.push_back(std::move(d));
    }
    expect(Tok::End, "expected end of input");
    validate(ast);
    return ast;
  }

  Expr parse_single_expression() {
    Expr e = parse_expr();
    expect(Tok::End, "expected end of input");
    return e;
  }

 private:
  const Token& cur() const { return tokens_[pos_]; }
  bool at(Tok k) const { return cur().kind == k; }
  void next() { if (pos_ + 1 < tokens_.size()) ++pos_; }

  SourceError error(SourceError::Kind kind, const std::string& message) const {
    return SourceError(kind, cur().line, cur().column, message);
  }

  void expect(Tok k, const std::string& message) {
    if (!at(k)) throw error(SourceError::Kind::Parse, message + " (got '" + cur().text + "')");
    if (k != Tok::End) next();
  }

  std::string expect_ident() {
    if (!at(Tok::Ident)) throw error(SourceError::Kind::Parse, "expected identifier");
    std::string name = cur().text;
    next();
    return name;
  }

  // number := ['-'] (INT ['/' INT] | DECIMAL)
  Rational parse_number() {
    bool negative = false;
    if (at(Tok::Minus)) {
      negative = true;
      next();
    }
    Rational value;
    if (at(Tok::Int)) {
      Integer num(cur().text);
      next();
      if (at(Tok::Slash)) {
        next();
        if (!at(Tok::Int)) throw error(SourceError::Kind::Parse, "expected denominator");
        Integer den(cur().text);
        if (den == 0) throw error(SourceError::Kind::Range, "zero denominator");
        next();
        value = Rational(num, den);
      } else {
        value = Rational(num);
      }
    } else if (at(Tok::Decimal)) {
      value = parse_rational(cur().text);
      next();
    } else {
      throw error(SourceError::Kind::Parse, "expected number");
    }
    return negative ? Rational(-value) : value;
  }

  long parse_int() {
    bool negative = false;
    if (at(Tok::Minus)) {
      negative = true;
      next();
    }
    if (!at(Tok::Int)) throw error(SourceError::Kind::Parse, "expected integer");
    long v = std::stol(cur().text);
    next();
    return negative ? -v : v;
  }

  ModuleDef parse_module() {
    ModuleDef m;
    m.line = cur().line;
    m.column = cur().column;
    expect(Tok::KwModule, "expected 'module'");
    m.name = expect_ident();
    while (at(Tok::Ident)) m.variables.push_back(parse_var_decl());
    while (at(Tok::LBracket)) m.commands.push_back(parse_command());
    expect(Tok::KwEndmodule, "expected 'endmodule'");
    return m;
  }

  VarDecl parse_var_decl() {
    VarDecl v;
    v.line = cur().line;
    v.column = cur().column;
    v.name = expect_ident();
    expect(Tok::Colon, "expected ':'");
    if (at(Tok::KwBool)) {
      next();
      v.is_bool = true;
      v.lo = 0;
      v.hi = 1;
      expect(Tok::KwInit, "expected 'init'");
      if (at(Tok::KwTrue)) {
        v.init = 1;
        next();
      } else if (at(Tok::KwFalse)) {
        v.init = 0;
        next();
      } else {
        throw error(SourceError::Kind::Parse, "expected 'true' or 'false'");
      }
    } else {
      expect(Tok::LBracket, "expected '[' or 'bool'");
      v.lo = parse_int();
      expect(Tok::DotDot, "expected '..'");
      v.hi = parse_int();
      expect(Tok::RBracket, "expected ']'");
      expect(Tok::KwInit, "expected 'init'");
      v.init = parse_int();
    }
    expect(Tok::Semi, "expected ';'");
    return v;
  }

  Command parse_command() {
    Command c;
    c.line = cur().line;
    c.column = cur().column;
    expect(Tok::LBracket, "expected '['");
    if (at(Tok::Ident)) {
      c.action = cur().text;
      next();
    }
    expect(Tok::RBracket, "expected ']'");
    c.guard = parse_expr();
    expect(Tok::Arrow, "expected '->'");
    c.alternatives.push_back(parse_alternative());
    while (at(Tok::Plus)) {
      next();
      c.alternatives.push_back(parse_alternative());
    }
    expect(Tok::Semi, "expected ';'");
    return c;
  }

  Alternative parse_alternative() {
    Alternative alt;
    alt.rate = parse_expr();
    expect(Tok::Colon, "expected ':'");
    alt.assignments.push_back(parse_assignment());
    while (at(Tok::Amp)) {
      next();
      alt.assignments.push_back(parse_assignment());
    }
    return alt;
  }

  Assignment parse_assignment() {
    Assignment a;
    expect(Tok::LParen, "expected '('");
    a.line = cur().line;
    a.column = cur().column;
    a.var = expect_ident();
    expect(Tok::Prime, "expected '''");
    expect(Tok::Assign, "expected '='");
    a.value = parse_expr();
    expect(Tok::RParen, "expected ')'");
    return a;
  }

  Expr parse_expr() { return parse_or(); }

  Expr locate(Expr e, int line, int column) {
    e.line = line;
    e.column = column;
    return e;
  }

  Expr parse_or() {
    Expr lhs = parse_and();
    while (at(Tok::Pipe)) {
      const int l = cur().line, c = cur().column;
      next();
      lhs = locate(Expr::binary(ExprOp::Or, std::move(lhs), parse_and()), l, c);
    }
    return lhs;
  }

  Expr parse_and() {
    Expr lhs = parse_not();
    while (at(Tok::Amp)) {
      const int l = cur().line, c = cur().column;
      next();
      lhs = locate(Expr::binary(ExprOp::And, std::move(lhs), parse_not()), l, c);
    }
    return lhs;
  }

  Expr parse_not() {
    if (at(Tok::Bang)) {
      const int l = cur().line, c = cur().column;
      next();
      return locate(Expr::unary(ExprOp::Not, parse_not()), l, c);
    }
    return parse_comparison();
  }

  Expr parse_comparison() {
    Expr lhs = parse_additive();
    ExprOp op;
    switch (cur().kind) {
      case Tok::Assign: op = ExprOp::Eq; break;
      case Tok::Neq: op = ExprOp::Ne; break;
      case Tok::Lt: op = ExprOp::Lt; break;
      case Tok::Le: op = ExprOp::Le; break;
      case Tok::Gt: op = ExprOp::Gt; break;
      case Tok::Ge: op = ExprOp::Ge; break;
      default: return lhs;
    }
    const int l = cur().line, c = cur().column;
    next();
    return locate(Expr::binary(op, std::move(lhs), parse_additive()), l, c);
  }

  Expr parse_additive() {
    Expr lhs = parse_multiplicative();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      const ExprOp op = at(Tok::Plus) ? ExprOp::Add : ExprOp::Sub;
      const int l = cur().line, c = cur().column;
      next();
      lhs = locate(Expr::binary(op, std::move(lhs), parse_multiplicative()), l, c);
    }
    return lhs;
  }

  Expr parse_multiplicative() {
    Expr lhs = parse_unary();
    while (at(Tok::Star) || at(Tok::Slash)) {
      const ExprOp op = at(Tok::Star) ? ExprOp::Mul : ExprOp::Div;
      const int l = cur().line, c = cur().column;
      next();
      lhs = locate(Expr::binary(op, std::move(lhs), parse_unary()), l, c);
    }
    return lhs;
  }

  Expr parse_unary() {
    if (at(Tok::Minus)) {
      const int l = cur().line, c = cur().column;
      next();
      return locate(Expr::unary(ExprOp::Neg, parse_unary()), l, c);
    }
    return parse_atom();
  }

  Expr parse_atom() {
    const int l = cur().line, c = cur().column;
    switch (cur().kind) {
      case Tok::Int: {
        Expr e = Expr::number(Rational(Integer(cur().text)));
        next();
        return locate(std::move(e), l, c);
      }
      case Tok::Decimal: {
        Expr e = Expr::number(parse_rational(cur().text));
        next();
        return locate(std::move(e), l, c);
      }
      case Tok::KwTrue:
        next();
        return locate(Expr::boolean(true), l, c);
      case Tok::KwFalse:
        next();
        return locate(Expr::boolean(false), l, c);
      case Tok::Ident: {
        Expr e = Expr::ident(cur().text, l, c);
        next();
        return e;
      }
      case Tok::KwMin:
      case Tok::KwMax: {
        const ExprOp op = at(Tok::KwMin) ? ExprOp::Min : ExprOp::Max;
        next();
        expect(Tok::LParen, "expected '('");
        Expr a = parse_expr();
        expect(Tok::Comma, "expected ','");
        Expr b = parse_expr();
        expect(Tok::RParen, "expected ')'");
        return locate(Expr::binary(op, std::move(a), std::move(b)), l, c);
      }
      case Tok::LParen: {
        next();
        Expr e = parse_expr();
        expect(Tok::RParen, "expected ')'");
        return e;
      }
      default:
        throw error(SourceError::Kind::Parse, "expected expression (got '" + cur().text + "')");
    }
  }

  // ---- semantic validation -------------------------------------------------

  enum class NameKind { Const, Param, Formula, Var };
  enum class ExprType { Number, Boolean };

  struct NameInfo {
    NameKind kind;
    size_t index;        // into the corresponding decl list
    size_t module_index; // for Var
    bool is_bool;        // for Var
  };

  void validate(const ModelAst& ast) {
    std::map<std::string, NameInfo> names;
    auto declare = [&](const std::string& name, NameInfo info, int line, int col) {
      if (!names.emplace(name, info).second)
        throw SourceError(SourceError::Kind::NameResolution, line, col,
                          "duplicate declaration of '" + name + "'");
    };
    for (size_t i = 0; i < ast.constants.size(); ++i)
      declare(ast.constants[i].name, {NameKind::Const, i, 0, false}, ast.constants[i].line,
              ast.constants[i].column);
    for (size_t i = 0; i < ast.parameters.size(); ++i)
      declare(ast.parameters[i].name, {NameKind::Param, i, 0, false}, ast.parameters[i].line,
              ast.parameters[i].column);
    for (size_t i = 0; i < ast.formulas.size(); ++i)
      declare(ast.formulas[i].name, {NameKind::Formula, i, 0, false}, ast.formulas[i].line,
              ast.formulas[i].column);
    std::set<std::string> module_names;
    for (size_t m = 0; m < ast.modules.size(); ++m) {
      const auto& mod = ast.modules[m];
      if (!module_names.insert(mod.name).second)
        throw SourceError(SourceError::Kind::NameResolution, mod.line, mod.column,
                          "duplicate module '" + mod.name + "'");
      for (const auto& v : mod.variables) {
        if (v.lo > v.hi)
          throw SourceError(SourceError::Kind::Range, v.line, v.column,
                            "empty range for variable '" + v.name + "'");
        if (v.init < v.lo || v.init > v.hi)
          throw SourceError(SourceError::Kind::Range, v.line, v.column,
                            "initial value of '" + v.name + "' outside declared range");
        declare(v.name, {NameKind::Var, 0, m, v.is_bool}, v.line, v.column);
      }
    }

    // formula acyclicity
    std::map<std::string, int> formula_state;  // 0 unseen / 1 visiting / 2 done
    for (const auto& f : ast.formulas) check_formula_cycle(ast, names, f, formula_state);

    // expression checks: declared names and types
    std::map<std::string, ExprType> formula_types;
    auto type_of = [&](const Expr& e) {
      return infer_type(e, ast, names, formula_types);
    };
    for (const auto& f : ast.formulas) type_of(f.body);
    for (size_t m = 0; m < ast.modules.size(); ++m) {
      const auto& mod = ast.modules[m];
      for (const auto& cmd : mod.commands) {
        if (type_of(cmd.guard) != ExprType::Boolean)
          throw SourceError(SourceError::Kind::Type, cmd.line, cmd.column,
                            "guard must be a boolean expression");
        for (const auto& alt : cmd.alternatives) {
          if (type_of(alt.rate) != ExprType::Number)
            throw SourceError(SourceError::Kind::Type, alt.rate.line, alt.rate.column,
                              "rate must be a numeric expression");
          std::set<std::string> assigned;
          for (const auto& a : alt.assignments) {
            auto it = names.find(a.var);
            if (it == names.end() || it->second.kind != NameKind::Var)
              throw SourceError(SourceError::Kind::NameResolution, a.line, a.column,
                                "assignment to undeclared variable '" + a.var + "'");
            if (it->second.module_index != m)
              throw SourceError(SourceError::Kind::NameResolution, a.line, a.column,
                                "variable '" + a.var + "' belongs to another module");
            if (!assigned.insert(a.var).second)
              throw SourceError(SourceError::Kind::NameResolution, a.line, a.column,
                                "variable '" + a.var + "' assigned twice in one alternative");
            const ExprType vt = it->second.is_bool ? ExprType::Boolean : ExprType::Number;
            if (type_of(a.value) != vt)
              throw SourceError(SourceError::Kind::Type, a.line, a.column,
                                "assignment value type does not match variable '" + a.var + "'");
          }
        }
      }
    }
    std::set<std::string> label_names;
    for (const auto& l : ast.labels) {
      if (!label_names.insert(l.name).second)
        throw SourceError(SourceError::Kind::NameResolution, l.line, l.column,
                          "duplicate label \"" + l.name + "\"");
      if (type_of(l.predicate) != ExprType::Boolean)
        throw SourceError(SourceError::Kind::Type, l.line, l.column,
                          "label predicate must be boolean");
    }
  }

  void check_formula_cycle(const ModelAst& ast, const std::map<std::string, NameInfo>& names,
                           const FormulaDecl& f, std::map<std::string, int>& state) {
    auto& s = state[f.name];
    if (s == 2) return;
    if (s == 1)
      throw SourceError(SourceError::Kind::NameResolution, f.line, f.column,
                        "cyclic formula '" + f.name + "'");
    s = 1;
    walk_formula_refs(ast, names, f.body, state);
    s = 2;
  }

  void walk_formula_refs(const ModelAst& ast, const std::map<std::string, NameInfo>& names,
                         const Expr& e, std::map<std::string, int>& state) {
    if (e.op == ExprOp::Ident) {
      auto it = names.find(e.name);
      if (it != names.end() && it->second.kind == NameKind::Formula)
        check_formula_cycle(ast, names, ast.formulas[it->second.index], state);
      return;
    }
    for (const auto& a : e.args) walk_formula_refs(ast, names, a, state);
  }

  ExprType infer_type(const Expr& e, const ModelAst& ast,
                      const std::map<std::string, NameInfo>& names,
                      std::map<std::string, ExprType>& formula_types) {
    auto require = [&](const Expr& sub, ExprType want, const char* what) {
      if (infer_type(sub, ast, names, formula_types) != want)
        throw SourceError(SourceError::Kind::Type, sub.line, sub.column,
                          std::string("expected ") + what + " operand");
    };
    switch (e.op) {
      case ExprOp::Num: return ExprType::Number;
      case ExprOp::Bool: return ExprType::Boolean;
      case ExprOp::Ident: {
        auto it = names.find(e.name);
        if (it == names.end())
          throw SourceError(SourceError::Kind::NameResolution, e.line, e.column,
                            "undeclared identifier '" + e.name + "'");
        switch (it->second.kind) {
          case NameKind::Const:
          case NameKind::Param: return ExprType::Number;
          case NameKind::Var: return it->second.is_bool ? ExprType::Boolean : ExprType::Number;
          case NameKind::Formula: {
            auto ft = formula_types.find(e.name);
            if (ft != formula_types.end()) return ft->second;
            const ExprType t = infer_type(ast.formulas[it->second.index].body, ast, names,
                                          formula_types);
            formula_types.emplace(e.name, t);
            return t;
          }
        }
        throw std::logic_error("unreachable");
      }
      case ExprOp::Var:
      case ExprOp::Param:
        // resolved references do not occur in freshly parsed models
        return ExprType::Number;
      case ExprOp::Neg:
        require(e.args[0], ExprType::Number, "numeric");
        return ExprType::Number;
      case ExprOp::Not:
        require(e.args[0], ExprType::Boolean, "boolean");
        return ExprType::Boolean;
      case ExprOp::Add:
      case ExprOp::Sub:
      case ExprOp::Mul:
      case ExprOp::Div:
      case ExprOp::Min:
      case ExprOp::Max:
        require(e.args[0], ExprType::Number, "numeric");
        require(e.args[1], ExprType::Number, "numeric");
        return ExprType::Number;
      case ExprOp::Lt:
      case ExprOp::Le:
      case ExprOp::Gt:
      case ExprOp::Ge:
        require(e.args[0], ExprType::Number, "numeric");
        require(e.args[1], ExprType::Number, "numeric");
        return ExprType::Boolean;
      case ExprOp::Eq:
      case ExprOp::Ne: {
        const ExprType a = infer_type(e.args[0], ast, names, formula_types);
        const ExprType b = infer_type(e.args[1], ast, names, formula_types);
        if (a != b)
          throw SourceError(SourceError::Kind::Type, e.line, e.column,
                            "comparison of incompatible types");
        return ExprType::Boolean;
      }
      case ExprOp::And:
      case ExprOp::Or:
        require(e.args[0], ExprType::Boolean, "boolean");
        require(e.args[1], ExprType::Boolean, "boolean");
        return ExprType::Boolean;
    }
    throw std::logic_error("unreachable");
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

}  // namespace

ModelAst parse_model(const std::string& source) { return Parser(source).parse_model(); }

Expr parse_expression(const std::string& source) {
  return Parser(source).parse_single_expression();
}

std::string render_model(const ModelAst& ast) {
  std::ostringstream out;
  out << "ctmc\n";
  if (!ast.constants.empty() || !ast.parameters.empty() || !ast.formulas.empty()) out << "\n";
  for (const auto& c : ast.constants) {
    out << "const " << c.name << " = ";
    if (c.value < 0)
      out << "-" << to_string(Rational(-c.value));
    else
      out << to_string(c.value);
    out << ";\n";
  }
  for (const auto& p : ast.parameters) out << "param " << p.name << ";\n";
  for (const auto& f : ast.formulas)
    out << "formula " << f.name << " = " << render_expr(f.body) << ";\n";
  for (const auto& m : ast.modules) {
    out << "\nmodule " << m.name << "\n";
    for (const auto& v : m.variables) {
      out << "  " << v.name << " : ";
      if (v.is_bool)
        out << "bool init " << (v.init ? "true" : "false");
      else
        out << "[" << v.lo << ".." << v.hi << "] init " << v.init;
      out << ";\n";
    }
    if (!m.variables.empty() && !m.commands.empty()) out << "\n";
    for (const auto& cmd : m.commands) {
      out << "  [" << (cmd.action ? *cmd.action : "") << "] " << render_expr(cmd.guard) << " ->\n";
      for (size_t i = 0; i < cmd.alternatives.size(); ++i) {
        const auto& alt = cmd.alternatives[i];
        out << "      " << render_expr(alt.rate) << " : ";
        for (size_t j = 0; j < alt.assignments.size(); ++j) {
          if (j) out << " & ";
          out << "(" << alt.assignments[j].var << "'=" << render_expr(alt.assignments[j].value)
              << ")";
        }
        out << (i + 1 < cmd.alternatives.size() ? " +\n" : ";\n");
      }
    }
    out << "endmodule\n";
  }
  if (!ast.labels.empty()) out << "\n";
  for (const auto& l : ast.labels)
    out << "label \"" << l.name << "\" = " << render_expr(l.predicate) << ";\n";
  return out.str();
}

}  // namespace odra
