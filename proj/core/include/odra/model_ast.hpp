#ifndef ODRA_MODEL_AST_HPP
#define ODRA_MODEL_AST_HPP

#include "odra/expr.hpp"
#include "odra/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace odra {

/// Parsed guarded-command model. All types are plain values; structural
/// equality ignores source locations, so parse(render(ast)) == ast.

enum class ModelKind { Ctmc };

struct ConstDecl {
  std::string name;
  Rational value;
  int line = 0, column = 0;
  bool operator==(const ConstDecl& o) const { return name == o.name && value == o.value; }
};

struct ParamDecl {
  std::string name;
  int line = 0, column = 0;
  bool operator==(const ParamDecl& o) const { return name == o.name; }
};

struct FormulaDecl {
  std::string name;
  Expr body;
  int line = 0, column = 0;
  bool operator==(const FormulaDecl& o) const { return name == o.name && body == o.body; }
};

struct VarDecl {
  std::string name;
  bool is_bool = false;
  long lo = 0, hi = 0;   // bool is stored as 0..1
  long init = 0;
  int line = 0, column = 0;
  bool operator==(const VarDecl& o) const {
    return name == o.name && is_bool == o.is_bool && lo == o.lo && hi == o.hi && init == o.init;
  }
};

struct Assignment {
  std::string var;
  Expr value;
  int line = 0, column = 0;
  bool operator==(const Assignment& o) const { return var == o.var && value == o.value; }
};

struct Alternative {
  Expr rate;
  std::vector<Assignment> assignments;
  bool operator==(const Alternative& o) const = default;
};

struct Command {
  std::optional<std::string> action;  // nullopt: never synchronizes
  Expr guard;
  std::vector<Alternative> alternatives;
  int line = 0, column = 0;
  bool operator==(const Command& o) const {
    return action == o.action && guard == o.guard && alternatives == o.alternatives;
  }
};

struct ModuleDef {
  std::string name;
  std::vector<VarDecl> variables;
  std::vector<Command> commands;
  int line = 0, column = 0;
  bool operator==(const ModuleDef& o) const {
    return name == o.name && variables == o.variables && commands == o.commands;
  }
};

struct LabelDef {
  std::string name;  // quoted string in the source
  Expr predicate;
  int line = 0, column = 0;
  bool operator==(const LabelDef& o) const { return name == o.name && predicate == o.predicate; }
};

struct ModelAst {
  ModelKind kind = ModelKind::Ctmc;
  std::vector<ConstDecl> constants;
  std::vector<ParamDecl> parameters;
  std::vector<FormulaDecl> formulas;
  std::vector<ModuleDef> modules;
  std::vector<LabelDef> labels;
  bool operator==(const ModelAst& o) const {
    return kind == o.kind && constants == o.constants && parameters == o.parameters &&
           formulas == o.formulas && modules == o.modules && labels == o.labels;
  }
};

}  // namespace odra

#endif  // ODRA_MODEL_AST_HPP
