#ifndef ODRA_PARSER_HPP
#define ODRA_PARSER_HPP

#include "odra/errors.hpp"
#include "odra/model_ast.hpp"

#include <string>

namespace odra {

/// Parses a model source text. The returned AST satisfies all structural
/// invariants (unique names, declared identifiers, acyclic formulas,
/// initial values in range, type-correct expressions); any violation is
/// reported as a SourceError at the offending position.
///
/// Reserved words: ctmc const param formula module endmodule label init
/// bool true false min max.
ModelAst parse_model(const std::string& source);

/// Deterministic canonical rendering; parse_model(render_model(a)) == a.
std::string render_model(const ModelAst& ast);

/// Parses a single expression (used for ad-hoc state predicates). Only
/// lexical/syntactic checks; names are resolved by the caller.
Expr parse_expression(const std::string& source);

}  // namespace odra

#endif  // ODRA_PARSER_HPP
