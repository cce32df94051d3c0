#pragma once

#include <string>

#include "mvw/dsl/ast.hpp"

namespace mvw::dsl {

/// Canonical source text. Parsing the output yields an equal AST.
std::string print(SourceFile const& file);
std::string print(AlgebraSource const& algebra);
std::string print(Expr const& e);

}  // namespace mvw::dsl
