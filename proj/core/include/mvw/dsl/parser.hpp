#pragma once

#include <string_view>
#include <vector>

#include "mvw/dsl/ast.hpp"

namespace mvw::dsl {

struct ParseResult {
  SourceFile file;  // empty whenever an error was reported
  std::vector<Diagnostic> diagnostics;

  bool ok() const;
};

/// Recursive-descent parser for the algebra definition language. After an
/// error the parser skips to the next `algebra` keyword and keeps going, so
/// one call reports every syntax error.
ParseResult parse(std::string_view text);

/// parse(), throwing Error(SyntaxError) carrying the first diagnostic.
SourceFile parse_or_throw(std::string_view text);

}  // namespace mvw::dsl
