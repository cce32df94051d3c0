#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mvw/dsl/ast.hpp"

namespace mvw::dsl {

enum class Tok {
  Ident, Int, Rational,
  LBrace, RBrace, LParen, RParen, LBracket, RBracket,
  Comma, Colon, Equals, Plus, Minus, Star, DotDot,
  End, Invalid
};

std::string_view describe(Tok t) noexcept;

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Span span;
};

/// Splits the text into tokens. `//` starts a comment that runs to the end
/// of the line. Unknown characters become Invalid tokens; the list always
/// ends with End.
std::vector<Token> lex(std::string_view text);

}  // namespace mvw::dsl
