#include "mvw/dsl/lexer.hpp"

#include <cctype>

#include <fmt/format.h>

namespace mvw::dsl {

std::string format(Diagnostic const& d) {
  auto out = fmt::format("{}:{}: {}: {}", d.span.line, d.span.column,
                         d.severity == Severity::Error ? "error" : "warning", d.message);
  if (!d.witness.empty()) out += fmt::format(" [witness: {}]", d.witness);
  return out;
}

std::string_view describe(Tok t) noexcept {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::Rational: return "rational";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Equals: return "'='";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::DotDot: return "'..'";
    case Tok::End: return "end of input";
    case Tok::Invalid: return "invalid character";
  }
  return "?";
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  Span pos;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k && i < text.size(); ++j, ++i) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  auto is_ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; };

  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.span = pos;
    std::size_t len = 1;
    if (is_digit(c)) {
      while (i + len < text.size() && is_digit(text[i + len])) ++len;
      t.kind = Tok::Int;
      if (i + len + 1 < text.size() && text[i + len] == '/' && is_digit(text[i + len + 1])) {
        ++len;
        while (i + len < text.size() && is_digit(text[i + len])) ++len;
        t.kind = Tok::Rational;
      }
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i + len < text.size() && is_ident(text[i + len])) ++len;
      t.kind = Tok::Ident;
    } else if (c == '.' && i + 1 < text.size() && text[i + 1] == '.') {
      len = 2;
      t.kind = Tok::DotDot;
    } else {
      switch (c) {
        case '{': t.kind = Tok::LBrace; break;
        case '}': t.kind = Tok::RBrace; break;
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        case '[': t.kind = Tok::LBracket; break;
        case ']': t.kind = Tok::RBracket; break;
        case ',': t.kind = Tok::Comma; break;
        case ':': t.kind = Tok::Colon; break;
        case '=': t.kind = Tok::Equals; break;
        case '+': t.kind = Tok::Plus; break;
        case '-': t.kind = Tok::Minus; break;
        case '*': t.kind = Tok::Star; break;
        default: t.kind = Tok::Invalid; break;
      }
    }
    t.text = std::string(text.substr(i, len));
    advance(len);
    out.push_back(std::move(t));
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

}  // namespace mvw::dsl
