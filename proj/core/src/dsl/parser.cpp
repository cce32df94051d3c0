#include "mvw/dsl/parser.hpp"

#include <algorithm>
#include <initializer_list>

#include <fmt/format.h>

#include "mvw/dsl/lexer.hpp"
#include "mvw/error.hpp"

namespace mvw::dsl {

bool ParseResult::ok() const {
  return std::none_of(diagnostics.begin(), diagnostics.end(),
                      [](Diagnostic const& d) { return d.severity == Severity::Error; });
}

namespace {

struct Failure {
  Diagnostic diagnostic;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  ParseResult run() {
    ParseResult r;
    if (peek().kind == Tok::End) r.diagnostics.push_back(error_at(peek(), "expected at least one algebra"));
    while (peek().kind != Tok::End) {
      try {
        r.file.algebras.push_back(algebra());
      } catch (Failure const& f) {
        r.diagnostics.push_back(f.diagnostic);
        synchronize();
      }
    }
    if (!r.ok()) r.file.algebras.clear();
    return r;
  }

 private:
  Token const& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  Token const& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  static Diagnostic error_at(Token const& t, std::string message) {
    return {Severity::Error, t.span, std::move(message), {}};
  }

  [[noreturn]] void expected(std::initializer_list<std::string_view> what) const {
    std::string list;
    for (auto w : what) list += (list.empty() ? "" : ", ") + std::string(w);
    auto const& t = peek();
    auto found = t.kind == Tok::End ? std::string("end of input") : fmt::format("'{}'", t.text);
    throw Failure{error_at(t, fmt::format("expected {}{} but found {}", what.size() > 1 ? "one of " : "", list, found))};
  }

  Token const& expect(Tok kind) {
    if (peek().kind != kind) expected({describe(kind)});
    return take();
  }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    take();
    return true;
  }

  bool at_keyword(std::string_view word) const { return peek().kind == Tok::Ident && peek().text == word; }

  void synchronize() {
    if (peek().kind != Tok::End) take();
    while (peek().kind != Tok::End && !at_keyword("algebra")) take();
  }

  AlgebraSource algebra() {
    AlgebraSource a;
    a.span = peek().span;
    if (!at_keyword("algebra")) expected({"'algebra'"});
    take();
    a.name = expect(Tok::Ident).text;
    expect(Tok::LBrace);
    bool any = false;
    while (peek().kind != Tok::RBrace) {
      decl(a);
      any = true;
    }
    if (!any) expected({"'elements'", "'zero'", "'neg'", "'add'", "'mul'", "'builder'"});
    expect(Tok::RBrace);
    return a;
  }

  void decl(AlgebraSource& a) {
    auto const& t = peek();
    if (t.kind != Tok::Ident) expected({"'elements'", "'zero'", "'neg'", "'add'", "'mul'", "'builder'", "'}'"});
    auto duplicate = [&](bool present) {
      if (present) throw Failure{error_at(t, fmt::format("duplicate '{}' declaration", t.text))};
    };
    if (t.text == "elements") {
      duplicate(a.elements.has_value());
      take();
      expect(Tok::Colon);
      a.elements = carrier();
    } else if (t.text == "zero") {
      duplicate(a.zero.has_value());
      a.zero_span = t.span;
      take();
      expect(Tok::Colon);
      a.zero = atom();
    } else if (t.text == "builder") {
      duplicate(a.builder.has_value());
      take();
      expect(Tok::Colon);
      a.builder = builder();
    } else if (t.text == "neg" || t.text == "add" || t.text == "mul") {
      duplicate(a.op(t.text) != nullptr);
      a.ops.push_back(opdef());
    } else {
      expected({"'elements'", "'zero'", "'neg'", "'add'", "'mul'", "'builder'", "'}'"});
    }
  }

  Atom atom() {
    auto const& t = peek();
    Atom a;
    a.span = t.span;
    a.text = t.text;
    switch (t.kind) {
      case Tok::Ident: a.kind = Atom::Kind::Ident; break;
      case Tok::Int: a.kind = Atom::Kind::Int; break;
      case Tok::Rational: a.kind = Atom::Kind::Rational; break;
      default: expected({"identifier", "integer", "rational"});
    }
    take();
    return a;
  }

  Carrier carrier() {
    Carrier c;
    c.span = peek().span;
    if (peek().kind == Tok::Int) {
      c.is_range = true;
      c.lo = atom();
      expect(Tok::DotDot);
      if (peek().kind != Tok::Int) expected({"integer"});
      c.hi = atom();
      return c;
    }
    if (peek().kind != Tok::LBracket) expected({"integer", "'['"});
    take();
    c.items.push_back(atom());
    while (accept(Tok::Comma)) c.items.push_back(atom());
    expect(Tok::RBracket);
    return c;
  }

  std::vector<Atom> atom_list() {
    std::vector<Atom> row;
    expect(Tok::LBracket);
    row.push_back(atom());
    while (accept(Tok::Comma)) row.push_back(atom());
    expect(Tok::RBracket);
    return row;
  }

  Table table() {
    Table t;
    t.span = peek().span;
    expect(Tok::LBracket);
    if (peek().kind == Tok::LBracket) {
      t.nested = true;
      t.rows.push_back(atom_list());
      while (accept(Tok::Comma)) t.rows.push_back(atom_list());
    } else {
      t.rows.emplace_back();
      t.rows[0].push_back(atom());
      while (accept(Tok::Comma)) t.rows[0].push_back(atom());
    }
    expect(Tok::RBracket);
    return t;
  }

  OpDef opdef() {
    OpDef d;
    d.span = peek().span;
    d.op = take().text;
    if (accept(Tok::Colon)) {
      d.table = table();
      return d;
    }
    if (peek().kind != Tok::LParen) expected({"'('", "':'"});
    take();
    d.params.push_back(expect(Tok::Ident).text);
    if (accept(Tok::Comma)) d.params.push_back(expect(Tok::Ident).text);
    expect(Tok::RParen);
    expect(Tok::Equals);
    d.formula = expr();
    return d;
  }

  Builder builder() {
    Builder b;
    b.span = peek().span;
    b.name = expect(Tok::Ident).text;
    expect(Tok::LParen);
    b.args.push_back(builder_arg());
    while (accept(Tok::Comma)) b.args.push_back(builder_arg());
    expect(Tok::RParen);
    return b;
  }

  BuilderArg builder_arg() {
    BuilderArg a;
    if (peek().kind == Tok::LBracket) {
      a.is_list = true;
      a.atoms = atom_list();
    } else {
      a.atoms.push_back(atom());
    }
    return a;
  }

  static Expr node(Expr::Kind kind, Span span, std::vector<Expr> args) {
    Expr e;
    e.kind = kind;
    e.span = span;
    e.args = std::move(args);
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      auto span = peek().span;
      auto kind = take().kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
      Expr rhs = term();
      lhs = node(kind, span, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = unary();
    while (peek().kind == Tok::Star) {
      auto span = take().span;
      Expr rhs = unary();
      lhs = node(Expr::Kind::Mul, span, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  Expr unary() {
    if (peek().kind == Tok::Minus) {
      auto span = take().span;
      return node(Expr::Kind::Neg, span, {unary()});
    }
    return primary();
  }

  Expr primary() {
    auto const& t = peek();
    if (t.kind == Tok::LParen) {
      take();
      Expr e = expr();
      expect(Tok::RParen);
      return e;
    }
    if (t.kind == Tok::Ident && (t.text == "min" || t.text == "max") && peek(1).kind == Tok::LParen) {
      auto kind = t.text == "min" ? Expr::Kind::Min : Expr::Kind::Max;
      auto span = take().span;
      take();
      std::vector<Expr> args;
      args.push_back(expr());
      expect(Tok::Comma);
      args.push_back(expr());
      while (accept(Tok::Comma)) args.push_back(expr());
      expect(Tok::RParen);
      return node(kind, span, std::move(args));
    }
    if (t.kind != Tok::Ident && t.kind != Tok::Int && t.kind != Tok::Rational)
      expected({"identifier", "integer", "rational", "'('", "'-'", "'min('", "'max('"});
    Expr e;
    e.kind = Expr::Kind::Atom;
    e.span = t.span;
    e.atom = atom();
    return e;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseResult parse(std::string_view text) {
  auto tokens = lex(text);
  for (auto const& t : tokens)
    if (t.kind == Tok::Invalid) {
      ParseResult r;
      r.diagnostics.push_back({Severity::Error, t.span, fmt::format("unexpected character '{}'", t.text), {}});
      return r;
    }
  return Parser(std::move(tokens)).run();
}

SourceFile parse_or_throw(std::string_view text) {
  auto r = parse(text);
  if (!r.ok()) {
    auto const& d = *std::find_if(r.diagnostics.begin(), r.diagnostics.end(),
                                  [](Diagnostic const& x) { return x.severity == Severity::Error; });
    throw Error(ErrorKind::SyntaxError, format(d), d.witness);
  }
  return std::move(r.file);
}

}  // namespace mvw::dsl
