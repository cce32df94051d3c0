#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mvw::dsl {

struct Span {
  int line = 1;
  int column = 1;
};

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  Span span;
  std::string message;
  std::string witness;
};

/// "line:col: error: message"
std::string format(Diagnostic const& d);

struct Atom {
  enum class Kind { Ident, Int, Rational };
  Kind kind = Kind::Int;
  std::string text;
  Span span;

  friend bool operator==(Atom const& a, Atom const& b) { return a.kind == b.kind && a.text == b.text; }
};

struct Expr {
  enum class Kind { Atom, Add, Sub, Mul, Neg, Min, Max };
  Kind kind = Kind::Atom;
  Atom atom;                  // Kind::Atom only
  std::vector<Expr> args;
  Span span;

  friend bool operator==(Expr const& a, Expr const& b) {
    return a.kind == b.kind && (a.kind != Kind::Atom || a.atom == b.atom) && a.args == b.args;
  }
};

struct Carrier {
  bool is_range = false;
  Atom lo, hi;              // is_range
  std::vector<Atom> items;  // otherwise
  Span span;

  friend bool operator==(Carrier const& a, Carrier const& b) {
    return a.is_range == b.is_range && (a.is_range ? a.lo == b.lo && a.hi == b.hi : a.items == b.items);
  }
};

/// A table literal: either a flat list of atoms or a list of rows.
struct Table {
  bool nested = false;
  std::vector<std::vector<Atom>> rows;  // flat tables have a single row
  Span span;

  friend bool operator==(Table const& a, Table const& b) { return a.nested == b.nested && a.rows == b.rows; }
};

struct OpDef {
  std::string op;                   // neg, add or mul
  std::vector<std::string> params;  // formula form only
  std::optional<Expr> formula;
  std::optional<Table> table;
  Span span;

  friend bool operator==(OpDef const& a, OpDef const& b) {
    return a.op == b.op && a.params == b.params && a.formula == b.formula && a.table == b.table;
  }
};

struct BuilderArg {
  bool is_list = false;
  std::vector<Atom> atoms;  // one atom unless is_list

  friend bool operator==(BuilderArg const&, BuilderArg const&) = default;
};

struct Builder {
  std::string name;
  std::vector<BuilderArg> args;
  Span span;

  friend bool operator==(Builder const& a, Builder const& b) { return a.name == b.name && a.args == b.args; }
};

struct AlgebraSource {
  std::string name;
  std::optional<Carrier> elements;
  std::optional<Atom> zero;
  std::vector<OpDef> ops;  // in source order
  std::optional<Builder> builder;
  Span span;
  Span zero_span;

  OpDef const* op(std::string_view name) const {
    for (auto const& o : ops)
      if (o.op == name) return &o;
    return nullptr;
  }

  friend bool operator==(AlgebraSource const& a, AlgebraSource const& b) {
    return a.name == b.name && a.elements == b.elements && a.zero == b.zero && a.ops == b.ops && a.builder == b.builder;
  }
};

struct SourceFile {
  std::vector<AlgebraSource> algebras;

  friend bool operator==(SourceFile const&, SourceFile const&) = default;
};

}  // namespace mvw::dsl
