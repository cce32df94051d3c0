#include "mvw/dsl/printer.hpp"

#include <fmt/format.h>

namespace mvw::dsl {

namespace {

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul: return 2;
    case Expr::Kind::Neg: return 3;
    default: return 4;
  }
}

std::string print_at(Expr const& e, int min_prec) {
  std::string s;
  switch (e.kind) {
    case Expr::Kind::Atom: return e.atom.text;
    case Expr::Kind::Min:
    case Expr::Kind::Max: {
      s = e.kind == Expr::Kind::Min ? "min(" : "max(";
      for (std::size_t i = 0; i < e.args.size(); ++i) s += (i ? ", " : "") + print_at(e.args[i], 0);
      return s + ")";
    }
    case Expr::Kind::Neg: s = "-" + print_at(e.args[0], 3); break;
    case Expr::Kind::Add: s = print_at(e.args[0], 1) + " + " + print_at(e.args[1], 2); break;
    case Expr::Kind::Sub: s = print_at(e.args[0], 1) + " - " + print_at(e.args[1], 2); break;
    case Expr::Kind::Mul: s = print_at(e.args[0], 2) + " * " + print_at(e.args[1], 3); break;
  }
  return precedence(e.kind) < min_prec ? "(" + s + ")" : s;
}

std::string join_atoms(std::vector<Atom> const& atoms) {
  std::string s;
  for (std::size_t i = 0; i < atoms.size(); ++i) s += (i ? ", " : "") + atoms[i].text;
  return s;
}

}  // namespace

std::string print(Expr const& e) { return print_at(e, 0); }

std::string print(AlgebraSource const& a) {
  std::string s = fmt::format("algebra {} {{\n", a.name);
  if (a.builder) {
    s += fmt::format("  builder: {}(", a.builder->name);
    for (std::size_t i = 0; i < a.builder->args.size(); ++i) {
      auto const& arg = a.builder->args[i];
      s += i ? ", " : "";
      s += arg.is_list ? "[" + join_atoms(arg.atoms) + "]" : arg.atoms.front().text;
    }
    s += ")\n";
  }
  if (a.elements) {
    auto const& c = *a.elements;
    s += c.is_range ? fmt::format("  elements: {}..{}\n", c.lo.text, c.hi.text)
                    : fmt::format("  elements: [{}]\n", join_atoms(c.items));
  }
  if (a.zero) s += fmt::format("  zero: {}\n", a.zero->text);
  for (auto const& op : a.ops) {
    if (op.formula) {
      std::string params;
      for (std::size_t i = 0; i < op.params.size(); ++i) params += (i ? ", " : "") + op.params[i];
      s += fmt::format("  {}({}) = {}\n", op.op, params, print(*op.formula));
    } else if (op.table) {
      auto const& t = *op.table;
      if (!t.nested) {
        s += fmt::format("  {}: [{}]\n", op.op, join_atoms(t.rows.front()));
      } else {
        s += fmt::format("  {}: [\n", op.op);
        for (std::size_t i = 0; i < t.rows.size(); ++i)
          s += fmt::format("    [{}]{}\n", join_atoms(t.rows[i]), i + 1 < t.rows.size() ? "," : "");
        s += "  ]\n";
      }
    }
  }
  return s + "}\n";
}

std::string print(SourceFile const& file) {
  std::string s;
  for (std::size_t i = 0; i < file.algebras.size(); ++i) s += (i ? "\n" : "") + print(file.algebras[i]);
  return s;
}

}  // namespace mvw::dsl
