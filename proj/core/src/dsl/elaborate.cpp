#include "mvw/dsl/elaborate.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "mvw/dsl/parser.hpp"

namespace mvw::dsl {

namespace {

[[noreturn]] void invalid(Span span, std::string const& message, std::string witness = {}) {
  throw Error(ErrorKind::Validation, fmt::format("{}:{}: {}", span.line, span.column, message), std::move(witness));
}

std::size_t to_count(Atom const& a, char const* what) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(a.text.data(), a.text.data() + a.text.size(), v);
  if (a.kind != Atom::Kind::Int || ec != std::errc{} || p != a.text.data() + a.text.size())
    invalid(a.span, fmt::format("{} must be a nonnegative integer, got '{}'", what, a.text));
  return v;
}

Structure const& find_earlier(std::vector<Structure> const& earlier, Atom const& a) {
  for (auto it = earlier.rbegin(); it != earlier.rend(); ++it)
    if (it->name() == a.text) return *it;
  invalid(a.span, fmt::format("unknown algebra '{}'", a.text));
}

MvwRig const& rig_of(Structure const& s, Span span) {
  if (!s.rig) invalid(span, fmt::format("{} has no product", s.name()));
  return *s.rig;
}

Structure from_rig(MvwRig rig, std::vector<std::optional<Rational>> values = {}) {
  Structure s;
  s.mv = rig.mv();
  s.values = values.empty() ? std::vector<std::optional<Rational>>(rig.size()) : std::move(values);
  s.rig = std::move(rig);
  return s;
}

Structure build(AlgebraSource const& src, std::vector<Structure> const& earlier, ElaborateOptions const& opt) {
  auto const& b = *src.builder;
  auto arity = [&](std::size_t n) {
    if (b.args.size() != n)
      invalid(b.span, fmt::format("{} takes {} argument{}, got {}", b.name, n, n == 1 ? "" : "s", b.args.size()));
  };
  auto scalar = [&](std::size_t i) -> Atom const& {
    if (b.args[i].is_list) invalid(b.span, fmt::format("argument {} of {} must not be a list", i + 1, b.name));
    return b.args[i].atoms.front();
  };

  if (b.name == "zn") {
    arity(1);
    auto n = to_count(scalar(0), "n");
    if (n == 0) invalid(b.span, "zn requires n >= 1");
    if (n + 1 > opt.bound) throw Error(ErrorKind::SizeBound, fmt::format("Z{} exceeds the size bound {}", n, opt.bound));
    std::vector<std::optional<Rational>> values;
    for (std::size_t i = 0; i <= n; ++i) values.emplace_back(Rational(i));
    return from_rig(build_zn(n), std::move(values));
  }
  if (b.name == "luk") {
    arity(1);
    auto n = to_count(scalar(0), "n");
    if (n < 2) invalid(b.span, "luk requires n >= 2");
    if (n > opt.bound) throw Error(ErrorKind::SizeBound, fmt::format("L{} exceeds the size bound {}", n, opt.bound));
    auto l = build_luk_mv(n);
    Structure s;
    s.mv = std::move(l.algebra);
    for (auto& v : l.values) s.values.emplace_back(std::move(v));
    return s;
  }
  if (b.name == "trivial") {
    arity(1);
    return from_rig(lift_trivial_product(find_earlier(earlier, scalar(0)).mv));
  }
  if (b.name == "matrix") {
    arity(2);
    auto const& base = rig_of(find_earlier(earlier, scalar(0)), b.span);
    auto n = to_count(scalar(1), "dimension");
    auto checked = build_matrix_rig(base, n, opt.bound);
    return from_rig(std::move(checked.rig));
  }
  if (b.name == "product") {
    if (b.args.empty()) invalid(b.span, "product needs at least one factor");
    std::vector<MvwRig> factors;
    for (std::size_t i = 0; i < b.args.size(); ++i)
      factors.push_back(rig_of(find_earlier(earlier, scalar(i)), b.span));
    return from_rig(direct_product(factors, opt.bound));
  }
  if (b.name == "gamma") {
    arity(2);
    auto k = to_count(scalar(0), "k");
    if (!b.args[1].is_list) invalid(b.span, "gamma expects the unit as a list, e.g. gamma(2, [1, 1])");
    std::vector<int> u;
    for (auto const& a : b.args[1].atoms) {
      auto v = parse_rational(a.text);
      if (!v || a.kind != Atom::Kind::Int) invalid(a.span, fmt::format("unit entries must be integers, got '{}'", a.text));
      u.push_back(static_cast<int>(*v));
    }
    if (u.size() != k) invalid(b.span, fmt::format("gamma({}) needs a unit of length {}, got {}", k, k, u.size()));
    return from_rig(gamma_zk(k, u, opt.bound));
  }
  invalid(b.span, fmt::format("unknown builder '{}' (expected zn, luk, trivial, matrix, product or gamma)", b.name));
}

struct Carrier {
  std::vector<std::string> names;
  std::vector<std::optional<Rational>> values;

  std::optional<Elem> resolve(Atom const& a) const {
    if (a.kind == Atom::Kind::Ident) {
      for (Elem i = 0; i < names.size(); ++i)
        if (names[i] == a.text) return i;
      return std::nullopt;
    }
    auto v = parse_rational(a.text);
    for (Elem i = 0; i < values.size(); ++i)
      if (values[i] && v && *values[i] == *v) return i;
    return std::nullopt;
  }

  std::optional<Elem> by_value(Rational const& v) const {
    for (Elem i = 0; i < values.size(); ++i)
      if (values[i] && *values[i] == v) return i;
    return std::nullopt;
  }
};

Carrier make_carrier(dsl::Carrier const& c, std::size_t bound) {
  Carrier out;
  if (c.is_range) {
    auto lo = parse_rational(c.lo.text);
    auto hi = parse_rational(c.hi.text);
    if (!lo || !hi || *hi < *lo) invalid(c.span, fmt::format("empty range {}..{}", c.lo.text, c.hi.text));
    if (Rational(*hi - *lo) + 1 > Rational(bound))
      throw Error(ErrorKind::SizeBound, fmt::format("carrier {}..{} exceeds the size bound {}", c.lo.text, c.hi.text, bound));
    for (Rational v = *lo; v <= *hi; v += 1) {
      out.names.push_back(to_string(v));
      out.values.emplace_back(v);
    }
    return out;
  }
  if (c.items.size() > bound)
    throw Error(ErrorKind::SizeBound, fmt::format("carrier of {} elements exceeds the size bound {}", c.items.size(), bound));
  std::set<std::string> seen;
  for (auto const& a : c.items) {
    if (a.kind == Atom::Kind::Ident) {
      out.names.push_back(a.text);
      out.values.emplace_back();
    } else {
      auto v = parse_rational(a.text);
      if (!v) invalid(a.span, fmt::format("'{}' is not a valid number", a.text));
      out.names.push_back(to_string(*v));
      out.values.emplace_back(*v);
    }
    if (!seen.insert(out.names.back()).second)
      invalid(a.span, fmt::format("element '{}' is listed twice", out.names.back()));
  }
  return out;
}

Rational eval(Expr const& e, std::map<std::string, Rational> const& env, Carrier const& carrier) {
  switch (e.kind) {
    case Expr::Kind::Atom: {
      if (e.atom.kind != Atom::Kind::Ident) return *parse_rational(e.atom.text);
      if (auto it = env.find(e.atom.text); it != env.end()) return it->second;
      if (auto i = carrier.resolve(e.atom); i && carrier.values[*i]) return *carrier.values[*i];
      invalid(e.span, fmt::format("unknown identifier '{}'", e.atom.text));
    }
    case Expr::Kind::Add: return eval(e.args[0], env, carrier) + eval(e.args[1], env, carrier);
    case Expr::Kind::Sub: return eval(e.args[0], env, carrier) - eval(e.args[1], env, carrier);
    case Expr::Kind::Mul: return eval(e.args[0], env, carrier) * eval(e.args[1], env, carrier);
    case Expr::Kind::Neg: return -eval(e.args[0], env, carrier);
    case Expr::Kind::Min:
    case Expr::Kind::Max: {
      Rational acc = eval(e.args[0], env, carrier);
      for (std::size_t i = 1; i < e.args.size(); ++i) {
        Rational v = eval(e.args[i], env, carrier);
        acc = e.kind == Expr::Kind::Min ? std::min(acc, v) : std::max(acc, v);
      }
      return acc;
    }
  }
  return 0;
}

char const* operation_noun(std::string const& op) {
  if (op == "neg") return "negation";
  if (op == "add") return "sum";
  return "product";
}

std::vector<Elem> op_table(OpDef const& d, Carrier const& c, std::string const& algebra) {
  auto const n = static_cast<Elem>(c.names.size());
  std::size_t const arity = d.op == "neg" ? 1 : 2;
  std::vector<Elem> out(arity == 1 ? n : std::size_t(n) * n);

  if (d.table) {
    auto const& t = *d.table;
    auto entry = [&](Atom const& a, std::string const& where) {
      auto i = c.resolve(a);
      if (!i)
        throw Error(ErrorKind::ClosureViolation,
                    fmt::format("{}:{}: {} table of {} names '{}', which is not an element", a.span.line,
                                a.span.column, d.op, algebra, a.text),
                    fmt::format("{} = {}", where, a.text));
      return *i;
    };
    if (arity == 1) {
      if (t.nested || t.rows.front().size() != n)
        invalid(t.span, fmt::format("neg table must be a flat list of {} entries", n));
      for (Elem x = 0; x < n; ++x) out[x] = entry(t.rows[0][x], fmt::format("neg({})", c.names[x]));
      return out;
    }
    if (!t.nested || t.rows.size() != n)
      invalid(t.span, fmt::format("{} table must have {} rows", d.op, n));
    for (Elem x = 0; x < n; ++x) {
      if (t.rows[x].size() != n)
        invalid(t.span, fmt::format("row {} of the {} table has {} entries, expected {}", x + 1, d.op, t.rows[x].size(), n));
      for (Elem y = 0; y < n; ++y)
        out[x * n + y] = entry(t.rows[x][y], fmt::format("{}({}, {})", d.op, c.names[x], c.names[y]));
    }
    return out;
  }

  if (d.params.size() != arity)
    invalid(d.span, fmt::format("{} takes {} parameter{}", d.op, arity, arity == 1 ? "" : "s"));
  if (arity == 2 && d.params[0] == d.params[1]) invalid(d.span, "parameters must be distinct");
  for (Elem x = 0; x < n; ++x)
    if (!c.values[x])
      invalid(d.span, fmt::format("{} is given by a formula but element '{}' has no numeric value", d.op, c.names[x]));

  auto value = [&](std::map<std::string, Rational> const& env, std::vector<Elem> const& args) {
    Rational v = eval(*d.formula, env, c);
    if (auto i = c.by_value(v)) return *i;
    std::string inputs;
    for (auto a : args) inputs += (inputs.empty() ? "" : ", ") + c.names[a];
    throw Error(ErrorKind::ClosureViolation, fmt::format("{} is not closed for the {}", algebra, operation_noun(d.op)),
                fmt::format("({}) -> {}", inputs, to_string(v)));
  };
  for (Elem x = 0; x < n; ++x) {
    if (arity == 1) {
      out[x] = value({{d.params[0], *c.values[x]}}, {x});
      continue;
    }
    for (Elem y = 0; y < n; ++y)
      out[x * n + y] = value({{d.params[0], *c.values[x]}, {d.params[1], *c.values[y]}}, {x, y});
  }
  return out;
}

Structure from_tables(AlgebraSource const& src, ElaborateOptions const& opt) {
  if (!src.elements) invalid(src.span, fmt::format("algebra {} declares no elements", src.name));
  if (!src.zero) invalid(src.span, fmt::format("algebra {} declares no zero", src.name));
  for (auto const* op : {"neg", "add"})
    if (!src.op(op)) invalid(src.span, fmt::format("algebra {} does not define {}", src.name, op));

  auto c = make_carrier(*src.elements, opt.bound);
  auto const n = static_cast<Elem>(c.names.size());
  auto zero = c.resolve(*src.zero);
  if (!zero) invalid(src.zero->span, fmt::format("zero '{}' is not an element", src.zero->text));
  auto z = *zero;

  auto neg = op_table(*src.op("neg"), c, src.name);
  auto add = op_table(*src.op("add"), c, src.name);
  std::optional<std::vector<Elem>> mul;
  if (auto const* m = src.op("mul"); m && !opt.mv_only) mul = op_table(*m, c, src.name);

  for (Elem x = 0; x < n; ++x)
    if (add[x * n + z] != x || add[z * n + x] != x)
      invalid(src.zero_span, fmt::format("zero must be the identity of add: {} + {} = {}", c.names[x], c.names[z],
                                         c.names[add[x * n + z]]));
  for (Elem x = 0; x < n; ++x)
    if (neg[add[neg[z] * n + x]] != z)
      invalid(src.zero_span, fmt::format("zero must be the least element, but {} is not <= {}", c.names[z], c.names[x]),
              fmt::format("({}, {})", c.names[z], c.names[x]));

  // Move the zero to index 0, keeping the other elements in source order.
  std::vector<Elem> order{z};
  for (Elem x = 0; x < n; ++x)
    if (x != z) order.push_back(x);
  std::vector<Elem> pos(n);
  for (Elem i = 0; i < n; ++i) pos[order[i]] = i;
  auto permute = [&](std::vector<Elem> const& t, bool binary) {
    std::vector<Elem> out(t.size());
    for (Elem i = 0; i < n; ++i) {
      if (!binary) {
        out[i] = pos[t[order[i]]];
        continue;
      }
      for (Elem j = 0; j < n; ++j) out[i * n + j] = pos[t[order[i] * n + order[j]]];
    }
    return out;
  };
  std::vector<std::string> names;
  Structure s;
  for (auto x : order) {
    names.push_back(c.names[x]);
    s.values.push_back(c.values[x]);
  }
  s.mv = MvAlgebra::derive(src.name, std::move(names), permute(neg, false), permute(add, true));
  if (mul) s.rig = MvwRig::derive(s.mv, permute(*mul, true));
  return s;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!digits(text)) return std::nullopt;
    return Rational(boost::multiprecision::cpp_int(std::string(text)));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!digits(num) || !digits(den)) return std::nullopt;
  boost::multiprecision::cpp_int d(std::string{den});
  if (d == 0) return std::nullopt;
  return Rational(boost::multiprecision::cpp_int(std::string(num)), d);
}

Structure elaborate(AlgebraSource const& src, std::vector<Structure> const& earlier, ElaborateOptions const& opt) {
  Structure s;
  if (src.builder) {
    if (src.elements || src.zero || !src.ops.empty())
      invalid(src.builder->span, "a builder cannot be combined with elements, zero or operation definitions");
    s = build(src, earlier, opt);
    s.mv.set_name(src.name);
    if (s.rig) s.rig->set_name(src.name);
    if (opt.mv_only) s.rig.reset();
  } else {
    s = from_tables(src, opt);
  }

  s.report = check_mv(s.mv);
  if (s.rig) s.report.merge(check_mvw(*s.rig));
  if (!s.report.ok() && opt.throw_on_axiom_failure) {
    auto const& w = s.report.witnesses().front();
    throw Error(ErrorKind::AxiomViolation, fmt::format("{} fails {}: {}", src.name, w.axiom, w.detail),
                fmt::format("{} {}", w.axiom, w.tuple));
  }
  return s;
}

std::vector<Structure> elaborate(SourceFile const& file, ElaborateOptions const& opt) {
  std::vector<Structure> out;
  for (auto const& a : file.algebras) out.push_back(elaborate(a, out, opt));
  return out;
}

std::vector<Structure> load(std::string_view text, ElaborateOptions const& opt) {
  return elaborate(parse_or_throw(text), opt);
}

std::vector<Structure> load_file(std::filesystem::path const& path, ElaborateOptions const& opt) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return load(buf.str(), opt);
}

}  // namespace mvw::dsl
