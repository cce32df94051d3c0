#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "mvw/dsl/elaborate.hpp"
#include "mvw/dsl/json_io.hpp"
#include "mvw/dsl/parser.hpp"
#include "mvw/dsl/printer.hpp"
#include "mvw/error.hpp"
#include "mvw/ideals.hpp"
#include "mvw/locale.hpp"
#include "mvw/quotient.hpp"
#include "mvw/spectrum.hpp"
#include "mvw/verify.hpp"

namespace mvw::cli {

namespace {

struct Common {
  std::string file;
  std::string algebra;
};

std::string read_text(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, fmt::format("cannot open '{}'", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(std::string const& path, std::string const& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::IoError, fmt::format("cannot write '{}'", path));
  f << text;
}

dsl::Structure pick(std::vector<dsl::Structure> all, std::string const& name) {
  if (all.empty()) throw Error(ErrorKind::Validation, "file defines no algebra");
  if (name.empty()) return std::move(all.back());
  for (auto& s : all)
    if (s.name() == name) return std::move(s);
  throw Error(ErrorKind::Validation, fmt::format("no algebra named '{}'", name));
}

dsl::Structure load(Common const& c, dsl::ElaborateOptions const& opt = {}) {
  return pick(dsl::load(read_text(c.file), opt), c.algebra);
}

MvwRig const& need_rig(dsl::Structure const& s, std::string_view what) {
  if (!s.rig) throw Error(ErrorKind::Validation, fmt::format("{} needs a product, but {} defines none", what, s.name()));
  return *s.rig;
}

// Splits on commas outside brackets, so tuple names like (0,1) stay whole.
std::vector<std::string> split_top_level(std::string const& text) {
  std::vector<std::string> items(1);
  int depth = 0;
  for (char ch : text) {
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      items.emplace_back();
      continue;
    }
    if (ch != ' ' && ch != '\t') items.back() += ch;
  }
  return items;
}

ElemSet parse_elements(MvAlgebra const& mv, std::string const& text) {
  ElemSet out(mv.size());
  for (auto const& item : split_top_level(text)) {
    if (item.empty()) continue;
    auto x = mv.find(item);
    if (!x) throw Error(ErrorKind::InvalidArgument, fmt::format("'{}' is not an element of {}", item, mv.name()));
    out.insert(*x);
  }
  return out;
}

std::string flags_line(dsl::Structure const& s) {
  if (!s.rig) return "MV-algebra (no product)";
  auto const& f = s.rig->flags();
  return fmt::format("commutative: {}, unit: {}, ab <= a ^ b: {}", f.commutative ? "yes" : "no",
                     f.unit ? s.rig->name_of(*f.unit) : std::string("none"), f.product_below_meet ? "yes" : "no");
}

void print_table(std::ostream& out, MvAlgebra const& a, char const* sym, auto op) {
  std::size_t w = 1;
  for (auto const& n : a.names()) w = std::max(w, n.size());
  fmt::print(out, "  {:>{}} |", sym, w);
  for (Elem y = 0; y < a.size(); ++y) fmt::print(out, " {:>{}}", a.name_of(y), w);
  fmt::print(out, "\n");
  for (Elem x = 0; x < a.size(); ++x) {
    fmt::print(out, "  {:>{}} |", a.name_of(x), w);
    for (Elem y = 0; y < a.size(); ++y) fmt::print(out, " {:>{}}", a.name_of(op(x, y)), w);
    fmt::print(out, "\n");
  }
}

int cmd_check(Common const& c, bool mv_only, std::ostream& out) {
  dsl::ElaborateOptions opt;
  opt.mv_only = mv_only;
  opt.throw_on_axiom_failure = false;
  auto s = load(c, opt);
  fmt::print(out, "{}: {} elements [{}]\n", s.name(), s.mv.size(), fmt::join(s.mv.names(), ", "));
  fmt::print(out, "{}\n", flags_line(s));
  for (auto const& [axiom, status] : s.report.entries()) fmt::print(out, "  {:<8} {}\n", axiom, to_string(status));
  for (auto const& w : s.report.witnesses())
    fmt::print(out, "witness: {} fails at {}: {}\n", w.axiom, w.tuple, w.detail);
  fmt::print(out, "result: {}\n", s.report.ok() ? "PASS" : "FAIL");
  return s.report.ok() ? kOk : kPropertyFailed;
}

int cmd_ideals(Common const& c, bool prime, bool mv_prime, bool maximal, bool json, std::ostream& out) {
  auto s = load(c);
  auto const& rig = need_rig(s, "ideals");
  auto all = enumerate_ideals(rig);
  std::vector<Ideal> kept;
  for (auto const& i : all) {
    auto k = classify_ideal(rig, i.members);
    if (prime && !(k.proper && k.prime)) continue;
    if (mv_prime && !(k.proper && k.mv_prime)) continue;
    if (maximal && !k.maximal) continue;
    kept.push_back(i);
  }
  if (json) {
    out << dsl::ideals_to_json(rig, kept);
    return kOk;
  }
  fmt::print(out, "{}: {} ideal{}\n", rig.name(), kept.size(), kept.size() == 1 ? "" : "s");
  for (auto const& i : kept) {
    auto k = classify_ideal(rig, i.members);
    std::vector<std::string> tags;
    if (k.proper) tags.emplace_back("proper");
    if (k.prime) tags.emplace_back("prime");
    if (k.mv_prime) tags.emplace_back("mv-prime");
    if (k.maximal) tags.emplace_back("maximal");
    fmt::print(out, "  {}  {}\n", format_set(rig, i.members), fmt::join(tags, " "));
  }
  return kOk;
}

int cmd_quotient(Common const& c, std::string const& ideal_text, std::string const& out_path, std::ostream& out) {
  auto s = load(c);
  auto const& rig = need_rig(s, "quotient");
  auto ideal = parse_elements(rig, ideal_text);
  if (auto k = is_ideal(rig, ideal); !k)
    throw Error(ErrorKind::InvalidArgument, fmt::format("{} is not an ideal of {}", format_set(rig, ideal), rig.name()), k.witness);
  auto q = quotient(rig, ideal);
  fmt::print(out, "{}: {} classes\n", q.rig.name(), q.rig.size());
  for (Elem k = 0; k < q.rig.size(); ++k) {
    ElemSet cls(rig.size());
    for (Elem x = 0; x < rig.size(); ++x)
      if (q.project(x) == k) cls.insert(x);
    fmt::print(out, "  {} = {}\n", q.rig.name_of(k), format_set(rig, cls));
  }
  auto const& r = q.rig;
  fmt::print(out, "neg: [{}]\n", fmt::join([&] {
    std::vector<std::string> v;
    for (Elem x = 0; x < r.size(); ++x) v.push_back(r.name_of(r.neg(x)));
    return v;
  }(), ", "));
  print_table(out, r, "+", [&](Elem x, Elem y) { return r.add(x, y); });
  print_table(out, r, "*", [&](Elem x, Elem y) { return r.mul(x, y); });
  if (!out_path.empty()) write_text(out_path, dsl::quotient_to_json(q), out);
  return kOk;
}

int cmd_spec(Common const& c, std::string const& dot_path, bool json, std::ostream& out) {
  auto s = load(c);
  auto const& rig = need_rig(s, "spec");
  auto sp = spec(rig);
  if (json) {
    out << dsl::spec_to_json(sp);
    return kOk;
  }
  fmt::print(out, "Spec({}): {} point{}\n", rig.name(), sp.size(), sp.size() == 1 ? "" : "s");
  if (sp.unit_warning) fmt::print(out, "warning: {} has no unit\n", rig.name());
  for (std::size_t p = 0; p < sp.size(); ++p) fmt::print(out, "  P{} = {}\n", p, format_set(rig, sp.points[p]));
  auto pts = [](ElemSet const& u) {
    std::vector<std::string> v;
    u.for_each([&](Elem p) { v.push_back(fmt::format("P{}", p)); });
    return fmt::format("{{{}}}", fmt::join(v, ", "));
  };
  fmt::print(out, "basic opens:\n");
  for (Elem a = 0; a < rig.size(); ++a) fmt::print(out, "  V({}) = {}\n", rig.name_of(a), pts(basic_open(sp, a)));
  fmt::print(out, "opens: {}\n", sp.opens.size());
  for (auto const& u : sp.opens) fmt::print(out, "  {}\n", pts(u));
  if (!dot_path.empty()) write_text(dot_path, to_dot(rig, sp), out);
  return kOk;
}

int cmd_filters(Common const& c, std::string const& principal, bool show_frame, bool json, std::ostream& out) {
  auto s = load(c);
  auto const& rig = need_rig(s, "filters");
  if (!principal.empty()) {
    auto a = rig.find(principal);
    if (!a) throw Error(ErrorKind::InvalidArgument, fmt::format("'{}' is not an element of {}", principal, rig.name()));
    auto f = principal_pfilter(rig, *a);
    if (json) {
      out << dsl::pfilters_to_json({f});
      return kOk;
    }
    fmt::print(out, "F_{} = {}\n", principal, format_set(rig, f));
    return kOk;
  }
  if (show_frame) {
    auto l = frame(rig);
    if (json) {
      out << dsl::frame_to_json(l);
      return kOk;
    }
    fmt::print(out, "L({}): {} P-filters\n", rig.name(), l.size());
    for (std::size_t i = 0; i < l.size(); ++i) fmt::print(out, "  F{} = {}\n", i, format_set(rig, l.filters[i]));
    fmt::print(out, "principal:\n");
    for (Elem a = 0; a < rig.size(); ++a) fmt::print(out, "  F_{} = F{}\n", rig.name_of(a), l.principal[a]);
    fmt::print(out, "covers:\n");
    for (auto [lo, hi] : l.hasse) fmt::print(out, "  F{} < F{}\n", lo, hi);
    fmt::print(out, "distributive: {}\n", l.distributive.ok ? "yes" : "no (" + l.distributive.witness + ")");
    return l.distributive.ok ? kOk : kPropertyFailed;
  }
  auto fs = enumerate_pfilters(rig);
  if (json) {
    out << dsl::pfilters_to_json(fs);
    return kOk;
  }
  fmt::print(out, "{}: {} P-filter{}\n", rig.name(), fs.size(), fs.size() == 1 ? "" : "s");
  for (auto const& f : fs) fmt::print(out, "  {}\n", format_set(rig, f));
  return kOk;
}

void print_catalog(std::ostream& out) {
  auto const& cat = property_catalog();
  std::size_t w = 0;
  for (auto const& p : cat) w = std::max(w, p.id.size());
  fmt::print(out, "{:<{}}  {:<8}  {}\n", "property", w, "suite", "statement [requires]");
  for (auto const& p : cat)
    fmt::print(out, "{:<{}}  {:<8}  {}{}\n", p.id, w, p.suite, p.statement, p.gate.empty() ? "" : " [" + p.gate + "]");
}

int cmd_verify(Common const& c, std::string const& suite, bool list, std::ostream& out) {
  if (list) {
    print_catalog(out);
    if (c.file.empty()) return kOk;
  }
  if (c.file.empty()) throw Error(ErrorKind::InvalidArgument, "verify needs an input file");
  auto s = load(c);
  auto results = verify(s.mv, s.rig ? &*s.rig : nullptr, suite);
  std::size_t pass = 0, fail = 0, skip = 0;
  fmt::print(out, "{}: suite {}\n", s.name(), suite);
  for (auto const& r : results) {
    fmt::print(out, "  {:<7} {}\n", to_string(r.status), r.id);
    if (r.status == Status::Fail) {
      ++fail;
      fmt::print(out, "          witness: {}\n", r.detail);
    } else if (r.status == Status::Skipped) {
      ++skip;
      fmt::print(out, "          reason: {}\n", r.detail);
    } else {
      ++pass;
    }
  }
  fmt::print(out, "{} passed, {} failed, {} skipped\n", pass, fail, skip);
  return fail == 0 ? kOk : kPropertyFailed;
}

int cmd_parse(Common const& c, bool emit_json, std::ostream& out) {
  if (!emit_json) {
    out << dsl::print(dsl::parse_or_throw(read_text(c.file)));
    return kOk;
  }
  out << dsl::structure_to_json(load(c));
  return kOk;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::OrderNotAntisymmetric:
    case ErrorKind::AxiomViolation:
    case ErrorKind::NotACongruence:
    case ErrorKind::NotAHomomorphism:
      return kPropertyFailed;
    default:
      return kInputError;
  }
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Workbench for finite MVW-rigs", "mvw"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  Common c;
  auto add_common = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("file", c.file, "Input .mvw file");
    if (required) opt->required();
    sub->add_option("--algebra", c.algebra, "Algebra to use (default: the last one in the file)");
  };

  bool mv_only = false;
  auto* check = app.add_subcommand("check", "Check the MV and MVW axioms exhaustively");
  add_common(check);
  check->add_flag("--mv-only", mv_only, "Ignore the product and check MV1-MV6 only");

  bool prime = false, mv_prime = false, maximal = false, json = false;
  auto* ideals = app.add_subcommand("ideals", "Enumerate ideals");
  add_common(ideals);
  auto* f1 = ideals->add_flag("--prime", prime, "Proper prime ideals only");
  auto* f2 = ideals->add_flag("--mv-prime", mv_prime, "Proper MV-prime ideals only");
  auto* f3 = ideals->add_flag("--maximal", maximal, "Maximal ideals only");
  f1->excludes(f2)->excludes(f3);
  f2->excludes(f3);
  ideals->add_flag("--json", json, "Emit JSON");

  std::string ideal_text, out_path;
  auto* quot = app.add_subcommand("quotient", "Form the quotient by an ideal");
  add_common(quot);
  quot->add_option("--ideal", ideal_text, "Comma-separated element names")->required();
  quot->add_option("-o,--output", out_path, "Write the quotient as JSON");

  std::string dot_path;
  auto* spec_cmd = app.add_subcommand("spec", "Prime spectrum with the co-Zariski topology");
  add_common(spec_cmd);
  auto* d = spec_cmd->add_option("--dot", dot_path, "Write the specialization order as DOT ('-' for stdout)");
  spec_cmd->add_flag("--json", json, "Emit JSON")->excludes(d);

  std::string principal;
  bool show_frame = false;
  auto* filters = app.add_subcommand("filters", "P-filters and the frame L_A");
  add_common(filters);
  auto* p = filters->add_option("--principal", principal, "Show the principal P-filter of an element");
  filters->add_flag("--frame", show_frame, "Show the frame with its covering relation")->excludes(p);
  filters->add_flag("--json", json, "Emit JSON");

  std::string suite = "all";
  bool list = false;
  auto* ver = app.add_subcommand("verify", "Run the property suites");
  add_common(ver, false);
  ver->add_option("--suite", suite, "core, ideals, spectrum, locale or all")
      ->check(CLI::IsMember({"all", "core", "ideals", "spectrum", "locale"}));
  ver->add_flag("--list", list, "Print the property table");

  bool emit_json = false;
  auto* parse_cmd = app.add_subcommand("parse", "Parse a file and print it canonically");
  add_common(parse_cmd);
  parse_cmd->add_flag("--emit-json", emit_json, "Elaborate and emit the structure as JSON");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check) return cmd_check(c, mv_only, out);
    if (*ideals) return cmd_ideals(c, prime, mv_prime, maximal, json, out);
    if (*quot) return cmd_quotient(c, ideal_text, out_path, out);
    if (*spec_cmd) return cmd_spec(c, dot_path, json, out);
    if (*filters) return cmd_filters(c, principal, show_frame, json, out);
    if (*ver) return cmd_verify(c, suite, list, out);
    if (*parse_cmd) return cmd_parse(c, emit_json, out);
  } catch (Error const& e) {
    fmt::print(err, "error: {}: {}\n", to_string(e.kind()), e.what());
    if (!e.witness().empty()) fmt::print(err, "witness: {}\n", e.witness());
    return exit_code(e.kind());
  } catch (std::logic_error const& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kPropertyFailed;
  } catch (std::exception const& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kInputError;
  }
  return kInputError;
}

}  // namespace mvw::cli
