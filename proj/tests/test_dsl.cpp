#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "mvw/catalog.hpp"
#include "mvw/dsl/elaborate.hpp"
#include "mvw/dsl/json_io.hpp"
#include "mvw/dsl/lexer.hpp"
#include "mvw/dsl/parser.hpp"
#include "mvw/dsl/printer.hpp"
#include "mvw/error.hpp"
#include "mvw/locale.hpp"
#include "mvw/spectrum.hpp"
#include "support.hpp"

using namespace mvw;
using namespace mvw::dsl;

namespace {

Error error_of(auto&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e;
  }
  FAIL("no error thrown");
  return Error(ErrorKind::IoError, "");
}

std::vector<std::string> sample_files() {
  std::vector<std::string> out;
  for (auto const& e : std::filesystem::directory_iterator(MVW_SAMPLES_DIR))
    if (e.path().extension() == ".mvw") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

constexpr char const* kZ3 =
    "algebra Z3 { elements: 0..3  zero: 0  neg(x) = 3 - x  add(x,y) = min(3, x + y)  mul(x,y) = min(3, x * y) }";

}  // namespace

TEST_CASE("lexer") {
  auto toks = lex("algebra A { elements: [0, 1/2, 1] } // note\n..");
  std::vector<Tok> kinds;
  for (auto const& t : toks) kinds.push_back(t.kind);
  CHECK(kinds == std::vector<Tok>{Tok::Ident, Tok::Ident, Tok::LBrace, Tok::Ident, Tok::Colon, Tok::LBracket, Tok::Int,
                                  Tok::Comma, Tok::Rational, Tok::Comma, Tok::Int, Tok::RBracket, Tok::RBrace,
                                  Tok::DotDot, Tok::End});
  CHECK(toks[8].text == "1/2");
  CHECK(toks[13].span.line == 2);
  CHECK(toks[13].span.column == 1);
  CHECK(lex("#").front().kind == Tok::Invalid);
}

TEST_CASE("parse the Z3 source") {
  auto r = parse(kZ3);
  REQUIRE(r.ok());
  REQUIRE(r.file.algebras.size() == 1);
  auto const& a = r.file.algebras[0];
  CHECK(a.name == "Z3");
  REQUIRE(a.elements);
  CHECK(a.elements->is_range);
  REQUIRE(a.op("mul"));
  CHECK(a.op("mul")->formula->kind == Expr::Kind::Min);
  auto s = elaborate(r.file);
  REQUIRE(s.back().rig);
  auto z3 = build_zn(3);
  CHECK(s.back().rig->add_table() == z3.add_table());
  CHECK(s.back().rig->mul_table() == z3.mul_table());
  CHECK(s.back().report.ok());
}

TEST_CASE("a one-element table source") {
  auto s = load("algebra T { elements: [o] zero: o neg: [o] add: [[o]] mul: [[o]] }");
  REQUIRE(s.size() == 1);
  CHECK(s[0].mv.size() == 1);
  CHECK(s[0].rig->unit() == Elem{0});
}

TEST_CASE("syntax errors carry spans and expected tokens") {
  auto r = parse("algebra A {\n  elements 0..3\n}");
  REQUIRE_FALSE(r.ok());
  CHECK(r.file.algebras.empty());
  auto const& d = r.diagnostics.front();
  CHECK(d.span.line == 2);
  CHECK(d.span.column == 12);
  CHECK(d.message.find("expected") != std::string::npos);
  CHECK(format(d).rfind("2:12: error:", 0) == 0);

  auto dup = parse("algebra A { zero: 0 zero: 0 }");
  REQUIRE_FALSE(dup.ok());
  CHECK(dup.diagnostics.front().message.find("duplicate") != std::string::npos);

  // recovery: both broken algebras are reported
  auto two = parse("algebra A { elements: } algebra B { neg(x) = }");
  CHECK(two.diagnostics.size() == 2);

  CHECK(error_of([] { parse_or_throw("algebra"); }).kind() == ErrorKind::SyntaxError);
}

TEST_CASE("zero must be the least element") {
  auto e = error_of([] {
    load("algebra Bad { elements: 0..3 zero: 1 neg(x) = 3 - x add(x, y) = min(x + y, 3) mul(x, y) = min(x * y, 3) }");
  });
  CHECK(e.kind() == ErrorKind::Validation);
  CHECK(std::string(e.what()).rfind("1:30:", 0) == 0);
}

TEST_CASE("a zero listed later is moved to index 0") {
  auto s = load("algebra B { elements: [1, 0] zero: 0 neg(x) = 1 - x add(x, y) = min(x + y, 1) mul(x, y) = x * y }");
  CHECK(s[0].mv.name_of(0) == "0");
  CHECK(s[0].rig->add_table() == build_zn(1).add_table());
}

TEST_CASE("closure diagnostics use exact arithmetic") {
  auto e = error_of([] {
    load("algebra L3 { elements: [0, 1/2, 1] zero: 0 neg(x) = 1 - x add(x, y) = min(x + y, 1) mul(x, y) = x * y }");
  });
  CHECK(e.kind() == ErrorKind::ClosureViolation);
  CHECK(std::string(e.what()).find("not closed for the product") != std::string::npos);
  CHECK(e.witness() == "(1/2, 1/2) -> 1/4");
  // 1/3 + 1/3 + 1/3 is exactly 1, so the sum is closed on thirds
  CHECK_NOTHROW(load("algebra L4 { elements: [0, 1/3, 2/3, 1] zero: 0 neg(x) = 1 - x add(x, y) = min(x + y, 1) }"));
  auto t = error_of([] { load("algebra A { elements: [a, b] zero: a neg: [b, a] add: [[a, b], [b, c]] }"); });
  CHECK(t.kind() == ErrorKind::ClosureViolation);
}

TEST_CASE("table-form Boolean rig equals Z1") {
  auto s = load(
      "algebra Z1 { elements: [0, 1] zero: 0 neg: [1, 0] add: [[0, 1], [1, 1]] mul: [[0, 0], [0, 1]] }");
  REQUIRE(s[0].rig);
  CHECK(*s[0].rig == build_zn(1));
}

TEST_CASE("builders in source") {
  auto s = load("algebra Z1 { builder: zn(1) } algebra P { builder: product(Z1, Z1) } algebra G { builder: gamma(2, [1, 1]) }");
  REQUIRE(s.size() == 3);
  CHECK(s[1].mv.size() == 4);
  CHECK(s[2].mv.size() == 4);
  auto mixed = error_of([] { load("algebra Z { builder: zn(2) zero: 0 }"); });
  CHECK(mixed.kind() == ErrorKind::Validation);
  auto luk = load("algebra L { builder: luk(4) }");
  CHECK(luk[0].mv_only());
}

TEST_CASE("the mv-only option ignores the product") {
  ElaborateOptions opt;
  opt.mv_only = true;
  auto s = load_file(support::sample("luk3_realprod.mvw"), opt);
  CHECK(s.back().mv_only());
  CHECK(s.back().report.ok());
}

TEST_CASE("axiom failures") {
  auto path = support::sample("z3_corrupt.mvw");
  CHECK(error_of([&] { load_file(path); }).kind() == ErrorKind::AxiomViolation);
  ElaborateOptions opt;
  opt.throw_on_axiom_failure = false;
  auto s = load_file(path, opt);
  CHECK_FALSE(s.back().report.ok());
  CHECK(error_of([] { load_file("/nonexistent.mvw"); }).kind() == ErrorKind::IoError);
}

TEST_CASE("print then parse is the identity on every sample") {
  for (auto const& f : sample_files()) {
    INFO(f);
    auto ast = parse_or_throw(support::slurp(f));
    auto printed = print(ast);
    CHECK(parse_or_throw(printed) == ast);
    CHECK(print(parse_or_throw(printed)) == printed);
  }
}

TEST_CASE("expression printing keeps precedence") {
  auto ast = parse_or_throw("algebra A { neg(x) = 3 - (x - 1) add(x, y) = (x + y) * 2 - -x }");
  CHECK(print(*ast.algebras[0].op("neg")->formula) == "3 - (x - 1)");
  CHECK(print(*ast.algebras[0].op("add")->formula) == "(x + y) * 2 - -x");
}

TEST_CASE("rig JSON matches the golden document") {
  CHECK(rig_to_json(build_zn(1)) == support::slurp(support::golden("z1.json")));
  CHECK(rig_to_json(build_zn(1)) == rig_to_json(build_zn(1)));
}

TEST_CASE("JSON round trips") {
  for (auto const& r : catalog::examples(9)) {
    INFO(r.name());
    auto back = structure_from_json(rig_to_json(r));
    REQUIRE(back.rig);
    CHECK(*back.rig == r);
    auto ideals = enumerate_ideals(r);
    auto is = ideals_from_json(ideals_to_json(r, ideals), r.size());
    REQUIRE(is.size() == ideals.size());
    for (std::size_t i = 0; i < is.size(); ++i) CHECK(is[i] == ideals[i].members);
    if (r.is_commutative()) {
      auto s = spec(r);
      auto s2 = spec_from_json(spec_to_json(s), r.size());
      CHECK(s2.points == s.points);
      CHECK(s2.opens == s.opens);
      if (r.has_unit()) {
        auto l = frame(r);
        auto l2 = frame_from_json(frame_to_json(l), r.size());
        CHECK(l2.filters == l.filters);
        CHECK(l2.join == l.join);
        CHECK(l2.meet == l.meet);
      }
    }
  }
  auto mv = build_luk_mv(3).algebra;
  auto back = structure_from_json(rig_to_json(mv));
  CHECK(back.mv_only());
  CHECK(back.mv == mv);
}

TEST_CASE("malformed JSON is a schema error with a path") {
  auto bad = rig_to_json(build_zn(1));
  bad.replace(bad.find("[[0,1],[1,1]]"), 13, "[[0,1],[1,\"x\"]]");
  auto e = error_of([&] { structure_from_json(bad); });
  CHECK(e.kind() == ErrorKind::SchemaError);
  CHECK(e.witness() == "/add/1/1");
  CHECK(error_of([] { structure_from_json("{"); }).kind() == ErrorKind::SchemaError);
  CHECK(error_of([] { structure_from_json("{\"name\":1}"); }).witness() == "/name");
}
