#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "mvw/builders.hpp"
#include "mvw/dsl/json_io.hpp"
#include "support.hpp"

using mvw::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("outputs match the goldens") {
  for (std::string f : {"z3", "z1xz1"}) {
    INFO(f);
    auto file = support::sample(f + ".mvw");
    auto c = call({"check", file});
    CHECK(c.code == 0);
    CHECK(c.out == support::slurp(support::golden("check_" + f + ".txt")));
    auto s = call({"spec", file, "--dot", "-"});
    CHECK(s.code == 0);
    CHECK(s.out == support::slurp(support::golden("spec_" + f + ".txt")));
    auto j = call({"spec", file, "--json"});
    CHECK(j.out == support::slurp(support::golden("spec_" + f + ".json")));
    auto v = call({"verify", file, "--suite", "all"});
    CHECK(v.code == 0);
    CHECK(v.out == support::slurp(support::golden("verify_" + f + ".txt")));
  }
}

TEST_CASE("a failing axiom exits 1 with a witness") {
  auto c = call({"check", support::sample("z3_corrupt.mvw")});
  CHECK(c.code == 1);
  CHECK(c.out.find("MVW-iv   FAIL") != std::string::npos);
  CHECK(c.out.find("witness: MVW-iv fails at (2, 2, 2)") != std::string::npos);
  CHECK(c.out.find("result: FAIL") != std::string::npos);
}

TEST_CASE("input errors exit 2") {
  auto l3 = call({"check", support::sample("luk3_realprod.mvw")});
  CHECK(l3.code == 2);
  CHECK(l3.err.find("ClosureViolation") != std::string::npos);
  CHECK(l3.err.find("witness: (1/2, 1/2) -> 1/4") != std::string::npos);
  auto l4 = call({"check", support::sample("luk4_realprod.mvw")});
  CHECK(l4.code == 2);
  CHECK(l4.err.find("(1/3, 1/3) -> 1/9") != std::string::npos);
  CHECK(call({"check", "/nonexistent.mvw"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({"ideals", support::sample("z3.mvw"), "--prime", "--maximal"}).code == 2);
  CHECK(call({"verify", support::sample("z3.mvw"), "--suite", "nope"}).code == 2);
  CHECK(call({"check", support::sample("z3.mvw"), "--algebra", "Nope"}).code == 2);
  auto q = call({"quotient", support::sample("z1xz1.mvw"), "--ideal", "(0,0),(1,1)"});
  CHECK(q.code == 2);
  CHECK(q.err.find("not an ideal") != std::string::npos);
  CHECK(call({"spec", support::sample("m2z1.mvw")}).code == 2);
}

TEST_CASE("help exits 0") { CHECK(call({"--help"}).code == 0); }

TEST_CASE("mv-only check of a product that is not closed") {
  auto c = call({"check", support::sample("luk3_realprod.mvw"), "--mv-only"});
  CHECK(c.code == 0);
  CHECK(c.out.find("MVW") == std::string::npos);
}

TEST_CASE("verify lists the catalog without a file") {
  auto c = call({"verify", "--list"});
  CHECK(c.code == 0);
  CHECK(c.out.find("core.mv-axioms") != std::string::npos);
  CHECK(c.out.find("locale.subcover") != std::string::npos);
}

TEST_CASE("verify skips gated properties") {
  auto c = call({"verify", support::sample("t3.mvw"), "--suite", "locale"});
  CHECK(c.code == 0);
  CHECK(c.out.find("0 passed, 0 failed, 6 skipped") != std::string::npos);
}

TEST_CASE("ideals") {
  auto c = call({"ideals", support::sample("z3.mvw"), "--maximal"});
  CHECK(c.code == 0);
  CHECK(c.out.find("{0}") != std::string::npos);
  CHECK(c.out.find("{0, 1, 2, 3}") == std::string::npos);
  auto j = call({"ideals", support::sample("z1xz1.mvw"), "--json"});
  CHECK(j.out.find("\"rig\":\"Z1xZ1\"") != std::string::npos);
}

TEST_CASE("quotient writes JSON") {
  auto path = (std::filesystem::temp_directory_path() / "mvw_quotient_test.json").string();
  auto c = call({"quotient", support::sample("z1xz1.mvw"), "--ideal", "(0,0),(0,1)", "-o", path});
  CHECK(c.code == 0);
  CHECK(c.out.find("2 classes") != std::string::npos);
  CHECK(std::filesystem::exists(path));
  std::filesystem::remove(path);
}

TEST_CASE("filters") {
  auto c = call({"filters", support::sample("z1xz1.mvw"), "--frame"});
  CHECK(c.code == 0);
  CHECK(c.out.find("4 P-filters") != std::string::npos);
  CHECK(c.out.find("distributive: yes") != std::string::npos);
  auto p = call({"filters", support::sample("z3.mvw"), "--principal", "1"});
  CHECK(p.code == 0);
  CHECK(p.out.find("{1, 2, 3}") != std::string::npos);
}

TEST_CASE("parse prints canonical source and JSON") {
  auto c = call({"parse", support::sample("z3.mvw")});
  CHECK(c.code == 0);
  CHECK(c.out.find("algebra Z3") != std::string::npos);
  auto j = call({"parse", support::sample("z3.mvw"), "--emit-json"});
  CHECK(j.code == 0);
  CHECK(j.out == mvw::dsl::rig_to_json(mvw::build_zn(3)));
}
