#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "mvw/builders.hpp"
#include "mvw/catalog.hpp"
#include "mvw/error.hpp"
#include "mvw/verify.hpp"

using namespace mvw;

namespace {

PropertyResult const& find(std::vector<PropertyResult> const& rs, std::string const& id) {
  for (auto const& r : rs)
    if (r.id == id) return r;
  FAIL("missing property " << id);
  return rs.front();
}

}  // namespace

TEST_CASE("catalog ids are unique and belong to a suite") {
  std::set<std::string> ids;
  auto const& suites = suite_names();
  CHECK(suites == std::vector<std::string>{"core", "ideals", "spectrum", "locale"});
  for (auto const& p : property_catalog()) {
    CHECK(ids.insert(p.id).second);
    CHECK(std::find(suites.begin(), suites.end(), p.suite) != suites.end());
    CHECK_FALSE(p.statement.empty());
  }
}

TEST_CASE("verify runs the catalog in order") {
  auto z = build_zn(3);
  auto rs = verify(z.mv(), &z, "all");
  REQUIRE(rs.size() == property_catalog().size());
  for (std::size_t i = 0; i < rs.size(); ++i) CHECK(rs[i].id == property_catalog()[i].id);
  CHECK(all_passed(rs));
  auto core = verify(z.mv(), &z, "core");
  for (auto const& r : core) CHECK(r.suite == "core");
}

TEST_CASE("gated properties are skipped with a reason") {
  auto l = build_luk_mv(5).algebra;
  auto rs = verify(l, nullptr, "all");
  CHECK(all_passed(rs));
  CHECK(find(rs, "core.mv-axioms").status == Status::Pass);
  auto const& m = find(rs, "core.mvw-axioms");
  CHECK(m.status == Status::Skipped);
  CHECK(m.detail == "no product (MV-only input)");

  auto t = catalog::t_n(3);
  auto ts = verify(t.mv(), &t, "locale");
  for (auto const& r : ts) {
    CHECK(r.status == Status::Skipped);
    CHECK(r.detail == "rig has no unit");
  }
}

TEST_CASE("non-commutative rigs skip the spectrum") {
  for (auto const& r : catalog::base_family()) {
    if (r.is_commutative()) continue;
    auto rs = verify(r.mv(), &r, "spectrum");
    for (auto const& p : rs) CHECK(p.status == Status::Skipped);
    CHECK(all_passed(verify(r.mv(), &r, "all")));
  }
}

TEST_CASE("every small example passes") {
  for (auto const& r : catalog::examples(8)) {
    INFO(r.name());
    auto rs = verify(r.mv(), &r, "all");
    for (auto const& p : rs) {
      INFO(p.id << ": " << p.detail);
      CHECK(p.status != Status::Fail);
    }
  }
}

TEST_CASE("unknown suites are rejected") {
  auto z = build_zn(1);
  try {
    verify(z.mv(), &z, "nope");
    FAIL("no error");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::InvalidArgument);
  }
}
