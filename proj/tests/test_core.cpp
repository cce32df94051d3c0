#include <algorithm>
#include <catch2/catch_amalgamated.hpp>

#include "mvw/algebra.hpp"
#include "mvw/axioms.hpp"
#include "mvw/builders.hpp"
#include "mvw/catalog.hpp"
#include "mvw/error.hpp"
#include "mvw/laws.hpp"
#include "oracle.hpp"

using namespace mvw;

namespace {

// Z_n tables straight from the integer formulas.
struct ZnTables {
  std::vector<Elem> neg, add, mul;
};

ZnTables zn_tables(std::size_t n) {
  std::size_t m = n + 1;
  ZnTables t{std::vector<Elem>(m), std::vector<Elem>(m * m), std::vector<Elem>(m * m)};
  for (std::size_t x = 0; x < m; ++x) {
    t.neg[x] = static_cast<Elem>(n - x);
    for (std::size_t y = 0; y < m; ++y) {
      t.add[x * m + y] = static_cast<Elem>(std::min(n, x + y));
      t.mul[x * m + y] = static_cast<Elem>(std::min(n, x * y));
    }
  }
  return t;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::IoError;
}

}  // namespace

TEST_CASE("derived operations of Z3 match integer arithmetic") {
  auto r = build_zn(3);
  REQUIRE(r.size() == 4);
  CHECK(r.top() == 3);
  for (Elem x = 0; x < 4; ++x)
    for (Elem y = 0; y < 4; ++y) {
      int d = std::max(0, int(x) - int(y));
      CHECK(r.monus(x, y) == d);
      CHECK(r.leq(x, y) == (x <= y));
      CHECK(r.join(x, y) == std::max(x, y));
      CHECK(r.meet(x, y) == std::min(x, y));
      CHECK(r.times_mv(x, y) == std::max(0, int(x) + int(y) - 3));
    }
}

TEST_CASE("structural flags of Z3") {
  auto r = build_zn(3);
  CHECK(r.is_commutative());
  REQUIRE(r.unit());
  CHECK(*r.unit() == 1);
  CHECK_FALSE(r.flags().product_below_meet);
  CHECK(structural_flags(r) == r.flags());
}

TEST_CASE("axioms hold on Z1..Z6") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto t = zn_tables(n);
    auto r = MvwRig::derive("Z", {}, t.neg, t.add, t.mul);
    INFO("n = " << n);
    CHECK(r == [&] {
      auto b = build_zn(n);
      b.set_name("Z");
      return b;
    }());
    auto rep = check_all(r);
    CHECK(rep.ok());
    for (auto const& [axiom, status] : rep.entries()) CHECK(status == Status::Pass);
  }
}

TEST_CASE("report lists every axiom in order") {
  auto rep = check_all(build_zn(3));
  std::vector<std::string> names;
  for (auto const& e : rep.entries()) names.push_back(e.first);
  CHECK(names == std::vector<std::string>{"closure", "MV1", "MV2", "MV3", "MV4", "MV5", "MV6", "MVW-ii", "MVW-iii",
                                          "MVW-iv", "MVW-v"});
}

TEST_CASE("a corrupted product is caught with a witness") {
  auto t = zn_tables(3);
  t.mul[2 * 4 + 2] = 1;
  auto r = MvwRig::derive("Z3bad", {}, t.neg, t.add, t.mul);
  auto rep = check_mvw(r);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.status("MVW-iv") == Status::Fail);
  auto w = std::find_if(rep.witnesses().begin(), rep.witnesses().end(),
                        [](Witness const& x) { return x.axiom == "MVW-iv"; });
  REQUIRE(w != rep.witnesses().end());
  CHECK(w->tuple == "(2, 2, 2)");
}

TEST_CASE("a corrupted sum breaks an MV axiom") {
  auto t = zn_tables(3);
  // non-commutative sum: 1 + 2 = 3 but 2 + 1 = 2
  t.add[2 * 4 + 1] = 2;
  try {
    auto mv = MvAlgebra::derive("bad", {}, t.neg, t.add);
    CHECK_FALSE(check_mv(mv).ok());
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::OrderNotAntisymmetric);
  }
}

TEST_CASE("a table leaving the carrier is a closure violation") {
  auto t = zn_tables(2);
  t.add[1] = 7;
  CHECK(kind_of([&] { MvAlgebra::derive("bad", {}, t.neg, t.add); }) == ErrorKind::ClosureViolation);
}

TEST_CASE("a non-antisymmetric order is rejected at derive") {
  // constant-top sum on two elements: every x <= y
  std::vector<Elem> neg{1, 0}, add{1, 1, 1, 1};
  CHECK(kind_of([&] { MvAlgebra::derive("flat", {}, neg, add); }) == ErrorKind::OrderNotAntisymmetric);
}

TEST_CASE("power and nilpotency") {
  auto t3 = catalog::t_n(3);
  CHECK(kind_of([&] { (void)t3.power(1, 0); }) == ErrorKind::InvalidArgument);
  for (Elem x = 0; x < t3.size(); ++x) CHECK(t3.mul(x, x) == 0);
  CHECK(nilpotency_index(t3, 2) == 2u);
  auto z3 = build_zn(3);
  CHECK(z3.power(2, 2) == 3);
  CHECK(!nilpotency_index(z3, 1));
  CHECK(nilpotency_index(z3, 0) == 1u);
}

TEST_CASE("law checks agree with a direct scan") {
  for (auto const& r : catalog::examples(9)) {
    INFO(r.name());
    CHECK(laws::order_is_lattice(r).ok);
    CHECK(laws::residuation(r).ok);
    CHECK(laws::monus_subadditive(r, 2).ok);
    CHECK(laws::product_monotone(r).ok);
    CHECK(laws::product_join(r).ok);
    CHECK(laws::product_meet(r).ok);
    CHECK(laws::power_join(r, 3).ok);
    CHECK(laws::power_meet(r, 3).ok);
    CHECK(laws::unit_unique(r).ok);
    CHECK(laws::derive_idempotent(r).ok);
  }
}

TEST_CASE("n-ary subadditivity matches brute force over tuples") {
  // explicit 3-tuples on Z3 and on L4
  for (auto const& a : std::vector<MvAlgebra>{build_zn(3), build_luk_mv(4).algebra}) {
    auto const n = static_cast<Elem>(a.size());
    bool brute = true;
    for (Elem x1 = 0; x1 < n; ++x1)
      for (Elem x2 = 0; x2 < n; ++x2)
        for (Elem x3 = 0; x3 < n; ++x3)
          for (Elem y1 = 0; y1 < n; ++y1)
            for (Elem y2 = 0; y2 < n; ++y2)
              for (Elem y3 = 0; y3 < n; ++y3) {
                Elem sx = a.add(a.add(x1, x2), x3), sy = a.add(a.add(y1, y2), y3);
                Elem d = a.add(a.add(a.monus(x1, y1), a.monus(x2, y2)), a.monus(x3, y3));
                if (!oracle::leq(a, a.monus(sx, sy), d)) brute = false;
              }
    CHECK(brute);
    CHECK(laws::monus_subadditive(a, 3).ok);
    CHECK(laws::monus_subadditive(a, 4).ok);
  }
}

TEST_CASE("subadditivity reports a witness when it fails") {
  // three-chain with max as the sum: not an MV-algebra
  std::vector<Elem> neg{2, 1, 0}, add{0, 1, 2, 1, 1, 2, 2, 2, 2};
  auto a = MvAlgebra::derive("A", {}, neg, add);
  CHECK_FALSE(check_mv(a).ok());
  auto k = laws::monus_subadditive(a, 2);
  REQUIRE_FALSE(k.ok);
  CHECK(k.witness.find("x = (") != std::string::npos);
  CHECK_FALSE(laws::monus_subadditive(a, 4).ok);
}
