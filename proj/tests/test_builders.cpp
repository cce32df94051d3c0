#include <catch2/catch_amalgamated.hpp>

#include "mvw/axioms.hpp"
#include "mvw/builders.hpp"
#include "mvw/catalog.hpp"
#include "mvw/error.hpp"
#include "mvw/homomorphism.hpp"

using namespace mvw;

TEST_CASE("Z_n is isomorphic to L_{n+1} under x -> x/n") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto z = build_zn(n);
    auto l = build_luk_mv(n + 1);
    std::vector<Elem> map(z.size());
    for (Elem x = 0; x < z.size(); ++x) {
      Rational v = Rational(x) / Rational(n);
      auto it = std::find(l.values.begin(), l.values.end(), v);
      REQUIRE(it != l.values.end());
      map[x] = static_cast<Elem>(it - l.values.begin());
    }
    CHECK(check_mv_homomorphism(z, l.algebra, map).ok);
    std::vector<Elem> sorted = map;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  }
}

TEST_CASE("products in Z_n dominate their factors") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto z = build_zn(n);
    for (Elem a = 1; a < z.size(); ++a)
      for (Elem b = 1; b < z.size(); ++b) CHECK(z.leq(z.join(a, b), z.mul(a, b)));
  }
}

TEST_CASE("L_n passes the MV axioms") {
  for (std::size_t n = 2; n <= 5; ++n) CHECK(check_mv(build_luk_mv(n).algebra).ok());
}

TEST_CASE("the real product on L3 and L4 leaves the carrier") {
  auto witness = [](std::size_t n) {
    try {
      attach_real_product(build_luk_mv(n));
    } catch (Error const& e) {
      CHECK(e.kind() == ErrorKind::ClosureViolation);
      CHECK(std::string(e.what()).find("not closed for the product") != std::string::npos);
      return e.witness();
    }
    return std::string("none");
  };
  CHECK(witness(3) == "(1/2, 1/2) -> 1/4");
  CHECK(witness(4) == "(1/3, 1/3) -> 1/9");
  CHECK_NOTHROW(attach_real_product(build_luk_mv(2)));
}

TEST_CASE("trivial lifts have a zero product") {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto t = lift_trivial_product(build_luk_mv(n).algebra);
    CHECK(check_all(t).ok());
    CHECK(!t.has_unit());
    CHECK(t.flags().product_below_meet);
    for (auto v : t.mul_table()) CHECK(v == 0);
  }
}

TEST_CASE("gamma sums are truncated integer sums") {
  std::vector<std::vector<int>> units{{1}, {1, 1}, {1, 0, 1}, {1, 1, 1}};
  for (auto const& u : units) {
    auto g = gamma_zk(u.size(), u);
    CHECK(check_all(g).ok());
    auto vec = [&](Elem x) {
      // mixed radix with base u_i + 1, first coordinate most significant
      std::vector<int> v(u.size());
      for (std::size_t i = u.size(); i-- > 0;) {
        v[i] = static_cast<int>(x % (u[i] + 1));
        x /= static_cast<Elem>(u[i] + 1);
      }
      return v;
    };
    for (Elem x = 0; x < g.size(); ++x)
      for (Elem y = 0; y < g.size(); ++y) {
        auto a = vec(x), b = vec(y), s = vec(g.add(x, y)), p = vec(g.mul(x, y));
        for (std::size_t i = 0; i < u.size(); ++i) {
          CHECK(s[i] == std::min(a[i] + b[i], u[i]));
          CHECK(p[i] == a[i] * b[i]);
        }
      }
  }
  std::vector<int> bad{2};
  CHECK_THROWS_AS(gamma_zk(1, bad), Error);
}

TEST_CASE("matrix rig over Z1") {
  auto m = build_matrix_rig(build_zn(1), 2);
  CHECK(m.rig.size() == 16);
  CHECK(m.report.ok());
  CHECK(!m.rig.is_commutative());
  REQUIRE(m.rig.unit());
  CHECK(m.rig.name_of(*m.rig.unit()) == "[[1,0],[0,1]]");
  CHECK_THROWS_AS(build_matrix_rig(build_zn(1), 3, 256), Error);
}

TEST_CASE("direct products are componentwise") {
  auto z1 = build_zn(1), z2 = build_zn(2);
  auto p = direct_product(z1, z2);
  REQUIRE(p.size() == 6);
  for (Elem x = 0; x < 6; ++x)
    for (Elem y = 0; y < 6; ++y) {
      CHECK(p.add(x, y) / 3 == z1.add(x / 3, y / 3));
      CHECK(p.add(x, y) % 3 == z2.add(x % 3, y % 3));
      CHECK(p.mul(x, y) / 3 == z1.mul(x / 3, y / 3));
      CHECK(p.mul(x, y) % 3 == z2.mul(x % 3, y % 3));
    }
  CHECK(check_all(p).ok());
  CHECK_THROWS_AS(direct_product(build_zn(6), build_zn(6), 40), Error);
}

TEST_CASE("sub-rig closure") {
  auto z3 = build_zn(3);
  auto s = subalgebra_closure(z3, ElemSet(4, {0}));
  CHECK(s.inclusion == std::vector<Elem>{0, 3});
  auto s2 = subalgebra_closure(z3, ElemSet(4, {1}));
  CHECK(s2.rig.size() == 4);
  CHECK(check_all(s.rig).ok());
}

TEST_CASE("every catalog member passes its axioms") {
  for (auto const& r : catalog::base_family()) {
    INFO(r.name());
    CHECK(check_all(r).ok());
  }
}
