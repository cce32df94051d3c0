#include <catch2/catch_amalgamated.hpp>

#include "mvw/builders.hpp"
#include "mvw/catalog.hpp"
#include "mvw/error.hpp"
#include "mvw/laws.hpp"
#include "mvw/spectrum.hpp"
#include "support.hpp"

using namespace mvw;
using support::to_set;

namespace {

MvwRig z1xz1() {
  auto z1 = build_zn(1);
  return direct_product(z1, z1);
}

std::size_t point_index(SpecSpace const& s, ElemSet const& p) {
  auto it = std::find(s.points.begin(), s.points.end(), p);
  REQUIRE(it != s.points.end());
  return static_cast<std::size_t>(it - s.points.begin());
}

std::vector<MvwRig> commutative_unital(std::size_t max) {
  std::vector<MvwRig> out;
  for (auto& r : catalog::examples(max))
    if (r.is_commutative() && r.has_unit()) out.push_back(std::move(r));
  return out;
}

}  // namespace

TEST_CASE("Spec(Z3) has one point") {
  auto s = spec(build_zn(3));
  REQUIRE(s.size() == 1);
  CHECK(s.points[0] == ElemSet(4, {0}));
  CHECK(s.opens.size() == 2);
  CHECK(is_t0(s).ok);
  CHECK(is_irreducible(s).ok);
}

TEST_CASE("Spec(Z1 x Z1) has two points") {
  auto r = z1xz1();
  auto s = spec(r);
  REQUIRE(s.size() == 2);
  auto i1 = point_index(s, ElemSet(4, {0, 1}));
  auto i2 = point_index(s, ElemSet(4, {0, 2}));
  // V(a) collects the points containing a
  CHECK(basic_open(s, 1) == ElemSet(2, {static_cast<Elem>(i1)}));
  CHECK(basic_open(s, 2) == ElemSet(2, {static_cast<Elem>(i2)}));
  CHECK(s.opens.size() == 4);
  CHECK(is_t0(s).ok);
  auto irr = is_irreducible(s);
  CHECK_FALSE(irr.ok);
  CHECK_FALSE(irr.witness.empty());
  CHECK(point_closure(s, i1) == ElemSet(2, {static_cast<Elem>(i1)}));
  CHECK(set_closure(s, ElemSet(2)).empty());
  auto ro = radical_order_check(r, s, 1, 2);
  CHECK_FALSE(ro.topological);
  CHECK_FALSE(ro.algebraic);
}

TEST_CASE("Spec(T3) is empty") {
  auto s = spec(catalog::t_n(3));
  CHECK(s.size() == 0);
  CHECK(s.unit_warning);
  CHECK_FALSE(is_irreducible(s).ok);
  CHECK(to_dot(catalog::t_n(3), s) == "digraph \"Spec(T3)\" {\n}\n");
}

TEST_CASE("Spec rejects non-commutative rigs") {
  CHECK_THROWS_AS(spec(build_matrix_rig(build_zn(1), 2).rig), Error);
}

TEST_CASE("points and opens match the oracle") {
  for (auto const& r : catalog::examples(10)) {
    if (!r.is_commutative()) continue;
    INFO(r.name());
    auto s = spec(r);
    auto pts = oracle::spectrum(r);
    REQUIRE(s.size() == pts.size());
    for (auto const& p : pts) CHECK(std::find(s.points.begin(), s.points.end(), to_set(p)) != s.points.end());
    // opens, re-expressed through the oracle's point order
    std::vector<std::size_t> to_ours;
    for (auto const& p : pts) to_ours.push_back(point_index(s, to_set(p)));
    auto expected = oracle::opens(r, pts);
    std::set<std::vector<bool>> ours;
    for (auto const& u : s.opens) {
      std::vector<bool> v(pts.size());
      for (std::size_t i = 0; i < pts.size(); ++i) v[i] = u.contains(static_cast<Elem>(to_ours[i]));
      ours.insert(v);
    }
    CHECK(ours == expected);
    CHECK(check_topology(s).ok);
    CHECK(is_t0(s).ok);
    CHECK(laws::specialization(s).ok);
    CHECK(laws::set_closure_laws(s).ok);
    CHECK(laws::radical_order(r, s).ok);
  }
}

TEST_CASE("unit-gated laws on commutative unital examples") {
  for (auto const& r : commutative_unital(12)) {
    INFO(r.name());
    auto s = spec(r);
    CHECK(laws::base_laws(r, s).ok);
    CHECK(laws::nilpotent_law(r, s).ok);
    CHECK(laws::irreducible_iff_local(r, s).ok);
    CHECK(laws::maximal_are_prime(r).ok);
  }
}

TEST_CASE("maps between spectra") {
  auto p = z1xz1();
  auto z1 = build_zn(1);
  auto m = spec_map(Homomorphism(p, z1, {0, 0, 1, 1}));
  REQUIRE(m.star.size() == 1);
  CHECK(m.source.points[m.star[0]] == ElemSet(4, {0, 1}));
  CHECK(m.ok());
  CHECK(!m.image_of_basic_opens);

  auto z3 = build_zn(3);
  auto id = spec_map(Homomorphism(z3, z3, {0, 1, 2, 3}));
  CHECK(id.star == std::vector<std::size_t>{0});
  CHECK(id.ok());
  REQUIRE(id.homeomorphism);
  CHECK(id.homeomorphism->ok);

  auto sub = subalgebra_closure(z3, ElemSet(4, {0}));
  auto inc = spec_map(Homomorphism(sub.rig, z3, sub.inclusion));
  CHECK(inc.star == std::vector<std::size_t>{0});
  CHECK(inc.ok());
  REQUIRE(inc.surjective);
  CHECK(inc.surjective->ok);
  // read over every b of Z3, the identity fails at b = 1: phi^-1(1) is empty
  REQUIRE(inc.image_of_basic_opens_all);
  CHECK_FALSE(inc.image_of_basic_opens_all->ok);
  CHECK(inc.image_of_basic_opens_all->witness.rfind("b = 1:", 0) == 0);

  CHECK_THROWS_AS(spec_map(Homomorphism(z3, z3, {0, 2, 1, 3})), Error);
}

TEST_CASE("spec map laws over the homomorphism family") {
  for (auto const& r : catalog::examples(9)) {
    if (!r.is_commutative()) continue;
    INFO(r.name());
    laws::HomFamily fam(r);
    for (std::size_t i = 0; i < fam.maps().size(); ++i) {
      INFO(fam.labels()[i]);
      CHECK(laws::spec_map_laws(fam.maps()[i]).ok);
    }
  }
}

TEST_CASE("DOT export") {
  auto z3 = build_zn(3);
  CHECK(to_dot(z3, spec(z3)) == "digraph \"Spec(Z3)\" {\n  p0 [label=\"{0}\"];\n}\n");
  auto r = z1xz1();
  auto dot = to_dot(r, spec(r));
  CHECK(dot.find("->") == std::string::npos);
  CHECK(dot.find("p1 [label=") != std::string::npos);
  // a chain of primes gives covering edges
  auto z = build_zn(1);
  auto big = direct_product(build_zn(2), z);
  auto sb = spec(big);
  auto d = to_dot(big, sb);
  std::size_t edges = 0;
  for (std::size_t q = 0; q < sb.size(); ++q)
    for (std::size_t p = 0; p < sb.size(); ++p)
      if (p != q && sb.points[q].is_subset_of(sb.points[p])) ++edges;
  std::size_t arrows = 0;
  for (auto pos = d.find("->"); pos != std::string::npos; pos = d.find("->", pos + 1)) ++arrows;
  CHECK(arrows <= edges);
}
