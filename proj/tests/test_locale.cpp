#include <catch2/catch_amalgamated.hpp>

#include "mvw/builders.hpp"
#include "mvw/catalog.hpp"
#include "mvw/error.hpp"
#include "mvw/laws.hpp"
#include "mvw/locale.hpp"
#include "mvw/spectrum.hpp"
#include "support.hpp"

using namespace mvw;
using support::to_set;

namespace {

MvwRig z1xz1() {
  auto z1 = build_zn(1);
  return direct_product(z1, z1);
}

std::vector<MvwRig> commutative_unital(std::size_t max) {
  std::vector<MvwRig> out;
  for (auto& r : catalog::examples(max))
    if (r.is_commutative() && r.has_unit()) out.push_back(std::move(r));
  return out;
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

TEST_CASE("sums of multiples") {
  auto z3 = build_zn(3);
  CHECK(dotsum_closure(z3, 1) == ElemSet::full(4));
  CHECK(dotsum_closure(z3, 0) == ElemSet(4, {0}));
  CHECK(dotsum_closure(z3, 3) == ElemSet(4, {0, 3}));
  for (auto const& r : catalog::examples(9))
    for (Elem x = 0; x < r.size(); ++x) CHECK(dotsum_closure(r, x) == to_set(oracle::sums_of_multiples(r, x)));
}

TEST_CASE("filters and P-filters") {
  auto z3 = build_zn(3);
  CHECK(is_filter(z3, ElemSet(4, {2, 3})).ok);
  auto k = is_pfilter(z3, ElemSet(4, {2, 3}));
  CHECK_FALSE(k.ok);
  CHECK_FALSE(k.witness.empty());
  CHECK(is_pfilter(z3, ElemSet(4, {1, 2, 3})).ok);
  CHECK(is_pfilter(z3, ElemSet::full(4)).ok);
  CHECK_FALSE(is_pfilter(z3, ElemSet(4)).ok);
}

TEST_CASE("generated and principal P-filters") {
  auto z3 = build_zn(3);
  ElemSet fu(4, {1, 2, 3});
  CHECK(pfilter_generated(z3, ElemSet(4, {3})) == fu);
  CHECK(pfilter_generated(z3, ElemSet(4, {1})) == fu);
  CHECK(pfilter_generated(z3, ElemSet(4, {0})).is_full());
  CHECK(kind_of([&] { pfilter_generated(z3, ElemSet(4)); }) == ErrorKind::EmptySeed);
  CHECK(principal_pfilter(z3, 0).is_full());
  CHECK(principal_pfilter(z3, 3) == fu);
  CHECK(principal_pfilter(z3, 1) == fu);
}

TEST_CASE("generated P-filter is the least one containing the seed") {
  for (auto const& r : catalog::examples(8)) {
    auto all = oracle::pfilters(r);
    for (Elem a = 0; a < r.size(); ++a)
      for (Elem b = a; b < r.size(); ++b) {
        ElemSet seed(r.size(), {a, b});
        // least = intersection of all P-filters above the seed
        ElemSet least = ElemSet::full(r.size());
        for (auto const& f : all)
          if (seed.is_subset_of(to_set(f))) least = least & to_set(f);
        INFO(r.name() << " seed " << a << ", " << b);
        CHECK(pfilter_generated(r, seed) == least);
      }
  }
}

TEST_CASE("P-filter enumeration equals the subset scan") {
  for (auto const& r : catalog::examples(12)) {
    INFO(r.name());
    auto ours = enumerate_pfilters(r);
    std::sort(ours.begin(), ours.end());
    std::vector<ElemSet> theirs;
    for (auto const& f : oracle::pfilters(r)) theirs.push_back(to_set(f));
    std::sort(theirs.begin(), theirs.end());
    CHECK(ours == theirs);
  }
}

TEST_CASE("meets and joins") {
  auto z3 = build_zn(3);
  auto f1 = principal_pfilter(z3, 1), f3 = principal_pfilter(z3, 3);
  CHECK(pfilter_meet(z3, f1, f3) == principal_pfilter(z3, z3.join(1, 3)));
  CHECK(pfilter_meet(z3, f1, ElemSet::full(4)) == f1);
  CHECK(pfilter_join(z3, f1, f3) == principal_pfilter(z3, z3.mul(1, 3)));
  CHECK_THROWS(pfilter_meet(z3, ElemSet(4, {2, 3}), f1));
}

TEST_CASE("frames of named rigs") {
  auto z3 = build_zn(3);
  auto l = frame(z3);
  CHECK(l.filters == std::vector<ElemSet>{ElemSet(4, {1, 2, 3}), ElemSet::full(4)});
  CHECK(l.hasse == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
  auto o = frame(catalog::trivial_rig());
  CHECK(o.size() == 1);
  auto p = z1xz1();
  auto lp = frame(p);
  CHECK(lp.size() == 4);
  CHECK(lp.size() == spec(p).opens.size());
  CHECK(lp.distributive.ok);
  CHECK_THROWS_AS(frame(build_zn(6), 5), Error);
}

TEST_CASE("theta on named rigs") {
  auto z3 = build_zn(3);
  auto s = spec(z3);
  auto l = frame(z3);
  auto t = theta(z3, s, l);
  CHECK(t.ok());
  // opens are stored sorted, so the empty open comes first
  REQUIRE(s.opens.front().empty());
  CHECK(l.filters[t.map.front()] == principal_pfilter(z3, 3));
  CHECK(l.filters[t.map.back()].is_full());
  auto o = catalog::trivial_rig();
  CHECK(theta(o, spec(o), frame(o)).ok());
  auto t3 = catalog::t_n(3);
  CHECK(kind_of([&] { theta(t3, spec(t3), frame(t3)); }) == ErrorKind::GateNotMet);
}

TEST_CASE("finite subcovers") {
  auto z3 = build_zn(3);
  CHECK(finite_subcover(z3, {0}).generators == std::vector<Elem>{0});
  CHECK(kind_of([&] { finite_subcover(z3, {3}); }) == ErrorKind::NotACover);
  auto p = z1xz1();
  auto sc = finite_subcover(p, {1, 2});
  auto g = sc.generators;
  std::sort(g.begin(), g.end());
  CHECK(g == std::vector<Elem>{1, 2});
  CHECK(p.mul(1, 2) == 0);
}

TEST_CASE("locale laws on commutative unital examples") {
  for (auto const& r : commutative_unital(9)) {
    INFO(r.name());
    auto s = spec(r);
    auto l = frame(r);
    CHECK(l.size() == s.opens.size());
    CHECK(laws::pfilter_generation(r).ok);
    CHECK(laws::pfilter_decomposition(r, l).ok);
    CHECK(laws::principal_identities(r, l).ok);
    CHECK(laws::frame_laws(r, l).ok);
    CHECK(laws::theta_iso(r, s, l).ok);
    CHECK(laws::subcover_soundness(r, l).ok);
    CHECK(laws::spec_compactness(r, s).ok);
  }
}

TEST_CASE("frame distributivity by brute force over principal families") {
  for (auto const& r : commutative_unital(8)) {
    auto l = frame(r);
    std::vector<std::size_t> principals(l.principal.begin(), l.principal.end());
    std::sort(principals.begin(), principals.end());
    principals.erase(std::unique(principals.begin(), principals.end()), principals.end());
    if (principals.size() > 12) continue;
    INFO(r.name());
    for (std::size_t f = 0; f < l.size(); ++f)
      for (std::size_t mask = 0; mask < (std::size_t{1} << principals.size()); ++mask) {
        std::size_t lhs_join = 0, rhs = 0;
        for (std::size_t i = 0; i < principals.size(); ++i)
          if (mask >> i & 1) {
            lhs_join = l.join_of(lhs_join, principals[i]);
            rhs = l.join_of(rhs, l.meet_of(f, principals[i]));
          }
        CHECK(l.meet_of(f, lhs_join) == rhs);
      }
  }
}
