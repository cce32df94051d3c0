#include "mvw/laws.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <fmt/format.h>

#include "mvw/chang.hpp"
#include "mvw/quotient.hpp"

namespace mvw::laws {

namespace {

std::string nm(MvAlgebra const& a, Elem x) { return a.name_of(x); }

}  // namespace

Check order_is_lattice(MvAlgebra const& a) {
  auto const n = static_cast<Elem>(a.size());
  for (Elem x = 0; x < n; ++x) {
    if (!a.leq(x, x)) return Check::failure(fmt::format("{} <= {} fails", nm(a, x), nm(a, x)));
    if (!a.leq(0, x) || !a.leq(x, a.top()))
      return Check::failure(fmt::format("{} lies outside [0, u]", nm(a, x)));
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem j = a.join(x, y), m = a.meet(x, y);
      if (!a.leq(x, j) || !a.leq(y, j)) return Check::failure(fmt::format("{} v {} = {} is not an upper bound", nm(a, x), nm(a, y), nm(a, j)));
      if (!a.leq(m, x) || !a.leq(m, y)) return Check::failure(fmt::format("{} ^ {} = {} is not a lower bound", nm(a, x), nm(a, y), nm(a, m)));
      for (Elem z = 0; z < n; ++z) {
        if (a.leq(x, y) && a.leq(y, z) && !a.leq(x, z))
          return Check::failure(fmt::format("order is not transitive at ({}, {}, {})", nm(a, x), nm(a, y), nm(a, z)));
        if (a.leq(x, z) && a.leq(y, z) && !a.leq(j, z))
          return Check::failure(fmt::format("{} v {} is not least: {} is a smaller upper bound", nm(a, x), nm(a, y), nm(a, z)));
        if (a.leq(z, x) && a.leq(z, y) && !a.leq(z, m))
          return Check::failure(fmt::format("{} ^ {} is not greatest: {} is a larger lower bound", nm(a, x), nm(a, y), nm(a, z)));
      }
    }
  return {};
}

Check residuation(MvAlgebra const& a) {
  auto const n = static_cast<Elem>(a.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (a.leq(x, a.add(y, z)) != a.leq(a.monus(x, z), y))
          return Check::failure(fmt::format("x = {}, y = {}, z = {}: x <= y + z is {} but x - z <= y is {}", nm(a, x),
                                            nm(a, y), nm(a, z), a.leq(x, a.add(y, z)), a.leq(a.monus(x, z), y)));
  return {};
}

Check monus_subadditive(MvAlgebra const& a, std::size_t arity) {
  if (arity < 1) throw Error(ErrorKind::InvalidArgument, "arity must be >= 1");
  auto const n = static_cast<std::size_t>(a.size());
  auto code = [n](std::size_t sx, std::size_t sy, std::size_t d) { return (sx * n + sy) * n + d; };
  constexpr auto none = static_cast<std::uint32_t>(-1);
  struct Step {
    std::uint32_t prev = none;
    Elem x = 0, y = 0;
  };
  // layers[k] maps each attainable triple after k + 1 summands to how it was reached.
  std::vector<std::map<std::size_t, Step>> layers(arity);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) layers[0].emplace(code(x, y, a.monus(x, y)), Step{none, x, y});
  for (std::size_t k = 1; k < arity; ++k)
    for (auto const& [c, _] : layers[k - 1]) {
      auto sx = static_cast<Elem>(c / (n * n)), sy = static_cast<Elem>(c / n % n), d = static_cast<Elem>(c % n);
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
          layers[k].emplace(code(a.add(sx, x), a.add(sy, y), a.add(d, a.monus(x, y))),
                            Step{static_cast<std::uint32_t>(c), x, y});
    }
  for (auto const& [c, step] : layers[arity - 1]) {
    auto sx = static_cast<Elem>(c / (n * n)), sy = static_cast<Elem>(c / n % n), d = static_cast<Elem>(c % n);
    if (a.leq(a.monus(sx, sy), d)) continue;
    std::vector<std::string> xs, ys;
    auto cur = c;
    for (std::size_t k = arity; k-- > 0;) {
      auto const& s = layers[k].at(cur);
      xs.push_back(nm(a, s.x));
      ys.push_back(nm(a, s.y));
      cur = s.prev;
    }
    std::reverse(xs.begin(), xs.end());
    std::reverse(ys.begin(), ys.end());
    return Check::failure(fmt::format("x = ({}), y = ({}): {} - {} = {} is not <= {}", fmt::join(xs, ", "),
                                      fmt::join(ys, ", "), nm(a, sx), nm(a, sy), nm(a, a.monus(sx, sy)), nm(a, d)));
  }
  return {};
}

Check product_monotone(MvwRig const& r) {
  auto const n = static_cast<Elem>(r.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!r.leq(a, b)) continue;
      for (Elem c = 0; c < n; ++c) {
        if (!r.leq(r.mul(a, c), r.mul(b, c)))
          return Check::failure(fmt::format("{} <= {} but {}{} = {} is not <= {}{} = {}", nm(r, a), nm(r, b), nm(r, a),
                                            nm(r, c), nm(r, r.mul(a, c)), nm(r, b), nm(r, c), nm(r, r.mul(b, c))));
        if (!r.leq(r.mul(c, a), r.mul(c, b)))
          return Check::failure(fmt::format("{} <= {} but {}{} = {} is not <= {}{} = {}", nm(r, a), nm(r, b), nm(r, c),
                                            nm(r, a), nm(r, r.mul(c, a)), nm(r, c), nm(r, b), nm(r, r.mul(c, b))));
      }
    }
  return {};
}

namespace {

// Checks f(a, g(b, c)) against g(f(a, b), f(a, c)) on both sides.
template <typename Lattice>
Check distributive_bound(MvwRig const& r, Lattice op, bool product_above, char const* sym) {
  auto const n = static_cast<Elem>(r.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        Elem bc = op(b, c);
        Elem l1 = r.mul(a, bc), r1 = op(r.mul(a, b), r.mul(a, c));
        Elem l2 = r.mul(bc, a), r2 = op(r.mul(b, a), r.mul(c, a));
        bool ok1 = product_above ? r.leq(r1, l1) : r.leq(l1, r1);
        bool ok2 = product_above ? r.leq(r2, l2) : r.leq(l2, r2);
        if (!ok1 || !ok2)
          return Check::failure(fmt::format("a = {}, b = {}, c = {}: {} side, product {} against {} of products {}",
                                            nm(r, a), nm(r, b), nm(r, c), ok1 ? "right" : "left",
                                            nm(r, ok1 ? l2 : l1), sym, nm(r, ok1 ? r2 : r1)));
      }
  return {};
}

}  // namespace

Check product_join(MvwRig const& r) {
  return distributive_bound(r, [&](Elem x, Elem y) { return r.join(x, y); }, true, "join");
}

Check product_meet(MvwRig const& r) {
  return distributive_bound(r, [&](Elem x, Elem y) { return r.meet(x, y); }, false, "meet");
}

Check power_join(MvwRig const& r, std::size_t max_n) {
  auto const n = static_cast<Elem>(r.size());
  for (std::size_t k = 1; k <= max_n; ++k)
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        Elem lhs = r.power(r.join(a, b), k), rhs = r.join(r.power(a, k), r.power(b, k));
        if (!r.leq(rhs, lhs))
          return Check::failure(fmt::format("n = {}, a = {}, b = {}: (a v b)^n = {} is not >= a^n v b^n = {}", k,
                                            nm(r, a), nm(r, b), nm(r, lhs), nm(r, rhs)));
      }
  return {};
}

Check power_meet(MvwRig const& r, std::size_t max_n) {
  auto const n = static_cast<Elem>(r.size());
  for (std::size_t k = 1; k <= max_n; ++k)
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        Elem lhs = r.power(r.meet(a, b), k), rhs = r.meet(r.power(a, k), r.power(b, k));
        if (!r.leq(lhs, rhs))
          return Check::failure(fmt::format("n = {}, a = {}, b = {}: (a ^ b)^n = {} is not <= a^n ^ b^n = {}", k,
                                            nm(r, a), nm(r, b), nm(r, lhs), nm(r, rhs)));
      }
  return {};
}

Check unit_unique(MvwRig const& r) {
  auto const n = static_cast<Elem>(r.size());
  std::vector<Elem> units;
  for (Elem s = 0; s < n; ++s) {
    bool unit = true;
    for (Elem x = 0; x < n && unit; ++x) unit = r.mul(s, x) == x && r.mul(x, s) == x;
    if (unit) units.push_back(s);
  }
  if (units.size() > 1) return Check::failure(fmt::format("{} and {} are both units", nm(r, units[0]), nm(r, units[1])));
  std::optional<Elem> found = units.empty() ? std::nullopt : std::optional<Elem>(units[0]);
  if (found != r.unit()) return Check::failure("cached unit flag disagrees with the scan");
  return {};
}

Check derive_idempotent(MvwRig const& r) {
  auto again = MvwRig::derive(r.name(), r.names(), r.neg_table(), r.add_table(), r.mul_table());
  if (!(again == r)) return Check::failure("re-deriving the tables changed the structure");
  return {};
}

namespace {

// Every partition of {0..n-1} as a restricted growth string.
template <typename F>
void for_each_partition(std::size_t n, F&& f) {
  std::vector<Elem> labels(n, 0);
  auto rec = [&](auto&& self, std::size_t i, Elem max_label) -> void {
    if (i == n) {
      f(labels);
      return;
    }
    for (Elem l = 0; l <= max_label + 1; ++l) {
      labels[i] = l;
      self(self, i + 1, std::max(max_label, l));
    }
  };
  if (n == 0) return;
  labels[0] = 0;
  rec(rec, 1, 0);
}

}  // namespace

Check congruence_bijection(MvwRig const& r) {
  for (auto const& i : enumerate_ideals(r)) {
    auto c = congruence_from_ideal(r, i.members);
    if (auto k = check_congruence(r, c); !k)
      return Check::failure(fmt::format("the relation of {} is not a congruence: {}", format_set(r, i.members), k.witness));
    if (ideal_from_congruence(r, c).members != i.members)
      return Check::failure(fmt::format("{} does not come back from its congruence", format_set(r, i.members)));
  }
  // All partitions of small carriers: every congruence comes from its zero class.
  if (r.size() > 8) return {};
  std::optional<Check> fail;
  for_each_partition(r.size(), [&](std::vector<Elem> const& labels) {
    if (fail) return;
    auto c = make_partition(labels);
    if (!check_congruence(r, c)) return;
    auto zero_class = ideal_from_congruence(r, c).members;
    if (auto k = is_ideal(r, zero_class); !k) {
      fail = Check::failure(fmt::format("class of 0 {} is not an ideal: {}", format_set(r, zero_class), k.witness));
    } else if (congruence_from_ideal(r, zero_class) != c) {
      fail = Check::failure(fmt::format("congruence with zero class {} is not recovered from it", format_set(r, zero_class)));
    }
  });
  return fail.value_or(Check{});
}

Check quotient_laws(MvwRig const& r) {
  for (auto const& i : enumerate_ideals(r)) {
    auto q = quotient(r, i.members);
    auto report = check_all(q.rig);
    if (!report.ok())
      return Check::failure(fmt::format("{} fails {}", q.rig.name(), report.witnesses().front().axiom));
    Homomorphism p(r, q.rig, q.projection());
    if (auto k = check_homomorphism(p); !k)
      return Check::failure(fmt::format("projection onto {} is not a homomorphism: {}", q.rig.name(), k.witness));
    if (kernel(p).members != i.members)
      return Check::failure(fmt::format("projection onto {} has the wrong kernel", q.rig.name()));
  }
  return {};
}

Check correspondence(MvwRig const& r) {
  for (auto const& i : enumerate_ideals(r)) {
    try {
      ideal_correspondence(r, i.members);
    } catch (std::logic_error const& e) {
      return Check::failure(fmt::format("I = {}: {}", format_set(r, i.members), e.what()));
    }
  }
  return {};
}

Check maximal_exist(MvwRig const& r) {
  if (r.size() == 1) return {};
  auto maxes = maximal_ideals(r);
  if (maxes.empty()) return Check::failure("no maximal ideal");
  for (auto const& i : enumerate_ideals(r)) {
    if (i.members.is_full()) continue;
    bool covered = std::any_of(maxes.begin(), maxes.end(), [&](Ideal const& m) { return i.members.is_subset_of(m.members); });
    if (!covered) return Check::failure(fmt::format("{} lies in no maximal ideal", format_set(r, i.members)));
  }
  return {};
}

Check maximal_are_prime(MvwRig const& r) {
  if (r.size() == 1) return {};
  for (auto const& m : maximal_ideals(r))
    if (auto k = prime_clause(r, m.members); !k)
      return Check::failure(fmt::format("maximal ideal {} is not prime: {}", format_set(r, m.members), k.witness));
  return {};
}

Check nilradical_laws(MvwRig const& r) {
  auto nil = nilradical(r).members;
  if (auto k = is_ideal(r, nil); !k) return Check::failure(fmt::format("nilradical {} is not an ideal: {}", format_set(r, nil), k.witness));
  auto q = quotient(r, nil);
  for (Elem x = 1; x < q.rig.size(); ++x)
    if (is_nilpotent(q.rig, x)) return Check::failure(fmt::format("{} is a nonzero nilpotent of {}", q.rig.name_of(x), q.rig.name()));
  for (auto const& p : prime_ideals(r))
    if (!nil.is_subset_of(p.members))
      return Check::failure(fmt::format("nilradical is not inside the prime {}", format_set(r, p.members)));
  return {};
}

Check nilradical_is_prime_intersection(MvwRig const& r) {
  auto nil = nilradical(r).members;
  auto meet = radical_via_primes(r, ElemSet(r.size(), {0}));
  if (nil != meet)
    return Check::failure(fmt::format("nilradical {} but the intersection of primes is {}", format_set(r, nil), format_set(r, meet)));
  return {};
}

Check radical_laws(MvwRig const& r) {
  auto ideals = enumerate_ideals(r);
  std::vector<ElemSet> rad;
  for (auto const& i : ideals) {
    auto direct = radical(r, i.members).members;
    auto via = radical_via_primes(r, i.members);
    auto const is = format_set(r, i.members);
    if (direct != via)
      return Check::failure(fmt::format("I = {}: radical {} but the intersection of primes over I is {}", is,
                                        format_set(r, direct), format_set(r, via)));
    if (!i.members.is_subset_of(direct)) return Check::failure(fmt::format("I = {} is not inside its radical", is));
    auto c = classify_ideal(r, i.members);
    if (c.proper && c.prime && direct != i.members)
      return Check::failure(fmt::format("prime {} differs from its radical {}", is, format_set(r, direct)));
    rad.push_back(std::move(direct));
  }
  for (std::size_t a = 0; a < ideals.size(); ++a)
    for (std::size_t b = 0; b < ideals.size(); ++b) {
      auto const& i = ideals[a].members;
      auto const& j = ideals[b].members;
      if (i.is_subset_of(j) && !rad[a].is_subset_of(rad[b]))
        return Check::failure(fmt::format("{} inside {} but the radicals are not nested", format_set(r, i), format_set(r, j)));
      auto lhs = radical(r, i & j).members;
      auto rhs = radical(r, ideal_product(r, i, j).members).members;
      if (lhs != rhs)
        return Check::failure(fmt::format("I = {}, J = {}: radical of the intersection {} but radical of IJ {}",
                                          format_set(r, i), format_set(r, j), format_set(r, lhs), format_set(r, rhs)));
    }
  return {};
}

Check prime_is_mv_prime(MvwRig const& r) {
  for (auto const& p : prime_ideals(r))
    if (auto k = mv_prime_clause(r, p.members); !k)
      return Check::failure(fmt::format("prime {} is not MV-prime: {}", format_set(r, p.members), k.witness));
  return {};
}

Check chang(MvAlgebra const& mv) {
  if (mv.size() == 1) return {};
  auto e = chang_embedding(mv);
  if (!e.ok()) return Check::failure(e.witness);
  return {};
}

Check homomorphism_laws(Homomorphism const& f) {
  if (auto k = check_homomorphism(f); !k) return k;
  auto const& a = f.source();
  auto const& b = f.target();
  auto ker = kernel(f).members;
  if (auto k = is_ideal(a, ker); !k) return Check::failure("kernel is not an ideal: " + k.witness);
  auto values = direct_image(f, ElemSet::full(a.size()));
  if (image(f).rig.size() != values.count()) return Check::failure("the image is not closed under the operations");
  bool injective = values.count() == a.size();
  if (injective != (ker.count() == 1))
    return Check::failure(fmt::format("injective is {} but the kernel is {}", injective, format_set(a, ker)));
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y)
      if (b.leq(f(x), f(y)) != ker.contains(a.monus(x, y)))
        return Check::failure(fmt::format("x = {}, y = {}: f(x) <= f(y) is {} but x - y in ker is {}", a.name_of(x),
                                          a.name_of(y), b.leq(f(x), f(y)), ker.contains(a.monus(x, y))));
  for (auto const& j : enumerate_ideals(b)) {
    auto pre = preimage(f, j.members);
    if (auto k = is_ideal(a, pre); !k)
      return Check::failure(fmt::format("preimage of {} is not an ideal: {}", format_set(b, j.members), k.witness));
    if (classify_ideal(b, j.members).prime) {
      if (auto k = prime_clause(a, pre); !k)
        return Check::failure(fmt::format("preimage of the prime {} is not prime: {}", format_set(b, j.members), k.witness));
    }
  }
  return {};
}

Check first_isomorphism(Homomorphism const& f) {
  try {
    first_iso(f);
  } catch (std::logic_error const& e) {
    return Check::failure(e.what());
  }
  return {};
}

HomFamily::HomFamily(MvwRig const& rig, std::size_t endo_limit) {
  if (rig.size() <= endo_limit) {
    std::size_t k = 0;
    for (auto& values : enumerate_homomorphisms(rig, rig)) {
      maps_.emplace_back(rig, rig, std::move(values));
      labels_.push_back(fmt::format("endomorphism #{}", k++));
    }
  }
  for (auto const& i : enumerate_ideals(rig)) {
    auto q = quotient(rig, i.members);
    auto const& target = rigs_.emplace_back(std::move(q.rig));
    maps_.emplace_back(rig, target, q.congruence.class_of);
    labels_.push_back("projection onto " + target.name());
  }
  std::vector<std::vector<Elem>> seen;
  for (Elem a = 0; a < rig.size(); ++a) {
    auto sub = subalgebra_closure(rig, ElemSet(rig.size(), {a}));
    if (std::find(seen.begin(), seen.end(), sub.inclusion) != seen.end()) continue;
    seen.push_back(sub.inclusion);
    auto const& source = rigs_.emplace_back(std::move(sub.rig));
    maps_.emplace_back(source, rig, sub.inclusion);
    labels_.push_back(fmt::format("inclusion of the sub-rig generated by {}", rig.name_of(a)));
  }
}

Check base_laws(MvwRig const& r, SpecSpace const& s) {
  if (basic_open(s, 0) != s.all()) return Check::failure("V(0) is not the whole space");
  if (!basic_open(s, r.top()).empty()) return Check::failure("V(u) is not empty");
  auto const n = static_cast<Elem>(r.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      auto const& va = basic_open(s, a);
      auto const& vb = basic_open(s, b);
      auto where = fmt::format("a = {}, b = {}", r.name_of(a), r.name_of(b));
      if (basic_open(s, r.add(a, b)) != (va & vb)) return Check::failure(where + ": V(a + b) differs from V(a) n V(b)");
      if (basic_open(s, r.join(a, b)) != (va & vb)) return Check::failure(where + ": V(a v b) differs from V(a) n V(b)");
      if (basic_open(s, r.mul(a, b)) != (va | vb)) return Check::failure(where + ": V(ab) differs from V(a) u V(b)");
      if (!basic_open(s, r.mul(a, b)).is_subset_of(basic_open(s, r.meet(a, b))))
        return Check::failure(where + ": V(ab) is not inside V(a ^ b)");
    }
  return {};
}

Check nilpotent_law(MvwRig const& r, SpecSpace const& s) {
  for (Elem a = 0; a < r.size(); ++a)
    if ((basic_open(s, a) == s.all()) != is_nilpotent(r, a))
      return Check::failure(fmt::format("a = {}: V(a) = Spec is {} but nilpotent is {}", r.name_of(a),
                                        basic_open(s, a) == s.all(), is_nilpotent(r, a)));
  return {};
}

Check specialization(SpecSpace const& s) {
  for (std::size_t p = 0; p < s.size(); ++p) {
    auto cl = point_closure(s, p);
    for (std::size_t q = 0; q < s.size(); ++q)
      if (cl.contains(static_cast<Elem>(q)) != s.points[q].is_subset_of(s.points[p]))
        return Check::failure(fmt::format("P{} in the closure of P{} is {} but inclusion is {}", q, p,
                                          cl.contains(static_cast<Elem>(q)), s.points[q].is_subset_of(s.points[p])));
  }
  return {};
}

Check set_closure_laws(SpecSpace const& s, std::size_t max_points) {
  if (s.size() > max_points) return {};
  auto const np = s.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << np); ++mask) {
    ElemSet u(np);
    for (std::size_t i = 0; i < np; ++i)
      if (mask >> i & 1) u.insert(static_cast<Elem>(i));
    auto cl = set_closure(s, u);
    auto maxes = maximal_points(s, u);
    for (Elem q = 0; q < np; ++q) {
      bool below = false;
      u.for_each([&](Elem p) { below = below || s.points[q].is_subset_of(s.points[p]); });
      if (below && !cl.contains(q))
        return Check::failure(fmt::format("P{} lies below a point of U = {{mask {}}} but not in its closure", q, mask));
      if (maxes.size() == 1 && cl.contains(q) && !below)
        return Check::failure(fmt::format("U = {{mask {}}} has one maximal point, yet P{} is in its closure without lying below U", mask, q));
    }
  }
  return {};
}

Check irreducible_iff_local(MvwRig const& r, SpecSpace const& s) {
  bool irreducible = is_irreducible(s).ok;
  std::size_t maxes = r.size() == 1 ? 0 : maximal_ideals(r).size();
  if (irreducible != (maxes == 1))
    return Check::failure(fmt::format("irreducible is {} with {} maximal ideals", irreducible, maxes));
  return {};
}

Check radical_order(MvwRig const& r, SpecSpace const& s) {
  for (Elem a = 0; a < r.size(); ++a)
    for (Elem b = 0; b < r.size(); ++b) {
      auto res = radical_order_check(r, s, a, b);
      if (res.topological != res.algebraic)
        return Check::failure(fmt::format("a = {}, b = {}: V(a) in V(b) is {} but rad<b> in rad<a> is {}", r.name_of(a),
                                          r.name_of(b), res.topological, res.algebraic));
    }
  return {};
}

Check spec_map_laws(Homomorphism const& f) {
  auto m = spec_map(f);
  for (auto const* c : {&m.continuous, &m.preimage_of_zero_sets})
    if (!c->ok) return *c;
  for (auto const* c : {&m.image_of_basic_opens, &m.homeomorphism, &m.surjective})
    if (*c && !(*c)->ok) return **c;
  return {};
}

std::vector<std::vector<Elem>> element_families(std::size_t n) {
  std::vector<std::vector<Elem>> out;
  if (n <= 16) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<Elem> f;
      for (Elem i = 0; i < n; ++i)
        if (mask >> i & 1) f.push_back(i);
      out.push_back(std::move(f));
    }
    return out;
  }
  out.emplace_back();
  for (Elem a = 0; a < n; ++a) {
    out.push_back({a});
    for (Elem b = a + 1; b < n; ++b) out.push_back({a, b});
  }
  std::vector<Elem> all(n);
  for (Elem i = 0; i < n; ++i) all[i] = i;
  out.push_back(std::move(all));
  return out;
}

Check spec_compactness(MvwRig const& r, SpecSpace const& s) {
  auto cover = [&](std::vector<Elem> const& family) {
    ElemSet u(s.size());
    for (auto a : family) u |= basic_open(s, a);
    return u == s.all();
  };
  for (auto const& family : element_families(r.size())) {
    if (!cover(family)) continue;
    try {
      auto sub = finite_subcover(r, family);
      if (!cover(sub.generators))
        return Check::failure(fmt::format("subcover of a {}-element family does not cover Spec", family.size()));
    } catch (Error const& e) {
      if (e.kind() != ErrorKind::NotACover) throw;
      return Check::failure(fmt::format("a {}-element family covers Spec but its P-filter join is proper", family.size()));
    }
  }
  return {};
}

Check pfilter_generation(MvwRig const& r) {
  auto const n = static_cast<Elem>(r.size());
  auto same = [&](ElemSet const& seed) -> Check {
    auto f = pfilter_generated(r, seed);
    auto g = pfilter_fixpoint(r, seed);
    if (f != g)
      return Check::failure(fmt::format("seed {}: formula gives {} but the closure gives {}", format_set(r, seed),
                                        format_set(r, f), format_set(r, g)));
    if (auto k = is_pfilter(r, f); !k) return Check::failure(fmt::format("seed {}: {}", format_set(r, seed), k.witness));
    return {};
  };
  for (Elem a = 0; a < n; ++a)
    if (auto k = same(ElemSet(n, {a})); !k) return k;
  if (n <= 32)
    for (Elem a = 0; a < n; ++a)
      for (Elem b = a + 1; b < n; ++b)
        if (auto k = same(ElemSet(n, {a, b})); !k) return k;
  return {};
}

Check pfilter_decomposition(MvwRig const& r, FrameLA const& l) {
  for (auto const& f : l.filters) {
    if (auto k = is_pfilter(r, f); !k) return Check::failure(fmt::format("{} is not a P-filter: {}", format_set(r, f), k.witness));
    ElemSet u(r.size());
    f.for_each([&](Elem a) { u |= l.filters[l.principal[a]]; });
    if (u != f) return Check::failure(fmt::format("{} differs from the union of its principal P-filters {}", format_set(r, f), format_set(r, u)));
  }
  return {};
}

Check principal_identities(MvwRig const& r, FrameLA const& l) {
  auto const n = static_cast<Elem>(r.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      auto fa = l.principal[a], fb = l.principal[b];
      auto where = fmt::format("a = {}, b = {}", r.name_of(a), r.name_of(b));
      if (l.meet_of(fa, fb) != l.principal[r.join(a, b)]) return Check::failure(where + ": F_a n F_b differs from F_{a v b}");
      if (l.join_of(fa, fb) != l.principal[r.mul(a, b)]) return Check::failure(where + ": F_a v F_b differs from F_{ab}");
      if (l.filters[l.join_of(fa, fb)] != pfilter_join_by_powers(r, a, b))
        return Check::failure(where + ": F_a v F_b differs from {x : a^n b^m <= (+) b_i x}");
    }
  return {};
}

Check frame_laws(MvwRig const& r, FrameLA const& l) {
  if (l.filters.front() != principal_pfilter(r, r.top()))
    return Check::failure(fmt::format("bottom {} is not F_u", format_set(r, l.filters.front())));
  if (!l.filters.back().is_full()) return Check::failure("top is not the whole carrier");
  return l.distributive;
}

Check theta_iso(MvwRig const& r, SpecSpace const& s, FrameLA const& l) {
  if (s.opens.size() != l.size())
    return Check::failure(fmt::format("{} opens but {} P-filters", s.opens.size(), l.size()));
  auto t = theta(r, s, l);
  for (auto const* c : {&t.well_defined, &t.bijective, &t.preserves_join, &t.preserves_meet, &t.order_isomorphism})
    if (!c->ok) return *c;
  return {};
}

Check subcover_soundness(MvwRig const& r, FrameLA const& l) {
  auto join_of = [&](std::vector<Elem> const& family) {
    std::size_t j = 0;
    for (auto a : family) j = l.join_of(j, l.principal[a]);
    return j;
  };
  std::size_t refusals = 0;
  for (auto const& family : element_families(r.size())) {
    bool is_cover = join_of(family) == l.top();
    if (!is_cover) {
      if (refusals++ >= 256) continue;
      try {
        finite_subcover(r, family);
        return Check::failure(fmt::format("accepted a {}-element family whose join is proper", family.size()));
      } catch (Error const& e) {
        if (e.kind() != ErrorKind::NotACover) throw;
      }
      continue;
    }
    auto sub = finite_subcover(r, family);
    for (auto g : sub.generators)
      if (std::find(family.begin(), family.end(), g) == family.end())
        return Check::failure(fmt::format("subcover uses {}, which is not in the family", r.name_of(g)));
    if (join_of(sub.generators) != l.top())
      return Check::failure(fmt::format("subcover of a {}-element family does not join to A", family.size()));
    if (!sub.word.empty()) {
      Elem p = sub.word.front();
      for (std::size_t i = 1; i < sub.word.size(); ++i) p = r.mul(p, sub.word[i]);
      if (p != 0) return Check::failure("the product witness is not 0");
    }
  }
  return {};
}

}  // namespace mvw::laws
