#include "mvw/ideals.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include <fmt/format.h>

namespace mvw {

std::string format_set(MvAlgebra const& mv, ElemSet const& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Elem x) {
    if (!first) out += ", ";
    out += mv.name_of(x);
    first = false;
  });
  return out + "}";
}

Check is_mv_ideal(MvAlgebra const& mv, ElemSet const& s) {
  auto const n = static_cast<Elem>(mv.size());
  if (!s.contains(0)) return Check::failure("0 is not a member");
  for (Elem b = 0; b < n; ++b) {
    if (!s.contains(b)) continue;
    for (Elem a = 0; a < n; ++a)
      if (!s.contains(a) && mv.leq(a, b))
        return Check::failure(fmt::format("{} <= {} but {} is not a member", mv.name_of(a), mv.name_of(b),
                                          mv.name_of(a)));
    for (Elem c = 0; c < n; ++c)
      if (s.contains(c) && !s.contains(mv.add(b, c)))
        return Check::failure(fmt::format("{} + {} = {} is not a member", mv.name_of(b), mv.name_of(c),
                                          mv.name_of(mv.add(b, c))));
  }
  return {};
}

Check is_ideal(MvwRig const& rig, ElemSet const& s) {
  if (auto c = is_mv_ideal(rig, s); !c) return c;
  auto const n = static_cast<Elem>(rig.size());
  for (Elem a = 0; a < n; ++a) {
    if (!s.contains(a)) continue;
    for (Elem b = 0; b < n; ++b) {
      if (!s.contains(rig.mul(a, b)))
        return Check::failure(fmt::format("{} * {} = {} is not a member", rig.name_of(a), rig.name_of(b),
                                          rig.name_of(rig.mul(a, b))));
      if (!s.contains(rig.mul(b, a)))
        return Check::failure(fmt::format("{} * {} = {} is not a member", rig.name_of(b), rig.name_of(a),
                                          rig.name_of(rig.mul(b, a))));
    }
  }
  return {};
}

namespace {

ElemSet sum_closure(MvAlgebra const& mv, ElemSet set) {
  set.insert(0);
  std::vector<Elem> members = set.elements();
  std::deque<Elem> work(members.begin(), members.end());
  while (!work.empty()) {
    Elem x = work.front();
    work.pop_front();
    for (std::size_t i = 0; i < members.size(); ++i) {
      Elem s = mv.add(x, members[i]);
      if (!set.contains(s)) {
        set.insert(s);
        members.push_back(s);
        work.push_back(s);
      }
    }
  }
  return set;
}

ElemSet down_closure(MvAlgebra const& mv, ElemSet const& set) {
  auto const n = static_cast<Elem>(mv.size());
  ElemSet out(n);
  auto const members = set.elements();
  for (Elem y = 0; y < n; ++y)
    for (auto c : members)
      if (mv.leq(y, c)) {
        out.insert(y);
        break;
      }
  return out;
}

void require_commutative(MvwRig const& rig, std::string_view what) {
  if (!rig.is_commutative())
    throw Error(ErrorKind::NotCommutative, fmt::format("{} requires a commutative rig", what));
}

}  // namespace

ElemSet generated_mv_ideal(MvAlgebra const& mv, ElemSet const& seed) {
  return down_closure(mv, sum_closure(mv, seed));
}

ElemSet generated_ideal_fixpoint(MvwRig const& rig, ElemSet const& seed) {
  auto const n = static_cast<Elem>(rig.size());
  ElemSet cur = seed;
  cur.insert(0);
  while (true) {
    ElemSet next = cur;
    cur.for_each([&](Elem s) {
      for (Elem a = 0; a < n; ++a) {
        next.insert(rig.mul(a, s));
        next.insert(rig.mul(s, a));
      }
    });
    next = down_closure(rig, sum_closure(rig, next));
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

Ideal generated_ideal(MvwRig const& rig, ElemSet const& seed) {
  if (!rig.is_commutative()) return {generated_ideal_fixpoint(rig, seed), true};
  auto const n = static_cast<Elem>(rig.size());
  ElemSet terms = seed;
  seed.for_each([&](Elem s) {
    for (Elem a = 0; a < n; ++a) terms.insert(rig.mul(a, s));
  });
  return {down_closure(rig, sum_closure(rig, terms)), false};
}

std::vector<Ideal> enumerate_ideals(MvwRig const& rig, std::size_t bound) {
  if (rig.size() > bound)
    throw Error(ErrorKind::SizeBound, fmt::format("ideal enumeration on {} elements (bound {})", rig.size(), bound));
  auto const n = static_cast<Elem>(rig.size());
  std::vector<Ideal> principal;
  for (Elem a = 0; a < n; ++a) principal.push_back(generated_ideal(rig, ElemSet(n, {a})));

  std::set<ElemSet> seen;
  std::deque<ElemSet> work;
  auto visit = [&](ElemSet s) {
    if (seen.insert(s).second) work.push_back(std::move(s));
  };
  visit(ElemSet(n, {0}));
  for (auto const& p : principal) visit(p.members);
  while (!work.empty()) {
    ElemSet cur = work.front();
    work.pop_front();
    for (Elem a = 0; a < n; ++a) {
      if (cur.contains(a)) continue;
      visit(generated_ideal(rig, cur | principal[a].members).members);
    }
  }
  std::vector<Ideal> out;
  for (auto const& s : seen) out.push_back({s, !rig.is_commutative()});
  return out;
}

std::vector<ElemSet> enumerate_mv_ideals(MvAlgebra const& mv, std::size_t bound) {
  if (mv.size() > bound)
    throw Error(ErrorKind::SizeBound, fmt::format("MV-ideal enumeration on {} elements (bound {})", mv.size(), bound));
  auto const n = static_cast<Elem>(mv.size());
  std::vector<ElemSet> principal;
  for (Elem a = 0; a < n; ++a) principal.push_back(generated_mv_ideal(mv, ElemSet(n, {a})));
  std::set<ElemSet> seen;
  std::deque<ElemSet> work;
  auto visit = [&](ElemSet s) {
    if (seen.insert(s).second) work.push_back(std::move(s));
  };
  visit(ElemSet(n, {0}));
  for (auto const& p : principal) visit(p);
  while (!work.empty()) {
    ElemSet cur = work.front();
    work.pop_front();
    for (Elem a = 0; a < n; ++a)
      if (!cur.contains(a)) visit(generated_mv_ideal(mv, cur | principal[a]));
  }
  return {seen.begin(), seen.end()};
}

Check prime_clause(MvwRig const& rig, ElemSet const& ideal) {
  auto const n = static_cast<Elem>(rig.size());
  for (Elem a = 0; a < n; ++a) {
    if (ideal.contains(a)) continue;
    for (Elem b = 0; b < n; ++b)
      if (!ideal.contains(b) && ideal.contains(rig.mul(a, b)))
        return Check::failure(fmt::format("{} * {} = {} is in the ideal but neither factor is", rig.name_of(a),
                                          rig.name_of(b), rig.name_of(rig.mul(a, b))));
  }
  return {};
}

Check mv_prime_clause(MvAlgebra const& mv, ElemSet const& ideal) {
  auto const n = static_cast<Elem>(mv.size());
  for (Elem a = 0; a < n; ++a) {
    if (ideal.contains(a)) continue;
    for (Elem b = 0; b < n; ++b)
      if (!ideal.contains(b) && ideal.contains(mv.meet(a, b)))
        return Check::failure(fmt::format("{} /\\ {} = {} is in the ideal but neither argument is", mv.name_of(a),
                                          mv.name_of(b), mv.name_of(mv.meet(a, b))));
  }
  return {};
}

Classification classify_ideal(MvwRig const& rig, ElemSet const& ideal) {
  Classification c;
  c.proper = !ideal.is_full();
  c.prime = prime_clause(rig, ideal).ok;
  c.mv_prime = mv_prime_clause(rig, ideal).ok;
  c.maximal = c.proper;
  auto const n = static_cast<Elem>(rig.size());
  for (Elem a = 0; a < n && c.maximal; ++a) {
    if (ideal.contains(a)) continue;
    ElemSet seed = ideal;
    seed.insert(a);
    c.maximal = generated_ideal(rig, seed).members.is_full();
  }
  return c;
}

std::vector<Ideal> prime_ideals(MvwRig const& rig) {
  std::vector<Ideal> out;
  for (auto const& i : enumerate_ideals(rig))
    if (!i.members.is_full() && prime_clause(rig, i.members).ok) out.push_back(i);
  return out;
}

std::vector<Ideal> maximal_ideals(MvwRig const& rig) {
  if (rig.size() == 1) throw Error(ErrorKind::Trivial, "the trivial rig has no proper ideals");
  std::vector<Ideal> out;
  for (auto const& i : enumerate_ideals(rig))
    if (!i.members.is_full() && classify_ideal(rig, i.members).maximal) out.push_back(i);
  return out;
}

std::vector<ElemSet> mv_prime_ideals(MvAlgebra const& mv) {
  std::vector<ElemSet> out;
  for (auto const& i : enumerate_mv_ideals(mv))
    if (!i.is_full() && mv_prime_clause(mv, i).ok) out.push_back(i);
  return out;
}

bool is_nilpotent(MvwRig const& rig, Elem x) { return nilpotency_index(rig, x).has_value(); }

Ideal nilradical(MvwRig const& rig) {
  require_commutative(rig, "nilradical");
  auto const n = static_cast<Elem>(rig.size());
  ElemSet out(n);
  for (Elem x = 0; x < n; ++x)
    if (is_nilpotent(rig, x)) out.insert(x);
  return {out, false};
}

Ideal radical(MvwRig const& rig, ElemSet const& ideal) {
  require_commutative(rig, "radical");
  auto const n = static_cast<Elem>(rig.size());
  ElemSet out(n);
  for (Elem x = 0; x < n; ++x) {
    // Powers of x stay in I once they enter it, and the sequence cycles
    // within |A| steps, so |A| powers decide membership.
    Elem p = x;
    for (std::size_t k = 1; k <= rig.size(); ++k, p = rig.mul(p, x)) {
      if (ideal.contains(p)) {
        out.insert(x);
        break;
      }
    }
  }
  return {out, false};
}

ElemSet radical_via_primes(MvwRig const& rig, ElemSet const& ideal) {
  ElemSet out = ElemSet::full(rig.size());
  for (auto const& p : prime_ideals(rig))
    if (ideal.is_subset_of(p.members)) out &= p.members;
  return out;
}

Ideal ideal_join(MvwRig const& rig, ElemSet const& i, ElemSet const& j) {
  require_commutative(rig, "ideal join");
  return generated_ideal(rig, i | j);
}

Ideal ideal_product(MvwRig const& rig, ElemSet const& i, ElemSet const& j) {
  require_commutative(rig, "ideal product");
  ElemSet prods(rig.size());
  i.for_each([&](Elem x) { j.for_each([&](Elem y) { prods.insert(rig.mul(x, y)); }); });
  return generated_ideal(rig, prods);
}

Congruence make_partition(std::vector<Elem> const& labels) {
  Congruence c;
  c.class_of.resize(labels.size());
  std::vector<std::pair<Elem, Elem>> seen;  // label -> class
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto it = std::find_if(seen.begin(), seen.end(), [&](auto const& p) { return p.first == labels[x]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[x], static_cast<Elem>(seen.size()));
      c.class_of[x] = seen.back().second;
    } else {
      c.class_of[x] = it->second;
    }
  }
  c.classes = seen.size();
  return c;
}

Congruence congruence_from_ideal(MvAlgebra const& mv, ElemSet const& ideal) {
  auto const n = static_cast<Elem>(mv.size());
  std::vector<Elem> labels(n);
  for (Elem x = 0; x < n; ++x) {
    labels[x] = x;
    for (Elem y = 0; y < x; ++y)
      if (ideal.contains(mv.distance(x, y))) {
        labels[x] = labels[y];
        break;
      }
  }
  return make_partition(labels);
}

namespace {

Check congruence_clauses(MvAlgebra const& mv, MvwRig const* rig, Congruence const& c) {
  auto const n = static_cast<Elem>(mv.size());
  if (c.class_of.size() != n) return Check::failure("partition does not cover the carrier");
  auto same = [&](Elem a, Elem b) { return c.class_of[a] == c.class_of[b]; };
  for (Elem x = 0; x < n; ++x) {
    for (Elem xp = x + 1; xp < n; ++xp) {
      if (!same(x, xp)) continue;
      if (!same(mv.neg(x), mv.neg(xp)))
        return Check::failure(fmt::format("{} ~ {} but ~{} and ~{} are in different classes", mv.name_of(x),
                                          mv.name_of(xp), mv.name_of(x), mv.name_of(xp)));
      for (Elem y = 0; y < n; ++y) {
        if (!same(mv.add(x, y), mv.add(xp, y)))
          return Check::failure(fmt::format("{} ~ {} but {} + {} and {} + {} are in different classes",
                                            mv.name_of(x), mv.name_of(xp), mv.name_of(x), mv.name_of(y),
                                            mv.name_of(xp), mv.name_of(y)));
        if (rig == nullptr) continue;
        if (!same(rig->mul(x, y), rig->mul(xp, y)) || !same(rig->mul(y, x), rig->mul(y, xp)))
          return Check::failure(fmt::format("{} ~ {} but their products with {} are in different classes",
                                            mv.name_of(x), mv.name_of(xp), mv.name_of(y)));
      }
    }
  }
  return {};
}

}  // namespace

Check check_congruence(MvAlgebra const& mv, Congruence const& c) { return congruence_clauses(mv, nullptr, c); }
Check check_congruence(MvwRig const& rig, Congruence const& c) { return congruence_clauses(rig, &rig, c); }

Ideal ideal_from_congruence(MvwRig const& rig, Congruence const& c) {
  if (auto chk = check_congruence(rig, c); !chk)
    throw Error(ErrorKind::NotACongruence, "partition is not compatible with the operations", chk.witness);
  ElemSet out(rig.size());
  for (Elem x = 0; x < rig.size(); ++x)
    if (c.class_of[x] == c.class_of[0]) out.insert(x);
  return {out, false};
}

}  // namespace mvw
