#include "mvw/locale.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

namespace mvw {

namespace {

// Per-rig tables shared by the P-filter routines: up-sets, dotsum closures and
// the down-sets of the dotsum closures.
struct Context {
  MvwRig const& rig;
  std::vector<ElemSet> up;
  std::vector<ElemSet> dotsum;
  std::vector<ElemSet> below_dotsum;  // {p : p <= d for some d in dotsum[x]}

  explicit Context(MvwRig const& r) : rig(r) {
    auto const n = static_cast<Elem>(r.size());
    std::vector<ElemSet> down(n, ElemSet(n));
    up.assign(n, ElemSet(n));
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (r.leq(x, y)) {
          up[x].insert(y);
          down[y].insert(x);
        }
    dotsum.reserve(n);
    below_dotsum.reserve(n);
    for (Elem x = 0; x < n; ++x) {
      dotsum.push_back(dotsum_closure(r, x));
      ElemSet b(n);
      dotsum.back().for_each([&](Elem d) { b |= down[d]; });
      below_dotsum.push_back(std::move(b));
    }
  }

  ElemSet products(ElemSet const& seed) const {
    auto gens = seed.elements();
    ElemSet p = seed;
    std::vector<Elem> frontier = gens;
    while (!frontier.empty()) {
      std::vector<Elem> next;
      for (auto v : frontier)
        for (auto g : gens)
          if (Elem w = rig.mul(v, g); !p.contains(w)) {
            p.insert(w);
            next.push_back(w);
          }
      frontier = std::move(next);
    }
    return p;
  }

  ElemSet by_formula(ElemSet const& seed) const {
    auto p = products(seed);
    ElemSet f(rig.size());
    for (Elem x = 0; x < rig.size(); ++x)
      if (p.intersects(below_dotsum[x])) f.insert(x);
    return f;
  }

  ElemSet fixpoint(ElemSet f) const {
    auto const n = static_cast<Elem>(rig.size());
    for (bool changed = true; changed;) {
      auto before = f;
      f.for_each([&](Elem x) { f |= up[x]; });
      auto members = f.elements();
      for (auto a : members)
        for (auto b : members) f.insert(rig.mul(a, b));
      for (Elem x = 0; x < n; ++x)
        if (dotsum[x].intersects(f)) f.insert(x);
      changed = f != before;
    }
    return f;
  }

  Check filter_clauses(ElemSet const& f) const {
    if (f.empty()) return Check::failure("the set is empty");
    std::string w;
    f.for_each([&](Elem x) {
      if (!w.empty() || up[x].is_subset_of(f)) return;
      auto missing = (up[x] & f.complement()).elements().front();
      w = fmt::format("{} is in F and {} <= {}, but {} is not", rig.name_of(x), rig.name_of(x), rig.name_of(missing),
                      rig.name_of(missing));
    });
    if (!w.empty()) return Check::failure(w);
    auto members = f.elements();
    for (auto a : members)
      for (auto b : members)
        if (!f.contains(rig.mul(a, b)))
          return Check::failure(fmt::format("{} * {} = {} is not in F", rig.name_of(a), rig.name_of(b),
                                            rig.name_of(rig.mul(a, b))));
    return {};
  }

  Check pfilter_clauses(ElemSet const& f) const {
    if (auto c = filter_clauses(f); !c) return c;
    for (Elem x = 0; x < rig.size(); ++x)
      if (!f.contains(x) && dotsum[x].intersects(f)) {
        auto d = (dotsum[x] & f).elements().front();
        return Check::failure(fmt::format("{} is a sum of multiples b{} and lies in F, but {} does not",
                                          rig.name_of(d), rig.name_of(x), rig.name_of(x)));
      }
    return {};
  }

  ElemSet generate(ElemSet const& seed) const {
    if (seed.empty()) throw Error(ErrorKind::EmptySeed, "a P-filter must be generated by a nonempty set");
    auto f = by_formula(seed);
    if (!seed.is_subset_of(f) || !pfilter_clauses(f)) f = fixpoint(seed);
    return f;
  }
};

}  // namespace

ElemSet dotsum_closure(MvwRig const& rig, Elem x) {
  auto const n = static_cast<Elem>(rig.size());
  ElemSet s(n, {0});
  for (Elem b = 0; b < n; ++b) s.insert(rig.mul(b, x));
  auto const gens = s.elements();
  std::vector<Elem> frontier = gens;
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (auto v : frontier)
      for (auto g : gens)
        if (Elem w = rig.add(v, g); !s.contains(w)) {
          s.insert(w);
          next.push_back(w);
        }
    frontier = std::move(next);
  }
  return s;
}

Check is_filter(MvwRig const& rig, ElemSet const& f) { return Context(rig).filter_clauses(f); }
Check is_pfilter(MvwRig const& rig, ElemSet const& f) { return Context(rig).pfilter_clauses(f); }

ElemSet pfilter_generated(MvwRig const& rig, ElemSet const& seed) { return Context(rig).generate(seed); }

ElemSet pfilter_fixpoint(MvwRig const& rig, ElemSet const& seed) {
  if (seed.empty()) throw Error(ErrorKind::EmptySeed, "a P-filter must be generated by a nonempty set");
  return Context(rig).fixpoint(seed);
}

ElemSet principal_pfilter(MvwRig const& rig, Elem a) { return pfilter_generated(rig, ElemSet(rig.size(), {a})); }

ElemSet pfilter_meet(MvwRig const& rig, ElemSet const& f, ElemSet const& g) {
  auto m = f & g;
  if (auto c = is_pfilter(rig, m); !c) throw std::logic_error("intersection of P-filters is not a P-filter: " + c.witness);
  return m;
}

ElemSet pfilter_join(MvwRig const& rig, ElemSet const& f, ElemSet const& g) { return pfilter_generated(rig, f | g); }

ElemSet pfilter_join_by_powers(MvwRig const& rig, Elem a, Elem b) {
  Context ctx(rig);
  ElemSet pa(rig.size()), pb(rig.size());
  for (std::size_t k = 1; k <= rig.size(); ++k) {
    pa.insert(rig.power(a, k));
    pb.insert(rig.power(b, k));
  }
  ElemSet mixed(rig.size());
  pa.for_each([&](Elem x) { pb.for_each([&](Elem y) { mixed.insert(rig.mul(x, y)); }); });
  ElemSet f(rig.size());
  for (Elem x = 0; x < rig.size(); ++x)
    if (mixed.intersects(ctx.below_dotsum[x])) f.insert(x);
  return f;
}

namespace {

std::vector<ElemSet> enumerate_with(Context const& ctx, std::size_t bound) {
  auto const& rig = ctx.rig;
  if (rig.size() > bound)
    throw Error(ErrorKind::SizeBound, fmt::format("carrier of {} elements exceeds the bound {}", rig.size(), bound));
  auto const n = static_cast<Elem>(rig.size());
  std::set<ElemSet> found;
  std::deque<std::pair<ElemSet, ElemSet>> queue;  // (filter, generators)
  for (Elem a = 0; a < n; ++a) {
    ElemSet gens(n, {a});
    auto f = ctx.generate(gens);
    if (found.insert(f).second) queue.emplace_back(std::move(f), std::move(gens));
  }
  while (!queue.empty()) {
    auto [f, gens] = std::move(queue.front());
    queue.pop_front();
    for (Elem a = 0; a < n; ++a) {
      if (f.contains(a)) continue;
      auto g = gens;
      g.insert(a);
      auto h = ctx.generate(g);
      if (found.insert(h).second) queue.emplace_back(std::move(h), std::move(g));
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace

std::vector<ElemSet> enumerate_pfilters(MvwRig const& rig, std::size_t bound) {
  return enumerate_with(Context(rig), bound);
}

std::size_t FrameLA::index_of(ElemSet const& f) const {
  auto it = std::find(filters.begin(), filters.end(), f);
  if (it == filters.end()) throw Error(ErrorKind::InvalidArgument, "not a P-filter of this rig");
  return static_cast<std::size_t>(it - filters.begin());
}

FrameLA frame(MvwRig const& rig, std::size_t bound) {
  Context ctx(rig);
  FrameLA l;
  l.filters = enumerate_with(ctx, bound);
  auto const k = l.filters.size();
  std::map<ElemSet, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) index.emplace(l.filters[i], i);
  auto lookup = [&](ElemSet const& f, char const* what) {
    auto it = index.find(f);
    if (it == index.end()) throw std::logic_error(std::string(what) + " of P-filters is not a P-filter");
    return it->second;
  };

  for (std::size_t i = 0; i < k; ++i)
    if (!l.filters[0].is_subset_of(l.filters[i])) throw std::logic_error("P-filters have no least element");

  for (Elem a = 0; a < rig.size(); ++a) l.principal.push_back(lookup(ctx.generate(ElemSet(rig.size(), {a})), "principal"));

  l.meet.resize(k * k);
  l.join.resize(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      l.meet[i * k + j] = lookup(l.filters[i] & l.filters[j], "intersection");
      auto upper = ElemSet::full(rig.size());
      for (auto const& f : l.filters)
        if (l.filters[i].is_subset_of(f) && l.filters[j].is_subset_of(f)) upper &= f;
      l.join[i * k + j] = lookup(upper, "join");
    }

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || !l.filters[i].is_subset_of(l.filters[j])) continue;
      bool covers = true;
      for (std::size_t m = 0; m < k && covers; ++m)
        if (m != i && m != j && l.filters[i].is_subset_of(l.filters[m]) && l.filters[m].is_subset_of(l.filters[j]))
          covers = false;
      if (covers) l.hasse.emplace_back(i, j);
    }

  // For each F, track every reachable pair (V S, V (F /\ G : G in S)) as S
  // ranges over families of principal P-filters, starting from the empty
  // family whose join is the bottom.
  std::set<std::size_t> principals(l.principal.begin(), l.principal.end());
  for (std::size_t f = 0; f < k && l.distributive; ++f) {
    std::set<std::pair<std::size_t, std::size_t>> pairs{{0, 0}};
    for (auto p : principals) {
      auto snapshot = pairs;
      for (auto [x, y] : snapshot) pairs.emplace(l.join_of(x, p), l.join_of(y, l.meet_of(f, p)));
    }
    for (auto [x, y] : pairs)
      if (l.meet_of(f, x) != y) {
        l.distributive = Check::failure(fmt::format("F = {}: F /\\ {} = {} but the join of the meets is {}",
                                                    format_set(rig, l.filters[f]), format_set(rig, l.filters[x]),
                                                    format_set(rig, l.filters[l.meet_of(f, x)]),
                                                    format_set(rig, l.filters[y])));
        break;
      }
  }
  return l;
}

Theta theta(MvwRig const& rig, SpecSpace const& s, FrameLA const& l) {
  if (!rig.is_commutative() || !rig.has_unit())
    throw Error(ErrorKind::GateNotMet, "theta requires a commutative rig with a unit");
  Theta t;
  auto const no = s.opens.size();
  auto open_index = [&](ElemSet const& u) {
    auto it = std::lower_bound(s.opens.begin(), s.opens.end(), u);
    if (it == s.opens.end() || *it != u) throw std::logic_error("union of basic opens is not listed as open");
    return static_cast<std::size_t>(it - s.opens.begin());
  };

  // Every family of elements gives a pair (union of V(a), join of F_a).
  std::set<std::pair<std::size_t, std::size_t>> pairs{{open_index(s.none()), 0}};
  for (Elem a = 0; a < rig.size(); ++a) {
    auto snapshot = pairs;
    for (auto [u, f] : snapshot) pairs.emplace(open_index(s.opens[u] | s.base[a]), l.join_of(f, l.principal[a]));
  }
  constexpr auto unset = static_cast<std::size_t>(-1);
  t.map.assign(no, unset);
  for (auto [u, f] : pairs) {
    if (t.map[u] == unset) {
      t.map[u] = f;
    } else if (t.map[u] != f && t.well_defined) {
      t.well_defined = Check::failure(fmt::format("{} is sent to both {} and {}", format_set(rig, s.opens[u]),
                                                  format_set(rig, l.filters[t.map[u]]), format_set(rig, l.filters[f])));
    }
  }
  if (std::find(t.map.begin(), t.map.end(), unset) != t.map.end())
    throw std::logic_error("some open is not a union of basic opens");

  std::vector<bool> hit(l.size(), false);
  for (std::size_t u = 0; u < no; ++u) {
    if (hit[t.map[u]] && t.bijective) t.bijective = Check::failure(fmt::format("two opens share the image {}", format_set(rig, l.filters[t.map[u]])));
    hit[t.map[u]] = true;
  }
  if (t.bijective && std::find(hit.begin(), hit.end(), false) != hit.end())
    t.bijective = Check::failure(fmt::format("{} opens but {} P-filters", no, l.size()));

  for (std::size_t u = 0; u < no; ++u)
    for (std::size_t w = 0; w < no; ++w) {
      auto const& U = s.opens[u];
      auto const& W = s.opens[w];
      if (t.preserves_join && t.map[open_index(U | W)] != l.join_of(t.map[u], t.map[w]))
        t.preserves_join = Check::failure(fmt::format("theta(U u W) differs from theta(U) v theta(W) at open pair ({}, {})", u, w));
      if (t.preserves_meet && t.map[open_index(U & W)] != l.meet_of(t.map[u], t.map[w]))
        t.preserves_meet = Check::failure(fmt::format("theta(U n W) differs from theta(U) ^ theta(W) at open pair ({}, {})", u, w));
      bool lhs = U.is_subset_of(W);
      bool rhs = l.filters[t.map[u]].is_subset_of(l.filters[t.map[w]]);
      if (t.order_isomorphism && lhs != rhs)
        t.order_isomorphism = Check::failure(fmt::format("inclusion differs at open pair ({}, {})", u, w));
    }
  return t;
}

Subcover finite_subcover(MvwRig const& rig, std::vector<Elem> const& generators) {
  for (auto g : generators)
    if (g >= rig.size()) throw Error(ErrorKind::IndexOutOfRange, "element index out of range: " + std::to_string(g));
  if (generators.empty()) {
    if (principal_pfilter(rig, rig.top()).is_full()) return {};
    throw Error(ErrorKind::NotACover, "the empty family joins to the bottom P-filter, which is proper");
  }

  // Shortest word in the generators whose product is 0. Since the only sum
  // of multiples of 0 is 0, such a word is exactly a witness that 0 lies in
  // the join.
  std::vector<std::vector<Elem>> word(rig.size());
  std::vector<bool> seen(rig.size(), false);
  std::deque<Elem> queue;
  for (auto g : generators)
    if (!seen[g]) {
      seen[g] = true;
      word[g] = {g};
      queue.push_back(g);
    }
  while (!queue.empty() && !seen[0]) {
    Elem v = queue.front();
    queue.pop_front();
    for (auto g : generators) {
      Elem w = rig.mul(v, g);
      if (seen[w]) continue;
      seen[w] = true;
      word[w] = word[v];
      word[w].push_back(g);
      queue.push_back(w);
    }
  }

  Subcover out;
  if (!seen[0]) {
    auto join = pfilter_generated(rig, ElemSet::from(rig.size(), generators));
    if (!join.is_full())
      throw Error(ErrorKind::NotACover, "the P-filter join of the generators is proper", format_set(rig, join));
    std::set<Elem> distinct(generators.begin(), generators.end());
    out.generators.assign(distinct.begin(), distinct.end());
    return out;
  }
  out.word = word[0];
  for (auto g : generators)
    if (std::find(out.word.begin(), out.word.end(), g) != out.word.end() &&
        std::find(out.generators.begin(), out.generators.end(), g) == out.generators.end())
      out.generators.push_back(g);
  return out;
}

}  // namespace mvw
