#include "mvw/spectrum.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

namespace mvw {

namespace {

std::string point_set(ElemSet const& u) {
  std::string out = "{";
  bool first = true;
  u.for_each([&](Elem p) {
    out += first ? "" : ", ";
    out += "P" + std::to_string(p);
    first = false;
  });
  return out + "}";
}

}  // namespace

SpecSpace spec(MvwRig const& rig) {
  if (!rig.is_commutative()) throw Error(ErrorKind::NotCommutative, "Spec requires a commutative rig");
  SpecSpace s;
  s.unit_warning = !rig.has_unit();
  for (auto& p : prime_ideals(rig)) s.points.push_back(std::move(p.members));

  auto const np = s.points.size();
  s.base.reserve(rig.size());
  for (Elem a = 0; a < rig.size(); ++a) {
    ElemSet v(np);
    for (std::size_t i = 0; i < np; ++i)
      if (s.points[i].contains(a)) v.insert(static_cast<Elem>(i));
    s.base.push_back(std::move(v));
  }

  std::set<ElemSet> opens{ElemSet(np)};
  std::vector<ElemSet> frontier{ElemSet(np)};
  while (!frontier.empty()) {
    std::vector<ElemSet> next;
    for (auto const& u : frontier)
      for (auto const& b : s.base)
        if (auto w = u | b; opens.insert(w).second) next.push_back(std::move(w));
    frontier = std::move(next);
  }
  s.opens.assign(opens.begin(), opens.end());
  return s;
}

ElemSet const& basic_open(SpecSpace const& s, Elem a) {
  if (a >= s.base.size()) throw Error(ErrorKind::IndexOutOfRange, "element index out of range: " + std::to_string(a));
  return s.base[a];
}

ElemSet zero_set(SpecSpace const& s, ElemSet const& ideal) {
  ElemSet v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (ideal.is_subset_of(s.points[i])) v.insert(static_cast<Elem>(i));
  return v;
}

bool is_open(SpecSpace const& s, ElemSet const& u) {
  return std::binary_search(s.opens.begin(), s.opens.end(), u);
}

Check check_topology(SpecSpace const& s) {
  if (!is_open(s, s.none())) return Check::failure("the empty set is not open");
  if (!is_open(s, s.all())) return Check::failure("the whole space is not open");
  for (auto const& u : s.opens)
    for (auto const& w : s.opens) {
      if (!is_open(s, u | w)) return Check::failure(fmt::format("{} u {} is not open", point_set(u), point_set(w)));
      if (!is_open(s, u & w)) return Check::failure(fmt::format("{} n {} is not open", point_set(u), point_set(w)));
    }
  return {};
}

Check is_t0(SpecSpace const& s) {
  for (Elem p = 0; p < s.size(); ++p)
    for (Elem q = p + 1; q < s.size(); ++q) {
      bool separated = std::any_of(s.opens.begin(), s.opens.end(),
                                   [&](ElemSet const& u) { return u.contains(p) != u.contains(q); });
      if (!separated) return Check::failure(fmt::format("P{} and P{} have the same neighbourhoods", p, q));
    }
  return {};
}

Check is_irreducible(SpecSpace const& s) {
  if (s.size() == 0) return Check::failure("the space is empty");
  for (auto const& u : s.opens)
    for (auto const& w : s.opens)
      if (!u.empty() && !w.empty() && !u.intersects(w))
        return Check::failure(fmt::format("{} n {} is empty", point_set(u), point_set(w)));
  return {};
}

ElemSet set_closure(SpecSpace const& s, ElemSet const& u) {
  ElemSet out(s.size());
  for (Elem q = 0; q < s.size(); ++q) {
    bool inside = std::all_of(s.opens.begin(), s.opens.end(),
                              [&](ElemSet const& o) { return !o.contains(q) || o.intersects(u); });
    if (inside) out.insert(q);
  }
  return out;
}

ElemSet point_closure(SpecSpace const& s, std::size_t p) {
  if (p >= s.size()) throw Error(ErrorKind::IndexOutOfRange, "point index out of range: " + std::to_string(p));
  ElemSet u(s.size());
  u.insert(static_cast<Elem>(p));
  return set_closure(s, u);
}

std::vector<std::size_t> maximal_points(SpecSpace const& s, ElemSet const& u) {
  std::vector<std::size_t> out;
  u.for_each([&](Elem p) {
    bool below = false;
    u.for_each([&](Elem q) {
      if (q != p && s.points[p].is_subset_of(s.points[q])) below = true;
    });
    if (!below) out.push_back(p);
  });
  return out;
}

bool SpecMap::ok() const {
  auto fine = [](std::optional<Check> const& c) { return !c || c->ok; };
  return continuous.ok && preimage_of_zero_sets.ok && fine(image_of_basic_opens) && fine(homeomorphism) &&
         fine(surjective);
}

SpecMap spec_map(Homomorphism const& phi) {
  if (auto c = check_homomorphism(phi); !c) throw Error(ErrorKind::NotAHomomorphism, "map is not a homomorphism", c.witness);
  auto const& a = phi.source();
  auto const& b = phi.target();
  SpecMap m{spec(a), spec(b), {}, {}, {}, {}, {}, {}, {}};
  auto const& sa = m.source;
  auto const& sb = m.target;

  for (auto const& q : sb.points) {
    auto pre = preimage(phi, q);
    auto it = std::find(sa.points.begin(), sa.points.end(), pre);
    if (it == sa.points.end())
      throw std::logic_error("preimage " + format_set(a, pre) + " is not a proper prime ideal");
    m.star.push_back(static_cast<std::size_t>(it - sa.points.begin()));
  }

  auto star_preimage = [&](ElemSet const& u) {
    ElemSet out(sb.size());
    for (Elem q = 0; q < sb.size(); ++q)
      if (u.contains(static_cast<Elem>(m.star[q]))) out.insert(q);
    return out;
  };
  auto star_image = [&](ElemSet const& w) {
    ElemSet out(sa.size());
    w.for_each([&](Elem q) { out.insert(static_cast<Elem>(m.star[q])); });
    return out;
  };

  for (auto const& u : sa.opens)
    if (!is_open(sb, star_preimage(u))) {
      m.continuous = Check::failure(fmt::format("preimage of open {} is not open", point_set(u)));
      break;
    }

  for (auto const& i : enumerate_ideals(a)) {
    auto lhs = star_preimage(zero_set(sa, i.members));
    auto rhs = zero_set(sb, direct_image(phi, i.members));
    if (lhs != rhs) {
      m.preimage_of_zero_sets = Check::failure(fmt::format("I = {}: preimage of V(I) is {} but V(phi(I)) is {}",
                                                           format_set(a, i.members), point_set(lhs), point_set(rhs)));
      break;
    }
  }

  ElemSet values(b.size());
  for (Elem x = 0; x < a.size(); ++x) values.insert(phi(x));
  bool const injective = values.count() == a.size();
  bool const bijective = injective && values.is_full();

  if (injective) {
    m.image_of_basic_opens = Check{};
    m.image_of_basic_opens_all = Check{};
    m.surjective = Check{};
    for (Elem y = 0; y < b.size(); ++y) {
      auto lhs = star_image(sb.base[y]);
      auto rhs = zero_set(sa, preimage(phi, ElemSet(b.size(), {y})));
      if (lhs == rhs) continue;
      auto w = fmt::format("b = {}: phi*(V(b)) is {} but V(phi^-1(b)) is {}", b.name_of(y), point_set(lhs), point_set(rhs));
      if (m.image_of_basic_opens_all->ok) m.image_of_basic_opens_all = Check::failure(w);
      if (values.contains(y) && m.image_of_basic_opens->ok) m.image_of_basic_opens = Check::failure(w);
    }
    auto img = star_image(sb.all());
    if (!img.is_full())
      m.surjective = Check::failure(fmt::format("phi*(Spec B) is {} but Spec A has {} points", point_set(img), sa.size()));
  }

  if (bijective) {
    m.homeomorphism = Check{};
    auto target = zero_set(sa, kernel(phi).members);
    auto img = star_image(sb.all());
    std::set<std::size_t> distinct(m.star.begin(), m.star.end());
    if (img != target || distinct.size() != m.star.size()) {
      m.homeomorphism = Check::failure(fmt::format("phi* maps Spec B onto {} rather than bijectively onto V(ker) = {}",
                                                   point_set(img), point_set(target)));
    } else {
      for (auto const& w : sb.opens) {
        auto image_w = star_image(w);
        bool open_in_subspace = std::any_of(sa.opens.begin(), sa.opens.end(),
                                            [&](ElemSet const& u) { return (u & target) == image_w; });
        if (!open_in_subspace) {
          m.homeomorphism = Check::failure(fmt::format("image of open {} is not open in V(ker)", point_set(w)));
          break;
        }
      }
    }
  }
  return m;
}

RadicalOrder radical_order_check(MvwRig const& rig, SpecSpace const& s, Elem a, Elem b) {
  RadicalOrder r;
  r.topological = basic_open(s, a).is_subset_of(basic_open(s, b));
  auto ra = radical(rig, generated_ideal(rig, ElemSet(rig.size(), {a})).members).members;
  auto rb = radical(rig, generated_ideal(rig, ElemSet(rig.size(), {b})).members).members;
  r.algebraic = rb.is_subset_of(ra);
  return r;
}

std::string to_dot(MvwRig const& rig, SpecSpace const& s) {
  std::string out = fmt::format("digraph \"Spec({})\" {{\n", rig.name());
  for (std::size_t p = 0; p < s.size(); ++p)
    out += fmt::format("  p{} [label=\"{}\"];\n", p, format_set(rig, s.points[p]));
  auto strictly_below = [&](std::size_t q, std::size_t p) { return q != p && s.points[q].is_subset_of(s.points[p]); };
  for (std::size_t q = 0; q < s.size(); ++q)
    for (std::size_t p = 0; p < s.size(); ++p) {
      if (!strictly_below(q, p)) continue;
      bool covered = true;
      for (std::size_t r = 0; r < s.size() && covered; ++r)
        if (strictly_below(q, r) && strictly_below(r, p)) covered = false;
      if (covered) out += fmt::format("  p{} -> p{};\n", q, p);
    }
  return out + "}\n";
}

}  // namespace mvw
