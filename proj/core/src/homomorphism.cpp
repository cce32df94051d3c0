#include "mvw/homomorphism.hpp"

#include <fmt/format.h>

namespace mvw {

Check check_mv_homomorphism(MvAlgebra const& src, MvAlgebra const& dst, std::span<Elem const> f) {
  auto const n = static_cast<Elem>(src.size());
  if (f.size() != n) return Check::failure(fmt::format("map has {} values for {} elements", f.size(), n));
  for (Elem x = 0; x < n; ++x)
    if (f[x] >= dst.size()) return Check::failure(fmt::format("f({}) is outside the target", src.name_of(x)));
  if (f[0] != 0) return Check::failure(fmt::format("f(0) = {}", dst.name_of(f[0])));
  for (Elem x = 0; x < n; ++x) {
    if (f[src.neg(x)] != dst.neg(f[x]))
      return Check::failure(fmt::format("f(~{}) = {} but ~f({}) = {}", src.name_of(x), dst.name_of(f[src.neg(x)]),
                                        src.name_of(x), dst.name_of(dst.neg(f[x]))));
    for (Elem y = 0; y < n; ++y)
      if (f[src.add(x, y)] != dst.add(f[x], f[y]))
        return Check::failure(fmt::format("f({} + {}) = {} but f({}) + f({}) = {}", src.name_of(x), src.name_of(y),
                                          dst.name_of(f[src.add(x, y)]), src.name_of(x), src.name_of(y),
                                          dst.name_of(dst.add(f[x], f[y]))));
  }
  return {};
}

Check check_homomorphism(Homomorphism const& h) {
  auto const& src = h.source();
  auto const& dst = h.target();
  auto const& f = h.values();
  if (auto c = check_mv_homomorphism(src, dst, f); !c) return c;
  auto const n = static_cast<Elem>(src.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (f[src.mul(x, y)] != dst.mul(f[x], f[y]))
        return Check::failure(fmt::format("f({} * {}) = {} but f({}) * f({}) = {}", src.name_of(x), src.name_of(y),
                                          dst.name_of(f[src.mul(x, y)]), src.name_of(x), src.name_of(y),
                                          dst.name_of(dst.mul(f[x], f[y]))));
  return {};
}

Ideal kernel(Homomorphism const& f) { return {preimage(f, ElemSet(f.target().size(), {0})), false}; }

ElemSet preimage(Homomorphism const& f, ElemSet const& j) {
  ElemSet out(f.source().size());
  for (Elem x = 0; x < f.source().size(); ++x)
    if (j.contains(f(x))) out.insert(x);
  return out;
}

ElemSet direct_image(Homomorphism const& f, ElemSet const& s) {
  ElemSet out(f.target().size());
  s.for_each([&](Elem x) { out.insert(f(x)); });
  return out;
}

Subalgebra image(Homomorphism const& f) {
  return subalgebra_closure(f.target(), direct_image(f, ElemSet::full(f.source().size())));
}

std::vector<std::vector<Elem>> enumerate_homomorphisms(MvwRig const& src, MvwRig const& dst) {
  auto const n = static_cast<Elem>(src.size());
  auto const m = static_cast<Elem>(dst.size());
  constexpr Elem unset = static_cast<Elem>(-1);
  std::vector<Elem> f(n, unset);
  std::vector<std::vector<Elem>> out;

  // Every clause whose arguments and result are all assigned must hold.
  auto consistent = [&](Elem x) {
    for (Elem y = 0; y <= x; ++y) {
      Elem ny = src.neg(y);
      if (f[ny] != unset && f[ny] != dst.neg(f[y])) return false;
      for (Elem z = 0; z <= x; ++z) {
        Elem s = src.add(y, z);
        if (f[s] != unset && f[s] != dst.add(f[y], f[z])) return false;
        Elem p = src.mul(y, z);
        if (f[p] != unset && f[p] != dst.mul(f[y], f[z])) return false;
      }
    }
    return true;
  };

  auto rec = [&](auto&& self, Elem x) -> void {
    if (x == n) {
      if (check_homomorphism(Homomorphism(src, dst, f))) out.push_back(f);
      return;
    }
    for (Elem v = 0; v < (x == 0 ? 1 : m); ++v) {
      f[x] = v;
      if (consistent(x)) self(self, x + 1);
      f[x] = unset;
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace mvw
