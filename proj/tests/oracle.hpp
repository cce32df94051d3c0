#pragma once

// Brute-force reference implementations used only by the tests. They read the
// neg, add and mul tables and rebuild everything else by subset scans.

#include <cstdint>
#include <set>
#include <vector>

#include "mvw/algebra.hpp"

namespace oracle {

using mvw::Elem;
using Subset = std::vector<bool>;

inline Elem one(mvw::MvAlgebra const& a) { return a.neg(0); }
inline bool leq(mvw::MvAlgebra const& a, Elem x, Elem y) { return a.add(a.neg(x), y) == one(a); }

inline Subset from_mask(std::size_t n, std::uint64_t mask) {
  Subset s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1;
  return s;
}

inline std::vector<Elem> members(Subset const& s) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i]) out.push_back(static_cast<Elem>(i));
  return out;
}

inline bool is_mv_ideal(mvw::MvAlgebra const& a, Subset const& s) {
  auto const n = a.size();
  if (!s[0]) return false;
  for (Elem x = 0; x < n; ++x) {
    if (!s[x]) continue;
    for (Elem y = 0; y < n; ++y) {
      if (leq(a, y, x) && !s[y]) return false;
      if (s[y] && !s[a.add(x, y)]) return false;
    }
  }
  return true;
}

inline bool is_ideal(mvw::MvwRig const& r, Subset const& s) {
  if (!is_mv_ideal(r, s)) return false;
  for (Elem x = 0; x < r.size(); ++x)
    if (s[x])
      for (Elem y = 0; y < r.size(); ++y)
        if (!s[r.mul(x, y)] || !s[r.mul(y, x)]) return false;
  return true;
}

inline bool is_proper(Subset const& s) {
  for (bool b : s)
    if (!b) return true;
  return false;
}

inline bool is_prime(mvw::MvwRig const& r, Subset const& s) {
  for (Elem x = 0; x < r.size(); ++x)
    for (Elem y = 0; y < r.size(); ++y)
      if (s[r.mul(x, y)] && !s[x] && !s[y]) return false;
  return true;
}

template <typename Pred>
std::vector<Subset> scan(std::size_t n, Pred&& keep) {
  std::vector<Subset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto s = from_mask(n, mask);
    if (keep(s)) out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<Subset> ideals(mvw::MvwRig const& r) {
  return scan(r.size(), [&](Subset const& s) { return is_ideal(r, s); });
}

inline std::vector<Subset> mv_ideals(mvw::MvAlgebra const& a) {
  return scan(a.size(), [&](Subset const& s) { return is_mv_ideal(a, s); });
}

/// Proper prime ideals, the points of the spectrum.
inline std::vector<Subset> spectrum(mvw::MvwRig const& r) {
  std::vector<Subset> out;
  for (auto& s : ideals(r))
    if (is_proper(s) && is_prime(r, s)) out.push_back(std::move(s));
  return out;
}

/// Every finite sum of multiples b x, including the empty sum 0.
inline Subset sums_of_multiples(mvw::MvwRig const& r, Elem x) {
  Subset s(r.size());
  s[0] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Elem y = 0; y < r.size(); ++y) {
      if (!s[y]) continue;
      for (Elem b = 0; b < r.size(); ++b) {
        Elem z = r.add(y, r.mul(b, x));
        if (!s[z]) s[z] = grew = true;
      }
    }
  }
  return s;
}

inline bool is_pfilter(mvw::MvwRig const& r, Subset const& f) {
  auto const n = r.size();
  bool nonempty = false;
  for (Elem x = 0; x < n; ++x) {
    if (!f[x]) continue;
    nonempty = true;
    for (Elem y = 0; y < n; ++y) {
      if (leq(r, x, y) && !f[y]) return false;
      if (f[y] && !f[r.mul(x, y)]) return false;
    }
  }
  if (!nonempty) return false;
  for (Elem x = 0; x < n; ++x) {
    if (f[x]) continue;
    auto sums = sums_of_multiples(r, x);
    for (Elem z = 0; z < n; ++z)
      if (sums[z] && f[z]) return false;
  }
  return true;
}

inline std::vector<Subset> pfilters(mvw::MvwRig const& r) {
  return scan(r.size(), [&](Subset const& s) { return is_pfilter(r, s); });
}

/// Unions of basic opens V(a) = {P : a in P}, including the empty union.
inline std::set<std::vector<bool>> opens(mvw::MvwRig const& r, std::vector<Subset> const& points) {
  std::set<std::vector<bool>> out{std::vector<bool>(points.size(), false)};
  std::vector<std::vector<bool>> base;
  for (Elem a = 0; a < r.size(); ++a) {
    std::vector<bool> v(points.size());
    for (std::size_t p = 0; p < points.size(); ++p) v[p] = points[p][a];
    base.push_back(v);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<bool>> cur(out.begin(), out.end());
    for (auto const& u : cur)
      for (auto const& b : base) {
        auto w = u;
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = w[i] || b[i];
        if (out.insert(w).second) grew = true;
      }
  }
  return out;
}

}  // namespace oracle
