#include "mvw/axioms.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace mvw {

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
  }
  return "?";
}

void AxiomReport::pass(std::string const& axiom) {
  auto it = std::find_if(order_.begin(), order_.end(), [&](auto const& e) { return e.first == axiom; });
  if (it == order_.end()) order_.emplace_back(axiom, Status::Pass);
}

void AxiomReport::fail(std::string const& axiom, std::string tuple, std::string detail) {
  auto it = std::find_if(order_.begin(), order_.end(), [&](auto const& e) { return e.first == axiom; });
  if (it == order_.end()) {
    order_.emplace_back(axiom, Status::Fail);
  } else if (it->second == Status::Fail) {
    return;
  } else {
    it->second = Status::Fail;
  }
  witnesses_.push_back({axiom, std::move(tuple), std::move(detail)});
}

void AxiomReport::merge(AxiomReport const& other) {
  for (auto const& [axiom, status] : other.order_) {
    if (status == Status::Fail) {
      auto w = std::find_if(other.witnesses_.begin(), other.witnesses_.end(),
                            [&](auto const& x) { return x.axiom == axiom; });
      fail(axiom, w->tuple, w->detail);
    } else {
      pass(axiom);
    }
  }
}

Status AxiomReport::status(std::string const& axiom) const {
  for (auto const& [name, s] : order_)
    if (name == axiom) return s;
  return Status::Skipped;
}

namespace {

std::string tuple_of(MvAlgebra const& a, std::initializer_list<Elem> xs) {
  std::string out = "(";
  bool first = true;
  for (auto x : xs) {
    if (!first) out += ", ";
    out += a.name_of(x);
    first = false;
  }
  return out + ")";
}

}  // namespace

AxiomReport check_mv(MvAlgebra const& a) {
  AxiomReport r;
  auto const n = static_cast<Elem>(a.size());
  auto nm = [&](Elem x) -> std::string const& { return a.name_of(x); };

  // Declared up front so the report lists axioms in a fixed order. Tables were
  // range-checked by derive(), which is what "closure" records.
  for (auto const* id : {"closure", "MV1", "MV2", "MV3", "MV4", "MV5", "MV6"}) r.pass(id);

  bool mv1 = true, mv2 = true, mv6 = true;
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (mv2 && a.add(x, y) != a.add(y, x)) {
        mv2 = false;
        r.fail("MV2", tuple_of(a, {x, y}),
               fmt::format("{} + {} = {} but {} + {} = {}", nm(x), nm(y), nm(a.add(x, y)), nm(y), nm(x),
                           nm(a.add(y, x))));
      }
      if (mv6) {
        Elem lhs = a.add(a.neg(a.add(a.neg(x), y)), y);
        Elem rhs = a.add(a.neg(a.add(a.neg(y), x)), x);
        if (lhs != rhs) {
          mv6 = false;
          r.fail("MV6", tuple_of(a, {x, y}),
                 fmt::format("~(~x + y) + y = {} but ~(~y + x) + x = {}", nm(lhs), nm(rhs)));
        }
      }
      if (!mv1) continue;
      for (Elem z = 0; z < n; ++z) {
        Elem lhs = a.add(x, a.add(y, z));
        Elem rhs = a.add(a.add(x, y), z);
        if (lhs != rhs) {
          mv1 = false;
          r.fail("MV1", tuple_of(a, {x, y, z}),
                 fmt::format("x + (y + z) = {} but (x + y) + z = {}", nm(lhs), nm(rhs)));
          break;
        }
      }
    }
  }
  Elem const top = a.neg(0);
  bool mv3 = true, mv4 = true, mv5 = true;
  for (Elem x = 0; x < n; ++x) {
    if (mv3 && a.add(x, 0) != x) {
      mv3 = false;
      r.fail("MV3", tuple_of(a, {x}), fmt::format("x + 0 = {}", nm(a.add(x, 0))));
    }
    if (mv4 && a.add(x, top) != top) {
      mv4 = false;
      r.fail("MV4", tuple_of(a, {x}), fmt::format("x + ~0 = {} but ~0 = {}", nm(a.add(x, top)), nm(top)));
    }
    if (mv5 && a.neg(a.neg(x)) != x) {
      mv5 = false;
      r.fail("MV5", tuple_of(a, {x}), fmt::format("~~x = {}", nm(a.neg(a.neg(x)))));
    }
  }
  return r;
}

AxiomReport check_mvw(MvwRig const& a) {
  AxiomReport r;
  auto const n = static_cast<Elem>(a.size());
  auto nm = [&](Elem x) -> std::string const& { return a.name_of(x); };

  for (auto const* id : {"MVW-ii", "MVW-iii", "MVW-iv", "MVW-v"}) r.pass(id);
  bool assoc = true, zero = true, iv = true, v = true;
  for (Elem x = 0; x < n; ++x) {
    if (zero && (a.mul(x, 0) != 0 || a.mul(0, x) != 0)) {
      zero = false;
      r.fail("MVW-iii", tuple_of(a, {x}),
             fmt::format("x0 = {}, 0x = {}", nm(a.mul(x, 0)), nm(a.mul(0, x))));
    }
  }
  for (Elem x = 0; x < n && (assoc || iv || v); ++x) {
    for (Elem y = 0; y < n; ++y) {
      Elem const xy = a.mul(x, y);
      Elem const yx = a.mul(y, x);
      for (Elem z = 0; z < n; ++z) {
        if (assoc) {
          Elem lhs = a.mul(x, a.mul(y, z));
          Elem rhs = a.mul(xy, z);
          if (lhs != rhs) {
            assoc = false;
            r.fail("MVW-ii", tuple_of(a, {x, y, z}),
                   fmt::format("a(bc) = {} but (ab)c = {}", nm(lhs), nm(rhs)));
          }
        }
        Elem const xz = a.mul(x, z);
        Elem const zx = a.mul(z, x);
        if (iv) {
          // a(b + c) <= ab + ac and (b + c)a <= ba + ca, with a = x, b = y, c = z
          Elem const yz = a.add(y, z);
          Elem l1 = a.mul(x, yz), r1 = a.add(xy, xz);
          Elem l2 = a.mul(yz, x), r2 = a.add(yx, zx);
          if (!a.leq(l1, r1)) {
            iv = false;
            r.fail("MVW-iv", tuple_of(a, {x, y, z}),
                   fmt::format("left: a(b + c) = {} is not <= ab + ac = {}", nm(l1), nm(r1)));
          } else if (!a.leq(l2, r2)) {
            iv = false;
            r.fail("MVW-iv", tuple_of(a, {x, y, z}),
                   fmt::format("right: (b + c)a = {} is not <= ba + ca = {}", nm(l2), nm(r2)));
          }
        }
        if (v) {
          // a(b - c) >= ab - ac and (b - c)a >= ba - ca
          Elem const ymz = a.monus(y, z);
          Elem l1 = a.mul(x, ymz), r1 = a.monus(xy, xz);
          Elem l2 = a.mul(ymz, x), r2 = a.monus(yx, zx);
          if (!a.leq(r1, l1)) {
            v = false;
            r.fail("MVW-v", tuple_of(a, {x, y, z}),
                   fmt::format("left: a(b - c) = {} is not >= ab - ac = {}", nm(l1), nm(r1)));
          } else if (!a.leq(r2, l2)) {
            v = false;
            r.fail("MVW-v", tuple_of(a, {x, y, z}),
                   fmt::format("right: (b - c)a = {} is not >= ba - ca = {}", nm(l2), nm(r2)));
          }
        }
      }
    }
  }

  return r;
}

AxiomReport check_all(MvwRig const& rig) {
  AxiomReport r = check_mv(rig);
  r.merge(check_mvw(rig));
  return r;
}

}  // namespace mvw
