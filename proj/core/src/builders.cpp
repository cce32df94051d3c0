#include "mvw/builders.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <map>

#include <fmt/format.h>

namespace mvw {

std::size_t default_size_bound() {
  constexpr std::size_t fallback = 4096;
  char const* env = std::getenv("MVW_SIZE_BOUND");
  if (env == nullptr) return fallback;
  std::size_t value = 0;
  auto const* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) return fallback;
  return value;
}

namespace {

void require_within(std::size_t size, std::size_t bound, std::string_view what) {
  if (size > bound)
    throw Error(ErrorKind::SizeBound, fmt::format("{} would have {} elements (bound {})", what, size, bound));
}

// size^exponent, saturating at bound + 1.
std::size_t bounded_pow(std::size_t base, std::size_t exponent, std::size_t bound) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && r > (bound + 1) / base) return bound + 1;
    r *= base;
  }
  return r;
}

}  // namespace

MvwRig build_zn(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "Z_n requires n >= 1");
  std::size_t const m = n + 1;
  std::vector<Elem> neg(m), add(m * m), mul(m * m);
  for (std::size_t x = 0; x < m; ++x) {
    neg[x] = static_cast<Elem>(n - x);
    for (std::size_t y = 0; y < m; ++y) {
      add[x * m + y] = static_cast<Elem>(std::min(n, x + y));
      mul[x * m + y] = static_cast<Elem>(std::min(n, x * y));
    }
  }
  return MvwRig::derive("Z" + std::to_string(n), {}, std::move(neg), std::move(add), std::move(mul));
}

RationalMv build_luk_mv(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "L_n requires n >= 2");
  std::vector<Rational> values;
  for (std::size_t k = 0; k < n; ++k) values.emplace_back(Rational(k) / Rational(n - 1));
  std::vector<std::string> names;
  for (auto const& v : values) names.push_back(to_string(v));
  std::vector<Elem> neg(n), add(n * n);
  // Values are k/(n-1): truncated sum and 1 - x stay on the grid.
  for (std::size_t x = 0; x < n; ++x) {
    neg[x] = static_cast<Elem>(n - 1 - x);
    for (std::size_t y = 0; y < n; ++y) add[x * n + y] = static_cast<Elem>(std::min(n - 1, x + y));
  }
  return {MvAlgebra::derive("L" + std::to_string(n), std::move(names), std::move(neg), std::move(add)),
          std::move(values)};
}

MvwRig attach_product(RationalMv const& mv, RationalProduct const& rule) {
  std::map<Rational, Elem> index;
  for (std::size_t i = 0; i < mv.values.size(); ++i) index.emplace(mv.values[i], static_cast<Elem>(i));
  std::size_t const n = mv.values.size();
  std::vector<Elem> mul(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Rational p = rule(mv.values[x], mv.values[y]);
      auto it = index.find(p);
      if (it == index.end())
        throw Error(ErrorKind::ClosureViolation, mv.algebra.name() + " is not closed for the product",
                    fmt::format("({}, {}) -> {}", to_string(mv.values[x]), to_string(mv.values[y]), to_string(p)));
      mul[x * n + y] = it->second;
    }
  }
  return MvwRig::derive(mv.algebra, std::move(mul));
}

MvwRig attach_real_product(RationalMv const& mv) {
  return attach_product(mv, [](Rational const& a, Rational const& b) { return Rational(a * b); });
}

MvwRig lift_trivial_product(MvAlgebra const& mv) {
  AxiomReport report = check_mv(mv);
  if (!report.ok())
    throw Error(ErrorKind::AxiomViolation, mv.name() + " is not an MV-algebra",
                report.witnesses().front().axiom + " " + report.witnesses().front().tuple);
  MvAlgebra copy = mv;
  copy.set_name("trivial(" + mv.name() + ")");
  return MvwRig::derive(std::move(copy), std::vector<Elem>(mv.size() * mv.size(), 0));
}

CheckedRig build_matrix_rig(MvwRig const& base, std::size_t n, std::size_t bound) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "matrix dimension must be >= 1");
  std::size_t const b = base.size();
  std::size_t const cells = n * n;
  std::size_t const size = bounded_pow(b, cells, bound);
  require_within(size, bound, "matrix rig");

  auto decode = [&](std::size_t idx) {
    std::vector<Elem> m(cells);
    for (std::size_t k = cells; k-- > 0;) {
      m[k] = static_cast<Elem>(idx % b);
      idx /= b;
    }
    return m;
  };
  auto encode = [&](std::vector<Elem> const& m) {
    std::size_t idx = 0;
    for (auto e : m) idx = idx * b + e;
    return static_cast<Elem>(idx);
  };

  std::vector<std::vector<Elem>> mats(size);
  std::vector<std::string> names(size);
  for (std::size_t i = 0; i < size; ++i) {
    mats[i] = decode(i);
    std::string s = "[";
    for (std::size_t r = 0; r < n; ++r) {
      s += r ? ",[" : "[";
      for (std::size_t c = 0; c < n; ++c) s += (c ? "," : "") + base.name_of(mats[i][r * n + c]);
      s += "]";
    }
    names[i] = s + "]";
  }

  std::vector<Elem> neg(size), add(size * size), mul(size * size);
  std::vector<Elem> tmp(cells);
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t k = 0; k < cells; ++k) tmp[k] = base.neg(mats[x][k]);
    neg[x] = encode(tmp);
  }
  for (std::size_t x = 0; x < size; ++x) {
    auto const& A = mats[x];
    for (std::size_t y = 0; y < size; ++y) {
      auto const& B = mats[y];
      for (std::size_t k = 0; k < cells; ++k) tmp[k] = base.add(A[k], B[k]);
      add[x * size + y] = encode(tmp);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          Elem acc = base.mul(A[i * n], B[j]);
          for (std::size_t k = 1; k < n; ++k) acc = base.add(acc, base.mul(A[i * n + k], B[k * n + j]));
          tmp[i * n + j] = acc;
        }
      }
      mul[x * size + y] = encode(tmp);
    }
  }
  auto rig = MvwRig::derive(fmt::format("M{}({})", n, base.name()), std::move(names), std::move(neg),
                            std::move(add), std::move(mul));
  AxiomReport report = check_all(rig);
  return {std::move(rig), std::move(report)};
}

MvwRig direct_product(std::span<MvwRig const> factors, std::size_t bound) {
  if (factors.empty()) throw Error(ErrorKind::InvalidArgument, "direct product of an empty list");
  std::size_t size = 1;
  for (auto const& f : factors) {
    if (size > (bound + 1) / f.size()) {
      size = bound + 1;
      break;
    }
    size *= f.size();
  }
  require_within(size, bound, "direct product");

  std::size_t const k = factors.size();
  std::vector<std::vector<Elem>> comps(size, std::vector<Elem>(k));
  for (std::size_t i = 0; i < size; ++i) {
    std::size_t idx = i;
    for (std::size_t f = k; f-- > 0;) {
      comps[i][f] = static_cast<Elem>(idx % factors[f].size());
      idx /= factors[f].size();
    }
  }
  auto encode = [&](std::vector<Elem> const& c) {
    std::size_t idx = 0;
    for (std::size_t f = 0; f < k; ++f) idx = idx * factors[f].size() + c[f];
    return static_cast<Elem>(idx);
  };

  std::vector<std::string> names(size);
  for (std::size_t i = 0; i < size; ++i) {
    std::string s = "(";
    for (std::size_t f = 0; f < k; ++f) s += (f ? "," : "") + factors[f].name_of(comps[i][f]);
    names[i] = s + ")";
  }
  std::vector<Elem> neg(size), add(size * size), mul(size * size), tmp(k);
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t f = 0; f < k; ++f) tmp[f] = factors[f].neg(comps[x][f]);
    neg[x] = encode(tmp);
    for (std::size_t y = 0; y < size; ++y) {
      for (std::size_t f = 0; f < k; ++f) tmp[f] = factors[f].add(comps[x][f], comps[y][f]);
      add[x * size + y] = encode(tmp);
      for (std::size_t f = 0; f < k; ++f) tmp[f] = factors[f].mul(comps[x][f], comps[y][f]);
      mul[x * size + y] = encode(tmp);
    }
  }
  std::string name;
  for (std::size_t f = 0; f < k; ++f) name += (f ? "x" : "") + factors[f].name();
  return MvwRig::derive(std::move(name), std::move(names), std::move(neg), std::move(add), std::move(mul));
}

MvwRig direct_product(MvwRig const& a, MvwRig const& b, std::size_t bound) {
  std::vector<MvwRig> fs{a, b};
  return direct_product(std::span<MvwRig const>(fs), bound);
}

MvwRig gamma_zk(std::size_t k, std::span<int const> u, std::size_t bound) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "gamma requires k >= 1");
  if (u.size() != k)
    throw Error(ErrorKind::InvalidArgument, fmt::format("unit vector has length {}, expected {}", u.size(), k));
  for (std::size_t i = 0; i < k; ++i)
    if (u[i] != 0 && u[i] != 1)
      throw Error(ErrorKind::InvalidUnit, "u^2 <= u forces every coordinate of u into {0, 1}",
                  fmt::format("u[{}] = {}", i, u[i]));
  std::size_t size = 1;
  for (auto ui : u) size *= static_cast<std::size_t>(ui + 1);
  require_within(size, bound, "gamma");

  // Vectors in lexicographic order; the zero vector comes first.
  std::vector<std::vector<int>> vecs;
  std::vector<int> cur(k, 0);
  for (std::size_t i = 0; i < size; ++i) {
    vecs.push_back(cur);
    for (std::size_t c = k; c-- > 0;) {
      if (cur[c] < u[c]) {
        ++cur[c];
        break;
      }
      cur[c] = 0;
    }
  }
  std::map<std::vector<int>, Elem> index;
  for (std::size_t i = 0; i < size; ++i) index.emplace(vecs[i], static_cast<Elem>(i));

  std::vector<std::string> names(size);
  for (std::size_t i = 0; i < size; ++i) {
    std::string s = "(";
    for (std::size_t c = 0; c < k; ++c) s += (c ? "," : "") + std::to_string(vecs[i][c]);
    names[i] = s + ")";
  }
  std::vector<Elem> neg(size), add(size * size), mul(size * size);
  std::vector<int> t(k);
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t c = 0; c < k; ++c) t[c] = u[c] - vecs[x][c];
    neg[x] = index.at(t);
    for (std::size_t y = 0; y < size; ++y) {
      for (std::size_t c = 0; c < k; ++c) t[c] = std::min(vecs[x][c] + vecs[y][c], u[c]);
      add[x * size + y] = index.at(t);
      for (std::size_t c = 0; c < k; ++c) t[c] = vecs[x][c] * vecs[y][c];
      mul[x * size + y] = index.at(t);
    }
  }
  std::string uname;
  for (std::size_t c = 0; c < k; ++c) uname += (c ? "," : "") + std::to_string(u[c]);
  return MvwRig::derive(fmt::format("Gamma(Z^{},({}))", k, uname), std::move(names), std::move(neg),
                        std::move(add), std::move(mul));
}

namespace {

template <typename Step>
ElemSet close_under(ElemSet set, Step step) {
  set.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    auto const members = set.elements();
    ElemSet next = set;
    for (auto x : members) step(x, members, next);
    if (next != set) {
      set = std::move(next);
      grew = true;
    }
  }
  return set;
}

}  // namespace

std::vector<Elem> mv_subalgebra_closure(MvAlgebra const& mv, ElemSet const& seed) {
  return close_under(seed, [&](Elem x, std::vector<Elem> const& members, ElemSet& next) {
           next.insert(mv.neg(x));
           for (auto y : members) next.insert(mv.add(x, y));
         }).elements();
}

Subalgebra subalgebra_closure(MvwRig const& rig, ElemSet const& seed) {
  auto const members = close_under(seed, [&](Elem x, std::vector<Elem> const& ms, ElemSet& next) {
                         next.insert(rig.neg(x));
                         for (auto y : ms) {
                           next.insert(rig.add(x, y));
                           next.insert(rig.mul(x, y));
                         }
                       }).elements();
  std::size_t const m = members.size();
  std::map<Elem, Elem> local;
  for (std::size_t i = 0; i < m; ++i) local.emplace(members[i], static_cast<Elem>(i));
  std::vector<std::string> names(m);
  std::vector<Elem> neg(m), add(m * m), mul(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    names[i] = rig.name_of(members[i]);
    neg[i] = local.at(rig.neg(members[i]));
    for (std::size_t j = 0; j < m; ++j) {
      add[i * m + j] = local.at(rig.add(members[i], members[j]));
      mul[i * m + j] = local.at(rig.mul(members[i], members[j]));
    }
  }
  return {MvwRig::derive("sub(" + rig.name() + ")", std::move(names), std::move(neg), std::move(add),
                         std::move(mul)),
          members};
}

}  // namespace mvw
