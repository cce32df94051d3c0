#include "mvw/algebra.hpp"

#include <set>

#include <fmt/format.h>

namespace mvw {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::OrderNotAntisymmetric: return "OrderNotAntisymmetric";
    case ErrorKind::ClosureViolation: return "ClosureViolation";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SizeBound: return "SizeBound";
    case ErrorKind::InvalidUnit: return "InvalidUnit";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::Trivial: return "Trivial";
    case ErrorKind::GateNotMet: return "GateNotMet";
    case ErrorKind::EmptySeed: return "EmptySeed";
    case ErrorKind::NotACover: return "NotACover";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::Validation: return "Validation";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

MvAlgebra MvAlgebra::derive(std::string name, std::vector<std::string> names, std::vector<Elem> neg,
                            std::vector<Elem> add) {
  std::size_t const n = neg.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "carrier must have at least one element");
  if (add.size() != n * n)
    throw Error(ErrorKind::InvalidArgument,
                fmt::format("add table has {} entries, expected {}", add.size(), n * n));
  if (names.empty()) {
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }
  if (names.size() != n)
    throw Error(ErrorKind::InvalidArgument, fmt::format("{} names for {} elements", names.size(), n));
  if (std::set<std::string>(names.begin(), names.end()).size() != n)
    throw Error(ErrorKind::InvalidArgument, "element names must be distinct");

  for (std::size_t x = 0; x < n; ++x)
    if (neg[x] >= n)
      throw Error(ErrorKind::ClosureViolation, "neg table leaves the carrier",
                  fmt::format("neg({}) = #{}", names[x], neg[x]));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (add[x * n + y] >= n)
        throw Error(ErrorKind::ClosureViolation, "add table leaves the carrier",
                    fmt::format("add({}, {}) = #{}", names[x], names[y], add[x * n + y]));

  MvAlgebra a;
  a.name_ = std::move(name);
  a.n_ = n;
  a.names_ = std::move(names);
  a.neg_ = std::move(neg);
  a.add_ = std::move(add);
  a.top_ = a.neg_[0];

  auto const& ng = a.neg_;
  auto const& ad = a.add_;
  a.monus_.resize(n * n);
  a.times_.resize(n * n);
  a.leq_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      a.monus_[x * n + y] = ng[ad[ng[x] * n + y]];
      a.times_[x * n + y] = ng[ad[ng[x] * n + ng[y]]];
      a.leq_[x * n + y] = a.monus_[x * n + y] == 0;
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (a.leq_[x * n + y] && a.leq_[y * n + x])
        throw Error(ErrorKind::OrderNotAntisymmetric,
                    "the relation x <= y iff x - y = 0 is not antisymmetric",
                    fmt::format("({}, {})", a.names_[x], a.names_[y]));

  a.join_.resize(n * n);
  a.meet_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) a.join_[x * n + y] = ad[a.monus_[x * n + y] * n + y];
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) a.meet_[x * n + y] = ng[a.join_[ng[x] * n + ng[y]]];
  return a;
}

std::optional<Elem> MvAlgebra::find(std::string_view name) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (names_[i] == name) return static_cast<Elem>(i);
  return std::nullopt;
}

Elem MvAlgebra::multiple(Elem x, std::size_t n) const {
  Elem acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Elem next = add(acc, x);
    if (next == acc && i > 0) break;  // saturated
    acc = next;
  }
  return acc;
}

bool MvAlgebra::is_chain() const {
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = x + 1; y < n_; ++y)
      if (!leq_[x * n_ + y] && !leq_[y * n_ + x]) return false;
  return true;
}

MvwRig MvwRig::derive(MvAlgebra mv, std::vector<Elem> mul) {
  std::size_t const n = mv.size();
  if (mul.size() != n * n)
    throw Error(ErrorKind::InvalidArgument,
                fmt::format("mul table has {} entries, expected {}", mul.size(), n * n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (mul[x * n + y] >= n)
        throw Error(ErrorKind::ClosureViolation, "mul table leaves the carrier",
                    fmt::format("mul({}, {}) = #{}", mv.names()[x], mv.names()[y], mul[x * n + y]));
  MvwRig r;
  static_cast<MvAlgebra&>(r) = std::move(mv);
  r.mul_ = std::move(mul);
  r.flags_ = structural_flags(r);
  return r;
}

Elem MvwRig::power(Elem a, std::size_t n) const {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "power requires n >= 1");
  Elem acc = a;
  for (std::size_t i = 1; i < n; ++i) acc = mul(acc, a);
  return acc;
}

RigFlags structural_flags(MvwRig const& rig) {
  RigFlags f;
  auto const n = static_cast<Elem>(rig.size());
  f.top = rig.top();
  f.commutative = true;
  f.product_below_meet = true;
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (rig.mul(a, b) != rig.mul(b, a)) f.commutative = false;
      if (!rig.leq(rig.mul(a, b), rig.meet(a, b))) f.product_below_meet = false;
    }
  }
  for (Elem s = 0; s < n && !f.unit; ++s) {
    bool is_unit = true;
    for (Elem x = 0; x < n && is_unit; ++x) is_unit = rig.mul(s, x) == x && rig.mul(x, s) == x;
    if (is_unit) f.unit = s;
  }
  return f;
}

std::optional<std::size_t> nilpotency_index(MvwRig const& rig, Elem x) {
  Elem p = x;
  for (std::size_t k = 1; k <= rig.size(); ++k) {
    if (p == 0) return k;
    p = rig.mul(p, x);
  }
  return std::nullopt;
}

}  // namespace mvw
