#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvw/elem_set.hpp"
#include "mvw/error.hpp"

namespace mvw {

/// A finite MV-algebra stored as total operation tables over {0, ..., n-1}.
///
/// Element 0 is always the zero. Only negation and the truncated sum are
/// primitive; the top element, the monus, the Lukasiewicz product, the lattice
/// operations and the natural order are derived once in derive() and then
/// served by table lookup.
class MvAlgebra {
 public:
  MvAlgebra() = default;

  /// Builds the derived tables. `names` may be empty, in which case elements
  /// are named by their index. Throws Error with kind ClosureViolation if a
  /// table entry falls outside the carrier and OrderNotAntisymmetric if the
  /// monus-induced relation is not antisymmetric.
  static MvAlgebra derive(std::string name, std::vector<std::string> names,
                          std::vector<Elem> neg, std::vector<Elem> add);

  std::string const& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::size_t size() const noexcept { return n_; }
  std::vector<std::string> const& names() const noexcept { return names_; }
  std::string const& name_of(Elem x) const { return names_[check(x)]; }
  std::optional<Elem> find(std::string_view name) const;

  Elem zero() const noexcept { return 0; }
  Elem top() const noexcept { return top_; }

  Elem neg(Elem x) const { return neg_[check(x)]; }
  Elem add(Elem x, Elem y) const { return add_[index(x, y)]; }
  Elem monus(Elem x, Elem y) const { return monus_[index(x, y)]; }
  Elem times_mv(Elem x, Elem y) const { return times_[index(x, y)]; }
  Elem join(Elem x, Elem y) const { return join_[index(x, y)]; }
  Elem meet(Elem x, Elem y) const { return meet_[index(x, y)]; }
  bool leq(Elem x, Elem y) const { return leq_[index(x, y)] != 0; }

  /// n-fold truncated sum x + ... + x; multiple(x, 0) is 0.
  Elem multiple(Elem x, std::size_t n) const;
  /// Distance (x - y) + (y - x); zero exactly when x == y.
  Elem distance(Elem x, Elem y) const { return add(monus(x, y), monus(y, x)); }

  bool is_chain() const;

  std::vector<Elem> const& neg_table() const noexcept { return neg_; }
  std::vector<Elem> const& add_table() const noexcept { return add_; }

  friend bool operator==(MvAlgebra const&, MvAlgebra const&) = default;

 protected:
  std::size_t check(Elem x) const {
    if (x >= n_) throw Error(ErrorKind::IndexOutOfRange, "element index out of range: " + std::to_string(x));
    return x;
  }
  std::size_t index(Elem x, Elem y) const { return check(x) * n_ + check(y); }

 private:
  std::string name_;
  std::size_t n_ = 0;
  std::vector<std::string> names_;
  Elem top_ = 0;
  std::vector<Elem> neg_, add_, monus_, times_, join_, meet_;
  std::vector<char> leq_;
};

struct RigFlags {
  bool commutative = false;
  std::optional<Elem> unit;
  bool product_below_meet = false;  // ab <= a /\ b for all a, b
  Elem top = 0;

  friend bool operator==(RigFlags const&, RigFlags const&) = default;
};

/// An MV-algebra together with a product table.
class MvwRig : public MvAlgebra {
 public:
  MvwRig() = default;

  static MvwRig derive(MvAlgebra mv, std::vector<Elem> mul);
  static MvwRig derive(std::string name, std::vector<std::string> names, std::vector<Elem> neg,
                       std::vector<Elem> add, std::vector<Elem> mul) {
    return derive(MvAlgebra::derive(std::move(name), std::move(names), std::move(neg), std::move(add)),
                  std::move(mul));
  }

  MvAlgebra const& mv() const noexcept { return *this; }

  Elem mul(Elem a, Elem b) const { return mul_[index(a, b)]; }
  /// a^n for n >= 1, left-associated. n == 0 is rejected.
  Elem power(Elem a, std::size_t n) const;

  RigFlags const& flags() const noexcept { return flags_; }
  bool is_commutative() const noexcept { return flags_.commutative; }
  std::optional<Elem> unit() const noexcept { return flags_.unit; }
  bool has_unit() const noexcept { return flags_.unit.has_value(); }

  std::vector<Elem> const& mul_table() const noexcept { return mul_; }

  friend bool operator==(MvwRig const&, MvwRig const&) = default;

 private:
  std::vector<Elem> mul_;
  RigFlags flags_;
};

/// Commutativity, unit scan and the ab <= a /\ b test, all exhaustive.
RigFlags structural_flags(MvwRig const& rig);

/// Smallest n with x^n = 0, searched up to |A|; nullopt if x is not nilpotent.
std::optional<std::size_t> nilpotency_index(MvwRig const& rig, Elem x);

}  // namespace mvw
