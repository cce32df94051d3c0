#pragma once

#include <span>
#include <vector>

#include "mvw/builders.hpp"
#include "mvw/ideals.hpp"

namespace mvw {

/// A map between two rigs. Non-owning: both rigs must outlive it.
class Homomorphism {
 public:
  Homomorphism(MvwRig const& source, MvwRig const& target, std::vector<Elem> values)
      : source_(&source), target_(&target), values_(std::move(values)) {}

  MvwRig const& source() const noexcept { return *source_; }
  MvwRig const& target() const noexcept { return *target_; }
  std::vector<Elem> const& values() const noexcept { return values_; }
  Elem operator()(Elem x) const { return values_.at(x); }

 private:
  MvwRig const* source_;
  MvwRig const* target_;
  std::vector<Elem> values_;
};

/// f(0) = 0, f(~x) = ~f(x), f(x + y) = f(x) + f(y).
Check check_mv_homomorphism(MvAlgebra const& source, MvAlgebra const& target, std::span<Elem const> map);
/// The MV clauses plus f(ab) = f(a)f(b).
Check check_homomorphism(Homomorphism const& f);

/// {x : f(x) = 0}.
Ideal kernel(Homomorphism const& f);
/// f(A) as a sub-rig of the target.
Subalgebra image(Homomorphism const& f);
/// {x : f(x) in J}.
ElemSet preimage(Homomorphism const& f, ElemSet const& j);
/// {f(x) : x in S}.
ElemSet direct_image(Homomorphism const& f, ElemSet const& s);

/// All homomorphisms source -> target, by backtracking over partial maps.
std::vector<std::vector<Elem>> enumerate_homomorphisms(MvwRig const& source, MvwRig const& target);

}  // namespace mvw
