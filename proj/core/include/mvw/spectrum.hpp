#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvw/homomorphism.hpp"
#include "mvw/ideals.hpp"

namespace mvw {

/// The proper prime ideals of a commutative rig with the topology generated
/// by V(a) = {P : a in P}. Point sets are ElemSets over point indices.
struct SpecSpace {
  std::vector<ElemSet> points;  // proper primes, smallest first
  std::vector<ElemSet> base;    // base[a] = V(a)
  std::vector<ElemSet> opens;   // every union of basic opens, smallest first
  bool unit_warning = false;    // the rig has no unit; unit-gated results do not apply

  std::size_t size() const noexcept { return points.size(); }
  ElemSet all() const { return ElemSet::full(points.size()); }
  ElemSet none() const { return ElemSet(points.size()); }
};

/// Throws NotCommutative.
SpecSpace spec(MvwRig const& rig);

ElemSet const& basic_open(SpecSpace const& s, Elem a);
/// V(I) = {P : I subset of P}.
ElemSet zero_set(SpecSpace const& s, ElemSet const& ideal);
bool is_open(SpecSpace const& s, ElemSet const& u);

/// Opens contain the empty set and every point, and are closed under union
/// and intersection.
Check check_topology(SpecSpace const& s);
/// Two distinct points are separated by some open.
Check is_t0(SpecSpace const& s);
/// Nonempty, and every two nonempty opens meet.
Check is_irreducible(SpecSpace const& s);

/// Closure computed from the opens: Q is in cl(U) iff every open through Q meets U.
ElemSet set_closure(SpecSpace const& s, ElemSet const& u);
ElemSet point_closure(SpecSpace const& s, std::size_t p);
/// Points that are maximal under inclusion among those of U.
std::vector<std::size_t> maximal_points(SpecSpace const& s, ElemSet const& u);

/// phi*(Q) = phi^-1(Q) from Spec(B) to Spec(A), with the listed properties
/// checked. An unset optional means the hypothesis (injective or bijective)
/// does not hold.
struct SpecMap {
  SpecSpace source;  // Spec(A)
  SpecSpace target;  // Spec(B)
  std::vector<std::size_t> star;  // point of Spec(B) -> point of Spec(A)
  Check continuous;
  Check preimage_of_zero_sets;                 // (phi*)^-1(V(I)) = V(phi(I))
  std::optional<Check> image_of_basic_opens;   // phi*(V(b)) = V(phi^-1(b)) for b in phi(A)
  // The same identity over every b of B. For b outside phi(A) the preimage is
  // empty and V of it is all of Spec A, so this can fail; not part of ok().
  std::optional<Check> image_of_basic_opens_all;
  std::optional<Check> homeomorphism;          // onto V(ker phi)
  std::optional<Check> surjective;             // phi*(Spec B) = Spec A

  bool ok() const;
};

/// Throws NotAHomomorphism or NotCommutative.
SpecMap spec_map(Homomorphism const& phi);

/// V(a) subset of V(b), and independently rad<b> subset of rad<a>.
struct RadicalOrder {
  bool topological = false;
  bool algebraic = false;
};
RadicalOrder radical_order_check(MvwRig const& rig, SpecSpace const& s, Elem a, Elem b);

/// Specialization order as a DOT digraph: an edge Q -> P for each covering
/// Q subset of P; nodes are labelled by the ideal's elements.
std::string to_dot(MvwRig const& rig, SpecSpace const& s);

}  // namespace mvw
