#pragma once

#include <vector>

#include "mvw/homomorphism.hpp"
#include "mvw/ideals.hpp"

namespace mvw {

/// A/I for an MV-ideal of a product-free algebra.
struct MvQuotient {
  ElemSet ideal;
  Congruence congruence;
  std::vector<Elem> representatives;  // least member of each class
  MvAlgebra algebra;

  Elem project(Elem x) const { return congruence.class_of.at(x); }
};

/// A/I for an ideal of a rig. Classes are named "[rep]" after their least member.
struct QuotientRig {
  ElemSet ideal;
  Congruence congruence;
  std::vector<Elem> representatives;
  MvwRig rig;

  Elem project(Elem x) const { return congruence.class_of.at(x); }
  std::vector<Elem> const& projection() const noexcept { return congruence.class_of; }
};

/// Throws NotACongruence if I does not induce a compatible partition.
MvQuotient mv_quotient(MvAlgebra const& mv, ElemSet const& ideal);
QuotientRig quotient(MvwRig const& rig, ElemSet const& ideal);

/// A/ker(f) and f(A) together with the induced map [a] -> f(a).
struct FirstIsomorphism {
  QuotientRig quotient;
  Subalgebra image;
  std::vector<Elem> iso;  // class of A/ker(f) -> element of image.rig
};

/// Builds the induced map and verifies well-definedness, bijectivity and the
/// homomorphism clauses. A failure throws std::logic_error.
FirstIsomorphism first_iso(Homomorphism const& f);

/// The ideals above I, the ideals of A/I, and forward[k] = index of the
/// image of above[k] among quotient_ideals.
struct Correspondence {
  QuotientRig quotient;
  std::vector<ElemSet> above;
  std::vector<ElemSet> quotient_ideals;
  std::vector<std::size_t> forward;
};

/// J -> {[a] : a in J}, verified bijective and inclusion-preserving both
/// ways. A failure throws std::logic_error.
Correspondence ideal_correspondence(MvwRig const& rig, ElemSet const& ideal);

}  // namespace mvw
