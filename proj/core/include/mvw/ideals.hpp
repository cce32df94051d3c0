#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvw/algebra.hpp"
#include "mvw/builders.hpp"

namespace mvw {

/// Result of a membership-style check; `witness` explains the first failure.
struct Check {
  bool ok = true;
  std::string witness;

  explicit operator bool() const noexcept { return ok; }
  static Check failure(std::string w) { return {false, std::move(w)}; }
};

/// 0 in S, S downward closed, S closed under +.
Check is_mv_ideal(MvAlgebra const& mv, ElemSet const& s);
/// is_mv_ideal plus two-sided absorption of the product.
Check is_ideal(MvwRig const& rig, ElemSet const& s);

struct Ideal {
  ElemSet members;
  // Set when the rig is not commutative and the ideal was generated by the
  // two-sided fixpoint closure rather than the commutative formula.
  bool extension = false;

  friend bool operator==(Ideal const& a, Ideal const& b) { return a.members == b.members; }
  friend bool operator<(Ideal const& a, Ideal const& b) { return a.members < b.members; }
};

/// Least ideal containing `seed`. On commutative rigs this is the down-set of
/// the +-closure of S together with all products a*s. On other rigs the
/// result comes from the two-sided fixpoint closure and is flagged.
Ideal generated_ideal(MvwRig const& rig, ElemSet const& seed);

/// Two-sided fixpoint closure under +, down-set and both one-sided products.
ElemSet generated_ideal_fixpoint(MvwRig const& rig, ElemSet const& seed);

/// Least MV-ideal containing `seed`.
ElemSet generated_mv_ideal(MvAlgebra const& mv, ElemSet const& seed);

/// Every ideal of the rig, smallest first. Each ideal is a join of principal
/// ideals, so the search closes {0} and the principal ideals under joins.
std::vector<Ideal> enumerate_ideals(MvwRig const& rig, std::size_t bound = default_size_bound());

/// Every MV-ideal, smallest first.
std::vector<ElemSet> enumerate_mv_ideals(MvAlgebra const& mv, std::size_t bound = default_size_bound());

struct Classification {
  bool proper = false;
  bool prime = false;     // ab in I implies a in I or b in I
  bool mv_prime = false;  // a /\ b in I implies a in I or b in I
  bool maximal = false;   // proper, and <I, a> = A for every a outside I

  friend bool operator==(Classification const&, Classification const&) = default;
};

/// Precondition: `ideal` is an ideal. The whole carrier satisfies the raw
/// prime clause; only `proper` tells it apart.
Classification classify_ideal(MvwRig const& rig, ElemSet const& ideal);

Check prime_clause(MvwRig const& rig, ElemSet const& ideal);
Check mv_prime_clause(MvAlgebra const& mv, ElemSet const& ideal);

/// Proper prime ideals: the points of the spectrum.
std::vector<Ideal> prime_ideals(MvwRig const& rig);
/// Maximal proper ideals. Throws Trivial on the one-element rig.
std::vector<Ideal> maximal_ideals(MvwRig const& rig);
/// Proper MV-prime MV-ideals of the underlying MV-algebra.
std::vector<ElemSet> mv_prime_ideals(MvAlgebra const& mv);

bool is_nilpotent(MvwRig const& rig, Elem x);
/// Set of nilpotent elements. Throws NotCommutative.
Ideal nilradical(MvwRig const& rig);
/// {x : x^n in I for some n > 0}. Throws NotCommutative.
Ideal radical(MvwRig const& rig, ElemSet const& ideal);
/// Intersection of the proper primes containing I; the empty intersection is A.
ElemSet radical_via_primes(MvwRig const& rig, ElemSet const& ideal);

/// <I u J>. Throws NotCommutative.
Ideal ideal_join(MvwRig const& rig, ElemSet const& i, ElemSet const& j);
/// <{xy : x in I, y in J}>. Throws NotCommutative.
Ideal ideal_product(MvwRig const& rig, ElemSet const& i, ElemSet const& j);

/// A partition of the carrier: class_of[x] is the class index of x. Classes
/// are numbered by their least element, so the class of 0 is always 0.
struct Congruence {
  std::vector<Elem> class_of;
  std::size_t classes = 0;

  friend bool operator==(Congruence const&, Congruence const&) = default;
};

/// Normalizes an arbitrary labelling into class indices ordered by least member.
Congruence make_partition(std::vector<Elem> const& labels);

/// x ~ y iff (x - y) + (y - x) in I. Works for MV-ideals as well.
Congruence congruence_from_ideal(MvAlgebra const& mv, ElemSet const& ideal);

/// Compatibility with ~, + and (when given a rig) the product.
Check check_congruence(MvAlgebra const& mv, Congruence const& c);
Check check_congruence(MvwRig const& rig, Congruence const& c);

/// The class of 0. Throws NotACongruence (with witness) for an incompatible
/// partition.
Ideal ideal_from_congruence(MvwRig const& rig, Congruence const& c);

/// Renders a set as {a, b, ...} using element names.
std::string format_set(MvAlgebra const& mv, ElemSet const& s);

}  // namespace mvw
