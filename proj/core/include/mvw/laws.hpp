#pragma once

#include <deque>
#include <vector>

#include "mvw/homomorphism.hpp"
#include "mvw/ideals.hpp"
#include "mvw/locale.hpp"
#include "mvw/spectrum.hpp"

// Exhaustive checks of the identities and theorems the library relies on.
// Each returns the first counterexample found.
namespace mvw::laws {

// Order and MV-algebra identities.
Check order_is_lattice(MvAlgebra const& mv);
Check residuation(MvAlgebra const& mv);  // x <= y + z iff x - z <= y
/// (+)x_i - (+)y_i <= (+)(x_i - y_i) for `arity` summands. Exhaustive over
/// all tuples, done on the set of attainable (sum x, sum y, sum of monus)
/// triples so the cost does not grow with the arity.
Check monus_subadditive(MvAlgebra const& mv, std::size_t arity);

// Product identities.
Check product_monotone(MvwRig const& rig);  // a <= b gives ac <= bc and ca <= cb
Check product_join(MvwRig const& rig);      // a(b v c) >= ab v ac, both sides
Check product_meet(MvwRig const& rig);      // a(b ^ c) <= ab ^ ac, both sides
Check power_join(MvwRig const& rig, std::size_t max_n);  // (a v b)^n >= a^n v b^n
Check power_meet(MvwRig const& rig, std::size_t max_n);  // (a ^ b)^n <= a^n ^ b^n
Check unit_unique(MvwRig const& rig);
Check derive_idempotent(MvwRig const& rig);

// Ideals, congruences and quotients.
Check congruence_bijection(MvwRig const& rig);
Check quotient_laws(MvwRig const& rig);
Check correspondence(MvwRig const& rig);
Check maximal_exist(MvwRig const& rig);
Check maximal_are_prime(MvwRig const& rig);
Check nilradical_laws(MvwRig const& rig);
Check nilradical_is_prime_intersection(MvwRig const& rig);
Check radical_laws(MvwRig const& rig);
Check prime_is_mv_prime(MvwRig const& rig);
Check chang(MvAlgebra const& mv);

/// Kernel is an ideal, image is a sub-rig, injective iff the kernel is {0},
/// f(x) <= f(y) iff x - y in ker, and preimages of primes are prime.
Check homomorphism_laws(Homomorphism const& f);
/// first_iso succeeds.
Check first_isomorphism(Homomorphism const& f);

/// Endomorphisms (when |A| <= 4), projections onto every quotient and the
/// inclusions of the sub-rigs generated by single elements. Owns the targets,
/// so it cannot be copied or moved.
class HomFamily {
 public:
  explicit HomFamily(MvwRig const& rig, std::size_t endo_limit = 4);
  HomFamily(HomFamily const&) = delete;
  HomFamily& operator=(HomFamily const&) = delete;

  std::vector<Homomorphism> const& maps() const noexcept { return maps_; }
  std::vector<std::string> const& labels() const noexcept { return labels_; }

 private:
  std::deque<MvwRig> rigs_;
  std::vector<Homomorphism> maps_;
  std::vector<std::string> labels_;
};

// Spectrum.
Check base_laws(MvwRig const& rig, SpecSpace const& s);
Check nilpotent_law(MvwRig const& rig, SpecSpace const& s);  // V(a) = Spec iff a nilpotent
Check specialization(SpecSpace const& s);                     // Q in cl{P} iff Q subset of P
/// Q below some P in U lies in cl(U); the converse when U has a single
/// maximal point. All U when there are at most `max_points` points.
Check set_closure_laws(SpecSpace const& s, std::size_t max_points = 12);
Check irreducible_iff_local(MvwRig const& rig, SpecSpace const& s);
Check radical_order(MvwRig const& rig, SpecSpace const& s);
Check spec_map_laws(Homomorphism const& f);
/// Every family whose basic opens cover Spec yields a subcover whose basic
/// opens still cover Spec.
Check spec_compactness(MvwRig const& rig, SpecSpace const& s);

// P-filters and the frame.
Check pfilter_generation(MvwRig const& rig);     // formula agrees with the fixpoint closure
Check pfilter_decomposition(MvwRig const& rig, FrameLA const& l);  // F = union of F_a, a in F
Check principal_identities(MvwRig const& rig, FrameLA const& l);   // F_a ^ F_b = F_{a v b}, F_a v F_b = F_{ab}
Check frame_laws(MvwRig const& rig, FrameLA const& l);             // bottom is F_u, distributivity
Check theta_iso(MvwRig const& rig, SpecSpace const& s, FrameLA const& l);
/// finite_subcover is sound on every family whose P-filter join is A, and
/// refuses the others. All families when |A| <= 16, otherwise families of at
/// most two elements and the whole carrier.
Check subcover_soundness(MvwRig const& rig, FrameLA const& l);

/// The families of elements that the compactness checks range over.
std::vector<std::vector<Elem>> element_families(std::size_t n);

}  // namespace mvw::laws
