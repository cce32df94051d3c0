#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mvw/ideals.hpp"
#include "mvw/spectrum.hpp"

namespace mvw {

/// The +-closure of {b x : b in A} together with 0, i.e. every finite sum
/// (+)_i b_i x.
ElemSet dotsum_closure(MvwRig const& rig, Elem x);

/// Nonempty, upward closed and closed under the product.
Check is_filter(MvwRig const& rig, ElemSet const& f);
/// is_filter plus: x is in F whenever some (+)_i b_i x is.
Check is_pfilter(MvwRig const& rig, ElemSet const& f);

/// {x : some finite product of S-elements is <= some (+)_i b_i x}.
/// Throws EmptySeed.
ElemSet pfilter_generated(MvwRig const& rig, ElemSet const& seed);
/// Least P-filter containing S by closing under the three clauses. Throws
/// EmptySeed.
ElemSet pfilter_fixpoint(MvwRig const& rig, ElemSet const& seed);
/// F_a.
ElemSet principal_pfilter(MvwRig const& rig, Elem a);

/// Intersection; throws std::logic_error if the result is not a P-filter.
ElemSet pfilter_meet(MvwRig const& rig, ElemSet const& f, ElemSet const& g);
/// P-filter generated by the union.
ElemSet pfilter_join(MvwRig const& rig, ElemSet const& f, ElemSet const& g);
/// {x : a^n b^m <= (+)_i b_i x for some n, m >= 1}.
ElemSet pfilter_join_by_powers(MvwRig const& rig, Elem a, Elem b);

/// Every P-filter, smallest first. Each P-filter is the join of the
/// principal P-filters of its members, so this closes the principal ones
/// under joins.
std::vector<ElemSet> enumerate_pfilters(MvwRig const& rig, std::size_t bound = default_size_bound());

/// The frame of P-filters ordered by inclusion.
struct FrameLA {
  std::vector<ElemSet> filters;             // smallest first; filters[0] is the bottom
  std::vector<std::size_t> principal;       // principal[a] = index of F_a
  std::vector<std::size_t> join, meet;      // k x k tables of indices
  std::vector<std::pair<std::size_t, std::size_t>> hasse;  // covering pairs (lower, upper)
  Check distributive;                       // F /\ V S = V (F /\ G) over principal families S

  std::size_t size() const noexcept { return filters.size(); }
  std::size_t index_of(ElemSet const& f) const;
  std::size_t join_of(std::size_t i, std::size_t j) const { return join[i * size() + j]; }
  std::size_t meet_of(std::size_t i, std::size_t j) const { return meet[i * size() + j]; }
  std::size_t top() const noexcept { return size() - 1; }
};

/// Throws SizeBound when the carrier exceeds `bound`.
FrameLA frame(MvwRig const& rig, std::size_t bound = default_size_bound());

/// theta(U) = V F_a over any family with U the union of the V(a).
struct Theta {
  std::vector<std::size_t> map;  // open index -> frame index
  Check well_defined;            // every presentation of U gives the same P-filter
  Check bijective;
  Check preserves_join;
  Check preserves_meet;
  Check order_isomorphism;

  bool ok() const noexcept {
    return well_defined.ok && bijective.ok && preserves_join.ok && preserves_meet.ok && order_isomorphism.ok;
  }
};

/// Throws GateNotMet unless the rig is commutative with a unit.
Theta theta(MvwRig const& rig, SpecSpace const& s, FrameLA const& l);

struct Subcover {
  std::vector<Elem> generators;  // subfamily whose P-filter join is A
  std::vector<Elem> word;        // product of these generators equal to 0
};

/// Throws NotACover when the P-filter join of the generators is proper.
Subcover finite_subcover(MvwRig const& rig, std::vector<Elem> const& generators);

}  // namespace mvw
