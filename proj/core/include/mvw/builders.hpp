#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "mvw/algebra.hpp"
#include "mvw/axioms.hpp"
#include "mvw/rational.hpp"

namespace mvw {

/// Default carrier cap for product-style constructions. The environment
/// variable MVW_SIZE_BOUND overrides it.
std::size_t default_size_bound();

/// Z_n = {0..n}: x + y = min(n, x + y), ~x = n - x, xy = min(n, xy).
MvwRig build_zn(std::size_t n);

/// An MV-algebra whose elements are exact rationals, e.g. the Lukasiewicz
/// chain {0, 1/(n-1), ..., 1}. values[i] is the rational behind element i.
struct RationalMv {
  MvAlgebra algebra;
  std::vector<Rational> values;
};

/// L_n = {0, 1/(n-1), ..., 1} with truncated sum; product-free. n >= 2.
RationalMv build_luk_mv(std::size_t n);

using RationalProduct = std::function<Rational(Rational const&, Rational const&)>;

/// Attaches a product given by a rule on the underlying rationals. Throws
/// ClosureViolation with the first (x, y) whose product leaves the carrier.
MvwRig attach_product(RationalMv const& mv, RationalProduct const& rule);

/// attach_product with the ordinary product of rationals.
MvwRig attach_real_product(RationalMv const& mv);

/// Same carrier and MV-structure, product constantly 0. Requires check_mv to
/// pass (AxiomViolation otherwise).
MvwRig lift_trivial_product(MvAlgebra const& mv);

/// A construction whose axioms are reported rather than assumed.
struct CheckedRig {
  MvwRig rig;
  AxiomReport report;
};

/// n x n matrices over `base`: componentwise sum and negation, product
/// (AB)_ij = (+)_k a_ik b_kj. Throws SizeBound if |base|^(n^2) > bound.
CheckedRig build_matrix_rig(MvwRig const& base, std::size_t n, std::size_t bound = default_size_bound());

/// Componentwise product of a nonempty list of rigs. Element index is the
/// mixed-radix number of the component indices, first factor most significant.
MvwRig direct_product(std::span<MvwRig const> factors, std::size_t bound = default_size_bound());
MvwRig direct_product(MvwRig const& a, MvwRig const& b, std::size_t bound = default_size_bound());

/// Unit interval {x in Z^k : 0 <= x <= u} with x + y = (x + y) /\ u and the
/// componentwise product. Every u_i must be 0 or 1 (InvalidUnit otherwise).
MvwRig gamma_zk(std::size_t k, std::span<int const> u, std::size_t bound = default_size_bound());

struct Subalgebra {
  MvwRig rig;
  std::vector<Elem> inclusion;  // element of rig -> element of parent
};

/// Least subset containing seed and 0 closed under ~, + and the product.
Subalgebra subalgebra_closure(MvwRig const& rig, ElemSet const& seed);

/// Same, for the product-free structure (closure under ~ and + only).
std::vector<Elem> mv_subalgebra_closure(MvAlgebra const& mv, ElemSet const& seed);

}  // namespace mvw
