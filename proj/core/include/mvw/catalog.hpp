#pragma once

#include <cstddef>
#include <vector>

#include "mvw/algebra.hpp"
#include "mvw/builders.hpp"

namespace mvw::catalog {

/// The one-element rig {0}.
MvwRig trivial_rig();

/// The trivial-product lift of L_n, named "T<n>".
MvwRig t_n(std::size_t n);

/// Z_1..Z_6, T_2..T_5, the 2x2 matrix rig over Z_1, Gamma(Z^k, u) for every
/// k <= 3 and u in {0,1}^k, and the trivial rig.
std::vector<MvwRig> base_family();

/// All direct products a x b (unordered, repetition allowed) of base_family()
/// members whose carrier stays within `bound`.
std::vector<MvwRig> pairwise_products(std::size_t bound = default_size_bound());

/// base_family() and pairwise_products() restricted to carriers of at most
/// `max_size` elements, in that order.
std::vector<MvwRig> examples(std::size_t max_size);

/// L_2..L_5 as product-free MV-algebras.
std::vector<MvAlgebra> mv_examples();

}  // namespace mvw::catalog
