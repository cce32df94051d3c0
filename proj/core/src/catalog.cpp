#include "mvw/catalog.hpp"

#include <array>

namespace mvw::catalog {

MvwRig trivial_rig() { return MvwRig::derive("O", {"0"}, {0}, {0}, {0}); }

MvwRig t_n(std::size_t n) {
  auto rig = lift_trivial_product(build_luk_mv(n).algebra);
  rig.set_name("T" + std::to_string(n));
  return rig;
}

std::vector<MvwRig> base_family() {
  std::vector<MvwRig> out;
  for (std::size_t n = 1; n <= 6; ++n) out.push_back(build_zn(n));
  for (std::size_t n = 2; n <= 5; ++n) out.push_back(t_n(n));
  out.push_back(build_matrix_rig(build_zn(1), 2).rig);
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      std::array<int, 3> u{};
      for (std::size_t c = 0; c < k; ++c) u[c] = static_cast<int>((mask >> (k - 1 - c)) & 1U);
      out.push_back(gamma_zk(k, std::span<int const>(u.data(), k)));
    }
  }
  out.push_back(trivial_rig());
  return out;
}

std::vector<MvwRig> pairwise_products(std::size_t bound) {
  auto const base = base_family();
  std::vector<MvwRig> out;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j)
      if (base[i].size() * base[j].size() <= bound) out.push_back(direct_product(base[i], base[j], bound));
  return out;
}

std::vector<MvwRig> examples(std::size_t max_size) {
  std::vector<MvwRig> out;
  for (auto& r : base_family())
    if (r.size() <= max_size) out.push_back(std::move(r));
  for (auto& r : pairwise_products(max_size)) out.push_back(std::move(r));
  return out;
}

std::vector<MvAlgebra> mv_examples() {
  std::vector<MvAlgebra> out;
  for (std::size_t n = 2; n <= 5; ++n) out.push_back(build_luk_mv(n).algebra);
  return out;
}

}  // namespace mvw::catalog
