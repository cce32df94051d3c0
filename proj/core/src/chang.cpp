#include "mvw/chang.hpp"

#include <set>

#include <fmt/format.h>

namespace mvw {

ChangEmbedding chang_embedding(MvAlgebra const& mv) {
  if (mv.size() == 1) throw Error(ErrorKind::Trivial, "the one-element algebra has no MV-prime ideals");
  ChangEmbedding out;
  auto note = [&](std::string w) {
    if (out.witness.empty()) out.witness = std::move(w);
  };

  out.primes = mv_prime_ideals(mv);
  for (auto const& p : out.primes) out.factors.push_back(mv_quotient(mv, p));

  out.factors_are_chains = true;
  for (std::size_t i = 0; i < out.factors.size(); ++i)
    if (!out.factors[i].algebra.is_chain()) {
      out.factors_are_chains = false;
      note(fmt::format("{} is not totally ordered", out.factors[i].algebra.name()));
    }

  auto const n = static_cast<Elem>(mv.size());
  out.coordinates.resize(n);
  for (Elem a = 0; a < n; ++a)
    for (auto const& f : out.factors) out.coordinates[a].push_back(f.project(a));

  std::set<std::vector<Elem>> seen;
  out.injective = !out.factors.empty();
  for (Elem a = 0; a < n; ++a)
    if (!seen.insert(out.coordinates[a]).second) {
      out.injective = false;
      note(fmt::format("{} collides with an earlier element", mv.name_of(a)));
    }
  if (out.factors.empty()) note("no proper MV-prime ideals");

  out.homomorphism = true;
  out.projections_surjective = true;
  for (auto const& f : out.factors) {
    if (auto c = check_mv_homomorphism(mv, f.algebra, f.congruence.class_of); !c) {
      out.homomorphism = false;
      note(c.witness);
    }
    ElemSet hit(f.algebra.size());
    for (Elem a = 0; a < n; ++a) hit.insert(f.project(a));
    if (!hit.is_full()) {
      out.projections_surjective = false;
      note(fmt::format("projection onto {} is not surjective", f.algebra.name()));
    }
  }
  return out;
}

}  // namespace mvw
