#pragma once

#include <vector>

#include "mvw/quotient.hpp"

namespace mvw {

/// The canonical map a -> ([a]_P1, ..., [a]_Pk) over the proper MV-prime
/// ideals, with the properties the representation theorem promises.
struct ChangEmbedding {
  std::vector<ElemSet> primes;
  std::vector<MvQuotient> factors;
  std::vector<std::vector<Elem>> coordinates;  // coordinates[a][i] = [a]_Pi
  bool injective = false;
  bool factors_are_chains = false;
  bool homomorphism = false;
  bool projections_surjective = false;
  std::string witness;  // first failure, empty if ok()

  bool ok() const noexcept { return injective && factors_are_chains && homomorphism && projections_surjective; }
};

/// Throws Trivial on the one-element algebra.
ChangEmbedding chang_embedding(MvAlgebra const& mv);

}  // namespace mvw
