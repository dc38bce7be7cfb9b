#pragma once

#include <gencx/dirac/dirac.hpp>
#include <gencx/verify/random.hpp>

namespace gencx::verify {

/// Span of a random number of random columns; dimension is not forced.
template <class S>
Subspace<S> random_subspace(Rng& rng, Index n, std::int64_t bound = 2) {
  return Subspace<S>::span(rng.matrix_over<S>(n, rng.uniform(0, n), bound));
}

template <class S>
dirac::DiracStructure<S> random_dirac(Rng& rng, Index n, std::int64_t bound = 2) {
  const Subspace<S> e = random_subspace<S>(rng, n, bound);
  return dirac::build(e, rng.skew<S>(e.dim(), bound));
}

}  // namespace gencx::verify
