#pragma once

#include <gencx/gclin/gclin.hpp>
#include <gencx/verify/random.hpp>

namespace gencx::verify {

/// PᵀΩ₀P for a random invertible P and the standard Ω₀ on Q^{2k}.
MatQ random_symplectic(Rng& rng, Index dim);

/// Realification of a complex p×q matrix, acting on (x1, y1, x2, y2, ...)
/// so that it commutes with J₀ ⊕ ... ⊕ J₀.
MatQ realify(const MatQi& a);

/// J₀ ⊕ ... ⊕ J₀ on Q^{2m}, with J₀ e1 = e2.
MatQ standard_complex(Index m);
/// e1*∧e2* + e3*∧e4* + ... on Q^{2k}.
MatQ standard_symplectic(Index k);

struct CompatiblePair {
  gclin::FStructure F;
  MatQ omega;
};

/// Random compatible (F, ω) on Q^n (n even), by block assembly and a random
/// change of basis.
CompatiblePair random_compatible(Rng& rng, Index n);

/// Normal form, then a random B-field, then a random real isomorphism.
gclin::GCStructure random_gc(Rng& rng, Index n);

/// A generalized complex linear map assembled as (Poisson morphism between
/// symplectic spaces) ⊕ (complex linear map), with random changes of basis
/// and random B-fields on both sides.
struct GCLinearInstance {
  MatQ t;
  gclin::GCStructure lv;
  gclin::GCStructure lw;
};

GCLinearInstance random_gc_linear(Rng& rng);

}  // namespace gencx::verify
