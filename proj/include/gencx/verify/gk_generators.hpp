#pragma once

#include <gencx/gkahler/gkahler.hpp>
#include <gencx/verify/random.hpp>

#include <functional>

namespace gencx::verify {

/// (I − K)(I + K)⁻¹ for a random skew K: a rational orthogonal matrix.
MatQ random_orthogonal(Rng& rng, Index n);

/// g = (S⁻¹)ᵀS⁻¹, J₊ = SJ₀S⁻¹, J₋ = (SQ)J₀(SQ)⁻¹ with Q orthogonal and
/// block diagonal over the 2-planes: generic, identity (J₊ = J₋ there) or a
/// reflection (J₊ = −J₋ there), and b a random skew form.
gkahler::BiHermitianData random_bihermitian(Rng& rng, Index n, bool allow_degenerate = true);

/// Tamed data from random bi-Hermitian data with J₊ + J₋ invertible, and
/// J₊ − J₋ too when `both`. In dimension 2 mod 4 the difference is always
/// singular.
gkahler::TamedData random_tamed(Rng& rng, Index n, bool both = true);

/// Random element of {A : constraint(A) = 0} for a linear constraint on n×n
/// matrices; zero when the space is trivial.
MatQ random_in_kernel(Rng& rng, Index n, const std::function<MatQ(const MatQ&)>& constraint);

/// (I − A)(I + A)⁻¹, or nullopt when I + A is singular.
std::optional<MatQ> cayley(const MatQ& a);

enum class CensusKind { Generic, HoloL1, HoloL2, Commuting, HoloL1Commuting, HoloL2Commuting };

/// Invertible map at a point with J₊ ± J₋ invertible, drawn from the group
/// named by the kind.
MatQ random_census_map(Rng& rng, const gkahler::GKPair& p, CensusKind kind);

}  // namespace gencx::verify
