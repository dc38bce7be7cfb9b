#pragma once

// Pointwise generalized Kähler algebra on a real space V: bi-Hermitian
// data, the pair (L1, L2), the H± / 𝒱 splitting and the tamed-symplectic
// description. Forms are Gram matrices; the Kähler form of a g-orthogonal
// A is ω_A(X, Y) = g(AX, Y), with Gram matrix Aᵀg.

#include <gencx/gclin/gclin.hpp>

#include <string>
#include <utility>
#include <vector>

namespace gencx::gkahler {

using gclin::FStructure;
using gclin::GCStructure;
using dirac::DiracQi;

struct BiHermitianData {
  MatQ g;
  MatQ b;
  MatQ Jp;
  MatQ Jm;

  Index dim() const { return g.rows(); }
  friend bool operator==(const BiHermitianData& x, const BiHermitianData& y) {
    return x.g == y.g && x.b == y.b && x.Jp == y.Jp && x.Jm == y.Jm;
  }
};

/// Throws PreconditionError naming the first failed axiom.
void validate(const BiHermitianData& d);

struct GKPair {
  BiHermitianData data;
  GCStructure L1;
  GCStructure L2;
  SubspaceQi Lp, Lm;
  SubspaceQi Vp, Vm;
  SubspaceQ Hp, Hm, Vcal;
};

/// L± = {X + (b ± g)(X) : X ∈ V±}, L1 = L⁺ ⊕ L⁻, L2 = L⁺ ⊕ conj(L⁻).
GKPair gk_from_bihermitian(const BiHermitianData& d);
BiHermitianData bihermitian_from_gk(const GCStructure& l1, const GCStructure& l2);

/// −J1J2 is positive definite for the pairing, i.e. ⟨−J1J2 z, z⟩ > 0.
bool is_generalized_metric(const MatQ& j1, const MatQ& j2);

struct Check {
  std::string name;
  bool pass = false;
};

std::vector<Check> subspace_identities(const GKPair& p);

/// F_j = J₊ on H⁺ (j = 1) or H⁻ (j = 2), zero on the g-orthocomplement.
std::pair<FStructure, FStructure> f_structures_of(const GKPair& p);

struct TamedData {
  MatQ eps;
  MatQ J;
};

/// Nondegenerate skew ε, J² = −Id and ε(JX, X) > 0.
void validate(const TamedData& t);

/// J₊ = J, J₋ = −ε⁻¹Jᵀε, g and b the symmetric and skew parts of εJ.
std::pair<BiHermitianData, GKPair> tamed_to_gk(const TamedData& t);

struct TamedFromGK {
  TamedData tamed;
  MatQ B_residual;
};

/// L2 = L(V^C, B + iε) with B, ε real.
TamedFromGK gk_to_tamed(const GKPair& p);

struct HoloPoisson {
  dirac::PoissonBivector<Rational> eta_p;
  dirac::PoissonBivector<Rational> eta_m;
};

/// η± from the pushforwards ρ±_*(L2) of the tamed representative, compared
/// with ½(Jε⁻¹ + ε⁻¹Jᵀ), ½(J₊ − J₋)ε⁻¹ and ¼[J₊, J₋]g⁻¹ (as maps).
HoloPoisson holo_poisson(const GKPair& p);

struct EpsPM {
  MatQi eps_p;
  MatQi eps_m;
  /// iε₊ − iε₋.
  MatQi eps_1;
};

EpsPM eps_pm(const GKPair& p);

/// (Im ε₁)(J₊ − J₋) = ε(J₊ + J₋) as maps.
bool im_eps1_identity(const GKPair& p);

struct TwoOfThree {
  bool holo_L1 = false;
  bool holo_L2 = false;
  bool commutes = false;
  int count() const { return int(holo_L1) + int(holo_L2) + int(commutes); }
  /// No instance may have exactly two flags set.
  bool consistent() const { return count() != 2; }
};

/// Requires phi and J₊ ± J₋ invertible.
TwoOfThree two_of_three(const MatQ& phi, const GKPair& p);

GKPair first_product(const GKPair& a, const GKPair& b);
/// Both factors must be Kähler points (J₊ = J₋, b = 0).
GKPair second_product(const BiHermitianData& a, const BiHermitianData& b);

/// Aᵀg.
MatQ kahler_form(const MatQ& g, const MatQ& a);

/// g = Id on the quaternions with basis (1, i, j, k) and I, J, K left
/// multiplication by i, j, k.
struct Quaternions {
  MatQ I, J, K;
};
Quaternions quaternions();

/// (g = Id, b = ω_I, J₊ = J, J₋ = K).
BiHermitianData hyperkahler_point();
/// (ε = −(ω_J + ω_K), J).
TamedData hyperkahler_tamed();
/// g = Id, b = 0, J₊ = J₋ = J₀ on Q^{2m}.
BiHermitianData kahler_point(Index m = 1);

}  // namespace gencx::gkahler
