#pragma once

// Linear generalized complex structures on a real space V, always carried
// as complex Dirac structures on V^C. Real maps act on V^C by
// complexification.

#include <gencx/dirac/dirac.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gencx::gclin {

using dirac::DiracQ;
using dirac::DiracQi;
using PoissonQ = dirac::PoissonBivector<Rational>;

bool is_cr(const SubspaceQi& c);
bool is_cocr(const SubspaceQi& c);
/// is_cocr(C) == is_cr(Ann(C)).
bool annihilator_duality(const SubspaceQi& c);

/// F³ + F = 0 with V^C = V⁰ ⊕ V^{1,0} ⊕ V^{0,1}; V^{1,0} is the +i
/// eigenspace of F.
struct FStructure {
  MatQ F;
  SubspaceQ v0_real;
  SubspaceQi v0;
  SubspaceQi v10;
  SubspaceQi v01;

  /// CR part V^{1,0}.
  const SubspaceQi& cr() const { return v10; }
  /// co-CR part V⁰ ⊕ V^{1,0}.
  SubspaceQi cocr() const { return sum(v0, v10); }
  Index dim() const { return F.rows(); }
};

FStructure f_split(const MatQ& f);
FStructure f_from_split(const SubspaceQi& v0, const SubspaceQi& v10);
bool is_f_linear(const MatQ& t, const FStructure& fv, const FStructure& fw);

class GCStructure {
 public:
  /// Validates L∩L̄ = 0 and, independently, that π(L) is co-CR with
  /// Im ε nondegenerate on π(L) ∩ conj π(L); throws PreconditionError when
  /// L is not generalized complex.
  static GCStructure from_dirac(const DiracQi& l);

  Index v_dim() const { return l_.v_dim(); }
  const DiracQi& dirac() const { return l_; }
  /// Associated co-CR structure π(L).
  const SubspaceQi& cocr() const { return e_; }
  /// ε in the canonical basis of π(L).
  const MatQi& eps() const { return eps_; }
  /// Real points of π(L) ∩ conj π(L).
  const SubspaceQ& symplectic_part() const { return d_; }
  /// The real endomorphism of V ⊕ V* with +i eigenspace L.
  const MatQ& J() const { return j_; }
  const PoissonQ& assoc_poisson() const { return assoc_; }

  friend bool operator==(const GCStructure& a, const GCStructure& b) { return a.l_ == b.l_; }
  friend bool operator!=(const GCStructure& a, const GCStructure& b) { return !(a == b); }

 private:
  GCStructure() = default;

  DiracQi l_;
  SubspaceQi e_;
  MatQi eps_;
  SubspaceQ d_;
  MatQ j_;
  PoissonQ assoc_;
};

inline GCStructure gc_from_dirac(const DiracQi& l) { return GCStructure::from_dirac(l); }

/// Throws PreconditionError naming the failed clause of compatibility:
/// ker ω = V^{1,0} ⊕ V^{0,1} and ω|_{V⁰} nondegenerate.
void check_compatible(const FStructure& f, const MatQ& omega);

/// L(V⁰ ⊕ V^{1,0}, iω), checked against the block form
/// [[F, η], [−ω, −Fᵀ]] with η the bivector of L(V⁰, ω).
GCStructure normal_form_build(const FStructure& f, const MatQ& omega);

/// The map-form block matrix [[F, η], [−ω, −Fᵀ]] for a compatible pair.
MatQ normal_form_block(const FStructure& f, const MatQ& omega);

/// ω with L = L(V⁰ ⊕ V^{1,0}, iω), if L is in normal form for F.
std::optional<MatQ> normal_form_omega(const GCStructure& l, const FStructure& f);

struct NormalFormCertificate {
  FStructure F;
  MatQ omega;
  MatQ B;
  /// Dimension of the solution space of the defining system for B.
  Index nullity = 0;
  /// Real dimension of the B-fields invisible on V⁰ ⊕ V^{1,0}, i.e. the real
  /// forms pairing V^{1,0} with V^{0,1} only; fixed to zero by the system.
  Index gauge_dim = 0;
};

/// The real skew B with exp(B)(L) = L(V⁰ ⊕ V^{1,0}, iω): B = −Re ε on V⁰,
/// B = −ε on V^{1,0} ⊗ (V⁰ ⊕ V^{1,0}), and B(x, ȳ) = 0 for x, y ∈ V^{1,0}.
NormalFormCertificate normalize(const GCStructure& l, const FStructure& f);

GCStructure bfield(const MatQ& b, const GCStructure& l);
GCStructure pushforward(const MatQ& t, const GCStructure& l);

/// Flags behind is_gc_linear.
struct GCLinearity {
  bool cocr_linear = false;
  bool poisson = false;
  bool linear() const { return cocr_linear && poisson; }
};

GCLinearity gc_linearity(const MatQ& t, const GCStructure& lv, const GCStructure& lw);
/// t(E_V) ⊆ E_W and t η_V tᵀ = η_W.
bool is_gc_linear(const MatQ& t, const GCStructure& lv, const GCStructure& lw);

struct GCLinearWitness {
  MatQ B_V, B_W;
  SubspaceQ D_V, V_prime, D_W, W_prime;
  FStructure F_V, F_W;
  MatQ omega_V, omega_W;
  /// t restricted to D_V → D_W and V′ → W′, in the canonical bases.
  MatQ t_symp, t_cplx;
  /// Symplectic forms on D_V, D_W and complex structures on V′, W′ in the
  /// same bases.
  MatQ sigma_V, sigma_W, j_V, j_W;
};

GCLinearWitness decompose_gc_linear(const MatQ& t, const GCStructure& lv, const GCStructure& lw);

struct WitnessReplay {
  bool i = false;
  bool ii = false;
  bool iii = false;
  std::vector<std::string> failures;
  bool consistent() const { return i == ii && ii == iii; }
};

WitnessReplay replay_witness(const GCLinearWitness& w, const MatQ& t, const GCStructure& lv, const GCStructure& lw);

/// Real skew B with exp(B)(L1) = L2, if any.
std::optional<MatQ> bfield_equivalent(const GCStructure& l1, const GCStructure& l2);

/// (J_V ⊕ J_W)(S) = S for S = {(X, tᵀη, tX, η)}.
bool graph_invariance_check(const MatQ& t, const GCStructure& lv, const GCStructure& lw);

struct TypeParts {
  MatQ b20_02;
  MatQ b11;
};

TypeParts type_decompose(const MatQ& b, const MatQ& j);

/// Complex-type structure L_J = V^{1,0} ⊕ Ann(V^{1,0}).
GCStructure complex_type(const MatQ& j);
/// Symplectic-type structure L(V^C, iω).
GCStructure symplectic_type(const MatQ& omega);

}  // namespace gencx::gclin
