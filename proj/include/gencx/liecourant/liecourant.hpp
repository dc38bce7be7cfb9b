#pragma once

// Left-invariant Courant calculus on a Lie algebra 𝔤 and the compact-group
// examples on su(2) ⊕ su(2). Invariant sections X + α are constant vectors
// of 𝔤^C ⊕ 𝔤^C*; for them ι_Xβ is constant, so the exact term of the
// Courant bracket drops and dα(Y, Z) = −α([Y, Z]).

#include <gencx/gclin/gclin.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gencx::liecourant {

using dirac::DiracQi;
using gclin::FStructure;
using gclin::GCStructure;

class LieAlgebra {
 public:
  /// c[(i * n + j) * n + k] is the e_k coefficient of [e_i, e_j]. Throws
  /// PreconditionError if antisymmetry or the Jacobi identity fails.
  static LieAlgebra from_structure_constants(Index n, std::vector<Rational> c);

  static LieAlgebra abelian(Index n);
  /// su(2) ⊕ su(2) on (e1, e2, e3, f1, f2, f3), [e1, e2] = e3 cyclically and
  /// likewise for f.
  static LieAlgebra su2_su2();

  Index dim() const { return n_; }
  const Rational& c(Index i, Index j, Index k) const { return c_[static_cast<size_t>((i * n_ + j) * n_ + k)]; }
  const std::vector<Rational>& constants() const { return c_; }

  /// Matrix of ad(e_i).
  const MatQ& ad_basis(Index i) const { return ad_[static_cast<size_t>(i)]; }

  template <class S>
  Mat<S> ad(const Vec<S>& x) const {
    Mat<S> m = Mat<S>::Zero(n_, n_);
    for (Index i = 0; i < n_; ++i)
      if (!is_zero(x(i))) m += x(i) * ad_[static_cast<size_t>(i)].template cast<S>();
    return m;
  }

  template <class S>
  Vec<S> bracket(const Vec<S>& x, const Vec<S>& y) const {
    return ad(x) * y;
  }

 private:
  LieAlgebra() = default;
  Index n_ = 0;
  std::vector<Rational> c_;
  std::vector<MatQ> ad_;
};

struct InvariantSection {
  VecQi X;
  VecQi alpha;

  Index dim() const { return X.size(); }
  VecQi stacked() const;
  static InvariantSection from_stacked(const VecQi& v);
  friend bool operator==(const InvariantSection& a, const InvariantSection& b) {
    return a.X == b.X && a.alpha == b.alpha;
  }
};

/// [X, Y] + ι_X dβ − ι_Y dα, i.e. [X, Y] + (Z ↦ −β([X, Z]) + α([Y, Z])).
InvariantSection courant_bracket(const InvariantSection& s1, const InvariantSection& s2, const LieAlgebra& g);

/// First pair (i, j) of canonical basis sections of L whose bracket leaves L.
std::optional<std::pair<Index, Index>> integrability_failure(const DiracQi& l, const LieAlgebra& g);
bool is_integrable_invariant(const DiracQi& l, const LieAlgebra& g);

/// Gram matrix of dλ, (X, Y) ↦ −λ([X, Y]).
MatQ exterior_derivative(const VecQ& lambda, const LieAlgebra& g);
/// dB(X, Y, Z) = −B([X, Y], Z) − B([Y, Z], X) − B([Z, X], Y) = 0.
bool is_closed(const MatQ& b, const LieAlgebra& g);

struct BorelData {
  SubspaceQ k;
  std::vector<SubspaceQi> positive_root_spaces;
  SubspaceQi c_borel;
  MatQ omega;
};

struct Example {
  LieAlgebra g;
  BorelData borel;
  GCStructure L;
  FStructure F;
};

/// L(𝔠, iω) on su(2) ⊕ su(2) with 𝔨 = span{e3, f3}, root spaces spanned
/// by e1 − ie2 and f1 − if2, and ω = e3*∧f3*.
Example so4_borel_example();

struct MultiplicationCheck {
  /// (X, Y) ↦ X − Y into L(𝔠, ½iω).
  bool half_omega = false;
  /// Same map into L(𝔠, iω).
  bool full_omega = false;
  /// X ↦ (X, X) maps 𝔠 into 𝔠 × 𝔠.
  bool diagonal_cocr = false;
  bool pass() const { return half_omega && !full_omega && diagonal_cocr; }
};

MultiplicationCheck multiplication_map_check(const Example& ex);
inline MultiplicationCheck multiplication_map_check() { return multiplication_map_check(so4_borel_example()); }

struct ProjectionCheck {
  MatQ q;
  SubspaceQi image;
  bool complex_structure = false;
  bool cocr_linear = false;
  bool gc_linear = false;
  bool pass() const { return complex_structure && cocr_linear && gc_linear; }
};

/// q: 𝔤 → 𝔤/𝔨 by the pivot-complement rule.
ProjectionCheck projection_cocr_check(const Example& ex);
inline ProjectionCheck projection_cocr_check() { return projection_cocr_check(so4_borel_example()); }

struct NormalFormCriteria {
  bool cr_integrable = false;
  bool cocr_integrable = false;
  bool poisson = false;
  bool invariance = false;
  /// Integrability of L(V⁰ ⊕ V^{1,0}, iω).
  bool integrable = false;

  bool criteria() const { return cr_integrable && cocr_integrable && poisson && invariance; }
  bool agree() const { return criteria() == integrable; }
};

NormalFormCriteria invariant_normal_form_criteria(const FStructure& f, const MatQ& omega, const LieAlgebra& g);

/// (F, ω) on su(2) ⊕ su(2) with V^{1,0} ⊕ V^{0,1} = span{e1 + s e3, e2, f1, f2}
/// and V⁰ = 𝔨, ω(e3, f3) = 1; s = 0 is the Borel instance.
std::pair<FStructure, MatQ> perturbed_instance(const Rational& s);

}  // namespace gencx::liecourant
