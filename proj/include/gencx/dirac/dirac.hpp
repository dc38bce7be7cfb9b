#pragma once

// Linear Dirac structures on V ⊕ V*. Coordinates on K^{2n}: the first n
// entries are the vector part, the last n the covector part, paired by
// the standard dual pairing.
//
// Bilinear forms are stored as Gram matrices, b(u, v) = uᵀ b v, and act as
// maps V → V* by u ↦ b(u, ·), i.e. by the matrix bᵀ. A bivector η has Gram
// matrix eta(i, j) = η(e_i*, e_j*) and acts V* → V by etaᵀ.

#include <gencx/config.hpp>
#include <gencx/exactla/subspace.hpp>

#include <optional>
#include <string>

namespace gencx::dirac {

template <class S>
class DiracStructure {
 public:
  DiracStructure() : n_(0), l_(Subspace<S>::zero(0)) {}

  /// Validates that `l` is maximal isotropic in K^n ⊕ K^n*.
  static DiracStructure from_subspace(Index v_dim, Subspace<S> l);

  /// Skips validation; for results of constructions that guarantee it.
  static DiracStructure trusted(Index v_dim, Subspace<S> l) { return DiracStructure(v_dim, std::move(l)); }

  Index v_dim() const { return n_; }
  const Subspace<S>& subspace() const { return l_; }
  const Mat<S>& basis() const { return l_.basis(); }
  Mat<S> vector_part() const { return l_.basis().topRows(n_); }
  Mat<S> covector_part() const { return l_.basis().bottomRows(n_); }

  friend bool operator==(const DiracStructure& a, const DiracStructure& b) {
    return a.n_ == b.n_ && a.l_ == b.l_;
  }
  friend bool operator!=(const DiracStructure& a, const DiracStructure& b) { return !(a == b); }

 private:
  DiracStructure(Index n, Subspace<S> l) : n_(n), l_(std::move(l)) {}

  Index n_;
  Subspace<S> l_;
};

using DiracQ = DiracStructure<Rational>;
using DiracQi = DiracStructure<GaussRational>;

/// (E, ε) with ε given in E's canonical basis.
template <class S>
struct EEpsilonForm {
  Subspace<S> E;
  Mat<S> eps;

  friend bool operator==(const EEpsilonForm& a, const EEpsilonForm& b) { return a.E == b.E && a.eps == b.eps; }
};

template <class S>
struct PoissonBivector {
  Mat<S> eta;

  Mat<S> as_map() const { return eta.transpose(); }
  friend bool operator==(const PoissonBivector& a, const PoissonBivector& b) { return a.eta == b.eta; }
};

/// Gram matrix ½[[0, I], [I, 0]] of the pairing on K^n ⊕ K^n*.
template <class S>
Mat<S> pairing_gram(Index n) {
  Mat<S> p = Mat<S>::Zero(2 * n, 2 * n);
  const S half = S(1) / S(2);
  for (Index i = 0; i < n; ++i) {
    p(i, n + i) = half;
    p(n + i, i) = half;
  }
  return p;
}

/// ½(ξ(y) + η(x)) for z = (x, ξ), w = (y, η).
template <class S>
S pairing(const Vec<S>& z, const Vec<S>& w) {
  if (z.size() != w.size() || z.size() % 2 != 0)
    throw ShapeError("pairing: vectors of length " + std::to_string(z.size()) + " and " + std::to_string(w.size()));
  const Index n = z.size() / 2;
  S acc(0);
  for (Index i = 0; i < n; ++i) acc += z(n + i) * w(i) + w(n + i) * z(i);
  return acc / S(2);
}

template <class S>
bool is_isotropic(const Subspace<S>& l) {
  if (l.ambient_dim() % 2 != 0) return false;
  const Mat<S>& b = l.basis();
  return is_zero_matrix(Mat<S>(b.transpose() * pairing_gram<S>(l.ambient_dim() / 2) * b));
}

template <class S>
bool is_maximal_isotropic(const Subspace<S>& l) {
  return l.ambient_dim() % 2 == 0 && l.dim() == l.ambient_dim() / 2 && is_isotropic(l);
}

template <class S>
DiracStructure<S> DiracStructure<S>::from_subspace(Index v_dim, Subspace<S> l) {
  if (l.ambient_dim() != 2 * v_dim)
    throw ShapeError("Dirac structure on a " + std::to_string(v_dim) + "-dimensional space needs ambient " +
                     std::to_string(2 * v_dim) + ", got " + std::to_string(l.ambient_dim()));
  if (l.dim() != v_dim)
    throw PreconditionError("subspace of dimension " + std::to_string(l.dim()) + " cannot be maximal isotropic in " +
                            std::to_string(v_dim) + " + " + std::to_string(v_dim));
  if (!is_isotropic(l)) throw PreconditionError("subspace is not isotropic for the pairing");
  return DiracStructure(v_dim, std::move(l));
}

/// ε|_E in E's canonical basis: Ebᵀ ω Eb.
template <class S>
Mat<S> restrict_form(const Mat<S>& omega, const Subspace<S>& e) {
  if (omega.rows() != e.ambient_dim() || omega.cols() != e.ambient_dim())
    throw ShapeError("restrict_form: form " + shape_of(omega) + " on ambient " + std::to_string(e.ambient_dim()));
  return e.basis().transpose() * omega * e.basis();
}

/// L(E, ε) = {u + α : u ∈ E, α|_E = ε(u)}.
template <class S>
DiracStructure<S> build(const Subspace<S>& e, const Mat<S>& eps) {
  const Index k = e.dim();
  if (eps.rows() != k || eps.cols() != k)
    throw ShapeError("build: form " + shape_of(eps) + " on a " + std::to_string(k) + "-dimensional E");
  require_skew(eps, "build: eps");
  const Index n = e.ambient_dim();
  const Subspace<S> ann = annihilator(e);
  Mat<S> cols = Mat<S>::Zero(2 * n, n);
  // Extension of ε(e_j) that is supported on the pivot coordinates of E.
  for (Index j = 0; j < k; ++j) {
    cols.col(j).head(n) = e.basis().col(j);
    for (Index i = 0; i < k; ++i) cols(n + e.pivot_rows()[static_cast<size_t>(i)], j) = eps(j, i);
  }
  cols.bottomRightCorner(n, n - k) = ann.basis();
  return DiracStructure<S>::trusted(n, Subspace<S>::span(cols));
}

/// build(E, ε|_E) for a form given on all of V.
template <class S>
DiracStructure<S> build_from_form(const Subspace<S>& e, const Mat<S>& omega) {
  require_skew(omega, "build_from_form: omega");
  return build(e, restrict_form(omega, e));
}

/// V ∩ L, as a subspace of V.
template <class S>
Subspace<S> vector_intersection(const DiracStructure<S>& l) {
  return image(Mat<S>(l.vector_part() * null_space(l.covector_part())));
}

/// π(L) ⊆ V.
template <class S>
Subspace<S> vector_projection(const DiracStructure<S>& l) {
  return image(l.vector_part());
}

/// *π(L) ⊆ V*.
template <class S>
Subspace<S> covector_projection(const DiracStructure<S>& l) {
  return image(l.covector_part());
}

/// The unique (E, ε) with L = L(E, ε). Under cross-checking also verifies
/// V∩L = ker ε and *π(L) = Ann(V∩L).
template <class S>
EEpsilonForm<S> decompose(const DiracStructure<S>& l) {
  const Mat<S> top = l.vector_part();
  const Mat<S> bottom = l.covector_part();
  EEpsilonForm<S> out{image(top), {}};
  const Mat<S>& eb = out.E.basis();
  auto c = solve(top, eb);
  if (!c) throw InvariantError("decompose: E basis outside the vector projection");
  const Mat<S> alpha = bottom * *c;
  out.eps = alpha.transpose() * eb;
  if (!is_skew(out.eps)) throw PreconditionError("decompose: input is not isotropic");
  if (cross_checks_enabled()) {
    const Subspace<S> meet = vector_intersection(l);
    const Subspace<S> ker_eps = image(Mat<S>(eb * null_space(out.eps)));
    if (meet != ker_eps) throw InvariantError("decompose: V∩L differs from ker ε");
    if (covector_projection(l) != annihilator(meet)) throw InvariantError("decompose: *π(L) differs from Ann(V∩L)");
  }
  return out;
}

/// f_*(L) from the definition {f(X) + η | X + fᵀη ∈ L}.
template <class S>
DiracStructure<S> pushforward_def(const Mat<S>& f, const DiracStructure<S>& l) {
  const Index n = l.v_dim();
  if (f.cols() != n)
    throw ShapeError("pushforward: map " + shape_of(f) + " on a " + std::to_string(n) + "-dimensional source");
  const Index m = f.rows();
  // (X, η) ∈ V ⊕ W*  ↦  (X, fᵀη) ∈ V ⊕ V*.
  Mat<S> lift = Mat<S>::Zero(2 * n, n + m);
  lift.topLeftCorner(n, n) = identity<S>(n);
  lift.bottomRightCorner(n, m) = f.transpose();
  const Subspace<S> s = preimage(lift, l.subspace());
  // (X, η) ↦ (fX, η) ∈ W ⊕ W*.
  Mat<S> push = Mat<S>::Zero(2 * m, n + m);
  push.topLeftCorner(m, n) = f;
  push.bottomRightCorner(m, m) = identity<S>(m);
  return DiracStructure<S>::trusted(m, apply(push, s));
}

/// f_*(L(E, ε)) = L(f(P), ε̌) with P = (E ∩ ker f)^{⊥ε} and f*ε̌ = ε on P.
template <class S>
DiracStructure<S> pushforward_formula(const Mat<S>& f, const DiracStructure<S>& l) {
  if (f.cols() != l.v_dim())
    throw ShapeError("pushforward: map " + shape_of(f) + " on a " + std::to_string(l.v_dim()) +
                     "-dimensional source");
  const auto [e, eps] = decompose(l);
  const Mat<S>& eb = e.basis();
  const Mat<S> kc = null_space(Mat<S>(f * eb));
  const Mat<S> pc = null_space(Mat<S>(kc.transpose() * eps.transpose()));
  const Mat<S> fp = f * eb * pc;
  const Subspace<S> target = image(fp);
  auto d = solve(fp, target.basis());
  if (!d) throw InvariantError("pushforward_formula: f(P) basis has no preimage");
  const Mat<S> x = pc * *d;
  return build(target, Mat<S>(x.transpose() * eps * x));
}

template <class S>
DiracStructure<S> pushforward(const Mat<S>& f, const DiracStructure<S>& l) {
  DiracStructure<S> r = pushforward_formula(f, l);
  if (cross_checks_enabled() && r != pushforward_def(f, l))
    throw InvariantError("pushforward: closed formula disagrees with the definition");
  return r;
}

/// f^*(L_W) from the definition {X + fᵀη | fX + η ∈ L_W}.
template <class S>
DiracStructure<S> pullback_def(const Mat<S>& f, const DiracStructure<S>& lw) {
  const Index m = lw.v_dim();
  if (f.rows() != m)
    throw ShapeError("pullback: map " + shape_of(f) + " into a " + std::to_string(m) + "-dimensional target");
  const Index n = f.cols();
  Mat<S> push = Mat<S>::Zero(2 * m, n + m);
  push.topLeftCorner(m, n) = f;
  push.bottomRightCorner(m, m) = identity<S>(m);
  const Subspace<S> s = preimage(push, lw.subspace());
  Mat<S> lift = Mat<S>::Zero(2 * n, n + m);
  lift.topLeftCorner(n, n) = identity<S>(n);
  lift.bottomRightCorner(n, m) = f.transpose();
  return DiracStructure<S>::trusted(n, apply(lift, s));
}

/// f^*(L(F, η)) = L(f⁻¹(F), f*η).
template <class S>
DiracStructure<S> pullback_formula(const Mat<S>& f, const DiracStructure<S>& lw) {
  if (f.rows() != lw.v_dim())
    throw ShapeError("pullback: map " + shape_of(f) + " into a " + std::to_string(lw.v_dim()) +
                     "-dimensional target");
  const auto [fe, eta] = decompose(lw);
  const Subspace<S> g = preimage(f, fe);
  const Mat<S> d = fe.coordinates_of(Mat<S>(f * g.basis()));
  return build(g, Mat<S>(d.transpose() * eta * d));
}

template <class S>
DiracStructure<S> pullback(const Mat<S>& f, const DiracStructure<S>& lw) {
  DiracStructure<S> r = pullback_formula(f, lw);
  if (cross_checks_enabled() && r != pullback_def(f, lw))
    throw InvariantError("pullback: closed formula disagrees with the definition");
  return r;
}

/// exp(B)(L): X + α ↦ X + α + B(X) on a basis, cross-checked against
/// L(E, ε + B|_E).
template <class S>
DiracStructure<S> bfield(const Mat<S>& b, const DiracStructure<S>& l) {
  const Index n = l.v_dim();
  if (b.rows() != n || b.cols() != n)
    throw ShapeError("bfield: form " + shape_of(b) + " on a " + std::to_string(n) + "-dimensional space");
  require_skew(b, "bfield: B");
  Mat<S> cols = l.basis();
  cols.bottomRows(n) += b.transpose() * l.vector_part();
  auto r = DiracStructure<S>::trusted(n, Subspace<S>::span(cols));
  if (cross_checks_enabled()) {
    const auto [e, eps] = decompose(l);
    if (r != build(e, Mat<S>(eps + restrict_form(b, e))))
      throw InvariantError("bfield: elementwise image disagrees with L(E, ε + B|_E)");
  }
  return r;
}

/// L(V*, η): the graph {η(α) + α}.
template <class S>
DiracStructure<S> from_bivector(const Mat<S>& eta) {
  require_skew(eta, "from_bivector: eta");
  const Index n = eta.rows();
  return DiracStructure<S>::trusted(n, Subspace<S>::span(vstack(Mat<S>(eta.transpose()), identity<S>(n))));
}

/// η with L = L(V*, η) when *π(L) = V*.
template <class S>
std::optional<PoissonBivector<S>> is_poisson(const DiracStructure<S>& l) {
  const Index n = l.v_dim();
  auto c = solve(l.covector_part(), identity<S>(n));
  if (!c) return std::nullopt;
  const Mat<S> u = l.vector_part() * *c;
  return PoissonBivector<S>{Mat<S>(u.transpose())};
}

/// ε in the standard basis of V when π(L) = V.
template <class S>
std::optional<Mat<S>> is_presymplectic(const DiracStructure<S>& l) {
  if (!vector_projection(l).is_full()) return std::nullopt;
  return decompose(l).eps;
}

/// Linear Poisson morphism test, once through bivectors and once through
/// the definitional pushforward.
template <class S>
bool is_poisson_morphism(const Mat<S>& f, const DiracStructure<S>& lv, const DiracStructure<S>& lw) {
  const auto ev = is_poisson(lv);
  if (!ev) throw PreconditionError("is_poisson_morphism: source structure is not Poisson");
  const auto ew = is_poisson(lw);
  if (!ew) throw PreconditionError("is_poisson_morphism: target structure is not Poisson");
  if (f.rows() != lw.v_dim() || f.cols() != lv.v_dim())
    throw ShapeError("is_poisson_morphism: map " + shape_of(f) + " between dimensions " +
                     std::to_string(lv.v_dim()) + " and " + std::to_string(lw.v_dim()));
  const bool by_bivector = Mat<S>(f * ev->eta * f.transpose()) == ew->eta;
  const bool by_pushforward = pushforward_def(f, lv) == lw;
  if (by_bivector != by_pushforward)
    throw InvariantError("is_poisson_morphism: bivector and pushforward tests disagree");
  return by_bivector;
}

/// L_a × L_b on (V_a ⊕ V_b) ⊕ (V_a ⊕ V_b)*.
template <class S>
DiracStructure<S> product(const DiracStructure<S>& la, const DiracStructure<S>& lb) {
  const Index na = la.v_dim();
  const Index nb = lb.v_dim();
  const Index n = na + nb;
  Mat<S> cols = Mat<S>::Zero(2 * n, n);
  cols.block(0, 0, na, na) = la.vector_part();
  cols.block(n, 0, na, na) = la.covector_part();
  cols.block(na, na, nb, nb) = lb.vector_part();
  cols.block(n + na, na, nb, nb) = lb.covector_part();
  return DiracStructure<S>::trusted(n, Subspace<S>::span(cols));
}

/// Entrywise conjugate of a complex structure.
inline DiracQi conjugate(const DiracQi& l) { return DiracQi::trusted(l.v_dim(), conjugate(l.subspace())); }

inline DiracQi complexify(const DiracQ& l) { return DiracQi::trusted(l.v_dim(), complexify(l.subspace())); }

/// The canonical quotient φ: V → V/W, W = ker ε, with L_P = φ_*(L) Poisson.
template <class S>
struct PoissonQuotient {
  Mat<S> phi;
  DiracStructure<S> lp;
  PoissonBivector<S> eta;
};

/// φ keeps the coordinates outside W's pivots: with w_j the canonical basis
/// of W and p_j its pivots, φ(x)_r = x_r − Σ_j x_{p_j} w_j[r].
template <class S>
PoissonQuotient<S> poisson_quotient(const DiracStructure<S>& l) {
  const Index n = l.v_dim();
  const Subspace<S> w = vector_intersection(l);
  const Subspace<S> kept = pivot_complement(w);
  Mat<S> select = Mat<S>::Zero(w.dim(), n);
  for (Index j = 0; j < w.dim(); ++j) select(j, w.pivot_rows()[static_cast<size_t>(j)]) = S(1);
  const Mat<S> reduce = identity<S>(n) - w.basis() * select;
  Mat<S> phi = kept.basis().transpose() * reduce;
  DiracStructure<S> lp = pushforward(phi, l);
  auto eta = is_poisson(lp);
  if (!eta) throw InvariantError("poisson_quotient: quotient structure is not Poisson");
  if (cross_checks_enabled() && pullback(phi, lp) != l)
    throw InvariantError("poisson_quotient: pullback of the quotient differs from L");
  return {std::move(phi), std::move(lp), std::move(*eta)};
}

}  // namespace gencx::dirac
