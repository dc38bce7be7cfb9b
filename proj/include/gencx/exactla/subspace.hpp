#pragma once

// Subspaces of K^m (K = Q or Q(i)) held in canonical reduced
// column-echelon form, so that equality of subspaces is equality of
// basis matrices.

#include <gencx/exactla/matrix.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gencx {

template <class S>
class Subspace {
 public:
  Subspace() = default;

  /// Canonical representative of the column span of `columns`. The
  /// basis is the transpose of the reduced row echelon form of
  /// columnsᵀ: rows are scanned top to bottom, the first nonzero entry
  /// becomes a pivot normalized to 1 and is eliminated across.
  static Subspace span(const Mat<S>& columns) {
    const auto e = rref(Mat<S>(columns.transpose()));
    Mat<S> basis = e.reduced.topRows(e.rank()).transpose();
    return Subspace(columns.rows(), std::move(basis), e.pivot_cols);
  }

  static Subspace zero(Index ambient) { return Subspace(ambient, Mat<S>(ambient, 0), {}); }
  static Subspace full(Index ambient) { return span(identity<S>(ambient)); }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.cols(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  /// Canonical basis, one column per basis vector.
  const Mat<S>& basis() const { return basis_; }
  /// pivot_rows()[k] is the coordinate where basis column k has its
  /// leading 1; every other basis column vanishes there.
  const std::vector<Index>& pivot_rows() const { return pivots_; }

  /// Coefficients of v in the canonical basis, or nullopt when v ∉ this.
  std::optional<Vec<S>> coordinates(const Vec<S>& v) const {
    check_vector(v, "coordinates");
    Vec<S> c(dim());
    for (Index k = 0; k < dim(); ++k) c(k) = v(pivots_[static_cast<size_t>(k)]);
    if (basis_ * c != v) return std::nullopt;
    return c;
  }

  /// Coefficient matrix of the columns of `vs`; throws if any is outside.
  Mat<S> coordinates_of(const Mat<S>& vs) const {
    Mat<S> out(dim(), vs.cols());
    for (Index j = 0; j < vs.cols(); ++j) {
      auto c = coordinates(Vec<S>(vs.col(j)));
      if (!c) throw PreconditionError("coordinates_of: vector outside subspace");
      out.col(j) = *c;
    }
    return out;
  }

  bool contains(const Vec<S>& v) const { return coordinates(v).has_value(); }

  /// True iff `other` ⊆ this.
  bool contains(const Subspace& other) const {
    check_same_ambient(other, "contains");
    for (Index j = 0; j < other.dim(); ++j)
      if (!contains(Vec<S>(other.basis_.col(j)))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_.cols() == b.basis_.cols() && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  void check_same_ambient(const Subspace& other, const char* op) const {
    if (ambient_ != other.ambient_)
      throw ShapeError(std::string(op) + ": ambient dimensions " + std::to_string(ambient_) + " and " +
                       std::to_string(other.ambient_) + " differ");
  }

 private:
  Subspace(Index ambient, Mat<S> basis, std::vector<Index> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  void check_vector(const Vec<S>& v, const char* op) const {
    if (v.size() != ambient_)
      throw ShapeError(std::string(op) + ": vector of length " + std::to_string(v.size()) +
                       " in ambient dimension " + std::to_string(ambient_));
  }

  Index ambient_ = 0;
  Mat<S> basis_;
  std::vector<Index> pivots_;
};

using SubspaceQ = Subspace<Rational>;
using SubspaceQi = Subspace<GaussRational>;

template <class S>
Subspace<S> canonicalize(const Mat<S>& raw_basis) {
  return Subspace<S>::span(raw_basis);
}

template <class S>
Subspace<S> image(const Mat<S>& m) {
  return Subspace<S>::span(m);
}

template <class S>
Subspace<S> kernel(const Mat<S>& m) {
  return Subspace<S>::span(null_space(m));
}

template <class S>
Subspace<S> sum(const Subspace<S>& a, const Subspace<S>& b) {
  a.check_same_ambient(b, "sum");
  return Subspace<S>::span(hstack(a.basis(), b.basis()));
}

template <class S>
Subspace<S> intersect(const Subspace<S>& a, const Subspace<S>& b) {
  a.check_same_ambient(b, "intersect");
  if (a.is_zero() || b.is_zero()) return Subspace<S>::zero(a.ambient_dim());
  const Mat<S> coeffs = null_space(hstack(a.basis(), Mat<S>(-b.basis())));
  return Subspace<S>::span(a.basis() * coeffs.topRows(a.dim()));
}

/// {x : m x ∈ a}.
template <class S>
Subspace<S> preimage(const Mat<S>& m, const Subspace<S>& a) {
  if (m.rows() != a.ambient_dim())
    throw ShapeError("preimage: map " + shape_of(m) + " into ambient dimension " + std::to_string(a.ambient_dim()));
  const Mat<S> ann = null_space(Mat<S>(a.basis().transpose())).transpose();
  return kernel(Mat<S>(ann * m));
}

/// m(a).
template <class S>
Subspace<S> apply(const Mat<S>& m, const Subspace<S>& a) {
  if (m.cols() != a.ambient_dim())
    throw ShapeError("apply: map " + shape_of(m) + " on ambient dimension " + std::to_string(a.ambient_dim()));
  return image(Mat<S>(m * a.basis()));
}

/// Ann(a) ⊆ K^m*, in dual coordinates (bilinear, no conjugation).
template <class S>
Subspace<S> annihilator(const Subspace<S>& a) {
  return kernel(Mat<S>(a.basis().transpose()));
}

/// {x : g(c, x) = 0 for all c ∈ a}, for a bilinear form with Gram matrix g.
template <class S>
Subspace<S> orthogonal_complement(const Subspace<S>& a, const Mat<S>& gram) {
  return kernel(Mat<S>(a.basis().transpose() * gram));
}

/// Span of the standard basis vectors at the non-pivot coordinates: the
/// deterministic complement used wherever a complement must be chosen.
template <class S>
Subspace<S> pivot_complement(const Subspace<S>& a) {
  const Index n = a.ambient_dim();
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (Index p : a.pivot_rows()) is_pivot[static_cast<size_t>(p)] = true;
  Mat<S> cols = Mat<S>::Zero(n, n - a.dim());
  Index k = 0;
  for (Index r = 0; r < n; ++r)
    if (!is_pivot[static_cast<size_t>(r)]) cols(r, k++) = S(1);
  return Subspace<S>::span(cols);
}

/// Entrywise conjugate, re-canonicalized.
inline SubspaceQi conjugate(const SubspaceQi& a) { return SubspaceQi::span(conjugate(a.basis())); }

/// The real subspace R with R^C = a. Rejects input that is not
/// conjugation invariant. The canonical basis of an invariant subspace is
/// real, because conjugation commutes with canonicalization.
SubspaceQ real_points(const SubspaceQi& a);

/// R ↦ R^C.
inline SubspaceQi complexify(const SubspaceQ& r) { return SubspaceQi::span(complexify(r.basis())); }

/// dim a + dim b = dim(a+b) and a, b share the ambient space.
template <class S>
bool is_direct_sum(const Subspace<S>& a, const Subspace<S>& b) {
  return sum(a, b).dim() == a.dim() + b.dim();
}

}  // namespace gencx
