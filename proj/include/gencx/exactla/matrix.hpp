#pragma once

// Dense exact matrices over Q and Q(i) plus the handful of exact
// algorithms (row reduction, kernels, solving, minors) the rest of the
// library is written against.

#include <gencx/exactla/errors.hpp>
#include <gencx/exactla/scalar.hpp>

#include <Eigen/Core>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gencx {

using Index = Eigen::Index;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using MatQ = Mat<Rational>;
using MatQi = Mat<GaussRational>;
using VecQ = Vec<Rational>;
using VecQi = Vec<GaussRational>;

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const GaussRational& x) { return x.re().is_zero() && x.im().is_zero(); }

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class S>
Mat<S> zeros(Index rows, Index cols) {
  return Mat<S>::Zero(rows, cols);
}

template <class S>
Mat<S> identity(Index n) {
  return Mat<S>::Identity(n, n);
}

template <class S>
Vec<S> unit_vector(Index n, Index k) {
  Vec<S> v = Vec<S>::Zero(n);
  v(k) = S(1);
  return v;
}

inline std::string shape_string(Index rows, Index cols) {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

template <class Derived>
std::string shape_of(const Eigen::MatrixBase<Derived>& m) {
  return shape_string(m.rows(), m.cols());
}

template <class S>
bool is_square(const Mat<S>& m) {
  return m.rows() == m.cols();
}

template <class S>
bool is_skew(const Mat<S>& m) {
  return is_square(m) && m == -m.transpose();
}

template <class S>
bool is_symmetric(const Mat<S>& m) {
  return is_square(m) && m == m.transpose();
}

template <class S>
void require_skew(const Mat<S>& m, const char* what) {
  if (!is_square(m))
    throw ShapeError(std::string(what) + ": expected a square matrix, got " + shape_of(m));
  if (!is_skew(m)) throw PreconditionError(std::string(what) + " is not skew-symmetric");
}

template <class S>
Mat<S> skew_part(const Mat<S>& m) {
  return (m - m.transpose()) / S(2);
}

template <class S>
Mat<S> symmetric_part(const Mat<S>& m) {
  return (m + m.transpose()) / S(2);
}

template <class S>
Mat<S> commutator(const Mat<S>& a, const Mat<S>& b) {
  return a * b - b * a;
}

template <class S>
Mat<S> block_diag(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> m = Mat<S>::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

template <class S>
Mat<S> hstack(const Mat<S>& a, const Mat<S>& b) {
  if (a.rows() != b.rows())
    throw ShapeError("hstack: row counts differ (" + shape_of(a) + " vs " + shape_of(b) + ")");
  Mat<S> m(a.rows(), a.cols() + b.cols());
  m << a, b;
  return m;
}

template <class S>
Mat<S> vstack(const Mat<S>& a, const Mat<S>& b) {
  if (a.cols() != b.cols())
    throw ShapeError("vstack: column counts differ (" + shape_of(a) + " vs " + shape_of(b) + ")");
  Mat<S> m(a.rows() + b.rows(), a.cols());
  m << a, b;
  return m;
}

inline MatQi complexify(const MatQ& m) { return m.cast<GaussRational>(); }

inline MatQ real_part(const MatQi& m) {
  MatQ r(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) r(i, j) = m(i, j).re();
  return r;
}

inline MatQ imag_part(const MatQi& m) {
  MatQ r(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) r(i, j) = m(i, j).im();
  return r;
}

inline bool is_real(const MatQi& m) { return is_zero_matrix(imag_part(m)); }

inline MatQi make_complex(const MatQ& re, const MatQ& im) {
  MatQi m(re.rows(), re.cols());
  for (Index j = 0; j < re.cols(); ++j)
    for (Index i = 0; i < re.rows(); ++i) m(i, j) = GaussRational(re(i, j), im(i, j));
  return m;
}

template <class S>
Mat<S> conjugate(const Mat<S>& m) {
  if constexpr (is_complex_field_v<S>) {
    Mat<S> r(m.rows(), m.cols());
    for (Index j = 0; j < m.cols(); ++j)
      for (Index i = 0; i < m.rows(); ++i) r(i, j) = m(i, j).conj();
    return r;
  } else {
    return m;
  }
}

/// Reduced row echelon form together with its pivot columns.
template <class S>
struct RowEchelon {
  Mat<S> reduced;
  std::vector<Index> pivot_cols;
  Index rank() const { return static_cast<Index>(pivot_cols.size()); }
};

/// Gauss-Jordan elimination; columns are scanned left to right and the
/// first nonzero entry at or below the current row becomes the pivot.
template <class S>
RowEchelon<S> rref(Mat<S> m) {
  RowEchelon<S> out;
  Index r = 0;
  const Index rows = m.rows();
  const Index cols = m.cols();
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const S inv = S(1) / m(r, c);
    for (Index j = c; j < cols; ++j)
      if (!is_zero(m(r, j))) m(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const S f = m(i, c);
      for (Index j = c; j < cols; ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <class S>
Index rank(const Mat<S>& m) {
  return rref(m).rank();
}

/// Columns spanning ker(m), one per free variable of the row echelon form.
template <class S>
Mat<S> null_space(const Mat<S>& m) {
  const auto e = rref(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (Index c : e.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
  Mat<S> basis = Mat<S>::Zero(n, n - e.rank());
  Index k = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    basis(free, k) = S(1);
    for (Index r = 0; r < e.rank(); ++r) basis(e.pivot_cols[static_cast<size_t>(r)], k) = -e.reduced(r, free);
    ++k;
  }
  return basis;
}

/// Some X with a*X = b, or nullopt when the system is inconsistent.
template <class S>
std::optional<Mat<S>> solve(const Mat<S>& a, const Mat<S>& b) {
  if (a.rows() != b.rows())
    throw ShapeError("solve: " + shape_of(a) + " system with " + shape_of(b) + " right-hand side");
  const auto e = rref(hstack(a, b));
  const Index n = a.cols();
  for (Index c : e.pivot_cols)
    if (c >= n) return std::nullopt;
  Mat<S> x = Mat<S>::Zero(n, b.cols());
  for (Index r = 0; r < e.rank(); ++r) {
    const Index c = e.pivot_cols[static_cast<size_t>(r)];
    x.row(c) = e.reduced.row(r).tail(b.cols());
  }
  return x;
}

template <class S>
std::optional<Vec<S>> solve(const Mat<S>& a, const Vec<S>& b) {
  auto x = solve(a, Mat<S>(b));
  if (!x) return std::nullopt;
  return Vec<S>(x->col(0));
}

template <class S>
std::optional<Mat<S>> inverse(const Mat<S>& m) {
  if (!is_square(m)) throw ShapeError("inverse: non-square matrix " + shape_of(m));
  const Index n = m.rows();
  if (rank(m) != n) return std::nullopt;
  return solve(m, identity<S>(n));
}

template <class S>
Mat<S> inverse_or_throw(const Mat<S>& m, const char* what) {
  auto inv = inverse(m);
  if (!inv) throw PreconditionError(std::string(what) + " is singular");
  return *inv;
}

template <class S>
bool is_invertible(const Mat<S>& m) {
  return is_square(m) && rank(m) == m.rows();
}

/// Exact determinant by fraction-based elimination.
template <class S>
S determinant(Mat<S> m) {
  if (!is_square(m)) throw ShapeError("determinant: non-square matrix " + shape_of(m));
  const Index n = m.rows();
  S det(1);
  for (Index c = 0; c < n; ++c) {
    Index p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return S(0);
    if (p != c) {
      m.row(p).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    const S inv = S(1) / m(c, c);
    for (Index i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      const S f = m(i, c) * inv;
      for (Index j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Exact Sylvester test: every leading principal minor is positive.
/// Rejects non-symmetric input.
bool is_positive_definite(const MatQ& s);

/// The n(n-1)/2 entries strictly above the diagonal, row by row.
template <class S>
Vec<S> upper_entries(const Mat<S>& skew) {
  const Index n = skew.rows();
  Vec<S> v(n * (n - 1) / 2);
  Index k = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) v(k++) = skew(i, j);
  return v;
}

/// Inverse of upper_entries: the unique skew matrix with those entries.
template <class S>
Mat<S> skew_from_upper(Index n, const Vec<S>& v) {
  if (v.size() != n * (n - 1) / 2)
    throw ShapeError("skew_from_upper: " + std::to_string(v.size()) + " entries for size " + std::to_string(n));
  Mat<S> m = Mat<S>::Zero(n, n);
  Index k = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      m(i, j) = v(k);
      m(j, i) = -v(k);
      ++k;
    }
  return m;
}

}  // namespace gencx
