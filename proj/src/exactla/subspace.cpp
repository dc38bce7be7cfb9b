#include <gencx/exactla/subspace.hpp>

namespace gencx {

SubspaceQ real_points(const SubspaceQi& a) {
  if (conjugate(a) != a) throw PreconditionError("real_points: subspace is not conjugation invariant");
  return SubspaceQ::span(real_part(a.basis()));
}

bool is_positive_definite(const MatQ& s) {
  if (!is_square(s)) throw ShapeError("is_positive_definite: non-square matrix " + shape_of(s));
  if (!is_symmetric(s)) throw PreconditionError("is_positive_definite: matrix is not symmetric");
  for (Index k = 1; k <= s.rows(); ++k)
    if (determinant(MatQ(s.topLeftCorner(k, k))) <= 0) return false;
  return true;
}

}  // namespace gencx
