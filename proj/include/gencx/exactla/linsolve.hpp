#pragma once

#include <gencx/exactla/matrix.hpp>

#include <optional>

namespace gencx {

/// Solution set of a real affine system: particular + span(null_basis).
struct AffineSolution {
  std::optional<VecQ> particular;
  MatQ null_basis;

  bool consistent() const { return particular.has_value(); }
  Index nullity() const { return null_basis.cols(); }
};

/// Solves residual(u) = 0 for u ∈ Q^unknowns, where `residual` is affine
/// in u and returns a vector over Q or Q(i). Complex residuals are split
/// into real and imaginary equations. The coefficient matrix is recovered
/// by evaluating the residual at 0 and at each unit vector.
template <class Residual>
AffineSolution solve_affine(Index unknowns, Residual&& residual) {
  const VecQ zero = VecQ::Zero(unknowns);
  const auto r0 = residual(zero);
  using S = typename std::decay_t<decltype(r0)>::Scalar;
  const Index m = r0.size();
  const Index rows = is_complex_field_v<S> ? 2 * m : m;

  MatQ a(rows, unknowns);
  VecQ rhs(rows);
  auto put = [&](auto& target_col, const auto& v) {
    for (Index i = 0; i < m; ++i) {
      target_col(i) = FieldTraits<S>::re(v(i));
      if constexpr (is_complex_field_v<S>) target_col(m + i) = FieldTraits<S>::im(v(i));
    }
  };
  {
    VecQ col(rows);
    put(col, r0);
    rhs = -col;
  }
  for (Index k = 0; k < unknowns; ++k) {
    const auto rk = residual(unit_vector<Rational>(unknowns, k));
    if (rk.size() != m) throw ShapeError("solve_affine: residual length changed between evaluations");
    VecQ col(rows);
    put(col, rk);
    a.col(k) = col + rhs;
  }

  AffineSolution out;
  out.null_basis = null_space(a);
  out.particular = solve(a, rhs);
  return out;
}

}  // namespace gencx
