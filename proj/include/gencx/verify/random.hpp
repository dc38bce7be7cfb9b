#pragma once

// Seeded generators for the randomized property suites. Values are mapped
// from the raw 64-bit stream by hand so a seed yields the same instances
// on every standard library.

#include <gencx/exactla/matrix.hpp>

#include <cstdint>
#include <random>

namespace gencx::verify {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  bool coin() { return (engine_() & 1U) != 0; }

  /// Integer-valued rational in [-bound, bound].
  Rational small(std::int64_t bound) { return Rational(static_cast<long>(uniform(-bound, bound))); }

  /// p/q with |p| <= bound, 1 <= q <= bound.
  Rational fraction(std::int64_t bound) {
    const long p = static_cast<long>(uniform(-bound, bound));
    const long d = static_cast<long>(uniform(1, bound));
    return Rational(p) / Rational(d);
  }

  MatQ matrix(Index rows, Index cols, std::int64_t bound) {
    MatQ m(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) m(i, j) = small(bound);
    return m;
  }

  MatQi complex_matrix(Index rows, Index cols, std::int64_t bound) {
    MatQi m(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) m(i, j) = GaussRational(small(bound), small(bound));
    return m;
  }

  template <class S>
  Mat<S> matrix_over(Index rows, Index cols, std::int64_t bound) {
    if constexpr (is_complex_field_v<S>)
      return complex_matrix(rows, cols, bound);
    else
      return matrix(rows, cols, bound);
  }

  template <class S>
  Mat<S> skew(Index n, std::int64_t bound) {
    Mat<S> a = matrix_over<S>(n, n, bound);
    return a - a.transpose();
  }

  /// Random invertible matrix: unit lower times unit upper triangular
  /// times a random permutation-free diagonal of nonzero entries.
  template <class S>
  Mat<S> invertible(Index n, std::int64_t bound) {
    Mat<S> lower = identity<S>(n);
    Mat<S> upper = identity<S>(n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < i; ++j) {
        lower(i, j) = S(small(bound));
        upper(j, i) = S(small(bound));
      }
    Mat<S> d = identity<S>(n);
    for (Index i = 0; i < n; ++i) {
      Rational v(0);
      while (v == 0) v = small(bound);
      d(i, i) = S(v);
    }
    return lower * d * upper;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gencx::verify
