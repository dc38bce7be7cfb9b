#include <doctest.h>

#include <gencx/exactla/linsolve.hpp>
#include <gencx/exactla/subspace.hpp>

#include <gencx/verify/random.hpp>

using namespace gencx;

namespace {

MatQ q(std::initializer_list<std::initializer_list<long>> rows) {
  MatQ m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& r : rows) {
    Index j = 0;
    for (long v : r) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

GaussRational I() { return GaussRational::i(); }

// Cofactor expansion, independent of the elimination code.
Rational cofactor_det(const MatQ& m) {
  const Index n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational d(0);
  for (Index j = 0; j < n; ++j) {
    MatQ minor(n - 1, n - 1);
    for (Index r = 1; r < n; ++r)
      for (Index c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const Rational t = m(0, j) * cofactor_det(minor);
    d += (j % 2 == 0) ? t : Rational(-t);
  }
  return d;
}

}  // namespace

TEST_CASE("scalars stay in lowest terms") {
  Rational a = Rational(6) / Rational(4);
  CHECK(to_string(a) == "3/2");
  CHECK(to_string(Rational(-4) / Rational(2)) == "-2");
  CHECK(parse_rational(" -10/4 ") == Rational(-5) / Rational(2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);

  GaussRational z(Rational(1), Rational(2));
  CHECK(z * z.conj() == GaussRational(5));
  CHECK(z.conj().conj() == z);
  CHECK(z / z == GaussRational(1));
  CHECK(I() * I() == GaussRational(-1));
}

TEST_CASE("canonicalize") {
  CHECK(canonicalize(q({{2, 0}, {0, 3}})).basis() == identity<Rational>(2));
  auto dep = canonicalize(q({{1, 2}, {1, 2}}));
  CHECK(dep.dim() == 1);
  CHECK(dep.basis() == q({{1}, {1}}));

  const MatQ m = q({{1, 4, 7}, {2, 5, 8}, {3, 6, 9}});
  CHECK(cofactor_det(m) == 0);
  CHECK(cofactor_det(q({{1, 4}, {2, 5}})) != 0);
  CHECK(canonicalize(m).dim() == 2);

  CHECK(canonicalize(MatQ(3, 0)).is_zero());
}

TEST_CASE("lattice operations") {
  const MatQ e = identity<Rational>(3);
  auto a = SubspaceQ::span(e.leftCols(2));
  auto b = SubspaceQ::span(e.rightCols(2));
  auto meet = intersect(a, b);
  CHECK(meet == SubspaceQ::span(e.col(1)));
  CHECK(sum(a, b).is_full());
  CHECK(kernel(zeros<Rational>(2, 3)).is_full());

  const MatQ f = q({{1, 0, 0}, {0, 0, 1}});
  auto pre = preimage(f, SubspaceQ::span(q({{1}, {0}})));
  // Columnwise: f x ∈ span{(1,0)} means x3 = 0.
  CHECK(pre == SubspaceQ::span(e.leftCols(2)));
  CHECK(pre.contains(VecQ(e.col(1))));
  CHECK_FALSE(pre.contains(VecQ(e.col(2))));

  CHECK_THROWS_AS(sum(a, SubspaceQ::full(2)), ShapeError);
  CHECK_THROWS_AS(preimage(f, SubspaceQ::full(3)), ShapeError);
}

TEST_CASE("conjugation and real points") {
  MatQi v(2, 1);
  v << GaussRational(1), I();
  MatQi w(2, 1);
  w << GaussRational(1), -I();
  CHECK(conjugate(SubspaceQi::span(v)) == SubspaceQi::span(w));

  CHECK(real_points(SubspaceQi::span(hstack(v, w))).is_full());

  MatQi x(2, 2);
  x << GaussRational(1), GaussRational(0), GaussRational(0), I();
  auto r = real_points(SubspaceQi::span(x));
  CHECK(r.basis() == identity<Rational>(2));

  CHECK_THROWS_AS(real_points(SubspaceQi::span(v)), PreconditionError);
}

TEST_CASE("positive definiteness") {
  CHECK(is_positive_definite(identity<Rational>(3)));
  CHECK_FALSE(is_positive_definite(q({{1, 0}, {0, -1}})));
  // Minors 2 and 2*2-1*1 = 3.
  CHECK(is_positive_definite(q({{2, 1}, {1, 2}})));
  CHECK_THROWS_AS(is_positive_definite(q({{1, 1}, {0, 1}})), PreconditionError);
}

TEST_CASE("property: dimension formula and idempotence") {
  verify::Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = rng.uniform(1, 6);
    auto a = SubspaceQ::span(rng.matrix(n, rng.uniform(0, n), 2));
    auto b = SubspaceQ::span(rng.matrix(n, rng.uniform(0, n), 2));
    CHECK(a.dim() + b.dim() == sum(a, b).dim() + intersect(a, b).dim());
    CHECK(intersect(a, b).contains(intersect(b, a)));
    CHECK(a.contains(intersect(a, b)));
  }
  for (int trial = 0; trial < 500; ++trial) {
    const Index n = rng.uniform(1, 6);
    auto a = SubspaceQ::span(rng.matrix(n, rng.uniform(0, n + 1), 3));
    CHECK(SubspaceQ::span(a.basis()) == a);
  }
}

TEST_CASE("property: conjugation and solving") {
  verify::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = rng.uniform(1, 5);
    auto c = SubspaceQi::span(rng.complex_matrix(n, rng.uniform(0, n), 2));
    CHECK(conjugate(conjugate(c)) == c);
    auto r = SubspaceQ::span(rng.matrix(n, rng.uniform(0, n), 2));
    CHECK(real_points(complexify(r)) == r);

    const MatQ a = rng.matrix(rng.uniform(1, 5), n, 3);
    const VecQ x = rng.matrix(n, 1, 3).col(0);
    const VecQ rhs = a * x;
    auto sol = solve(a, rhs);
    REQUIRE(sol.has_value());
    CHECK(a * *sol == rhs);
  }
}

TEST_CASE("affine solver") {
  // u0 + 2 u1 = 3, u1 - u2 = 1 over Q, coefficients probed from a lambda.
  auto sol = solve_affine(3, [](const VecQ& u) {
    VecQ r(2);
    r << u(0) + 2 * u(1) - 3, u(1) - u(2) - 1;
    return r;
  });
  REQUIRE(sol.consistent());
  CHECK(sol.nullity() == 1);
  const VecQ& p = *sol.particular;
  CHECK(p(0) + 2 * p(1) == 3);

  auto none = solve_affine(1, [](const VecQ& u) {
    VecQi r(1);
    r << GaussRational(u(0), Rational(1));
    return r;
  });
  CHECK_FALSE(none.consistent());
}
