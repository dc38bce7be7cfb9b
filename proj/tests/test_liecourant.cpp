#include <doctest.h>

#include <gencx/liecourant/liecourant.hpp>
#include <gencx/verify/gc_generators.hpp>
#include <gencx/verify/generators.hpp>

using namespace gencx;
using namespace gencx::liecourant;

namespace {

const GaussRational I = GaussRational::i();

VecQi e(Index n, Index k) { return unit_vector<GaussRational>(n, k); }
VecQi zero(Index n) { return VecQi::Zero(n); }

}  // namespace

TEST_CASE("structure constants") {
  const LieAlgebra g = LieAlgebra::su2_su2();
  CHECK(g.bracket(e(6, 0), e(6, 1)) == e(6, 2));
  CHECK(g.bracket(e(6, 4), e(6, 5)) == e(6, 3));
  CHECK(g.bracket(e(6, 0), e(6, 3)) == zero(6));
  std::vector<Rational> bad(27, Rational(0));
  bad[(0 * 3 + 1) * 3 + 2] = 1;
  CHECK_THROWS_AS(LieAlgebra::from_structure_constants(3, bad), PreconditionError);
  bad[(1 * 3 + 0) * 3 + 2] = -1;
  // [e1, e2] = e3 alone is the Heisenberg algebra
  CHECK_NOTHROW(LieAlgebra::from_structure_constants(3, bad));
  bad[(1 * 3 + 2) * 3 + 1] = 1;
  bad[(2 * 3 + 1) * 3 + 1] = -1;
  CHECK_THROWS_AS(LieAlgebra::from_structure_constants(3, bad), PreconditionError);
}

TEST_CASE("invariant Courant bracket") {
  const LieAlgebra g = LieAlgebra::su2_su2();
  const LieAlgebra a = LieAlgebra::abelian(6);
  const InvariantSection s1{e(6, 0), e(6, 0)};
  const InvariantSection s2{e(6, 1), zero(6)};
  CHECK(courant_bracket(s1, s2, a) == InvariantSection{zero(6), zero(6)});
  CHECK(courant_bracket({e(6, 0), zero(6)}, s2, g) == InvariantSection{e(6, 2), zero(6)});
  CHECK(courant_bracket(s1, s2, g) == InvariantSection{e(6, 2), e(6, 2)});
  CHECK_THROWS_AS(courant_bracket({e(3, 0), zero(3)}, s2, g), ShapeError);

  verify::Rng rng(5);
  for (int it = 0; it < 40; ++it) {
    const InvariantSection x{rng.complex_matrix(6, 1, 3).col(0), rng.complex_matrix(6, 1, 3).col(0)};
    const InvariantSection y{rng.complex_matrix(6, 1, 3).col(0), rng.complex_matrix(6, 1, 3).col(0)};
    const auto xy = courant_bracket(x, y, g);
    const auto yx = courant_bracket(y, x, g);
    CHECK(xy.stacked() + yx.stacked() == VecQi::Zero(12));
    CHECK(courant_bracket({x.X, zero(6)}, {y.X, zero(6)}, g).X == g.bracket(x.X, y.X));
    CHECK(courant_bracket({zero(6), x.alpha}, {zero(6), y.alpha}, g).stacked() == VecQi::Zero(12));
  }
}

TEST_CASE("so(4) Borel example") {
  const Example ex = so4_borel_example();
  const SubspaceQi c = ex.borel.c_borel;
  CHECK(intersect(c, conjugate(c)).dim() == 2);
  CHECK(is_integrable_invariant(ex.L.dirac(), ex.g));
  CHECK(is_integrable_invariant(dirac::build(SubspaceQi::full(6), MatQi(MatQi::Zero(6, 6))), LieAlgebra::abelian(6)));

  // ω pairing the root direction e1 with f3
  MatQ bent = ex.borel.omega;
  bent(0, 5) = 1;
  bent(5, 0) = -1;
  const auto l = dirac::build_from_form(c, MatQi(I * complexify(bent)));
  CHECK_NOTHROW(gclin::gc_from_dirac(l));
  CHECK(integrability_failure(l, ex.g).has_value());

  const auto m = multiplication_map_check(ex);
  CHECK(m.half_omega);
  CHECK_FALSE(m.full_omega);
  CHECK(m.diagonal_cocr);

  const auto p = projection_cocr_check(ex);
  CHECK(p.image.dim() == 2);
  CHECK(p.q.rows() == 4);
  CHECK(p.pass());
}

TEST_CASE("invariant normal form criteria") {
  const Example ex = so4_borel_example();
  const auto borel = invariant_normal_form_criteria(ex.F, ex.borel.omega, ex.g);
  CHECK(borel.criteria());
  CHECK(borel.integrable);
  const auto [f0, w0] = perturbed_instance(0);
  CHECK(f0.F == ex.F.F);
  CHECK(w0 == ex.borel.omega);

  for (long s : {1, 2, -3}) {
    const auto [f, w] = perturbed_instance(s);
    const auto r = invariant_normal_form_criteria(f, w, ex.g);
    CHECK_FALSE(r.invariance);
    CHECK_FALSE(r.integrable);
    CHECK(r.agree());
  }

  verify::Rng rng(3);
  const LieAlgebra a = LieAlgebra::abelian(4);
  for (int it = 0; it < 10; ++it) {
    const auto cp = verify::random_compatible(rng, 4);
    const auto r = invariant_normal_form_criteria(cp.F, cp.omega, a);
    CHECK(r.criteria());
    CHECK(r.integrable);
  }
  CHECK_THROWS_AS(invariant_normal_form_criteria(ex.F, MatQ(MatQ::Zero(6, 6)), ex.g), PreconditionError);
}

TEST_CASE("closed invariant B-fields preserve integrability") {
  const Example ex = so4_borel_example();
  const LieAlgebra& g = ex.g;
  verify::Rng rng(17);
  MatQ bent = ex.borel.omega;
  bent(0, 5) = 1;
  bent(5, 0) = -1;
  std::vector<dirac::DiracQi> ls = {ex.L.dirac(),
                                    dirac::build_from_form(ex.borel.c_borel, MatQi(I * complexify(bent)))};
  for (int it = 0; it < 4; ++it) ls.push_back(verify::random_dirac<GaussRational>(rng, 6));
  int integrable = 0;
  for (int it = 0; it < 12; ++it) {
    const MatQ b = exterior_derivative(rng.matrix(6, 1, 3).col(0), g);
    CHECK(is_skew(b));
    CHECK(is_closed(b, g));
    for (const auto& l : ls) {
      const bool before = is_integrable_invariant(l, g);
      integrable += before;
      CHECK(is_integrable_invariant(dirac::bfield(complexify(b), l), g) == before);
    }
  }
  CHECK(integrable >= 12);
  CHECK_FALSE(is_closed(verify::standard_symplectic(3), g));
}
