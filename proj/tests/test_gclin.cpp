#include <doctest.h>

#include <gencx/gclin/gclin.hpp>
#include <gencx/verify/gc_generators.hpp>

using namespace gencx;
using namespace gencx::gclin;

namespace {

const GaussRational I = GaussRational::i();

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

MatQi col(std::initializer_list<GaussRational> entries) {
  MatQi m(static_cast<Index>(entries.size()), 1);
  Index i = 0;
  for (const auto& v : entries) m(i++, 0) = v;
  return m;
}

const MatQ J0 = q({{0, -1}, {1, 0}});
const MatQ W0 = q({{0, 1}, {-1, 0}});

MatQ zero(Index n) { return MatQ::Zero(n, n); }

MatQ wedge(Index n, Index i, Index j, long c = 1) {
  MatQ m = zero(n);
  m(i, j) = c;
  m(j, i) = -c;
  return m;
}

// ℝ⁴ = (ℝ², e1*∧e2*) × (ℝ², J₀).
GCStructure mixed() { return normal_form_build(f_split(block_diag(zero(2), J0)), block_diag(W0, zero(2))); }

}  // namespace

TEST_CASE("CR and co-CR subspaces") {
  auto c = SubspaceQi::span(col({1, I}));
  CHECK(is_cr(c));
  CHECK(is_cocr(c));
  auto e1 = SubspaceQi::span(col({1, 0}));
  CHECK_FALSE(is_cr(e1));
  CHECK_FALSE(is_cocr(e1));
  auto mixed3 = SubspaceQi::span(hstack(col({1, 0, 0}), col({0, 1, I})));
  // C + C̄ = ℂ³ (dimension 3), C ∩ C̄ = span{e1} (dimension 1).
  CHECK(sum(mixed3, conjugate(mixed3)).dim() == 3);
  CHECK(intersect(mixed3, conjugate(mixed3)).dim() == 1);
  CHECK(is_cocr(mixed3));
  CHECK_FALSE(is_cr(mixed3));
  CHECK(annihilator_duality(mixed3));
  CHECK(is_cr(annihilator(mixed3)));
  CHECK(annihilator_duality(e1));
}

TEST_CASE("f-structures") {
  auto fj = f_split(J0);
  CHECK(fj.v0.is_zero());
  CHECK(fj.v10 == SubspaceQi::span(col({1, -I})));
  CHECK(MatQi(complexify(J0) * fj.v10.basis()) == MatQi(I * fj.v10.basis()));

  auto f0 = f_split(zero(2));
  CHECK(f0.v0.is_full());
  CHECK(f0.v10.is_zero());

  const MatQ f3 = block_diag(J0, zero(1));
  auto s3 = f_split(f3);
  CHECK(s3.v0_real == SubspaceQ::span(q({{0}, {0}, {1}})));
  CHECK(s3.v10.dim() == 1);
  CHECK(MatQi(complexify(f3) * s3.v0.basis()).isZero());
  CHECK(f_from_split(s3.v0, s3.v10).F == f3);

  CHECK_THROWS_WITH_AS(f_split(q({{1, 0}, {0, 0}})), doctest::Contains("F^3 + F"), PreconditionError);
  CHECK_THROWS_AS(f_from_split(SubspaceQi::zero(2), SubspaceQi::span(col({1, 0}))), PreconditionError);

  // t F_V = F_W t, tested both ways inside is_f_linear.
  CHECK(is_f_linear(identity<Rational>(2), fj, fj));
  CHECK_FALSE(is_f_linear(q({{1, 0}, {0, -1}}), fj, fj));
  CHECK(is_f_linear(q({{0, 0, 1}}), s3, f_split(zero(1))));
}

TEST_CASE("gc_from_dirac") {
  auto fj = f_split(J0);
  auto lj = GCStructure::from_dirac(dirac::build(fj.v10, MatQi(MatQi::Zero(1, 1))));
  CHECK(lj.J() == block_diag(J0, MatQ(-J0.transpose())));
  CHECK(lj.assoc_poisson().eta == zero(2));
  CHECK(lj.symplectic_part().is_zero());

  auto ls = GCStructure::from_dirac(dirac::build(SubspaceQi::full(2), MatQi(I * complexify(W0))));
  CHECK(ls.assoc_poisson().eta == inverse_or_throw(W0, "omega"));
  CHECK(MatQ(ls.J().topRightCorner(2, 2).transpose()) == inverse_or_throw(W0, "omega"));

  auto bad = dirac::build(SubspaceQi::span(col({1, 0})), MatQi(MatQi::Zero(1, 1)));
  CHECK_THROWS_WITH_AS(GCStructure::from_dirac(bad), doctest::Contains("not generalized complex"), PreconditionError);
  // Real Dirac structures always meet their conjugates.
  CHECK_THROWS_AS(GCStructure::from_dirac(dirac::complexify(dirac::build(SubspaceQ::full(2), W0))),
                  PreconditionError);
}

TEST_CASE("normal forms") {
  // Symplectic type: map form [[0, ω⁻¹], [−ω, 0]] with ω: V → V* the map Wᵀ.
  const MatQ wmap = W0.transpose();
  MatQ expected(4, 4);
  expected << zero(2), inverse_or_throw(wmap, "omega"), -wmap, zero(2);
  CHECK(symplectic_type(W0).J() == expected);

  CHECK(complex_type(J0).J() == block_diag(J0, MatQ(-J0.transpose())));
  CHECK(normal_form_build(f_split(J0), zero(2)) == complex_type(J0));

  const MatQ f4 = block_diag(J0, zero(2));
  auto product = normal_form_build(f_split(f4), wedge(4, 2, 3));
  CHECK(product.symplectic_part() == SubspaceQ::span(identity<Rational>(4).rightCols(2)));
  CHECK(normal_form_omega(product, f_split(f4)) == wedge(4, 2, 3));

  CHECK_THROWS_WITH_AS(normal_form_build(f_split(f4), wedge(4, 0, 2)), doctest::Contains("ker omega"),
                       PreconditionError);
  CHECK_THROWS_WITH_AS(normal_form_build(f_split(zero(2)), zero(2)), doctest::Contains("ker omega"),
                       PreconditionError);
}

TEST_CASE("normalize") {
  auto fs = f_split(zero(2));
  auto cert0 = normalize(symplectic_type(W0), fs);
  CHECK(cert0.B == zero(2));
  CHECK(cert0.nullity == 0);

  // L(V^C, B₀ + iω) with F = 0.
  const MatQ b0 = wedge(2, 0, 1, 3);
  auto l = GCStructure::from_dirac(dirac::build(SubspaceQi::full(2), MatQi(complexify(b0) + I * complexify(W0))));
  auto cert = normalize(l, fs);
  CHECK(cert.B == MatQ(-b0));
  CHECK(cert.omega == W0);
  CHECK(cert.nullity == 0);
  CHECK(cert.gauge_dim == 0);

  // Product type: B₀ mod the (1,1) forms on the complex factor.
  auto f4 = f_split(block_diag(zero(2), J0));
  auto base = mixed();
  const MatQ b1 = wedge(4, 0, 2) + wedge(4, 1, 3, 2) + wedge(4, 2, 3, 5);
  auto c1 = normalize(bfield(b1, base), f4);
  CHECK(c1.nullity == 0);
  CHECK(c1.gauge_dim == 1);
  CHECK(c1.omega == block_diag(W0, zero(2)));
  // B + B₁ is invisible on V⁰ ⊕ V^{1,0}: only the e3*∧e4* component survives.
  CHECK(MatQ(c1.B + b1) == wedge(4, 2, 3, 5));
  CHECK(bfield(MatQ(c1.B + b1), base) == base);

  CHECK_THROWS_AS(normalize(base, f_split(zero(4))), PreconditionError);
}

TEST_CASE("generalized complex linear maps") {
  auto lj = complex_type(J0);
  CHECK(is_gc_linear(identity<Rational>(2), lj, lj));

  const MatQ proj = q({{0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(is_gc_linear(proj, mixed(), lj));

  auto ls = symplectic_type(W0);
  auto ls4 = symplectic_type(block_diag(W0, W0));
  const MatQ inc = q({{1, 0}, {0, 1}, {0, 0}, {0, 0}});
  auto flags = gc_linearity(inc, ls, ls4);
  CHECK(flags.cocr_linear);
  CHECK_FALSE(flags.poisson);
  // The pushed bivector is ω⁻¹ ⊕ 0, not ω⁻¹ ⊕ ω⁻¹.
  CHECK(MatQ(inc * ls.assoc_poisson().eta * inc.transpose()) == block_diag(inverse_or_throw(W0, "w"), zero(2)));
}

TEST_CASE("decompose_gc_linear") {
  auto lj = complex_type(J0);
  const MatQ proj = q({{0, 0, 1, 0}, {0, 0, 0, 1}});
  auto w = decompose_gc_linear(proj, mixed(), lj);
  CHECK(w.B_V == zero(4));
  CHECK(w.B_W == zero(2));
  auto r = replay_witness(w, proj, mixed(), lj);
  CHECK(r.i);
  CHECK(r.ii);
  CHECK(r.iii);

  // Source scrambled by B₀ with no component on e3*∧e4*.
  const MatQ b0 = wedge(4, 0, 1, 2) + wedge(4, 0, 3) + wedge(4, 1, 2, -1);
  auto scrambled = bfield(b0, mixed());
  auto ws = decompose_gc_linear(proj, scrambled, lj);
  CHECK(ws.B_V == MatQ(-b0));
  CHECK(replay_witness(ws, proj, scrambled, lj).ii);

  CHECK_THROWS_AS(decompose_gc_linear(q({{1, 0}, {0, 1}, {0, 0}, {0, 0}}), symplectic_type(W0),
                                      symplectic_type(block_diag(W0, W0))),
                  PreconditionError);

  verify::Rng rng(23);
  for (int t = 0; t < 30; ++t) {
    auto inst = verify::random_gc_linear(rng);
    REQUIRE(is_gc_linear(inst.t, inst.lv, inst.lw));
    auto wit = decompose_gc_linear(inst.t, inst.lv, inst.lw);
    auto rep = replay_witness(wit, inst.t, inst.lv, inst.lw);
    CHECK(rep.i);
    CHECK(rep.ii);
    CHECK(rep.iii);
    for (const auto& f : rep.failures) MESSAGE(f);
  }
}

TEST_CASE("bfield equivalence") {
  verify::Rng rng(29);
  auto l1 = verify::random_gc(rng, 4);
  const MatQ b0 = rng.skew<Rational>(4, 3);
  auto b = bfield_equivalent(l1, bfield(b0, l1));
  REQUIRE(b);
  CHECK(bfield(*b, l1) == bfield(b0, l1));
  CHECK_FALSE(bfield_equivalent(complex_type(J0), symplectic_type(W0)));
  CHECK_FALSE(bfield_equivalent(mixed(), normal_form_build(f_split(block_diag(J0, zero(2))), block_diag(zero(2), W0))));
}

TEST_CASE("type decomposition and graph invariance") {
  const MatQ j = block_diag(J0, J0);  // coordinates (x1, y1, x2, y2)
  const MatQ b_pure = wedge(4, 0, 2) + wedge(4, 1, 3, -1);
  const MatQ b_11 = wedge(4, 0, 1);
  auto tp = type_decompose(b_pure, j);
  CHECK(tp.b11 == zero(4));
  CHECK(tp.b20_02 == b_pure);
  auto t11 = type_decompose(b_11, j);
  CHECK(t11.b11 == b_11);
  CHECK(t11.b20_02 == zero(4));
  // Top degree on ℝ²  is always (1,1).
  CHECK(type_decompose(W0, J0).b11 == W0);
  CHECK_THROWS_AS(type_decompose(W0, identity<Rational>(2)), PreconditionError);

  auto lj = complex_type(j);
  const MatQ id = identity<Rational>(4);
  CHECK(graph_invariance_check(id, lj, lj));
  auto lb = bfield(b_pure, lj);
  CHECK(is_gc_linear(id, lj, lb));
  CHECK_FALSE(graph_invariance_check(id, lj, lb));
  CHECK(graph_invariance_check(id, lj, bfield(b_11, lj)));
}

TEST_CASE("property: structures, normal forms, invariance") {
  verify::Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    const Index n = 2 * rng.uniform(1, 2);
    auto p = verify::random_compatible(rng, n);
    auto nf = normal_form_build(p.F, p.omega);
    CHECK(nf.J() == normal_form_block(p.F, p.omega));
    const MatQ b0 = rng.skew<Rational>(n, 2);
    auto cert = normalize(bfield(b0, nf), p.F);
    CHECK(cert.nullity == 0);
    CHECK(cert.omega == p.omega);
    CHECK(bfield(MatQ(cert.B + b0), nf) == nf);

    auto lv = verify::random_gc(rng, n);
    auto lw = verify::random_gc(rng, n);
    const MatQ iso = rng.invertible<Rational>(n, 2);
    const bool direct = is_gc_linear(iso, lv, lw);
    const MatQ bv = rng.skew<Rational>(n, 2), bw = rng.skew<Rational>(n, 2);
    CHECK(is_gc_linear(iso, bfield(bv, lv), bfield(bw, lw)) == direct);
    CHECK(direct == bfield_equivalent(pushforward(iso, lv), lw).has_value());
    auto lw2 = bfield(bw, pushforward(iso, lv));
    CHECK(is_gc_linear(iso, lv, lw2));
    CHECK(bfield_equivalent(pushforward(iso, lv), lw2).has_value());
  }
}
