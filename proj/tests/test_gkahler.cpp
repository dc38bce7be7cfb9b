#include <doctest.h>

#include <gencx/gkahler/gkahler.hpp>
#include <gencx/verify/gc_generators.hpp>
#include <gencx/verify/gk_generators.hpp>

using namespace gencx;
using namespace gencx::gkahler;

namespace {

const GaussRational I = GaussRational::i();

MatQi cx(const MatQ& m) { return complexify(m); }

const MatQ W0 = [] {
  MatQ m = MatQ::Zero(2, 2);
  m(0, 1) = 1;
  m(1, 0) = -1;
  return m;
}();

BiHermitianData swapped(const BiHermitianData& d) { return {d.g, d.b, d.Jp, MatQ(-d.Jm)}; }

bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.pass) {
      MESSAGE("failed identity: " << c.name);
      return false;
    }
  return true;
}

}  // namespace

TEST_CASE("Kaehler point") {
  const BiHermitianData k = kahler_point();
  const GKPair p = gk_from_bihermitian(k);
  const MatQ omega = kahler_form(k.g, k.Jp);
  CHECK(omega == W0);
  CHECK(p.L1 == gclin::complex_type(k.Jp));
  // L2 = L(V^C, -i omega)
  CHECK(p.L2 == gclin::symplectic_type(MatQ(-omega)));
  CHECK(p.Hp.is_full());
  CHECK(p.Hm.is_zero());
  CHECK(p.Vcal.is_zero());
  CHECK(bihermitian_from_gk(p.L1, p.L2) == k);
  CHECK(all_pass(subspace_identities(p)));

  const auto t = gk_to_tamed(p);
  CHECK(t.tamed.eps == MatQ(-omega));
  CHECK(is_zero_matrix(t.B_residual));
  CHECK(tamed_to_gk(t.tamed).first == k);

  const auto [f1, f2] = f_structures_of(p);
  CHECK(f1.F == k.Jp);
  CHECK(is_zero_matrix(f2.F));
  CHECK(is_zero_matrix(holo_poisson(p).eta_p.eta));
}

TEST_CASE("hyper-Kaehler point") {
  const Quaternions q = quaternions();
  const MatQ id = identity<Rational>(4);
  CHECK(q.I * q.J == q.K);
  CHECK(q.J * q.K == q.I);
  CHECK(q.K * q.I == q.J);
  CHECK(q.I * q.I == MatQ(-id));
  const MatQ wi = kahler_form(id, q.I), wj = kahler_form(id, q.J), wk = kahler_form(id, q.K);

  const auto [data, p] = tamed_to_gk(hyperkahler_tamed());
  CHECK(data == hyperkahler_point());
  CHECK(data.Jm == q.K);
  CHECK(data.b == wi);
  CHECK(p.L1.dirac() == dirac::build(SubspaceQi::full(4), MatQi(cx(MatQ(2 * wi)) - I * cx(MatQ(wj - wk)))));
  CHECK(p.L2.dirac() == dirac::build(SubspaceQi::full(4), MatQi(-I * cx(MatQ(wj + wk)))));
  CHECK(p.Vcal.is_full());

  const HoloPoisson h = holo_poisson(p);
  CHECK(h.eta_p.as_map() == MatQ(-q.I / Rational(2)));
  CHECK(h.eta_m.as_map() == MatQ(q.I / Rational(2)));

  const EpsPM e = eps_pm(p);
  CHECK(e.eps_p == MatQi(-I * (cx(wi) - I * cx(wj))));
  CHECK(e.eps_m == MatQi(-(cx(wk) - I * cx(wi))));
  CHECK(im_eps1_identity(p));
  CHECK(all_pass(subspace_identities(p)));
}

TEST_CASE("hyper-Kaehler two-of-three") {
  const GKPair p = gk_from_bihermitian(hyperkahler_point());
  const Quaternions q = quaternions();
  // right multiplication by a unit quaternion commutes with I, J, K
  const MatQ right_i = [] {
    MatQ m = MatQ::Zero(4, 4);
    // x ↦ x·i on (1, i, j, k): 1→i, i→−1, j→−k, k→j
    m(1, 0) = 1;
    m(0, 1) = -1;
    m(3, 2) = -1;
    m(2, 3) = 1;
    return m;
  }();
  const MatQ rot = (Rational(3) * identity<Rational>(4) + Rational(4) * right_i) / Rational(5);
  const TwoOfThree all = two_of_three(rot, p);
  CHECK(all.holo_L1);
  CHECK(all.holo_L2);
  CHECK(all.commutes);

  verify::Rng rng(7);
  for (auto kind : {verify::CensusKind::HoloL1Commuting, verify::CensusKind::HoloL2Commuting}) {
    const MatQ phi = verify::random_census_map(rng, p, kind);
    const TwoOfThree r = two_of_three(phi, p);
    CHECK(r.commutes);
    CHECK(r.count() == 3);
  }
  CHECK(two_of_three(q.I, p).consistent());
}

TEST_CASE("second product of Kaehler points") {
  const BiHermitianData k = kahler_point();
  const GKPair p = second_product(k, k);
  CHECK(p.data.Jm == block_diag(k.Jp, MatQ(-k.Jp)));
  CHECK(all_pass(subspace_identities(p)));
  const GKPair first = first_product(gk_from_bihermitian(k), gk_from_bihermitian(k));
  CHECK(first.L1 == gclin::complex_type(block_diag(k.Jp, k.Jp)));
  CHECK(first.Hp.is_full());
  CHECK_THROWS_AS(second_product(hyperkahler_point(), k), PreconditionError);
}

TEST_CASE("preconditions") {
  BiHermitianData bad = kahler_point();
  bad.g(0, 0) = -1;
  CHECK_THROWS_WITH_AS(gk_from_bihermitian(bad), "bihermitian: g is not positive definite", PreconditionError);
  const gclin::GCStructure a = gclin::complex_type(kahler_point().Jp);
  const gclin::GCStructure b = gclin::symplectic_type(W0);
  CHECK_THROWS_AS(bihermitian_from_gk(a, b), PreconditionError);
  CHECK_THROWS_AS(validate(TamedData{W0, kahler_point().Jp}), PreconditionError);
  CHECK_THROWS_AS(gk_to_tamed(gk_from_bihermitian(swapped(kahler_point()))), PreconditionError);
}

TEST_CASE("random bi-Hermitian data") {
  verify::Rng rng(11);
  for (int it = 0; it < 24; ++it) {
    const Index n = it % 3 == 0 ? 6 : 4;
    const BiHermitianData d = verify::random_bihermitian(rng, n);
    const GKPair p = gk_from_bihermitian(d);
    CHECK(bihermitian_from_gk(p.L1, p.L2) == d);
    CHECK(all_pass(subspace_identities(p)));
    CHECK_NOTHROW(f_structures_of(p));
    const GKPair s = gk_from_bihermitian(swapped(d));
    CHECK(s.L1 == p.L2);
    CHECK(s.L2 == p.L1);
    if (is_invertible(MatQ(d.Jp + d.Jm))) {
      const HoloPoisson h = holo_poisson(p);
      if (is_invertible(MatQ(d.Jp - d.Jm))) {
        CHECK(holo_poisson(s).eta_p.eta == MatQ(-h.eta_p.eta));
      }
      const auto t = gk_to_tamed(p);
      CHECK(gclin::bfield(t.B_residual, tamed_to_gk(t.tamed).second.L1) == p.L1);
    }
  }
}

TEST_CASE("random tamed data") {
  verify::Rng rng(12);
  for (int it = 0; it < 12; ++it) {
    const TamedData t = verify::random_tamed(rng, 4);
    const auto [d, p] = tamed_to_gk(t);
    const auto back = gk_to_tamed(p);
    CHECK(back.tamed.eps == t.eps);
    CHECK(back.tamed.J == t.J);
    CHECK(is_zero_matrix(back.B_residual));
    CHECK(im_eps1_identity(p));
    CHECK_NOTHROW(holo_poisson(p));
    for (int k = 0; k < 6; ++k) {
      const MatQ phi = verify::random_census_map(rng, p, static_cast<verify::CensusKind>(k));
      CHECK(two_of_three(phi, p).consistent());
    }
  }
}

TEST_CASE("tamed Kaehler point and B-field residual") {
  const BiHermitianData k = kahler_point();
  // ε(J₀X, X) > 0 singles out −e1*∧e2*
  const auto [d, p] = tamed_to_gk({MatQ(-W0), k.Jp});
  CHECK(d == k);
  CHECK_THROWS_AS(tamed_to_gk({W0, k.Jp}), PreconditionError);

  const MatQ b = verify::standard_symplectic(2);
  const auto [hk, php] = tamed_to_gk(hyperkahler_tamed());
  GKPair shifted = php;
  shifted.L1 = gclin::bfield(b, php.L1);
  shifted.L2 = gclin::bfield(b, php.L2);
  const BiHermitianData sd = bihermitian_from_gk(shifted.L1, shifted.L2);
  CHECK(sd.b == MatQ(hk.b + b));
  const auto t = gk_to_tamed(gk_from_bihermitian(sd));
  CHECK(t.B_residual == b);
  CHECK(t.tamed.eps == hyperkahler_tamed().eps);

  // J₊ − J₋ = 0: ε± and the Im ε₁ identity are outside their domain
  CHECK_THROWS_AS(eps_pm(p), PreconditionError);
  CHECK_THROWS_AS(im_eps1_identity(p), PreconditionError);
}

TEST_CASE("hyper-Kaehler splitting and products") {
  const GKPair hk = gk_from_bihermitian(hyperkahler_point());
  CHECK(hk.Hp.is_zero());
  CHECK(hk.Hm.is_zero());
  const SubspaceQi e1 = hk.L1.cocr();
  CHECK(intersect(e1, conjugate(e1)).is_full());
  const auto [f1, f2] = f_structures_of(hk);
  CHECK(is_zero_matrix(f1.F));
  CHECK(is_zero_matrix(f2.F));
  CHECK(bihermitian_from_gk(hk.L1, hk.L2) == hyperkahler_point());
  const TwoOfThree id = two_of_three(identity<Rational>(4), hk);
  CHECK(id.count() == 3);

  const GKPair k = gk_from_bihermitian(kahler_point());
  const GKPair p = first_product(hk, k);
  MatQ kahler_block = MatQ::Zero(6, 2);
  kahler_block(4, 0) = 1;
  kahler_block(5, 1) = 1;
  MatQ hk_block = MatQ::Zero(6, 4);
  hk_block.topRows(4) = identity<Rational>(4);
  CHECK(p.Hp == SubspaceQ::span(kahler_block));
  CHECK(p.Hm.is_zero());
  CHECK(p.Vcal == SubspaceQ::span(hk_block));

  const GKPair s = second_product(kahler_point(), kahler_point());
  MatQ first = MatQ::Zero(4, 2), second = MatQ::Zero(4, 2);
  first(0, 0) = first(1, 1) = 1;
  second(2, 0) = second(3, 1) = 1;
  CHECK(s.Hp == SubspaceQ::span(first));
  CHECK(s.Hm == SubspaceQ::span(second));
  CHECK(s.Vcal.is_zero());
  const auto [s1, s2] = f_structures_of(s);
  CHECK(s1.F == block_diag(kahler_point().Jp, MatQ(MatQ::Zero(2, 2))));
  CHECK(s2.F == block_diag(MatQ(MatQ::Zero(2, 2)), kahler_point().Jp));
}
