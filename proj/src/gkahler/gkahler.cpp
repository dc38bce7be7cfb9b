#include <gencx/gkahler/gkahler.hpp>

#include <array>

namespace gencx::gkahler {
namespace {

const GaussRational kI = GaussRational::i();

MatQi cx(const MatQ& m) { return complexify(m); }

void require_square(const MatQ& m, Index n, const char* what) {
  if (m.rows() != n || m.cols() != n)
    throw ShapeError(std::string(what) + ": expected " + shape_string(n, n) + ", got " + shape_of(m));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvariantError(what);
}

/// +i eigenspace of a complex structure.
SubspaceQi plus_i(const MatQ& j) { return kernel(MatQi(cx(j) - kI * identity<GaussRational>(j.rows()))); }

/// Graph {X + m X} over a complex subspace, as vectors of V^C ⊕ V^C*.
SubspaceQi graph_over(const SubspaceQi& v, const MatQ& m) {
  return SubspaceQi::span(vstack(v.basis(), MatQi(cx(m) * v.basis())));
}

/// The real map A with A X = α for the graph {X + α} over W ⊕ W̄ = V^C.
MatQ map_of_graph(const SubspaceQi& l, Index n, const char* what) {
  const MatQi x = l.basis().topRows(n);
  const MatQi a = l.basis().bottomRows(n);
  const MatQi xs = hstack(x, conjugate(x));
  const MatQi as = hstack(a, conjugate(a));
  const MatQi m = as * inverse_or_throw(xs, what);
  if (!is_real(m)) throw InvariantError(std::string(what) + ": graph map is not real");
  return real_part(m);
}

/// g-orthogonal projection onto H.
MatQ orthogonal_projection(const SubspaceQ& h, const MatQ& g) {
  if (h.is_zero()) return zeros<Rational>(g.rows(), g.rows());
  const MatQ& b = h.basis();
  return b * inverse_or_throw(MatQ(b.transpose() * g * b), "orthogonal_projection") * b.transpose() * g;
}

/// Projection onto A along B for V^C = A ⊕ B.
MatQi projection_along(const SubspaceQi& a, const SubspaceQi& b, const char* what) {
  const MatQi m = hstack(a.basis(), b.basis());
  MatQi d = MatQi::Zero(m.cols(), m.cols());
  for (Index k = 0; k < a.dim(); ++k) d(k, k) = GaussRational(1);
  return m * d * inverse_or_throw(m, what);
}

/// Real bivector of ρ_*(L) for ρ: V^C → W the projection along conj W.
MatQ pushed_bivector(const DiracQi& l, const SubspaceQi& w, const char* what) {
  const Index k = w.dim();
  const MatQi m = hstack(w.basis(), conjugate(w.basis()));
  const MatQi rho = MatQi(inverse_or_throw(m, what)).topRows(k);
  const auto pi = dirac::is_poisson(dirac::pushforward(rho, l));
  if (!pi) throw InvariantError(std::string(what) + ": pushforward is not Poisson");
  const MatQi big = w.basis() * pi->eta * w.basis().transpose();
  const MatQi eta = big + conjugate(big);
  if (!is_real(eta)) throw InvariantError(std::string(what) + ": bivector is not real");
  return real_part(eta);
}

bool is_kahler_point(const BiHermitianData& d) { return d.Jp == d.Jm && is_zero_matrix(d.b); }

}  // namespace

MatQ kahler_form(const MatQ& g, const MatQ& a) { return a.transpose() * g; }

void validate(const BiHermitianData& d) {
  const Index n = d.g.rows();
  require_square(d.g, n, "bihermitian: g");
  require_square(d.b, n, "bihermitian: b");
  require_square(d.Jp, n, "bihermitian: J+");
  require_square(d.Jm, n, "bihermitian: J-");
  const MatQ id = identity<Rational>(n);
  if (!is_symmetric(d.g)) throw PreconditionError("bihermitian: g is not symmetric");
  if (!is_positive_definite(d.g)) throw PreconditionError("bihermitian: g is not positive definite");
  if (!is_skew(d.b)) throw PreconditionError("bihermitian: b is not skew");
  if (d.Jp * d.Jp != -id) throw PreconditionError("bihermitian: J+^2 != -Id");
  if (d.Jm * d.Jm != -id) throw PreconditionError("bihermitian: J-^2 != -Id");
  if (d.Jp.transpose() * d.g * d.Jp != d.g) throw PreconditionError("bihermitian: J+ is not g-orthogonal");
  if (d.Jm.transpose() * d.g * d.Jm != d.g) throw PreconditionError("bihermitian: J- is not g-orthogonal");
}

bool is_generalized_metric(const MatQ& j1, const MatQ& j2) {
  const MatQ gm = -(j1 * j2);
  const MatQ form = gm.transpose() * dirac::pairing_gram<Rational>(j1.rows() / 2);
  return is_symmetric(form) && is_positive_definite(form);
}

namespace {

void fill_splitting(GKPair& p) {
  const BiHermitianData& d = p.data;
  p.Hp = kernel(MatQ(d.Jp - d.Jm));
  p.Hm = kernel(MatQ(d.Jp + d.Jm));
  p.Vcal = orthogonal_complement(sum(p.Hp, p.Hm), d.g);
  require(MatQ(p.Hp.basis().transpose() * d.g * p.Hm.basis()).isZero(), "gk: H+ and H- are not g-orthogonal");
  require(p.Hp.dim() + p.Hm.dim() + p.Vcal.dim() == d.dim(), "gk: H+ + H- + V is not direct");
}

}  // namespace

GKPair gk_from_bihermitian(const BiHermitianData& d) {
  validate(d);
  const Index n = d.dim();
  if (n % 2 != 0) throw PreconditionError("gk_from_bihermitian: odd dimension");
  const SubspaceQi vp = plus_i(d.Jp);
  const SubspaceQi vm = plus_i(d.Jm);
  const SubspaceQi lp = graph_over(vp, MatQ((d.b + d.g).transpose()));
  const SubspaceQi lm = graph_over(vm, MatQ((d.b - d.g).transpose()));
  const SubspaceQi l1 = sum(lp, lm);
  const SubspaceQi l2 = sum(lp, conjugate(lm));
  GKPair p{d,
           GCStructure::from_dirac(DiracQi::from_subspace(n, l1)),
           GCStructure::from_dirac(DiracQi::from_subspace(n, l2)),
           lp,
           lm,
           vp,
           vm,
           {},
           {},
           {}};
  const MatQ& j1 = p.L1.J();
  const MatQ& j2 = p.L2.J();
  require(j1 * j2 == j2 * j1, "gk_from_bihermitian: J1 and J2 do not commute");
  require(is_generalized_metric(j1, j2), "gk_from_bihermitian: -J1J2 is not positive definite");
  fill_splitting(p);
  return p;
}

BiHermitianData bihermitian_from_gk(const GCStructure& l1, const GCStructure& l2) {
  const Index n = l1.v_dim();
  if (l2.v_dim() != n) throw ShapeError("bihermitian_from_gk: dimensions differ");
  if (l1.J() * l2.J() != l2.J() * l1.J()) throw PreconditionError("bihermitian_from_gk: J1 and J2 do not commute");
  if (!is_generalized_metric(l1.J(), l2.J()))
    throw PreconditionError("bihermitian_from_gk: -J1J2 is not positive definite");
  const SubspaceQi lp = intersect(l1.dirac().subspace(), l2.dirac().subspace());
  const SubspaceQi lm = intersect(l1.dirac().subspace(), conjugate(l2.dirac().subspace()));
  require(2 * lp.dim() == n && 2 * lm.dim() == n, "bihermitian_from_gk: L+ or L- has the wrong dimension");
  const SubspaceQi vp = SubspaceQi::span(lp.basis().topRows(n));
  const SubspaceQi vm = SubspaceQi::span(lm.basis().topRows(n));
  require(vp.dim() == lp.dim() && vm.dim() == lm.dim(), "bihermitian_from_gk: L+- is not a graph");
  const MatQ mp = map_of_graph(lp, n, "bihermitian_from_gk: L+");
  const MatQ mm = map_of_graph(lm, n, "bihermitian_from_gk: L-");
  BiHermitianData d;
  d.g = (mp - mm) / Rational(2);
  d.b = MatQ(((mp + mm) / Rational(2)).transpose());
  std::vector<GaussRational> lambda(static_cast<size_t>(n / 2), kI);
  lambda.resize(static_cast<size_t>(n), -kI);
  auto structure = [&](const SubspaceQi& v) {
    const MatQi m = hstack(v.basis(), conjugate(v.basis()));
    MatQi dg = MatQi::Zero(n, n);
    for (Index k = 0; k < n; ++k) dg(k, k) = lambda[static_cast<size_t>(k)];
    const MatQi j = m * dg * inverse_or_throw(m, "bihermitian_from_gk: V+-");
    require(is_real(j), "bihermitian_from_gk: J+- is not real");
    return real_part(j);
  };
  d.Jp = structure(vp);
  d.Jm = structure(vm);
  validate(d);
  return d;
}

std::vector<Check> subspace_identities(const GKPair& p) {
  const BiHermitianData& d = p.data;
  const MatQi g = cx(d.g);
  const SubspaceQi e1 = p.L1.cocr();
  const SubspaceQi e2 = p.L2.cocr();
  const SubspaceQi vmb = conjugate(p.Vm);
  const SubspaceQi pm = intersect(p.Vp, p.Vm);
  const SubspaceQi pmb = intersect(p.Vp, vmb);
  const SubspaceQi hmv = complexify(sum(p.Hm, p.Vcal));
  const SubspaceQi hpv = complexify(sum(p.Hp, p.Vcal));
  auto invariant = [](const SubspaceQ& s, const MatQ& j) { return apply(j, s) == s; };
  auto restricted_invertible = [&](const MatQ& m) { return apply(m, p.Vcal) == p.Vcal; };
  std::vector<Check> out = {
      {"E1 = V+ + V-", e1 == sum(p.Vp, p.Vm)},
      {"E1 = (V+ n V-) + (H- + V)^C", e1 == sum(pm, hmv) && is_direct_sum(pm, hmv)},
      {"E2 = (V+ n conj V-) + (H+ + V)^C", e2 == sum(pmb, hpv) && is_direct_sum(pmb, hpv)},
      {"E1 n conj E1 = (H- + V)^C", intersect(e1, conjugate(e1)) == hmv},
      {"E2 n conj E2 = (H+ + V)^C", intersect(e2, conjugate(e2)) == hpv},
      {"(H- + V) = H+ perp", sum(p.Hm, p.Vcal) == orthogonal_complement(p.Hp, d.g)},
      {"(H+ + V) = H- perp", sum(p.Hp, p.Vcal) == orthogonal_complement(p.Hm, d.g)},
      {"E1 perp = V+ n V-", orthogonal_complement(e1, g) == pm},
      {"E2 perp = V+ n conj V-", orthogonal_complement(e2, g) == pmb},
      {"H+^C = (V+ n V-) + conj", complexify(p.Hp) == sum(pm, conjugate(pm))},
      {"H-^C = (V+ n conj V-) + conj", complexify(p.Hm) == sum(pmb, conjugate(pmb))},
      {"V = H+ + H- + V direct",
       p.Hp.dim() + p.Hm.dim() + p.Vcal.dim() == d.dim() && sum(sum(p.Hp, p.Hm), p.Vcal).is_full()},
      {"H+, H-, V are J+- invariant",
       invariant(p.Hp, d.Jp) && invariant(p.Hm, d.Jp) && invariant(p.Vcal, d.Jp) && invariant(p.Hp, d.Jm) &&
           invariant(p.Hm, d.Jm) && invariant(p.Vcal, d.Jm)},
      {"J+ -+ J- invertible on V",
       restricted_invertible(MatQ(d.Jp - d.Jm)) && restricted_invertible(MatQ(d.Jp + d.Jm))},
  };
  return out;
}

std::pair<FStructure, FStructure> f_structures_of(const GKPair& p) {
  const BiHermitianData& d = p.data;
  const MatQ f1 = d.Jp * orthogonal_projection(p.Hp, d.g);
  const MatQ f2 = d.Jp * orthogonal_projection(p.Hm, d.g);
  FStructure s1 = gclin::f_split(f1);
  FStructure s2 = gclin::f_split(f2);
  for (const MatQ* f : {&f1, &f2})
    require(is_skew(MatQ(d.g * *f)), "f_structures_of: F is not g-skew-adjoint");
  require(s1.v10 == intersect(p.Vp, p.Vm), "f_structures_of: V10(F1) != V+ n V-");
  require(s2.v10 == intersect(p.Vp, conjugate(p.Vm)), "f_structures_of: V10(F2) != V+ n conj V-");
  require(s1.cocr() == p.L1.cocr(), "f_structures_of: co-CR of F1 != E1");
  require(s2.cocr() == p.L2.cocr(), "f_structures_of: co-CR of F2 != E2");
  return {std::move(s1), std::move(s2)};
}

void validate(const TamedData& t) {
  const Index n = t.eps.rows();
  require_square(t.eps, n, "tamed: eps");
  require_square(t.J, n, "tamed: J");
  if (!is_skew(t.eps)) throw PreconditionError("tamed: eps is not skew");
  if (!is_invertible(t.eps)) throw PreconditionError("tamed: eps is degenerate");
  if (t.J * t.J != -identity<Rational>(n)) throw PreconditionError("tamed: J^2 != -Id");
  if (!is_positive_definite(symmetric_part(MatQ(t.J.transpose() * t.eps))))
    throw PreconditionError("tamed: eps(JX, X) is not positive");
}

std::pair<BiHermitianData, GKPair> tamed_to_gk(const TamedData& t) {
  validate(t);
  const MatQ& e = t.eps;
  const MatQ ej = t.J.transpose() * e;
  BiHermitianData d;
  d.Jp = t.J;
  d.Jm = -inverse_or_throw(e, "tamed_to_gk") * t.J.transpose() * e;
  d.g = symmetric_part(ej);
  d.b = skew_part(ej);
  require(d.g == MatQ((d.Jp + d.Jm).transpose() * e / Rational(2)), "tamed_to_gk: g formula");
  require(d.b == MatQ((d.Jp - d.Jm).transpose() * e / Rational(2)), "tamed_to_gk: b formula");
  require(MatQ(d.Jp.transpose() * e) == MatQ(-(e * d.Jm)), "tamed_to_gk: eps(J+X, Y) != -eps(X, J-Y)");
  require(is_invertible(MatQ(d.Jp + d.Jm)), "tamed_to_gk: J+ + J- is singular");
  GKPair p = gk_from_bihermitian(d);
  require(p.L2 == gclin::symplectic_type(e), "tamed_to_gk: L2 != L(V^C, i eps)");
  return {std::move(d), std::move(p)};
}

TamedFromGK gk_to_tamed(const GKPair& p) {
  if (!p.L2.cocr().is_full() || !is_invertible(MatQ(p.data.Jp + p.data.Jm)))
    throw PreconditionError("gk_to_tamed: not of symplectic type (J+ + J- singular)");
  const MatQi& eps2 = p.L2.eps();
  TamedFromGK out{{imag_part(eps2), p.data.Jp}, real_part(eps2)};
  validate(out.tamed);
  if (cross_checks_enabled()) {
    const auto back = tamed_to_gk(out.tamed);
    require(gclin::bfield(out.B_residual, back.second.L2) == p.L2, "gk_to_tamed: L2 round trip");
    require(gclin::bfield(out.B_residual, back.second.L1) == p.L1, "gk_to_tamed: L1 round trip");
  }
  return out;
}

HoloPoisson holo_poisson(const GKPair& p) {
  const TamedFromGK t = gk_to_tamed(p);
  const BiHermitianData& d = p.data;
  const MatQ& e = t.tamed.eps;
  const GCStructure l2 = gclin::bfield(MatQ(-t.B_residual), p.L2);
  const MatQ eta_p = pushed_bivector(l2.dirac(), p.Vp, "holo_poisson: rho+");
  const MatQ eta_m = pushed_bivector(l2.dirac(), p.Vm, "holo_poisson: rho-");
  require(eta_m == MatQ(-eta_p), "holo_poisson: eta- != -eta+");

  const MatQ e_map_inv = inverse_or_throw(MatQ(e.transpose()), "holo_poisson: eps");
  const MatQ g_inv = inverse_or_throw(d.g, "holo_poisson: g");
  const MatQ minus_p = eta_m.transpose();
  const MatQ a = (d.Jp * e_map_inv + e_map_inv * d.Jp.transpose()) / Rational(2);
  const MatQ b = (d.Jp - d.Jm) * e_map_inv / Rational(2);
  const MatQ c = commutator(d.Jp, d.Jm) * g_inv / Rational(4);
  require(minus_p == a, "holo_poisson: eta- != (J eps^-1 + eps^-1 J*)/2");
  require(a == b, "holo_poisson: (J eps^-1 + eps^-1 J*)/2 != (J+ - J-) eps^-1 / 2");
  require(b == c, "holo_poisson: (J+ - J-) eps^-1 / 2 != [J+, J-] g^-1 / 4");

  for (const MatQ* j : {&d.Jp, &d.Jm})
    require(is_zero_matrix(gclin::type_decompose(eta_p, MatQ(j->transpose())).b11),
            "holo_poisson: eta+ has a (1,1) part");
  require(image(eta_p) == p.Vcal, "holo_poisson: image of eta+ != V");
  return {{eta_p}, {eta_m}};
}

EpsPM eps_pm(const GKPair& p) {
  const BiHermitianData& d = p.data;
  if (!is_invertible(MatQ(d.Jp - d.Jm)) || !is_invertible(MatQ(d.Jp + d.Jm)))
    throw PreconditionError("eps_pm: J+ - J- or J+ + J- is singular");
  const TamedFromGK t = gk_to_tamed(p);
  const MatQi e = cx(t.tamed.eps);
  const SubspaceQi vp = p.Vp;
  const SubspaceQi vm = p.Vm;
  const MatQi pp = projection_along(vp, vm, "eps_pm: V10+ + V10-");
  const MatQi pm = projection_along(vm, vp, "eps_pm: V10- + V10+");
  EpsPM out;
  out.eps_p = pp.transpose() * e * pp;
  out.eps_m = pm.transpose() * e * pm;
  out.eps_1 = kI * out.eps_p - kI * out.eps_m;
  require(e == MatQi(out.eps_p + out.eps_m), "eps_pm: eps != eps+ + eps-");
  require(MatQi(vp.basis().transpose() * out.eps_p * vp.basis()) == MatQi(vp.basis().transpose() * e * vp.basis()),
          "eps_pm: eps+ != eps on V10+");
  require(MatQi(out.eps_p * vm.basis()).isZero(), "eps_pm: eps+ does not vanish on V10-");
  require(MatQi(out.eps_m * vp.basis()).isZero(), "eps_pm: eps- does not vanish on V10+");
  const auto l1 = dirac::build(SubspaceQi::full(d.dim()), MatQi(out.eps_1 + cx(t.B_residual)));
  require(l1 == p.L1.dirac(), "eps_pm: L1 != L(V^C, i eps+ - i eps- + B)");
  return out;
}

bool im_eps1_identity(const GKPair& p) {
  const EpsPM e = eps_pm(p);
  const TamedFromGK t = gk_to_tamed(p);
  const BiHermitianData& d = p.data;
  return MatQ((d.Jp - d.Jm).transpose() * imag_part(e.eps_1)) == MatQ((d.Jp + d.Jm).transpose() * t.tamed.eps);
}

TwoOfThree two_of_three(const MatQ& phi, const GKPair& p) {
  require_square(phi, p.data.dim(), "two_of_three: phi");
  if (!is_invertible(phi)) throw PreconditionError("two_of_three: phi is not invertible");
  if (!is_invertible(MatQ(p.data.Jp + p.data.Jm)) || !is_invertible(MatQ(p.data.Jp - p.data.Jm)))
    throw PreconditionError("two_of_three: J+ + J- and J+ - J- must be invertible");
  const MatQ q = p.data.Jp * p.data.Jm;
  TwoOfThree out;
  out.holo_L1 = gclin::is_gc_linear(phi, p.L1, p.L1);
  out.holo_L2 = gclin::is_gc_linear(phi, p.L2, p.L2);
  out.commutes = phi * q == q * phi;
  return out;
}

GKPair first_product(const GKPair& a, const GKPair& b) {
  const BiHermitianData& x = a.data;
  const BiHermitianData& y = b.data;
  GKPair p = gk_from_bihermitian(
      {block_diag(x.g, y.g), block_diag(x.b, y.b), block_diag(x.Jp, y.Jp), block_diag(x.Jm, y.Jm)});
  require(p.L1.dirac() == dirac::product(a.L1.dirac(), b.L1.dirac()), "first_product: L1 != L1a x L1b");
  require(p.L2.dirac() == dirac::product(a.L2.dirac(), b.L2.dirac()), "first_product: L2 != L2a x L2b");
  return p;
}

GKPair second_product(const BiHermitianData& a, const BiHermitianData& b) {
  validate(a);
  validate(b);
  if (!is_kahler_point(a) || !is_kahler_point(b))
    throw PreconditionError("second_product: factors must be Kaehler points");
  const GKPair pa = gk_from_bihermitian(a);
  const GKPair pb = gk_from_bihermitian(b);
  GKPair p = gk_from_bihermitian({block_diag(a.g, b.g), zeros<Rational>(a.dim() + b.dim(), a.dim() + b.dim()),
                                  block_diag(a.Jp, b.Jp), block_diag(a.Jp, MatQ(-b.Jp))});
  require(p.L1.dirac() == dirac::product(pa.L1.dirac(), pb.L2.dirac()), "second_product: L1 != L1a x L2b");
  require(p.L2.dirac() == dirac::product(pa.L2.dirac(), pb.L1.dirac()), "second_product: L2 != L2a x L1b");

  const Index na = a.dim();
  const Index nb = b.dim();
  const SubspaceQi va10 = plus_i(a.Jp);
  const SubspaceQi vb10 = plus_i(b.Jp);
  const MatQ wa = kahler_form(a.g, a.Jp);
  const MatQ wb = kahler_form(b.g, b.Jp);
  const SubspaceQi e1 = SubspaceQi::span(MatQi(block_diag(va10.basis(), identity<GaussRational>(nb))));
  const SubspaceQi e2 = SubspaceQi::span(MatQi(block_diag(identity<GaussRational>(na), vb10.basis())));
  const MatQi f1 = MatQi(-kI * cx(block_diag(zeros<Rational>(na, na), wb)));
  const MatQi f2 = MatQi(-kI * cx(block_diag(wa, zeros<Rational>(nb, nb))));
  require(p.L1.dirac() == dirac::build_from_form(e1, f1), "second_product: L1 != L(V10a x Vb, -i omega_b)");
  require(p.L2.dirac() == dirac::build_from_form(e2, f2), "second_product: L2 != L(Va x V10b, -i omega_a)");

  const auto [s1, s2] = f_structures_of(p);
  require(s1.F == block_diag(a.Jp, zeros<Rational>(nb, nb)), "second_product: F1 != J_a + 0");
  require(s2.F == block_diag(zeros<Rational>(na, na), b.Jp), "second_product: F2 != 0 + J_b");
  require(gclin::normal_form_omega(p.L1, s1).has_value(), "second_product: L1 not in normal form");
  require(gclin::normal_form_omega(p.L2, s2).has_value(), "second_product: L2 not in normal form");
  return p;
}

Quaternions quaternions() {
  Quaternions q{zeros<Rational>(4, 4), zeros<Rational>(4, 4), zeros<Rational>(4, 4)};
  // column c holds the image of the c-th basis vector as (row, sign)
  auto set = [](MatQ& m, std::array<std::pair<int, int>, 4> images) {
    for (int c = 0; c < 4; ++c) m(images[c].first - 1, c) = Rational(images[c].second);
  };
  // i: 1→i, i→−1, j→k, k→−j
  set(q.I, {{{2, 1}, {1, -1}, {4, 1}, {3, -1}}});
  // j: 1→j, i→−k, j→−1, k→i
  set(q.J, {{{3, 1}, {4, -1}, {1, -1}, {2, 1}}});
  q.K = q.I * q.J;
  return q;
}

BiHermitianData hyperkahler_point() {
  const Quaternions q = quaternions();
  const MatQ g = identity<Rational>(4);
  return {g, kahler_form(g, q.I), q.J, q.K};
}

TamedData hyperkahler_tamed() {
  const Quaternions q = quaternions();
  const MatQ g = identity<Rational>(4);
  return {MatQ(-(kahler_form(g, q.J) + kahler_form(g, q.K))), q.J};
}

BiHermitianData kahler_point(Index m) {
  MatQ j = zeros<Rational>(2 * m, 2 * m);
  for (Index k = 0; k < m; ++k) {
    j(2 * k, 2 * k + 1) = Rational(-1);
    j(2 * k + 1, 2 * k) = Rational(1);
  }
  return {identity<Rational>(2 * m), zeros<Rational>(2 * m, 2 * m), j, j};
}

}  // namespace gencx::gkahler
