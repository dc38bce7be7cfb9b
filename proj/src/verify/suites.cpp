#include <gencx/verify/suites.hpp>

#include <gencx/gkahler/gkahler.hpp>
#include <gencx/liecourant/liecourant.hpp>
#include <gencx/verify/gc_generators.hpp>
#include <gencx/verify/generators.hpp>
#include <gencx/verify/gk_generators.hpp>

#include <map>
#include <sstream>

namespace gencx::verify {
namespace {

using namespace gclin;
namespace gk = gkahler;
namespace lc = liecourant;

const GaussRational kI = GaussRational::i();

MatQi cx(const MatQ& m) { return complexify(m); }

/// Counts instances and keeps the first failure.
class Tally {
 public:
  explicit Tally(SuiteResult& r) : r_(r) {}

  void expect(bool ok, const std::string& what) {
    if (ok || !first_.empty()) {
      failed_ = failed_ || !ok;
      return;
    }
    failed_ = true;
    std::ostringstream os;
    os << "instance " << r_.instances << ": " << what;
    first_ = os.str();
  }
  void next() { ++r_.instances; }

  SuiteResult& finish(const std::string& summary = {}) {
    r_.pass = !failed_;
    r_.detail = failed_ ? first_ : summary;
    return r_;
  }

 private:
  SuiteResult& r_;
  bool failed_ = false;
  std::string first_;
};

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : text) h = (h ^ c) * 0x100000001B3ULL;
  return h;
}

template <class S>
void closed_formulas_over(Rng& rng, Tally& t, int count) {
  for (int k = 0; k < count; ++k, t.next()) {
    const Index n = rng.uniform(0, 6);
    const Index m = rng.uniform(0, 6);
    const Mat<S> f = rng.matrix_over<S>(m, n, 2);
    const auto lv = random_dirac<S>(rng, n);
    const auto lw = random_dirac<S>(rng, m);
    const auto push = dirac::pushforward_def(f, lv);
    t.expect(push == dirac::pushforward_formula(f, lv), std::string("pushforward formula over ") + FieldTraits<S>::tag);
    t.expect(dirac::is_maximal_isotropic(push.subspace()), "pushforward is not maximal isotropic");
    const auto pull = dirac::pullback_def(f, lw);
    t.expect(pull == dirac::pullback_formula(f, lw), std::string("pullback formula over ") + FieldTraits<S>::tag);
    t.expect(dirac::is_maximal_isotropic(pull.subspace()), "pullback is not maximal isotropic");
  }
}

SuiteResult closed_formulas(std::uint64_t seed) {
  SuiteResult r;
  Tally t(r);
  Rng rng(seed);
  closed_formulas_over<Rational>(rng, t, 250);
  closed_formulas_over<GaussRational>(rng, t, 250);
  return t.finish("250 over Q, 250 over Q(i), dim V, dim W <= 6");
}

SuiteResult poisson_quotient_suite(std::uint64_t seed) {
  SuiteResult r;
  Tally t(r);
  Rng rng(seed);
  for (int k = 0; k < 200; ++k, t.next()) {
    const auto l = random_dirac<Rational>(rng, rng.uniform(0, 6));
    const auto q = dirac::poisson_quotient(l);
    const auto lp = dirac::pushforward_def(q.phi, l);
    t.expect(dirac::pullback_def(q.phi, lp) == l, "pullback of the quotient differs from L");
    t.expect(dirac::is_poisson(lp).has_value(), "quotient is not Poisson");
    t.expect(q.phi.rows() == l.v_dim() - dirac::vector_intersection(l).dim(), "quotient has the wrong dimension");
  }
  return t.finish("200 random L, dim V <= 6");
}

SuiteResult functoriality(std::uint64_t seed) {
  SuiteResult r;
  Tally t(r);
  Rng rng(seed);
  for (int k = 0; k < 200; ++k, t.next()) {
    const Index a = rng.uniform(0, 5), b = rng.uniform(0, 5), c = rng.uniform(0, 5);
    const MatQ f = rng.matrix(b, a, 2);
    const MatQ g = rng.matrix(c, b, 2);
    const auto la = random_dirac<Rational>(rng, a);
    const auto lc = random_dirac<Rational>(rng, c);
    t.expect(dirac::pushforward(MatQ(g * f), la) == dirac::pushforward(g, dirac::pushforward(f, la)),
             "(g f)_* != g_* f_*");
    t.expect(dirac::pullback(MatQ(g * f), lc) == dirac::pullback(f, dirac::pullback(g, lc)), "(g f)^* != f^* g^*");
  }
  return t.finish("200 composable triples, dimensions <= 5");
}

SuiteResult normalize_suite(std::uint64_t seed) {
  SuiteResult r;
  Tally t(r);
  Rng rng(seed);
  for (int k = 0; k < 300; ++k, t.next()) {
    const Index n = 2 * rng.uniform(1, 3);
    const auto p = random_compatible(rng, n);
    const auto nf = normal_form_build(p.F, p.omega);
    const MatQ b0 = rng.skew<Rational>(n, 2);
    const auto scrambled = bfield(b0, nf);
    const auto cert = normalize(scrambled, p.F);
    t.expect(cert.nullity == 0, "uniqueness system has positive nullity");
    t.expect(cert.omega == p.omega, "recovered omega differs");
    t.expect(bfield(cert.B, scrambled) == normal_form_build(p.F, cert.omega), "exp(B)(L) is not the normal form");
  }
  return t.finish("300 B-field-scrambled normal forms, dim V in {2, 4, 6}");
}

/// Bivector of L(real points of E ∩ Ē, Im ε) computed from ε alone.
MatQ symplectic_part_bivector(const GCStructure& l) {
  const SubspaceQ& d = l.symplectic_part();
  const MatQi c = l.cocr().coordinates_of(cx(d.basis()));
  const MatQ sigma = imag_part(MatQi(c.transpose() * l.eps() * c));
  const auto p = dirac::is_poisson(dirac::build(d, sigma));
  if (!p) throw InvariantError("symplectic part is not Poisson");
  return p->eta;
}

SuiteResult bivector_block_identities(std::uint64_t seed) {
  SuiteResult r;
  Tally t(r);
  Rng rng(seed);
  for (int k = 0; k < 300; ++k, t.next()) {
    const Index n = 2 * rng.uniform(1, 3);
    const auto l = random_gc(rng, n);
    const MatQ top_right = l.J().topRightCorner(n, n);
    t.expect(MatQ(top_right.transpose()) == symplectic_part_bivector(l), "pi(J|V*) differs from the Im eps bivector");
    const auto p = random_compatible(rng, n);
    t.expect(normal_form_build(p.F, p.omega).J() == normal_form_block(p.F, p.omega), "block matrix differs from J");
  }
  return t.finish("300 random structures and 300 normal forms");
}

SuiteResult bfield_invariance(std::uint64_t seed) {
  SuiteResult r;
  Tally t(r);
  Rng rng(seed);
  int linear = 0;
  for (int k = 0; k < 200; ++k, t.next()) {
    const Index n = 2 * rng.uniform(1, 2);
    const auto lv = random_gc(rng, n);
    const MatQ iso = rng.invertible<Rational>(n, 2);
    const auto lw = k % 2 == 0 ? bfield(rng.skew<Rational>(n, 2), pushforward(iso, lv)) : random_gc(rng, n);
    const bool direct = is_gc_linear(iso, lv, lw);
    linear += direct;
    const MatQ bv = rng.skew<Rational>(n, 2), bw = rng.skew<Rational>(n, 2);
    t.expect(is_gc_linear(iso, bfield(bv, lv), bfield(bw, lw)) == direct, "gc-linearity is not B-field invariant");
    t.expect(direct == bfield_equivalent(pushforward(iso, lv), lw).has_value(),
             "gc-linear differs from B-field equivalence of the pushforward");
    if (k % 2 == 0) t.expect(direct, "constructed gc-linear isomorphism rejected");
  }
  t.expect(linear >= 100 && linear < 200, "census of linear instances is degenerate");
  return t.finish(std::to_string(linear) + " of 200 isomorphisms gc-linear");
}

}  // namespace

GraphCounterexample graph_counterexample() {
  MatQ j = zeros<Rational>(4, 4);
  j(1, 0) = j(3, 2) = Rational(1);
  j(0, 1) = j(2, 3) = Rational(-1);
  auto wedge = [](Index i, Index k, long c) {
    MatQ m = zeros<Rational>(4, 4);
    m(i, k) = Rational(c);
    m(k, i) = Rational(-c);
    return m;
  };
  const MatQ b_pure = wedge(0, 2, 1) + wedge(1, 3, -1);
  const MatQ b_11 = wedge(0, 1, 1);
  const GCStructure lv = complex_type(j);
  return {identity<Rational>(4), lv, bfield(b_pure, lv), bfield(b_11, lv), b_pure, b_11};
}

namespace {

SuiteResult graph_suite(std::uint64_t) {
  SuiteResult r;
  Tally t(r);
  const auto g = graph_counterexample();
  const MatQ j = g.lv.J().topLeftCorner(4, 4);
  t.expect(is_zero_matrix(type_decompose(g.b_pure, j).b11), "b_pure has a (1,1) part");
  t.expect(type_decompose(g.b_11, j).b11 == g.b_11, "b_11 is not of type (1,1)");
  t.expect(!graph_invariance_check(g.t, g.lv, g.lw_pure), "graph invariance holds for the (2,0)+(0,2) field");
  t.expect(is_gc_linear(g.t, g.lv, g.lw_pure), "identity is not gc-linear for the (2,0)+(0,2) field");
  t.next();
  t.expect(graph_invariance_check(g.t, g.lv, g.lw_11), "graph invariance fails for the (1,1) field");
  t.next();
  return t.finish("pure type: graph false, gc-linear true; (1,1): graph true");
}

SuiteResult bihermitian_suite(std::uint64_t seed) {
  SuiteResult r;
  Tally t(r);
  Rng rng(seed);
  std::map<std::string, int> shapes;
  for (int k = 0; k < 300; ++k, t.next()) {
    const Index n = k % 3 == 0 ? 6 : 4;
    const auto d = random_bihermitian(rng, n);
    const auto p = gk::gk_from_bihermitian(d);
    t.expect(gk::bihermitian_from_gk(p.L1, p.L2) == d, "round trip differs");
    for (const auto& c : gk::subspace_identities(p)) t.expect(c.pass, c.name);
    t.expect(MatQ(p.Hp.basis().transpose() * d.g * p.Hm.basis()).isZero(), "H+ not orthogonal to H-");
    (void)gk::f_structures_of(p);
    ++shapes[std::to_string(p.Hp.dim()) + "/" + std::to_string(p.Hm.dim()) + "/" + std::to_string(p.Vcal.dim())];
  }
  std::string summary = "dim H+/H-/V census:";
  for (const auto& [k, v] : shapes) summary += " " + k + "x" + std::to_string(v);
  t.expect(shapes.size() >= 4, "too few splitting shapes: " + summary);
  return t.finish(summary);
}

SuiteResult tamed_suite(std::uint64_t seed) {
  SuiteResult r;
  Tally t(r);
  Rng rng(seed);
  for (int k = 0; k < 300; ++k, t.next()) {
    const Index n = k % 5 == 0 ? 6 : 4;
    const bool both = n == 4;
    const auto td = random_tamed(rng, n, both);
    const auto [d, p] = gk::tamed_to_gk(td);
    const MatQ& e = td.eps;
    t.expect(d.g == MatQ((d.Jp + d.Jm).transpose() * e / Rational(2)), "g formula");
    t.expect(d.b == MatQ((d.Jp - d.Jm).transpose() * e / Rational(2)), "b formula");
    t.expect(MatQ(d.Jp.transpose() * e) == MatQ(-(e * d.Jm)), "eps(J+X, Y) != -eps(X, J-Y)");
    const auto h = gk::holo_poisson(p);
    t.expect(image(h.eta_p.eta) == p.Vcal, "image of eta+ != V");
    for (const MatQ* j : {&d.Jp, &d.Jm})
      t.expect(is_zero_matrix(type_decompose(h.eta_p.eta, MatQ(j->transpose())).b11), "eta+ has a (1,1) part");
    if (both) t.expect(gk::im_eps1_identity(p), "(Im eps1)(J+ - J-) != eps(J+ + J-)");
    const auto back = gk::gk_to_tamed(p);
    t.expect(back.tamed.eps == td.eps && back.tamed.J == td.J, "tamed round trip differs");
    t.expect(is_zero_matrix(back.B_residual), "nonzero residual B-field");
    if (both) {
      const auto sw = gk::gk_from_bihermitian({d.g, d.b, d.Jp, MatQ(-d.Jm)});
      t.expect(gk::holo_poisson(sw).eta_p.eta == MatQ(-h.eta_p.eta), "swapping L1, L2 does not negate eta+");
    }
  }
  return t.finish("300 tamed points: 240 in dim 4 with J+ - J- invertible, 60 in dim 6");
}

SuiteResult hyperkahler_suite(std::uint64_t) {
  SuiteResult r;
  Tally t(r);
  const auto q = gk::quaternions();
  const MatQ id = identity<Rational>(4);
  const MatQ wi = gk::kahler_form(id, q.I), wj = gk::kahler_form(id, q.J), wk = gk::kahler_form(id, q.K);
  const auto [d, p] = gk::tamed_to_gk(gk::hyperkahler_tamed());
  t.expect(d.Jm == q.K, "J- != K");
  t.expect(d.b == wi, "b != omega_I");
  t.expect(d.g == id, "g != Id");
  t.expect(p.L1.dirac() == dirac::build(SubspaceQi::full(4), MatQi(cx(MatQ(2 * wi)) - kI * cx(MatQ(wj - wk)))),
           "L1 != L(V^C, 2 omega_I - i(omega_J - omega_K))");
  t.expect(p.L2.dirac() == dirac::build(SubspaceQi::full(4), MatQi(-kI * cx(MatQ(wj + wk)))),
           "L2 != L(V^C, -i(omega_J + omega_K))");
  const auto e = gk::eps_pm(p);
  t.expect(e.eps_p == MatQi(-kI * (cx(wi) - kI * cx(wj))), "eps+ != -i(omega_I - i omega_J)");
  t.expect(e.eps_m == MatQi(-(cx(wk) - kI * cx(wi))), "eps- != -(omega_K - i omega_I)");
  t.expect(gk::holo_poisson(p).eta_p.as_map() == MatQ(-q.I / Rational(2)), "eta+ != -I g^-1 / 2");
  t.next();
  return t.finish("J- = K, b = omega_I, L1, L2, eps+-, eta+ reproduced");
}

SuiteResult census_suite(std::uint64_t seed) {
  SuiteResult r;
  Tally t(r);
  Rng rng(seed);
  std::map<std::string, int> triples;
  for (int point = 0; point < 50; ++point) {
    const auto p = gk::tamed_to_gk(random_tamed(rng, 4)).second;
    for (int k = 0; k < 10; ++k, t.next()) {
      const auto kind = static_cast<CensusKind>(k % 6);
      const MatQ phi = random_census_map(rng, p, kind);
      const auto f = gk::two_of_three(phi, p);
      t.expect(f.consistent(), "exactly two flags set");
      ++triples[std::string(f.holo_L1 ? "1" : "0") + (f.holo_L2 ? "1" : "0") + (f.commutes ? "1" : "0")];
    }
  }
  std::string summary = "flag triples (L1 L2 commutes):";
  for (const auto& [k, v] : triples) summary += " " + k + "x" + std::to_string(v);
  t.expect(triples.count("111") && triples.count("100") && triples.count("010") && triples.count("001"),
           "census misses a flag pattern: " + summary);
  return t.finish(summary);
}

SuiteResult lie_suite(std::uint64_t seed) {
  SuiteResult r;
  Tally t(r);
  Rng rng(seed);
  const auto ex = lc::so4_borel_example();
  t.expect(lc::is_integrable_invariant(ex.L.dirac(), ex.g), "Borel structure is not integrable");
  t.expect(normal_form_omega(ex.L, ex.F).has_value(), "Borel structure is not in normal form");
  t.next();
  const auto m = lc::multiplication_map_check(ex);
  t.expect(m.half_omega, "multiplication map is not holomorphic onto L(c, i omega / 2)");
  t.expect(!m.full_omega, "multiplication map is holomorphic onto L(c, i omega)");
  t.expect(m.diagonal_cocr, "diagonal is not co-CR");
  t.next();
  t.expect(lc::projection_cocr_check(ex).pass(), "projection check failed");
  t.next();
  const auto borel = lc::invariant_normal_form_criteria(ex.F, ex.borel.omega, ex.g);
  t.expect(borel.criteria() && borel.integrable, "Borel instance criteria");
  t.next();
  for (long s : {1, 2, -3}) {
    const auto [f, w] = lc::perturbed_instance(s);
    const auto c = lc::invariant_normal_form_criteria(f, w, ex.g);
    t.expect(c.agree(), "criteria disagree on a perturbed instance");
    t.expect(!c.criteria(), "perturbed instance passes the criteria");
    t.next();
  }
  const auto ab = lc::LieAlgebra::abelian(4);
  for (int k = 0; k < 10; ++k, t.next()) {
    const auto p = random_compatible(rng, 4);
    const auto c = lc::invariant_normal_form_criteria(p.F, p.omega, ab);
    t.expect(c.agree() && c.integrable, "abelian instance");
  }
  for (int k = 0; k < 10; ++k, t.next()) {
    const MatQ b = lc::exterior_derivative(rng.matrix(6, 1, 3).col(0), ex.g);
    t.expect(lc::is_closed(b, ex.g), "d lambda is not closed");
    const auto l = k % 2 == 0 ? ex.L.dirac() : random_dirac<GaussRational>(rng, 6);
    t.expect(lc::is_integrable_invariant(dirac::bfield(cx(b), l), ex.g) == lc::is_integrable_invariant(l, ex.g),
             "closed B-field changes integrability");
  }
  return t.finish("Borel example, multiplication, projection, criteria on 14 instances, 10 closed B-fields");
}

SuiteResult lattice_suite(std::uint64_t seed) {
  SuiteResult r;
  Tally t(r);
  Rng rng(seed);
  for (int k = 0; k < 100; ++k, t.next()) {
    const Index n = rng.uniform(1, 6);
    const auto a = random_subspace<GaussRational>(rng, n);
    const auto b = random_subspace<GaussRational>(rng, n);
    t.expect(sum(a, b).dim() + intersect(a, b).dim() == a.dim() + b.dim(), "dimension formula");
    t.expect(conjugate(conjugate(a)) == a, "conjugation is not an involution");
    t.expect(annihilator(annihilator(a)) == a, "double annihilator");
    t.expect(annihilator_duality(a), "co-CR / CR duality of annihilators");
    t.expect(SubspaceQi::span(a.basis()) == a, "canonical form is not idempotent");
  }
  return t.finish("100 random pairs of subspaces of Q(i)^n, n <= 6");
}

}  // namespace

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"c01-closed-formulas", 1, closed_formulas},
      {"c02-poisson-quotient", 2, poisson_quotient_suite},
      {"c03-functoriality", 3, functoriality},
      {"c04-normalize", 4, normalize_suite},
      {"c05-bivector-and-block-identities", 5, bivector_block_identities},
      {"c06-bfield-invariance-and-equivalence", 6, bfield_invariance},
      {"c07-graph-invariance-counterexample", 7, graph_suite},
      {"c08-bihermitian-correspondence", 8, bihermitian_suite},
      {"c09-tamed-correspondence", 9, tamed_suite},
      {"c10-hyperkahler", 10, hyperkahler_suite},
      {"c11-two-of-three-census", 11, census_suite},
      {"c12-lie-examples", 12, lie_suite},
      {"s00-subspace-lattice", 0, lattice_suite},
  };
  return all;
}

SuiteResult run_suite(const Suite& s, std::uint64_t seed) {
  SuiteResult r;
  try {
    r = s.run(mix(seed, fnv1a(s.name)));
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.name = s.name;
  r.criterion = s.criterion;
  return r;
}

std::vector<SuiteResult> run_all(std::uint64_t seed) {
  std::vector<SuiteResult> out;
  for (const auto& s : suites()) out.push_back(run_suite(s, seed));
  return out;
}

}  // namespace gencx::verify
