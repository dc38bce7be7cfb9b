#include <gencx/gclin/gclin.hpp>

#include <gencx/exactla/linsolve.hpp>

namespace gencx::gclin {
namespace {

const GaussRational kI = GaussRational::i();

MatQi cx(const MatQ& m) { return complexify(m); }

MatQi hstack3(const MatQi& a, const MatQi& b, const MatQi& c) { return hstack(hstack(a, b), c); }

/// M diag(λ_k) M⁻¹, required to be real.
MatQ real_from_eigen(const MatQi& m, const std::vector<GaussRational>& lambda, const char* what) {
  MatQi d = MatQi::Zero(m.cols(), m.cols());
  for (Index k = 0; k < m.cols(); ++k) d(k, k) = lambda[static_cast<size_t>(k)];
  const MatQi r = m * d * inverse_or_throw(m, what);
  if (!is_real(r)) throw InvariantError(std::string(what) + ": endomorphism is not real");
  return real_part(r);
}

void require_square(const MatQ& m, Index n, const char* what) {
  if (m.rows() != n || m.cols() != n)
    throw ShapeError(std::string(what) + ": expected " + shape_string(n, n) + ", got " + shape_of(m));
}

/// Real-coordinate basis of V⁰ ⊕ (V^{1,0} ⊕ V^{0,1}) real points.
MatQ adapted_basis(const FStructure& f) {
  const SubspaceQ rest = real_points(sum(f.v10, f.v01));
  return hstack(f.v0_real.basis(), rest.basis());
}

Mat<Rational> bivector_of(const SubspaceQ& d, const MatQ& sigma_on_d) {
  auto p = dirac::is_poisson(dirac::build(d, sigma_on_d));
  if (!p) throw InvariantError("associated structure is not Poisson");
  return p->eta;
}

}  // namespace

bool is_cr(const SubspaceQi& c) { return intersect(c, conjugate(c)).is_zero(); }

bool is_cocr(const SubspaceQi& c) { return sum(c, conjugate(c)).is_full(); }

bool annihilator_duality(const SubspaceQi& c) { return is_cocr(c) == is_cr(annihilator(c)); }

FStructure f_split(const MatQ& f) {
  if (!is_square(f)) throw ShapeError("f_split: non-square F " + shape_of(f));
  const Index n = f.rows();
  const MatQ f2 = f * f;
  if (!is_zero_matrix(MatQ(f2 * f + f))) throw PreconditionError("f_split: F^3 + F != 0");
  FStructure out;
  out.F = f;
  out.v0_real = image(MatQ(f2 + identity<Rational>(n)));
  out.v0 = complexify(out.v0_real);
  out.v10 = image(MatQi(-(cx(f2) + kI * cx(f)) / GaussRational(2)));
  out.v01 = conjugate(out.v10);
  if (out.v0.dim() + 2 * out.v10.dim() != n) throw InvariantError("f_split: eigenspaces do not span V^C");
  return out;
}

FStructure f_from_split(const SubspaceQi& v0, const SubspaceQi& v10) {
  v0.check_same_ambient(v10, "f_from_split");
  if (conjugate(v0) != v0) throw PreconditionError("f_from_split: V0 is not conjugation invariant");
  if (!is_cr(v10)) throw PreconditionError("f_from_split: V10 meets its conjugate");
  const SubspaceQi v01 = conjugate(v10);
  const Index n = v0.ambient_dim();
  if (v0.dim() + 2 * v10.dim() != n || !sum(v0, sum(v10, v01)).is_full())
    throw PreconditionError("f_from_split: V0 + V10 + V01 is not a direct sum spanning V^C");
  std::vector<GaussRational> lambda;
  lambda.insert(lambda.end(), static_cast<size_t>(v0.dim()), GaussRational(0));
  lambda.insert(lambda.end(), static_cast<size_t>(v10.dim()), kI);
  lambda.insert(lambda.end(), static_cast<size_t>(v10.dim()), -kI);
  return f_split(real_from_eigen(hstack3(v0.basis(), v10.basis(), v01.basis()), lambda, "f_from_split"));
}

bool is_f_linear(const MatQ& t, const FStructure& fv, const FStructure& fw) {
  if (t.cols() != fv.dim() || t.rows() != fw.dim())
    throw ShapeError("is_f_linear: map " + shape_of(t) + " between dimensions " + std::to_string(fv.dim()) +
                     " and " + std::to_string(fw.dim()));
  const bool by_matrix = t * fv.F == fw.F * t;
  const MatQi tc = cx(t);
  const bool by_subspaces = fw.cr().contains(apply(tc, fv.cr())) && fw.cocr().contains(apply(tc, fv.cocr()));
  if (by_matrix != by_subspaces) throw InvariantError("is_f_linear: tF = Ft and CR/co-CR linearity disagree");
  return by_matrix;
}

GCStructure GCStructure::from_dirac(const DiracQi& l) {
  const Index n = l.v_dim();
  const bool by_conjugate = intersect(l.subspace(), conjugate(l.subspace())).is_zero();

  GCStructure g;
  g.l_ = l;
  auto dec = dirac::decompose(l);
  g.e_ = std::move(dec.E);
  g.eps_ = std::move(dec.eps);
  bool by_form = false;
  MatQ sigma;
  if (is_cocr(g.e_)) {
    g.d_ = real_points(intersect(g.e_, conjugate(g.e_)));
    const MatQi c = g.e_.coordinates_of(cx(g.d_.basis()));
    sigma = imag_part(MatQi(c.transpose() * g.eps_ * c));
    by_form = is_invertible(sigma);
  }
  if (by_conjugate != by_form)
    throw InvariantError("gc_from_dirac: L∩L̄ = 0 and the co-CR/Im ε characterization disagree");
  if (!by_conjugate) throw PreconditionError("not generalized complex: L meets its conjugate");

  std::vector<GaussRational> lambda(static_cast<size_t>(n), kI);
  lambda.insert(lambda.end(), static_cast<size_t>(n), -kI);
  g.j_ = real_from_eigen(hstack(l.basis(), conjugate(l.basis())), lambda, "gc_from_dirac");

  const MatQ id = identity<Rational>(2 * n);
  if (g.j_ * g.j_ != -id) throw InvariantError("gc_from_dirac: J^2 != -Id");
  const MatQ p = dirac::pairing_gram<Rational>(n);
  if (MatQ(g.j_.transpose() * p * g.j_) != p) throw InvariantError("gc_from_dirac: J does not preserve the pairing");
  if (kernel(MatQi(cx(g.j_) - kI * cx(id))) != l.subspace())
    throw InvariantError("gc_from_dirac: +i eigenspace of J differs from L");

  g.assoc_.eta = bivector_of(g.d_, sigma);
  // π∘(J|_{V*}) is the map V* → V of the bivector, i.e. etaᵀ.
  if (MatQ(g.j_.topRightCorner(n, n).transpose()) != g.assoc_.eta)
    throw InvariantError("gc_from_dirac: π∘J|_{V*} differs from the Im ε bivector");
  return g;
}

void check_compatible(const FStructure& f, const MatQ& omega) {
  require_square(omega, f.dim(), "compatibility: omega");
  require_skew(omega, "compatibility: omega");
  if (complexify(kernel(omega)) != sum(f.v10, f.v01))
    throw PreconditionError("incompatible (F, omega): ker omega != V10 + V01");
  if (!is_invertible(dirac::restrict_form(omega, f.v0_real)))
    throw PreconditionError("incompatible (F, omega): omega|V0 is degenerate");
}

MatQ normal_form_block(const FStructure& f, const MatQ& omega) {
  check_compatible(f, omega);
  const Index n = f.dim();
  const MatQ eta = bivector_of(f.v0_real, dirac::restrict_form(omega, f.v0_real));
  MatQ j(2 * n, 2 * n);
  j << f.F, eta.transpose(), -omega.transpose(), -f.F.transpose();
  return j;
}

GCStructure normal_form_build(const FStructure& f, const MatQ& omega) {
  const MatQ block = normal_form_block(f, omega);
  const SubspaceQi e = f.cocr();
  const MatQi eps = kI * dirac::restrict_form(cx(omega), e);
  GCStructure g = GCStructure::from_dirac(dirac::build(e, eps));
  if (g.J() != block) throw InvariantError("normal_form_build: J differs from [[F, eta], [-omega, -F^T]]");
  return g;
}

std::optional<MatQ> normal_form_omega(const GCStructure& l, const FStructure& f) {
  if (f.dim() != l.v_dim() || l.cocr() != f.cocr()) return std::nullopt;
  const MatQ m = adapted_basis(f);
  const Index k = f.v0_real.dim();
  const MatQi c = l.cocr().coordinates_of(cx(f.v0_real.basis()));
  MatQ sigma = MatQ::Zero(m.cols(), m.cols());
  sigma.topLeftCorner(k, k) = imag_part(MatQi(c.transpose() * l.eps() * c));
  const MatQ minv = inverse_or_throw(m, "adapted basis");
  const MatQ omega = minv.transpose() * sigma * minv;
  try {
    if (normal_form_build(f, omega) == l) return omega;
  } catch (const PreconditionError&) {
  }
  return std::nullopt;
}

NormalFormCertificate normalize(const GCStructure& l, const FStructure& f) {
  const Index n = l.v_dim();
  if (f.dim() != n) throw ShapeError("normalize: f-structure on a different space");
  if (l.cocr() != f.cocr()) throw PreconditionError("normalize: pi(L) is not V0 + V10 of F");

  const SubspaceQi& e = l.cocr();
  const MatQi v0 = cx(f.v0_real.basis());
  const MatQi& v10 = f.v10.basis();
  const MatQi c0 = e.coordinates_of(v0);
  const MatQi c10 = e.coordinates_of(v10);
  const MatQi eps00 = c0.transpose() * l.eps() * c0;
  const MatQi eps1e = c10.transpose() * l.eps();
  const MatQi v10bar = conjugate(v10);

  auto residual = [&](const VecQ& u, bool gauge) {
    const MatQi b = cx(skew_from_upper(n, u));
    const MatQi r0 = eps00 + v0.transpose() * b * v0;
    const MatQi r1 = eps1e + v10.transpose() * b * e.basis();
    const MatQi r2 = v10.transpose() * b * v10bar;
    std::vector<GaussRational> out;
    for (Index i = 0; i < r0.rows(); ++i)
      for (Index j = i + 1; j < r0.cols(); ++j) out.emplace_back(r0(i, j).re());
    for (Index j = 0; j < r1.cols(); ++j)
      for (Index i = 0; i < r1.rows(); ++i) out.push_back(r1(i, j));
    if (gauge)
      for (Index j = 0; j < r2.cols(); ++j)
        for (Index i = 0; i < r2.rows(); ++i) out.push_back(r2(i, j));
    VecQi v(static_cast<Index>(out.size()));
    for (Index k = 0; k < v.size(); ++k) v(k) = out[static_cast<size_t>(k)];
    return v;
  };

  const Index unknowns = n * (n - 1) / 2;
  const AffineSolution full = solve_affine(unknowns, [&](const VecQ& u) { return residual(u, true); });
  const AffineSolution loose = solve_affine(unknowns, [&](const VecQ& u) { return residual(u, false); });
  if (!full.consistent()) throw InvariantError("normalize: defining system for B is inconsistent");

  NormalFormCertificate cert;
  cert.F = f;
  cert.B = skew_from_upper(n, *full.particular);
  cert.nullity = full.nullity();
  cert.gauge_dim = loose.nullity();
  auto omega = normal_form_omega(bfield(cert.B, l), f);
  if (!omega) throw InvariantError("normalize: exp(B)(L) is not in normal form");
  cert.omega = std::move(*omega);
  return cert;
}

GCStructure bfield(const MatQ& b, const GCStructure& l) {
  return GCStructure::from_dirac(dirac::bfield(cx(b), l.dirac()));
}

GCStructure pushforward(const MatQ& t, const GCStructure& l) {
  return GCStructure::from_dirac(dirac::pushforward(cx(t), l.dirac()));
}

GCLinearity gc_linearity(const MatQ& t, const GCStructure& lv, const GCStructure& lw) {
  if (t.cols() != lv.v_dim() || t.rows() != lw.v_dim())
    throw ShapeError("is_gc_linear: map " + shape_of(t) + " between dimensions " + std::to_string(lv.v_dim()) +
                     " and " + std::to_string(lw.v_dim()));
  GCLinearity out;
  out.cocr_linear = lw.cocr().contains(apply(cx(t), lv.cocr()));
  const MatQ& ev = lv.assoc_poisson().eta;
  const MatQ& ew = lw.assoc_poisson().eta;
  out.poisson = MatQ(t * ev * t.transpose()) == ew;
  if (cross_checks_enabled() &&
      out.poisson != dirac::is_poisson_morphism(t, dirac::from_bivector(ev), dirac::from_bivector(ew)))
    throw InvariantError("is_gc_linear: bivector and pushforward Poisson tests disagree");
  return out;
}

bool is_gc_linear(const MatQ& t, const GCStructure& lv, const GCStructure& lw) {
  return gc_linearity(t, lv, lw).linear();
}

GCLinearWitness decompose_gc_linear(const MatQ& t, const GCStructure& lv, const GCStructure& lw) {
  if (!is_gc_linear(t, lv, lw)) throw PreconditionError("decompose_gc_linear: t is not generalized complex linear");
  GCLinearWitness w;
  w.D_V = lv.symplectic_part();
  w.D_W = lw.symplectic_part();

  // V′ = K′ ⊕ V″ with K′ a complement of ker t ∩ D_V in ker t and V″ a
  // complement of t⁻¹(D_W) = ker t + D_V; then t(V′) = t(V″) meets D_W in 0.
  const SubspaceQ kt = kernel(t);
  const SubspaceQ k_prime = intersect(kt, pivot_complement(intersect(kt, w.D_V)));
  const SubspaceQ v_second = pivot_complement(preimage(t, w.D_W));
  w.V_prime = sum(k_prime, v_second);
  const SubspaceQ image_second = apply(t, v_second);
  w.W_prime = sum(image_second, pivot_complement(sum(w.D_W, image_second)));

  w.F_V = f_from_split(complexify(w.D_V), intersect(lv.cocr(), complexify(w.V_prime)));
  w.F_W = f_from_split(complexify(w.D_W), intersect(lw.cocr(), complexify(w.W_prime)));
  const NormalFormCertificate cv = normalize(lv, w.F_V);
  const NormalFormCertificate cw = normalize(lw, w.F_W);
  w.B_V = cv.B;
  w.B_W = cw.B;
  w.omega_V = cv.omega;
  w.omega_W = cw.omega;

  w.t_symp = w.D_W.coordinates_of(MatQ(t * w.D_V.basis()));
  w.t_cplx = w.W_prime.coordinates_of(MatQ(t * w.V_prime.basis()));
  w.sigma_V = dirac::restrict_form(w.omega_V, w.D_V);
  w.sigma_W = dirac::restrict_form(w.omega_W, w.D_W);
  w.j_V = w.V_prime.coordinates_of(MatQ(w.F_V.F * w.V_prime.basis()));
  w.j_W = w.W_prime.coordinates_of(MatQ(w.F_W.F * w.W_prime.basis()));
  return w;
}

WitnessReplay replay_witness(const GCLinearWitness& w, const MatQ& t, const GCStructure& lv, const GCStructure& lw) {
  WitnessReplay r;
  auto need = [&](bool ok, const char* what) {
    if (!ok) r.failures.emplace_back(what);
    return ok;
  };
  r.i = is_gc_linear(t, lv, lw);

  {
    bool ok = true;
    const auto ov = normal_form_omega(bfield(w.B_V, lv), w.F_V);
    const auto ow = normal_form_omega(bfield(w.B_W, lw), w.F_W);
    ok &= need(ov && *ov == w.omega_V, "exp(B_V)(L_V) is not in normal form for F_V");
    ok &= need(ow && *ow == w.omega_W, "exp(B_W)(L_W) is not in normal form for F_W");
    ok &= need(is_f_linear(t, w.F_V, w.F_W), "t is not f-linear");
    if (ok) {
      const MatQ ev = bivector_of(w.F_V.v0_real, dirac::restrict_form(w.omega_V, w.F_V.v0_real));
      const MatQ ew = bivector_of(w.F_W.v0_real, dirac::restrict_form(w.omega_W, w.F_W.v0_real));
      ok &= need(MatQ(t * ev * t.transpose()) == ew, "t is not a Poisson morphism of L(V0, omega)");
    }
    r.ii = ok;
  }

  {
    bool ok = true;
    ok &= need(is_direct_sum(w.D_V, w.V_prime) && sum(w.D_V, w.V_prime).is_full(), "V != D_V + V'");
    ok &= need(is_direct_sum(w.D_W, w.W_prime) && sum(w.D_W, w.W_prime).is_full(), "W != D_W + W'");
    ok &= need(MatQ(t * w.D_V.basis()) == MatQ(w.D_W.basis() * w.t_symp), "t(D_V) is not t_symp");
    ok &= need(MatQ(t * w.V_prime.basis()) == MatQ(w.W_prime.basis() * w.t_cplx), "t(V') is not t_cplx");
    ok &= need(is_zero_matrix(MatQ(w.omega_V * w.V_prime.basis())) && is_zero_matrix(MatQ(w.F_V.F * w.D_V.basis())),
               "normal form on V does not split along D_V + V'");
    ok &= need(is_zero_matrix(MatQ(w.omega_W * w.W_prime.basis())) && is_zero_matrix(MatQ(w.F_W.F * w.D_W.basis())),
               "normal form on W does not split along D_W + W'");
    const bool symplectic = is_invertible(w.sigma_V) && is_invertible(w.sigma_W);
    ok &= need(symplectic, "D_V or D_W is not symplectic");
    if (symplectic) {
      const MatQ ev = inverse_or_throw(w.sigma_V, "sigma_V");
      const MatQ ew = inverse_or_throw(w.sigma_W, "sigma_W");
      ok &= need(MatQ(w.t_symp * ev * w.t_symp.transpose()) == ew, "t_symp is not a Poisson morphism");
    }
    const Index pv = w.j_V.rows();
    const Index pw = w.j_W.rows();
    ok &= need(w.j_V * w.j_V == -identity<Rational>(pv) && w.j_W * w.j_W == -identity<Rational>(pw),
               "F is not a complex structure on V' or W'");
    ok &= need(w.t_cplx * w.j_V == w.j_W * w.t_cplx, "t_cplx is not complex linear");
    r.iii = ok;
  }
  return r;
}

std::optional<MatQ> bfield_equivalent(const GCStructure& l1, const GCStructure& l2) {
  const Index n = l1.v_dim();
  if (l2.v_dim() != n) throw ShapeError("bfield_equivalent: structures on different spaces");
  if (l1.cocr() != l2.cocr()) return std::nullopt;
  const SubspaceQi& e = l1.cocr();
  const MatQi target = l2.eps() - l1.eps();
  const AffineSolution sol = solve_affine(n * (n - 1) / 2, [&](const VecQ& u) {
    const MatQi d = dirac::restrict_form(cx(skew_from_upper(n, u)), e) - target;
    return Vec<GaussRational>(Eigen::Map<const VecQi>(d.data(), d.size()));
  });
  if (!sol.consistent()) return std::nullopt;
  MatQ b = skew_from_upper(n, *sol.particular);
  if (bfield(b, l1) != l2) throw InvariantError("bfield_equivalent: solved B does not map L1 to L2");
  return b;
}

bool graph_invariance_check(const MatQ& t, const GCStructure& lv, const GCStructure& lw) {
  const Index n = lv.v_dim();
  const Index m = lw.v_dim();
  if (t.cols() != n || t.rows() != m)
    throw ShapeError("graph_invariance_check: map " + shape_of(t) + " between dimensions " + std::to_string(n) +
                     " and " + std::to_string(m));
  MatQ g = MatQ::Zero(2 * n + 2 * m, n + m);
  g.block(0, 0, n, n) = identity<Rational>(n);
  g.block(n, n, n, m) = t.transpose();
  g.block(2 * n, 0, m, n) = t;
  g.block(2 * n + m, n, m, m) = identity<Rational>(m);
  const SubspaceQ s = image(g);
  return apply(block_diag(lv.J(), lw.J()), s) == s;
}

TypeParts type_decompose(const MatQ& b, const MatQ& j) {
  if (!is_square(j)) throw ShapeError("type_decompose: non-square J " + shape_of(j));
  require_square(b, j.rows(), "type_decompose: b");
  if (j * j != -identity<Rational>(j.rows())) throw PreconditionError("type_decompose: J^2 != -Id");
  const MatQ jbj = j.transpose() * b * j;
  TypeParts out{(b - jbj) / Rational(2), (b + jbj) / Rational(2)};
  return out;
}

GCStructure complex_type(const MatQ& j) {
  FStructure f = f_split(j);
  if (!f.v0.is_zero()) throw PreconditionError("complex_type: J^2 != -Id");
  return normal_form_build(f, MatQ::Zero(j.rows(), j.cols()));
}

GCStructure symplectic_type(const MatQ& omega) {
  return normal_form_build(f_split(MatQ::Zero(omega.rows(), omega.rows())), omega);
}

}  // namespace gencx::gclin
