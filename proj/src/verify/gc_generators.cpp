#include <gencx/verify/gc_generators.hpp>

namespace gencx::verify {

MatQ standard_complex(Index m) {
  MatQ j = MatQ::Zero(2 * m, 2 * m);
  for (Index a = 0; a < m; ++a) {
    j(2 * a + 1, 2 * a) = 1;
    j(2 * a, 2 * a + 1) = -1;
  }
  return j;
}

MatQ standard_symplectic(Index k) {
  MatQ w = MatQ::Zero(2 * k, 2 * k);
  for (Index a = 0; a < k; ++a) {
    w(2 * a, 2 * a + 1) = 1;
    w(2 * a + 1, 2 * a) = -1;
  }
  return w;
}

MatQ random_symplectic(Rng& rng, Index dim) {
  const MatQ p = rng.invertible<Rational>(dim, 2);
  return p.transpose() * standard_symplectic(dim / 2) * p;
}

MatQ realify(const MatQi& a) {
  MatQ r(2 * a.rows(), 2 * a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      const Rational& x = a(i, j).re();
      const Rational& y = a(i, j).im();
      r(2 * i, 2 * j) = x;
      r(2 * i, 2 * j + 1) = -y;
      r(2 * i + 1, 2 * j) = y;
      r(2 * i + 1, 2 * j + 1) = x;
    }
  return r;
}

CompatiblePair random_compatible(Rng& rng, Index n) {
  const Index m = rng.uniform(0, n / 2);
  const Index k = n - 2 * m;
  const MatQ s = rng.invertible<Rational>(n, 2);
  const MatQ sinv = inverse_or_throw(s, "change of basis");
  const MatQ f = s * block_diag(MatQ(MatQ::Zero(k, k)), standard_complex(m)) * sinv;
  const MatQ omega = sinv.transpose() * block_diag(random_symplectic(rng, k), MatQ(MatQ::Zero(2 * m, 2 * m))) * sinv;
  return {gclin::f_split(f), omega};
}

gclin::GCStructure random_gc(Rng& rng, Index n) {
  const CompatiblePair p = random_compatible(rng, n);
  gclin::GCStructure l = gclin::normal_form_build(p.F, p.omega);
  l = gclin::bfield(rng.skew<Rational>(n, 2), l);
  return gclin::pushforward(rng.invertible<Rational>(n, 2), l);
}

GCLinearInstance random_gc_linear(Rng& rng) {
  // Symplectic part: D_W ⊂ D_V = D_W × extra, t_symp the projection.
  const Index kw = rng.uniform(0, 1);
  const Index kx = rng.uniform(0, 1);
  const Index pv = rng.uniform(0, 2 - kx);
  const Index pw = rng.uniform(0, 1);
  const MatQ sw = kw ? random_symplectic(rng, 2 * kw) : MatQ(0, 0);
  const MatQ sx = kx ? random_symplectic(rng, 2 * kx) : MatQ(0, 0);
  const MatQ sv = block_diag(sw, sx);
  MatQ t_symp = MatQ::Zero(2 * kw, 2 * (kw + kx));
  t_symp.leftCols(2 * kw) = identity<Rational>(2 * kw);
  const MatQ t_cplx = realify(rng.complex_matrix(pw, pv, 2));

  const Index dv = 2 * (kw + kx);
  const Index n = dv + 2 * pv;
  const Index m = 2 * kw + 2 * pw;
  const MatQ f_v = block_diag(MatQ(MatQ::Zero(dv, dv)), standard_complex(pv));
  const MatQ f_w = block_diag(MatQ(MatQ::Zero(2 * kw, 2 * kw)), standard_complex(pw));
  const MatQ om_v = block_diag(sv, MatQ(MatQ::Zero(2 * pv, 2 * pv)));
  const MatQ om_w = block_diag(sw, MatQ(MatQ::Zero(2 * pw, 2 * pw)));
  const MatQ t0 = block_diag(t_symp, t_cplx);

  const MatQ av = rng.invertible<Rational>(n, 2);
  const MatQ aw = rng.invertible<Rational>(m, 2);
  const MatQ avi = inverse_or_throw(av, "av");
  const MatQ awi = inverse_or_throw(aw, "aw");
  GCLinearInstance out{
      aw * t0 * avi,
      gclin::normal_form_build(gclin::f_split(MatQ(av * f_v * avi)), MatQ(avi.transpose() * om_v * avi)),
      gclin::normal_form_build(gclin::f_split(MatQ(aw * f_w * awi)), MatQ(awi.transpose() * om_w * awi)),
  };
  out.lv = gclin::bfield(rng.skew<Rational>(n, 2), out.lv);
  out.lw = gclin::bfield(rng.skew<Rational>(m, 2), out.lw);
  return out;
}

}  // namespace gencx::verify
