#include <gencx/liecourant/liecourant.hpp>

namespace gencx::liecourant {
namespace {

const GaussRational kI = GaussRational::i();

MatQi cx(const MatQ& m) { return complexify(m); }

void require(bool ok, const std::string& what) {
  if (!ok) throw InvariantError(what);
}

/// Every bracket of two basis vectors of s stays in s.
bool is_subalgebra(const SubspaceQi& s, const LieAlgebra& g) {
  for (Index i = 0; i < s.dim(); ++i)
    for (Index j = i + 1; j < s.dim(); ++j)
      if (!s.contains(g.bracket(VecQi(s.basis().col(i)), VecQi(s.basis().col(j))))) return false;
  return true;
}

}  // namespace

LieAlgebra LieAlgebra::from_structure_constants(Index n, std::vector<Rational> c) {
  if (static_cast<Index>(c.size()) != n * n * n)
    throw ShapeError("LieAlgebra: expected " + std::to_string(n * n * n) + " structure constants, got " +
                     std::to_string(c.size()));
  LieAlgebra g;
  g.n_ = n;
  g.c_ = std::move(c);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (g.c(i, j, k) != -g.c(j, i, k))
          throw PreconditionError("LieAlgebra: structure constants are not antisymmetric at (" + std::to_string(i) +
                                  ", " + std::to_string(j) + ", " + std::to_string(k) + ")");
  g.ad_.assign(static_cast<size_t>(n), zeros<Rational>(n, n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) g.ad_[static_cast<size_t>(i)](k, j) = g.c(i, j, k);
  // Jacobi is equivalent to ad being a homomorphism
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      MatQ rhs = zeros<Rational>(n, n);
      for (Index k = 0; k < n; ++k) rhs += g.c(i, j, k) * g.ad_[static_cast<size_t>(k)];
      if (commutator(g.ad_[static_cast<size_t>(i)], g.ad_[static_cast<size_t>(j)]) != rhs)
        throw PreconditionError("LieAlgebra: Jacobi identity fails for (" + std::to_string(i) + ", " +
                                std::to_string(j) + ")");
    }
  return g;
}

LieAlgebra LieAlgebra::abelian(Index n) {
  return from_structure_constants(n, std::vector<Rational>(static_cast<size_t>(n * n * n), Rational(0)));
}

LieAlgebra LieAlgebra::su2_su2() {
  const Index n = 6;
  std::vector<Rational> c(static_cast<size_t>(n * n * n), Rational(0));
  auto set = [&](Index i, Index j, Index k) {
    c[static_cast<size_t>((i * n + j) * n + k)] = Rational(1);
    c[static_cast<size_t>((j * n + i) * n + k)] = Rational(-1);
  };
  for (Index off : {0, 3}) {
    set(off + 0, off + 1, off + 2);
    set(off + 1, off + 2, off + 0);
    set(off + 2, off + 0, off + 1);
  }
  return from_structure_constants(n, std::move(c));
}

VecQi InvariantSection::stacked() const {
  VecQi v(2 * dim());
  v << X, alpha;
  return v;
}

InvariantSection InvariantSection::from_stacked(const VecQi& v) {
  const Index n = v.size() / 2;
  return {v.head(n), v.tail(n)};
}

InvariantSection courant_bracket(const InvariantSection& s1, const InvariantSection& s2, const LieAlgebra& g) {
  const Index n = g.dim();
  if (s1.X.size() != n || s1.alpha.size() != n || s2.X.size() != n || s2.alpha.size() != n)
    throw ShapeError("courant_bracket: sections do not match the algebra dimension " + std::to_string(n));
  const MatQi adx = g.ad(s1.X);
  const MatQi ady = g.ad(s2.X);
  return {adx * s2.X, VecQi(-adx.transpose() * s2.alpha + ady.transpose() * s1.alpha)};
}

std::optional<std::pair<Index, Index>> integrability_failure(const DiracQi& l, const LieAlgebra& g) {
  if (l.v_dim() != g.dim()) throw ShapeError("is_integrable_invariant: dimension mismatch");
  const MatQi& b = l.basis();
  for (Index i = 0; i < b.cols(); ++i)
    for (Index j = i + 1; j < b.cols(); ++j) {
      const auto s = courant_bracket(InvariantSection::from_stacked(VecQi(b.col(i))),
                                     InvariantSection::from_stacked(VecQi(b.col(j))), g);
      if (!l.subspace().contains(s.stacked())) return std::make_pair(i, j);
    }
  return std::nullopt;
}

bool is_integrable_invariant(const DiracQi& l, const LieAlgebra& g) { return !integrability_failure(l, g); }

MatQ exterior_derivative(const VecQ& lambda, const LieAlgebra& g) {
  const Index n = g.dim();
  MatQ b(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Rational s(0);
      for (Index k = 0; k < n; ++k) s += g.c(i, j, k) * lambda(k);
      b(i, j) = -s;
    }
  return b;
}

bool is_closed(const MatQ& b, const LieAlgebra& g) {
  const Index n = g.dim();
  auto form = [&](const VecQ& x, Index k) { return Rational((x.transpose() * b.col(k))(0)); };
  auto br = [&](Index i, Index j) { return VecQ(g.ad_basis(i).col(j)); };
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      for (Index k = j + 1; k < n; ++k)
        if (!(-form(br(i, j), k) - form(br(j, k), i) - form(br(k, i), j)).is_zero()) return false;
  return true;
}

Example so4_borel_example() {
  LieAlgebra g = LieAlgebra::su2_su2();
  const Index n = g.dim();
  MatQ kb = zeros<Rational>(n, 2);
  kb(2, 0) = kb(5, 1) = Rational(1);
  MatQi r1 = MatQi::Zero(n, 1), r2 = MatQi::Zero(n, 1);
  r1(0, 0) = GaussRational(1);
  r1(1, 0) = -kI;
  r2(3, 0) = GaussRational(1);
  r2(4, 0) = -kI;
  BorelData b{SubspaceQ::span(kb), {SubspaceQi::span(r1), SubspaceQi::span(r2)}, {}, zeros<Rational>(n, n)};
  b.c_borel = sum(sum(complexify(b.k), b.positive_root_spaces[0]), b.positive_root_spaces[1]);
  b.omega(2, 5) = Rational(1);
  b.omega(5, 2) = Rational(-1);

  const SubspaceQi kc = complexify(b.k);
  for (const auto& root : b.positive_root_spaces) {
    for (Index h = 0; h < b.k.dim(); ++h)
      require(root.contains(apply(cx(g.ad(VecQ(b.k.basis().col(h)))), root)),
              "so4_borel_example: root space is not ad(k)-stable");
    require(MatQi(cx(b.omega) * root.basis()).isZero(), "so4_borel_example: omega does not vanish on a root space");
  }
  require(sum(b.c_borel, conjugate(b.c_borel)).is_full(), "so4_borel_example: c + conj c != g^C");
  require(intersect(b.c_borel, conjugate(b.c_borel)) == kc, "so4_borel_example: c n conj c != k^C");
  require(is_invertible(dirac::restrict_form(b.omega, b.k)), "so4_borel_example: omega degenerate on k");
  require(gclin::is_cocr(b.c_borel), "so4_borel_example: c is not co-CR");

  const MatQi iomega = kI * cx(b.omega);
  GCStructure l = GCStructure::from_dirac(dirac::build_from_form(b.c_borel, iomega));
  SubspaceQi roots = sum(b.positive_root_spaces[0], b.positive_root_spaces[1]);
  FStructure f = gclin::f_from_split(kc, roots);
  const auto w = gclin::normal_form_omega(l, f);
  require(w.has_value(), "so4_borel_example: L is not in normal form");
  require(gclin::normal_form_build(f, *w) == l, "so4_borel_example: normal form mismatch");
  require(is_integrable_invariant(l.dirac(), g), "so4_borel_example: L is not integrable");
  return {std::move(g), std::move(b), std::move(l), std::move(f)};
}

MultiplicationCheck multiplication_map_check(const Example& ex) {
  const Index n = ex.g.dim();
  const MatQ id = identity<Rational>(n);
  const GCStructure source = GCStructure::from_dirac(dirac::product(ex.L.dirac(), ex.L.dirac()));
  const MatQ m = hstack(id, MatQ(-id));
  const MatQi half = kI * cx(ex.borel.omega) / GaussRational(2);
  const GCStructure target_half = GCStructure::from_dirac(dirac::build_from_form(ex.borel.c_borel, half));
  MultiplicationCheck out;
  out.half_omega = gclin::is_gc_linear(m, source, target_half);
  out.full_omega = gclin::is_gc_linear(m, source, ex.L);
  out.diagonal_cocr = source.cocr().contains(apply(cx(vstack(id, id)), ex.borel.c_borel));
  return out;
}

ProjectionCheck projection_cocr_check(const Example& ex) {
  const Index n = ex.g.dim();
  const SubspaceQ& k = ex.borel.k;
  const SubspaceQ kept = pivot_complement(k);
  MatQ select = zeros<Rational>(k.dim(), n);
  for (Index j = 0; j < k.dim(); ++j) select(j, k.pivot_rows()[static_cast<size_t>(j)]) = Rational(1);
  ProjectionCheck out;
  out.q = kept.basis().transpose() * (identity<Rational>(n) - k.basis() * select);
  require(kernel(out.q) == k, "projection_cocr_check: ker q != k");
  out.image = apply(cx(out.q), ex.borel.c_borel);
  out.complex_structure = gclin::is_cr(out.image) && gclin::is_cocr(out.image);
  const GCStructure target = GCStructure::from_dirac(
      dirac::build(out.image, MatQi(MatQi::Zero(out.image.dim(), out.image.dim()))));
  const auto lin = gclin::gc_linearity(out.q, ex.L, target);
  out.cocr_linear = lin.cocr_linear;
  out.gc_linear = lin.linear();
  return out;
}

NormalFormCriteria invariant_normal_form_criteria(const FStructure& f, const MatQ& omega, const LieAlgebra& g) {
  if (f.dim() != g.dim()) throw ShapeError("invariant_normal_form_criteria: dimension mismatch");
  gclin::check_compatible(f, omega);
  NormalFormCriteria out;
  out.cr_integrable = is_subalgebra(f.v10, g);
  out.cocr_integrable = is_subalgebra(f.cocr(), g);
  out.poisson = is_integrable_invariant(dirac::complexify(dirac::build_from_form(f.v0_real, omega)), g);

  const MatQ xs = real_points(sum(f.v10, f.v01)).basis();
  const MatQ& ys = f.v0_real.basis();
  out.invariance = true;
  for (Index a = 0; a < xs.cols() && out.invariance; ++a) {
    const MatQ adx = g.ad(VecQ(xs.col(a)));
    // (ℒ_X ω)(Y, Z) = −ω([X, Y], Z) − ω(Y, [X, Z])
    const MatQ lie = -(adx * ys).transpose() * omega * ys - ys.transpose() * omega * adx * ys;
    out.invariance = is_zero_matrix(lie);
  }
  out.integrable = is_integrable_invariant(gclin::normal_form_build(f, omega).dirac(), g);
  return out;
}

std::pair<FStructure, MatQ> perturbed_instance(const Rational& s) {
  const Index n = 6;
  MatQ basis = zeros<Rational>(n, n);
  // columns: e1 + s e3, e2, f1, f2, e3, f3
  basis(0, 0) = Rational(1);
  basis(2, 0) = s;
  basis(1, 1) = basis(3, 2) = basis(4, 3) = basis(2, 4) = basis(5, 5) = Rational(1);
  MatQ fb = zeros<Rational>(n, n);
  for (Index p : {0, 2}) {
    fb(p + 1, p) = Rational(1);
    fb(p, p + 1) = Rational(-1);
  }
  const MatQ f = basis * fb * inverse_or_throw(basis, "perturbed_instance");
  VecQ a = VecQ::Zero(n), b = VecQ::Zero(n);
  a(2) = Rational(1);
  a(0) = -s;
  b(5) = Rational(1);
  MatQ omega = a * b.transpose() - b * a.transpose();
  return {gclin::f_split(f), std::move(omega)};
}

}  // namespace gencx::liecourant
