#include <gencx/verify/gk_generators.hpp>

#include <gencx/verify/gc_generators.hpp>

namespace gencx::verify {

MatQ random_orthogonal(Rng& rng, Index n) {
  const MatQ k = rng.skew<Rational>(n, 2);
  const MatQ id = identity<Rational>(n);
  return (id - k) * inverse_or_throw(MatQ(id + k), "random_orthogonal");
}

gkahler::BiHermitianData random_bihermitian(Rng& rng, Index n, bool allow_degenerate) {
  const Index m = n / 2;
  // blocks: 0 generic, 1 identity, 2 reflection
  std::vector<int> kind(static_cast<size_t>(m), 0);
  if (allow_degenerate)
    for (auto& k : kind) k = rng.uniform(0, 3) == 0 ? static_cast<int>(rng.uniform(1, 2)) : 0;
  std::vector<Index> generic;
  for (Index b = 0; b < m; ++b)
    if (kind[static_cast<size_t>(b)] == 0) generic.insert(generic.end(), {2 * b, 2 * b + 1});
  MatQ q = identity<Rational>(n);
  const MatQ qg = random_orthogonal(rng, static_cast<Index>(generic.size()));
  for (size_t i = 0; i < generic.size(); ++i)
    for (size_t j = 0; j < generic.size(); ++j) q(generic[i], generic[j]) = qg(Index(i), Index(j));
  for (Index b = 0; b < m; ++b)
    if (kind[static_cast<size_t>(b)] == 2) q(2 * b + 1, 2 * b + 1) = Rational(-1);

  const MatQ s = rng.invertible<Rational>(n, 2);
  const MatQ si = inverse_or_throw(s, "random_bihermitian");
  const MatQ j0 = standard_complex(m);
  const MatQ sq = s * q;
  gkahler::BiHermitianData d;
  d.g = si.transpose() * si;
  d.b = rng.skew<Rational>(n, 2);
  d.Jp = s * j0 * si;
  d.Jm = sq * j0 * inverse_or_throw(sq, "random_bihermitian");
  return d;
}

gkahler::TamedData random_tamed(Rng& rng, Index n, bool both) {
  if (both && n % 4 != 0) throw PreconditionError("random_tamed: J+ - J- is singular in dimension 2 mod 4");
  for (;;) {
    const auto d = random_bihermitian(rng, n, false);
    const MatQ sum = d.Jp + d.Jm;
    if (!is_invertible(sum) || (both && !is_invertible(MatQ(d.Jp - d.Jm)))) continue;
    gkahler::TamedData t{MatQ(Rational(2) * inverse_or_throw(sum, "random_tamed").transpose() * d.g), d.Jp};
    gkahler::validate(t);
    return t;
  }
}

MatQ random_in_kernel(Rng& rng, Index n, const std::function<MatQ(const MatQ&)>& constraint) {
  MatQ columns;
  for (Index a = 0; a < n * n; ++a) {
    MatQ e = zeros<Rational>(n, n);
    e(a / n, a % n) = Rational(1);
    const MatQ r = constraint(e);
    if (columns.size() == 0) columns = zeros<Rational>(r.size(), n * n);
    for (Index k = 0; k < r.size(); ++k) columns(k, a) = r(k / r.cols(), k % r.cols());
  }
  const MatQ basis = null_space(columns);
  MatQ v = zeros<Rational>(n * n, 1);
  for (Index k = 0; k < basis.cols(); ++k) v += rng.small(2) * basis.col(k);
  MatQ a(n, n);
  for (Index k = 0; k < n * n; ++k) a(k / n, k % n) = v(k, 0);
  return a;
}

std::optional<MatQ> cayley(const MatQ& a) {
  const MatQ id = identity<Rational>(a.rows());
  const auto inv = inverse(MatQ(id + a));
  if (!inv) return std::nullopt;
  return MatQ((id - a) * *inv);
}

MatQ random_census_map(Rng& rng, const gkahler::GKPair& p, CensusKind kind) {
  const Index n = p.data.dim();
  if (kind == CensusKind::Generic) return rng.invertible<Rational>(n, 2);
  const MatQ sigma1 = imag_part(p.L1.eps());
  const MatQ sigma2 = imag_part(p.L2.eps());
  const MatQ q = p.data.Jp * p.data.Jm;
  auto symplectic = [](const MatQ& s) { return [s](const MatQ& a) { return MatQ(a.transpose() * s + s * a); }; };
  auto commuting = [q](const MatQ& a) { return commutator(a, q); };
  auto both = [](auto f, auto h) { return [f, h](const MatQ& a) { return vstack(f(a), h(a)); }; };
  std::function<MatQ(const MatQ&)> constraint;
  switch (kind) {
    case CensusKind::HoloL1: constraint = symplectic(sigma1); break;
    case CensusKind::HoloL2: constraint = symplectic(sigma2); break;
    case CensusKind::Commuting: constraint = commuting; break;
    case CensusKind::HoloL1Commuting: constraint = both(symplectic(sigma1), commuting); break;
    case CensusKind::HoloL2Commuting: constraint = both(symplectic(sigma2), commuting); break;
    case CensusKind::Generic: break;
  }
  for (;;) {
    if (auto phi = cayley(random_in_kernel(rng, n, constraint)); phi && is_invertible(*phi)) return *phi;
  }
}

}  // namespace gencx::verify
