#include <gencx/cli/cli.hpp>

#include <gencx/verify/suites.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace gencx::cli {

using io::json;

namespace {

namespace gk = gkahler;
namespace lc = liecourant;

const GaussRational kI = GaussRational::i();

class Checks {
 public:
  explicit Checks(const json& input) : expect_(input.is_object() && input.contains("expect") ? input["expect"] : json()) {}

  void add(const std::string& name, bool ok, std::string detail = {}) {
    entries.push_back({name, ok ? Status::Pass : Status::Fail, std::move(detail)});
  }
  void skip(const std::string& name, std::string detail) { entries.push_back({name, Status::Skip, std::move(detail)}); }

  /// A property of the input: compared with "expect"[name] when given, and
  /// required to hold otherwise.
  void verdict(const std::string& name, bool value) {
    const std::string got = value ? "true" : "false";
    if (expect_.is_object() && expect_.contains(name)) {
      const json& e = expect_[name];
      if (!e.is_boolean()) throw io::ParseError("/expect/" + name, "expected a boolean");
      add(name, e.get<bool>() == value, got + ", expected " + (e.get<bool>() ? "true" : "false"));
    } else {
      add(name, value, got);
    }
  }

  /// Passes when f returns without a module error; the message is the detail
  /// otherwise.
  template <class F>
  void completes(const std::string& name, F&& f) {
    try {
      f();
      add(name, true);
    } catch (const InvariantError& e) {
      add(name, false, e.what());
    }
  }

  std::vector<CheckEntry> entries;

 private:
  json expect_;
};

struct Context {
  const Options& opts;
  const json& input;
  Checks& checks;
  json& result;
};

using Handler = std::function<void(Context&)>;

template <class S>
Mat<S> read_matrix(const json& v, const std::string& at) {
  if constexpr (is_complex_field_v<S>)
    return io::matqi_from(v, at);
  else
    return io::matq_from(v, at);
}

template <class S>
dirac::DiracStructure<S> read_dirac(const json& v, const std::string& at) {
  if constexpr (is_complex_field_v<S>)
    return io::diracqi_from(v, at);
  else
    return io::diracq_from(v, at);
}

/// The Dirac structure under key "L", or the whole input.
const json& dirac_input(const json& in, std::string& at) {
  if (in.is_object() && in.contains("L")) {
    at = "/L";
    return in["L"];
  }
  at = "";
  return in;
}

template <class S>
void check_dirac_over(const json& v, const std::string& at, Context& c) {
  auto& ck = c.checks;
  Index n = 0;
  Mat<S> raw;
  if (v.contains("E")) {
    const auto l = read_dirac<S>(v, at);
    n = l.v_dim();
    raw = l.basis();
  } else {
    const json& nv = io::member(v, "v_dim", at);
    if (!nv.is_number_integer() || nv.get<long long>() < 0)
      throw io::ParseError(at + "/v_dim", "expected a non-negative integer");
    n = static_cast<Index>(nv.get<long long>());
    raw = read_matrix<S>(io::member(v, "basis", at), at + "/basis");
    if (raw.rows() != 2 * n) throw io::ParseError(at + "/basis", "basis needs " + std::to_string(2 * n) + " rows");
  }
  const Subspace<S> span = canonicalize(raw);
  c.result["dim"] = span.dim();
  ck.add("maximal_isotropic", dirac::is_maximal_isotropic(span),
         "dim " + std::to_string(span.dim()) + " in " + std::to_string(2 * n));
  if (!dirac::is_maximal_isotropic(span)) return;
  const auto l = dirac::DiracStructure<S>::from_subspace(n, span);
  const Mat<S>& b = l.basis();

  bool paired = true;
  for (Index i = 0; i < b.cols(); ++i)
    for (Index j = 0; j < b.cols(); ++j)
      paired = paired && is_zero(dirac::pairing<S>(Vec<S>(b.col(i)), Vec<S>(b.col(j))));
  ck.add("pairing_vanishes_on_basis", paired);
  ck.add("canonical_basis_idempotent", canonicalize(b) == l.subspace());

  const auto [e, eps] = dirac::decompose(l);
  ck.add("e_eps_round_trip", dirac::build(e, eps) == l);

  Mat<S> cov = Mat<S>::Zero(n, 2 * n);
  cov.rightCols(n) = identity<S>(n);
  Mat<S> top = Mat<S>::Zero(n, 2 * n);
  top.leftCols(n) = identity<S>(n);
  const Subspace<S> vectors = preimage(cov, Subspace<S>::zero(n));
  const Subspace<S> meet = intersect(l.subspace(), vectors);
  const Subspace<S> ker_eps = image(Mat<S>(e.basis() * null_space(eps)));
  bool contained = true;
  for (Index j = 0; j < ker_eps.dim(); ++j) {
    Vec<S> z = Vec<S>::Zero(2 * n);
    z.head(n) = ker_eps.basis().col(j);
    contained = contained && l.subspace().contains(z);
  }
  ck.add("vector_intersection_is_ker_eps", contained && apply(top, meet) == ker_eps,
         "dim " + std::to_string(ker_eps.dim()));
  ck.add("covector_projection_is_annihilator",
         image(l.covector_part()) == annihilator(dirac::vector_intersection(l)));
  ck.add("dimension_formula", sum(l.subspace(), vectors).dim() + meet.dim() == 2 * n);

  if constexpr (is_complex_field_v<S>) {
    const SubspaceQi conj = conjugate(l.subspace());
    ck.add("conjugation_involution", conjugate(conj) == l.subspace());
    const SubspaceQi meet_conj = intersect(l.subspace(), conj);
    const SubspaceQ real = real_points(meet_conj);
    ck.add("real_points_span_intersection_with_conjugate", complexify(real) == meet_conj);
    c.result["real_dim"] = real.dim();
  }

  c.result["L"] = io::to_json(l);
  const auto p = dirac::is_poisson(l);
  c.result["poisson"] = p ? io::to_json(p->eta) : json();
  const auto w = dirac::is_presymplectic(l);
  c.result["presymplectic"] = w ? io::to_json(*w) : json();
}

void check_dirac_cmd(Context& c) {
  std::string at;
  const json& v = dirac_input(c.input, at);
  if (io::field_of(v, at) == "Q")
    check_dirac_over<Rational>(v, at, c);
  else
    check_dirac_over<GaussRational>(v, at, c);
}

template <class S>
void pushforward_over(Context& c) {
  const Mat<S> f = read_matrix<S>(io::member(c.input, "f", ""), "/f");
  const auto l = read_dirac<S>(io::member(c.input, "L", ""), "/L");
  const auto def = dirac::pushforward_def(f, l);
  c.checks.add("closed_formula_matches_definition", def == dirac::pushforward_formula(f, l));
  c.checks.add("maximal_isotropic", dirac::is_maximal_isotropic(def.subspace()));
  if (dirac::is_poisson(l) && dirac::is_poisson(def))
    c.checks.add("poisson_morphism", dirac::is_poisson_morphism(f, l, def));
  else
    c.checks.skip("poisson_morphism", "source is not Poisson");
  c.result["pushforward"] = io::to_json(def);
}

template <class S>
void pullback_over(Context& c) {
  const Mat<S> f = read_matrix<S>(io::member(c.input, "f", ""), "/f");
  const auto l = read_dirac<S>(io::member(c.input, "L", ""), "/L");
  const auto def = dirac::pullback_def(f, l);
  c.checks.add("closed_formula_matches_definition", def == dirac::pullback_formula(f, l));
  c.checks.add("maximal_isotropic", dirac::is_maximal_isotropic(def.subspace()));
  if (const auto w = dirac::is_presymplectic(l))
    c.checks.add("presymplectic_pullback",
                 def == dirac::build(Subspace<S>::full(f.cols()), Mat<S>(f.transpose() * *w * f)));
  else
    c.checks.skip("presymplectic_pullback", "target is not presymplectic");
  c.result["pullback"] = io::to_json(def);
}

template <class S>
void bfield_over(Context& c) {
  const Mat<S> b = read_matrix<S>(io::member(c.input, "B", ""), "/B");
  const auto l = read_dirac<S>(io::member(c.input, "L", ""), "/L");
  const auto r = dirac::bfield(b, l);
  const auto [e, eps] = dirac::decompose(l);
  c.checks.add("preserves_E", dirac::decompose(r).E == e);
  c.checks.add("shears_eps", r == dirac::build(e, Mat<S>(eps + dirac::restrict_form(b, e))));
  c.checks.add("inverse_transform", dirac::bfield(Mat<S>(-b), r) == l);
  c.checks.add("maximal_isotropic", dirac::is_maximal_isotropic(r.subspace()));
  c.result["bfield"] = io::to_json(r);
}

template <class S>
void poisson_quotient_over(const json& v, const std::string& at, Context& c) {
  const auto l = read_dirac<S>(v, at);
  const auto q = dirac::poisson_quotient(l);
  c.checks.add("quotient_is_poisson", dirac::is_poisson(q.lp).has_value());
  c.checks.add("pullback_recovers_L", dirac::pullback(q.phi, q.lp) == l);
  c.checks.add("pushforward_is_quotient", dirac::pushforward(q.phi, l) == q.lp);
  c.checks.add("kernel_is_vector_intersection", kernel(q.phi) == dirac::vector_intersection(l));
  c.result["phi"] = q.phi.rows() == 0 ? json::array() : io::to_json(q.phi);
  c.result["quotient"] = io::to_json(q.lp);
  c.result["eta"] = q.eta.eta.rows() == 0 ? json::array() : io::to_json(q.eta.eta);
}

template <template <class> class Body>
void by_field(Context& c, const char* key) {
  if (io::field_of(io::member(c.input, key, ""), std::string("/") + key) == "Q")
    Body<Rational>::run(c);
  else
    Body<GaussRational>::run(c);
}

template <class S>
struct Push {
  static void run(Context& c) { pushforward_over<S>(c); }
};
template <class S>
struct Pull {
  static void run(Context& c) { pullback_over<S>(c); }
};
template <class S>
struct BField {
  static void run(Context& c) { bfield_over<S>(c); }
};

void poisson_quotient_cmd(Context& c) {
  std::string at;
  const json& v = dirac_input(c.input, at);
  if (io::field_of(v, at) == "Q")
    poisson_quotient_over<Rational>(v, at, c);
  else
    poisson_quotient_over<GaussRational>(v, at, c);
}

json type_of(const gclin::GCStructure& l) {
  return json{{"symplectic_dim", l.symplectic_part().dim()},
              {"complex_dim", (l.v_dim() - l.symplectic_part().dim()) / 2}};
}

void normalize_checks(Context& c, const gclin::GCStructure& l, const gclin::FStructure& f) {
  const auto cert = gclin::normalize(l, f);
  c.checks.add("normalizing_bfield", gclin::bfield(cert.B, l) == gclin::normal_form_build(f, cert.omega));
  c.checks.add("normalizing_bfield_unique", cert.nullity == 0, "nullity " + std::to_string(cert.nullity));
  c.result["certificate"] = json{{"B", io::to_json(cert.B)}, {"omega", io::to_json(cert.omega)}};
}

void f_checks(Context& c, const gclin::FStructure& f) {
  c.checks.add("f_cubed_plus_f_vanishes", MatQ(f.F * f.F * f.F + f.F).isZero());
  c.checks.add("cr_part_is_cr", gclin::is_cr(f.cr()));
  c.checks.add("cocr_part_is_cocr", gclin::is_cocr(f.cocr()));
  c.checks.add("split_round_trip", gclin::f_from_split(f.v0, f.v10).F == f.F);
}

void gc_check_cmd(Context& c) {
  std::string at;
  const json& v = dirac_input(c.input, at);
  const auto in = io::gc_from(v, at);
  const auto& l = in.L;
  const Index n = l.v_dim();
  const SubspaceQi& s = l.dirac().subspace();
  c.checks.add("meets_conjugate_trivially", intersect(s, conjugate(s)).is_zero());
  const MatQ& j = l.J();
  c.checks.add("J_squares_to_minus_one", MatQ(j * j) == MatQ(-identity<Rational>(2 * n)));
  const MatQ p = dirac::pairing_gram<Rational>(n);
  c.checks.add("J_orthogonal_for_pairing", MatQ(j.transpose() * p * j) == p);
  c.checks.add("L_is_plus_i_eigenspace",
               kernel(MatQi(complexify(j) - kI * identity<GaussRational>(2 * n))) == s);
  c.checks.add("projection_is_cocr", gclin::is_cocr(l.cocr()));
  c.checks.add("annihilator_duality", gclin::annihilator_duality(l.cocr()));
  if (in.F) {
    f_checks(c, *in.F);
    if (in.omega && in.B)
      c.checks.add("certificate", gclin::bfield(*in.B, l) == gclin::normal_form_build(*in.F, *in.omega));
    else
      normalize_checks(c, l, *in.F);
  }
  c.result["L"] = io::to_json(l);
  c.result["type"] = type_of(l);
  c.result["J"] = io::to_json(j);
  const MatQ eta = l.assoc_poisson().eta;
  c.result["poisson"] = eta.rows() == 0 ? json::array() : io::to_json(eta);
}

void normal_form_cmd(Context& c) {
  const auto f = io::fstructure_from(io::member(c.input, "F", ""), "/F");
  f_checks(c, f);
  if (c.input.contains("omega")) {
    const MatQ omega = io::matq_from(c.input["omega"], "/omega");
    gclin::check_compatible(f, omega);
    const auto l = gclin::normal_form_build(f, omega);
    c.checks.add("in_normal_form", gclin::normal_form_omega(l, f).has_value());
    c.checks.add("block_matrix_is_J", gclin::normal_form_block(f, omega) == l.J());
    c.result["L"] = io::to_json(l);
    c.result["type"] = type_of(l);
    if (c.input.contains("B")) {
      const auto scrambled = gclin::bfield(io::matq_from(c.input["B"], "/B"), l);
      normalize_checks(c, scrambled, f);
    }
  } else {
    std::string at = "/L";
    const auto in = io::gc_from(io::member(c.input, "L", ""), at);
    normalize_checks(c, in.L, f);
  }
}

MatQ sample_skew(Index n, long shift) {
  MatQ b = zeros<Rational>(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      b(i, j) = Rational(static_cast<long>((i + 2 * j + shift) % 5) - 2);
      b(j, i) = -b(i, j);
    }
  return b;
}

struct GCMap {
  MatQ t;
  gclin::GCStructure lv;
  gclin::GCStructure lw;
};

GCMap read_gc_map(const json& in) {
  return {io::matq_from(io::member(in, "t", ""), "/t"), io::gc_from(io::member(in, "L_V", ""), "/L_V").L,
          io::gc_from(io::member(in, "L_W", ""), "/L_W").L};
}

void gc_linear_cmd(Context& c) {
  const auto [t, lv, lw] = read_gc_map(c.input);
  const bool linear = gclin::is_gc_linear(t, lv, lw);
  c.checks.verdict("gc_linear", linear);
  const MatQ bv = sample_skew(lv.v_dim(), 0), bw = sample_skew(lw.v_dim(), 1);
  c.checks.add("bfield_invariant", gclin::is_gc_linear(t, gclin::bfield(bv, lv), gclin::bfield(bw, lw)) == linear);
  if (t.rows() == t.cols() && is_invertible(t))
    c.checks.add("equivalent_to_bfield_equivalence",
                 gclin::bfield_equivalent(gclin::pushforward(t, lv), lw).has_value() == linear);
  else
    c.checks.skip("equivalent_to_bfield_equivalence", "t is not an isomorphism");
  if (linear) {
    const auto w = gclin::decompose_gc_linear(t, lv, lw);
    const auto r = gclin::replay_witness(w, t, lv, lw);
    std::string why;
    for (const auto& f : r.failures) why += (why.empty() ? "" : "; ") + f;
    c.checks.add("witness_replay", r.i && r.consistent(), why);
    c.result["witness"] = json{{"B_V", io::to_json(w.B_V)}, {"B_W", io::to_json(w.B_W)},
                               {"D_V", io::to_json(w.D_V)}, {"D_W", io::to_json(w.D_W)},
                               {"V_prime", io::to_json(w.V_prime)}, {"W_prime", io::to_json(w.W_prime)}};
  } else {
    c.checks.skip("witness_replay", "t is not gc-linear");
  }
}

void graph_invariance_cmd(Context& c) {
  const auto [t, lv, lw] = read_gc_map(c.input);
  c.checks.verdict("graph_invariance", gclin::graph_invariance_check(t, lv, lw));
  c.checks.verdict("gc_linear", gclin::is_gc_linear(t, lv, lw));
  if (c.input.contains("b") && c.input.contains("J")) {
    const MatQ b = io::matq_from(c.input["b"], "/b");
    const MatQ j = io::matq_from(c.input["J"], "/J");
    const auto parts = gclin::type_decompose(b, j);
    c.checks.add("type_parts_sum", MatQ(parts.b20_02 + parts.b11) == b);
    c.checks.add("type_11_is_J_invariant", MatQ(j.transpose() * parts.b11 * j) == parts.b11);
    c.checks.add("type_20_02_is_J_anti_invariant", MatQ(j.transpose() * parts.b20_02 * j) == MatQ(-parts.b20_02));
    c.result["b20_02"] = io::to_json(parts.b20_02);
    c.result["b11"] = io::to_json(parts.b11);
  }
}

json pair_json(const gk::GKPair& p) {
  return json{{"L1", io::to_json(p.L1)},         {"L2", io::to_json(p.L2)},
              {"H_plus", io::to_json(p.Hp)},     {"H_minus", io::to_json(p.Hm)},
              {"V_cal", io::to_json(p.Vcal)},    {"data", io::to_json(p.data)}};
}

void phi_checks(Context& c, const gk::GKPair& p) {
  if (!c.input.contains("phi")) return;
  const auto f = gk::two_of_three(io::matq_from(c.input["phi"], "/phi"), p);
  c.checks.add("two_of_three", f.consistent(),
               std::string("holo_L1 ") + (f.holo_L1 ? "true" : "false") + ", holo_L2 " +
                   (f.holo_L2 ? "true" : "false") + ", commutes " + (f.commutes ? "true" : "false"));
  c.result["two_of_three"] = json{{"holo_L1", f.holo_L1}, {"holo_L2", f.holo_L2}, {"commutes", f.commutes}};
}

void gk_from_bihermitian_cmd(Context& c) {
  const auto d = io::bihermitian_from(c.input, "");
  c.checks.add("g_positive_definite", is_positive_definite(d.g));
  const auto p = gk::gk_from_bihermitian(d);
  c.checks.add("round_trip", gk::bihermitian_from_gk(p.L1, p.L2) == d);
  c.checks.add("generalized_metric", gk::is_generalized_metric(p.L1.J(), p.L2.J()));
  c.checks.add("J1_J2_commute", MatQ(p.L1.J() * p.L2.J()) == MatQ(p.L2.J() * p.L1.J()));
  for (const auto& id : gk::subspace_identities(p)) c.checks.add("identity " + id.name, id.pass);
  c.checks.add("H_plus_orthogonal_to_H_minus", MatQ(p.Hp.basis().transpose() * d.g * p.Hm.basis()).isZero());
  const auto [f1, f2] = gk::f_structures_of(p);
  for (const auto* f : {&f1, &f2})
    c.checks.add(f == &f1 ? "F1_is_f_structure" : "F2_is_f_structure", MatQ(f->F * f->F * f->F + f->F).isZero());
  c.checks.completes("first_product_with_itself", [&] { (void)gk::first_product(p, p); });
  if (d.Jp == d.Jm && d.b.isZero())
    c.checks.completes("second_product_with_itself", [&] { (void)gk::second_product(d, d); });
  else
    c.checks.skip("second_product_with_itself", "not a Kaehler point");
  c.result = pair_json(p);
  c.result["F1"] = io::to_json(f1);
  c.result["F2"] = io::to_json(f2);
  phi_checks(c, p);
}

void gk_to_tamed_cmd(Context& c) {
  const auto d = io::bihermitian_from(c.input, "");
  const auto p = gk::gk_from_bihermitian(d);
  const auto back = gk::gk_to_tamed(p);
  gk::validate(back.tamed);
  c.checks.add("tames_J_plus", back.tamed.J == d.Jp);
  const auto [d2, p2] = gk::tamed_to_gk(back.tamed);
  c.checks.add("round_trip_up_to_residual",
               d2 == gk::BiHermitianData{d.g, MatQ(d.b - back.B_residual), d.Jp, d.Jm});
  c.checks.add("L2_is_bfield_of_tamed",
               p.L2 == gclin::bfield(back.B_residual, p2.L2) && p.L1 == gclin::bfield(back.B_residual, p2.L1));
  c.result = json{{"tamed", io::to_json(back.tamed)}, {"B_residual", io::to_json(back.B_residual)}};
}

void holo_checks(Context& c, const gk::GKPair& p, const MatQ* eps) {
  const auto& d = p.data;
  const auto h = gk::holo_poisson(p);
  c.checks.add("eta_plus_image_is_V_cal", image(h.eta_p.eta) == p.Vcal);
  bool pure = true;
  for (const MatQ* j : {&d.Jp, &d.Jm})
    pure = pure && is_zero_matrix(gclin::type_decompose(h.eta_p.eta, MatQ(j->transpose())).b11);
  c.checks.add("eta_plus_has_no_11_part", pure);
  c.result["eta_plus"] = io::to_json(h.eta_p.eta);
  c.result["eta_minus"] = io::to_json(h.eta_m.eta);
  if (eps) c.checks.add("J_plus_J_minus_eps_relation", MatQ(d.Jp.transpose() * *eps) == MatQ(-(*eps * d.Jm)));
  const bool sum_inv = is_invertible(MatQ(d.Jp + d.Jm));
  const bool diff_inv = is_invertible(MatQ(d.Jp - d.Jm));
  if (sum_inv && diff_inv) {
    const auto e = gk::eps_pm(p);
    c.checks.add("im_eps1_identity", gk::im_eps1_identity(p));
    c.result["eps_plus"] = io::to_json(e.eps_p);
    c.result["eps_minus"] = io::to_json(e.eps_m);
  } else {
    c.checks.skip("im_eps1_identity", sum_inv ? "J+ - J- is singular" : "J+ + J- is singular");
  }
}

void tamed_to_gk_cmd(Context& c) {
  const auto t = io::tamed_from(c.input, "");
  const auto [d, p] = gk::tamed_to_gk(t);
  c.checks.add("g_positive_definite", is_positive_definite(d.g));
  c.checks.add("g_formula", d.g == MatQ((d.Jp + d.Jm).transpose() * t.eps / Rational(2)));
  c.checks.add("b_formula", d.b == MatQ((d.Jp - d.Jm).transpose() * t.eps / Rational(2)));
  c.checks.add("J_minus_formula", d.Jm == MatQ(-inverse_or_throw(t.eps, "eps") * t.J.transpose() * t.eps));
  const auto back = gk::gk_to_tamed(p);
  c.checks.add("round_trip", back.tamed.eps == t.eps && back.tamed.J == t.J);
  c.checks.add("zero_residual", is_zero_matrix(back.B_residual));
  holo_checks(c, p, &t.eps);
  phi_checks(c, p);
  c.result["bihermitian"] = io::to_json(d);
  c.result["L1"] = io::to_json(p.L1);
  c.result["L2"] = io::to_json(p.L2);
}

void holo_poisson_cmd(Context& c) {
  if (c.input.is_object() && c.input.contains("eps")) {
    const auto t = io::tamed_from(c.input, "");
    holo_checks(c, gk::tamed_to_gk(t).second, &t.eps);
  } else {
    holo_checks(c, gk::gk_from_bihermitian(io::bihermitian_from(c.input, "")), nullptr);
  }
}

void so4_checks(Context& c) {
  const auto ex = lc::so4_borel_example();
  c.checks.add("borel_gc_valid", intersect(ex.L.dirac().subspace(), conjugate(ex.L.dirac().subspace())).is_zero());
  c.checks.add("borel_normal_form", gclin::normal_form_omega(ex.L, ex.F).has_value());
  c.checks.add("borel_integrable", lc::is_integrable_invariant(ex.L.dirac(), ex.g));
  c.checks.add("borel_is_cocr", gclin::is_cocr(ex.borel.c_borel) &&
                                    real_points(intersect(ex.borel.c_borel, conjugate(ex.borel.c_borel))) ==
                                        ex.borel.k);
  const auto m = lc::multiplication_map_check(ex);
  c.checks.add("multiplication_holomorphic_half_omega", m.half_omega);
  c.checks.add("multiplication_not_holomorphic_omega", !m.full_omega);
  c.checks.add("multiplication_diagonal_cocr", m.diagonal_cocr);
  const auto q = lc::projection_cocr_check(ex);
  c.checks.add("projection_cocr", q.pass());
  const auto crit = lc::invariant_normal_form_criteria(ex.F, ex.borel.omega, ex.g);
  c.checks.add("criteria_borel", crit.agree() && crit.integrable);
  for (long s : {1, 2}) {
    const auto [f, w] = lc::perturbed_instance(Rational(s));
    const auto pc = lc::invariant_normal_form_criteria(f, w, ex.g);
    c.checks.add("criteria_perturbed_s" + std::to_string(s), pc.agree() && !pc.integrable);
  }
  c.result["algebra"] = io::to_json(ex.g);
  c.result["L"] = io::to_json(ex.L);
  c.result["omega"] = io::to_json(ex.borel.omega);
  c.result["F"] = io::to_json(ex.F);
}

void lie_user_checks(Context& c) {
  const auto g = io::lie_from(c.input, "");
  const Index n = g.dim();
  bool lie = true, covectors = true, symmetric = true;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const VecQi ei = unit_vector<GaussRational>(n, i), ej = unit_vector<GaussRational>(n, j);
      const VecQi zero = VecQi::Zero(n);
      const auto xy = lc::courant_bracket({ei, zero}, {ej, zero}, g);
      lie = lie && xy.X == g.bracket(ei, ej) && xy.alpha.isZero();
      covectors = covectors && lc::courant_bracket({zero, ei}, {zero, ej}, g).stacked().isZero();
      const auto mixed = lc::InvariantSection{ei, ej};
      const auto other = lc::InvariantSection{ej, ei};
      const VecQi s = lc::courant_bracket(mixed, other, g).stacked() + lc::courant_bracket(other, mixed, g).stacked();
      symmetric = symmetric && s.isZero();
    }
  c.checks.add("bracket_on_vectors_is_lie_bracket", lie);
  c.checks.add("bracket_on_covectors_vanishes", covectors);
  c.checks.add("symmetrized_bracket_vanishes", symmetric);
  c.result["dim"] = n;
  if (c.input.contains("L")) {
    std::string at = "/L";
    const auto l = io::diracqi_from(c.input["L"], at);
    const bool integrable = lc::is_integrable_invariant(l, g);
    c.checks.verdict("integrable", integrable);
    VecQ lambda = VecQ::Zero(n);
    for (Index k = 0; k < n; ++k) lambda(k) = Rational(static_cast<long>(k % 3) - 1);
    const MatQ b = lc::exterior_derivative(lambda, g);
    c.checks.add("closed_bfield_preserves_integrability",
                 lc::is_closed(b, g) && lc::is_integrable_invariant(dirac::bfield(MatQi(complexify(b)), l), g) ==
                                            integrable);
  }
  if (c.input.contains("F") && c.input.contains("omega")) {
    const auto f = io::fstructure_from(c.input["F"], "/F");
    const MatQ omega = io::matq_from(c.input["omega"], "/omega");
    const auto crit = lc::invariant_normal_form_criteria(f, omega, g);
    c.checks.add("criteria_agree", crit.agree());
    c.checks.verdict("normal_form_integrable", crit.integrable);
  }
}

void lie_example_cmd(Context& c) {
  if (!c.opts.positional.empty()) {
    if (c.opts.positional.size() != 1 || c.opts.positional[0] != "so4")
      throw io::ParseError("arguments", "lie-example takes \"so4\" or --input");
    so4_checks(c);
    return;
  }
  if (c.input.is_null()) throw io::ParseError("arguments", "lie-example takes \"so4\" or --input");
  lie_user_checks(c);
}

void verify_all_cmd(Context& c) {
  long instances = 0;
  for (const auto& s : verify::suites()) {
    const auto r = verify::run_suite(s, c.opts.seed);
    instances += r.instances;
    std::string detail = r.criterion > 0 ? "criterion " + std::to_string(r.criterion) + "; " : std::string();
    detail += std::to_string(r.instances) + " instances; " + r.detail;
    c.checks.add(r.name, r.pass, detail);
  }
  c.result["instances"] = instances;
}

struct Entry {
  Command command;
  bool needs_input;
  Handler handler;
};

const std::vector<Entry>& table() {
  static const std::vector<Entry> t = {
      {{"check-dirac", "validate a Dirac structure and its (E, eps) form",
        {"canonicalize", "sum", "intersect", "kernel", "image", "contains", "preimage", "conjugate", "real_points",
         "pairing", "build", "decompose", "is_maximal_isotropic", "is_poisson", "is_presymplectic"}},
       true,
       check_dirac_cmd},
      {{"pushforward", "push L forward along f",
        {"pushforward_def", "pushforward_formula", "is_poisson", "is_poisson_morphism", "is_maximal_isotropic"}},
       true,
       [](Context& c) { by_field<Push>(c, "L"); }},
      {{"pullback", "pull L back along f",
        {"pullback_def", "pullback_formula", "is_presymplectic", "build", "is_maximal_isotropic"}},
       true,
       [](Context& c) { by_field<Pull>(c, "L"); }},
      {{"bfield", "apply a B-field transform", {"bfield", "decompose", "build"}},
       true,
       [](Context& c) { by_field<BField>(c, "L"); }},
      {{"poisson-quotient", "canonical Poisson quotient of L",
        {"poisson_quotient", "is_poisson", "pushforward_formula", "pullback_formula", "kernel"}},
       true,
       poisson_quotient_cmd},
      {{"gc-check", "validate a generalized complex structure",
        {"gc_from_dirac", "is_cr", "is_cocr", "annihilator_duality", "f_split", "f_from_split", "normalize",
         "normal_form_build", "conjugate", "intersect", "kernel"}},
       true,
       gc_check_cmd},
      {{"normal-form", "build or recover a normal form",
        {"f_split", "f_from_split", "is_cr", "is_cocr", "normal_form_build", "normalize"}},
       true,
       normal_form_cmd},
      {{"gc-linear", "test generalized complex linearity of t",
        {"is_gc_linear", "decompose_gc_linear", "is_f_linear", "bfield_equivalent", "gc_from_dirac"}},
       true,
       gc_linear_cmd},
      {{"graph-invariance", "compare graph invariance with gc-linearity",
        {"graph_invariance_check", "is_gc_linear", "type_decompose"}},
       true,
       graph_invariance_cmd},
      {{"gk-from-bihermitian", "generalized Kaehler pair of bi-Hermitian data",
        {"gk_from_bihermitian", "bihermitian_from_gk", "subspace_identities", "f_structures_of", "first_product",
         "second_product", "two_of_three", "is_positive_definite"}},
       true,
       gk_from_bihermitian_cmd},
      {{"gk-to-tamed", "tamed symplectic data of a generalized Kaehler pair", {"gk_to_tamed", "tamed_to_gk"}},
       true,
       gk_to_tamed_cmd},
      {{"tamed-to-gk", "generalized Kaehler pair of tamed symplectic data",
        {"tamed_to_gk", "gk_to_tamed", "holo_poisson", "eps_pm", "im_eps1_identity", "two_of_three",
         "is_positive_definite"}},
       true,
       tamed_to_gk_cmd},
      {{"holo-poisson", "holomorphic Poisson bivectors and eps+-",
        {"holo_poisson", "eps_pm", "im_eps1_identity", "type_decompose"}},
       true,
       holo_poisson_cmd},
      {{"lie-example", "su(2)+su(2) examples (so4) or checks on user structure constants",
        {"so4_borel_example", "multiplication_map_check", "projection_cocr_check", "invariant_normal_form_criteria",
         "courant_bracket", "is_integrable_invariant"}},
       false,
       lie_example_cmd},
      {{"verify-all", "run every property suite", {"run"}}, false, verify_all_cmd},
  };
  return t;
}

std::string hex64(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io::ParseError(path, "cannot open input file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// The path as given, or a shipped fixture of that name.
std::string resolve_input(const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::exists(path)) return path;
#ifdef GENCX_FIXTURE_DIR
  const fs::path shipped = fs::path(GENCX_FIXTURE_DIR) / path;
  if (fs::exists(shipped)) return shipped.string();
#endif
  return path;
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "fail";
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : bytes) h = (h ^ c) * 0x100000001B3ULL;
  return h;
}

const std::vector<Command>& commands() {
  static const std::vector<Command> cmds = [] {
    std::vector<Command> out;
    for (const auto& e : table()) out.push_back(e.command);
    return out;
  }();
  return cmds;
}

json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  json out{{"command", r.command}, {"inputs", r.inputs},     {"seed", r.seed},
           {"checks", checks},     {"result", r.result},     {"exit_code", r.exit_code}};
  if (!r.error.empty()) out["error"] = r.error;
  return out;
}

std::string to_text(const Report& r, bool quiet) {
  std::ostringstream os;
  if (!quiet) os << "gencx " << r.command << "  seed " << r.seed << "  inputs " << r.inputs << "\n";
  size_t width = 0;
  for (const auto& c : r.checks) width = std::max(width, c.name.size());
  int failed = 0;
  for (const auto& c : r.checks) {
    failed += c.status == Status::Fail;
    if (quiet && c.status != Status::Fail) continue;
    std::string tag = to_string(c.status);
    std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char ch) { return std::toupper(ch); });
    os << "  " << tag << "  ";
    if (c.detail.empty())
      os << c.name;
    else
      os << std::left << std::setw(static_cast<int>(width)) << c.name << "  " << c.detail;
    os << "\n";
  }
  if (!r.error.empty()) os << "error: " << r.error << "\n";
  os << (r.exit_code == 0 ? "ok" : "FAILED") << ": " << r.checks.size() << " checks, " << failed << " failed, exit "
     << r.exit_code << "\n";
  return os.str();
}

Report run(const Options& opts) {
  Report rep;
  rep.command = opts.command;
  rep.seed = opts.seed;
  const auto it = std::find_if(table().begin(), table().end(),
                               [&](const Entry& e) { return e.command.name == opts.command; });
  std::string digest_src = opts.command;
  for (const auto& p : opts.positional) digest_src += '\0' + p;
  json input;
  try {
    if (it == table().end()) throw io::ParseError("command", "unknown command \"" + opts.command + "\"");
    if (opts.input) {
      const std::string path = resolve_input(*opts.input);
      const std::string bytes = read_bytes(path);
      digest_src += '\0' + bytes;
      try {
        input = io::parse(bytes);
      } catch (const io::ParseError& e) {
        throw io::ParseError(*opts.input + ": " + e.where(), "malformed JSON");
      }
    } else if (it->needs_input) {
      throw io::ParseError("--input", opts.command + " needs an input file");
    }
  } catch (const io::ParseError& e) {
    rep.inputs = "fnv1a64:" + hex64(fnv1a64(digest_src));
    rep.error = e.what();
    rep.exit_code = 2;
    return rep;
  }
  rep.inputs = "fnv1a64:" + hex64(fnv1a64(digest_src));

  Checks checks(input);
  try {
    Context ctx{opts, input, checks, rep.result};
    it->handler(ctx);
  } catch (const io::ParseError& e) {
    rep.error = e.what();
    rep.exit_code = 2;
  } catch (const PreconditionError& e) {
    rep.error = e.what();
    rep.exit_code = 3;
  } catch (const ShapeError& e) {
    rep.error = e.what();
    rep.exit_code = 3;
  } catch (const InvariantError& e) {
    checks.add("internal_consistency", false, e.what());
  }
  rep.checks = std::move(checks.entries);
  std::stable_sort(rep.checks.begin(), rep.checks.end(),
                   [](const CheckEntry& a, const CheckEntry& b) { return a.name < b.name; });
  if (rep.exit_code == 0)
    for (const auto& c : rep.checks)
      if (c.status == Status::Fail) rep.exit_code = 1;
  return rep;
}

namespace {

struct Parsed {
  Options opts;
  int usage_exit = -1;
  std::string message;
};

Parsed parse_args(std::vector<std::string> args, std::ostream* help_out) {
  Parsed p;
  CLI::App app{"Exact-arithmetic workbench for linear generalized complex geometry", "gencx"};
  app.require_subcommand(1);
  std::uint64_t seed = 42;
  for (const auto& cmd : commands()) {
    auto* sub = app.add_subcommand(cmd.name, cmd.summary);
    sub->add_option("args", p.opts.positional, "positional arguments (lie-example: so4)");
    sub->add_option("--input", p.opts.input, "JSON input file");
    sub->add_option("--seed", seed, "seed for randomized suites")->default_val(42);
    sub->add_flag("--json", p.opts.json, "machine-readable report");
    sub->add_flag("--quiet", p.opts.quiet, "print failures and the summary only");
  }
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      if (help_out) *help_out << app.help();
      p.usage_exit = 0;
    } else {
      p.usage_exit = 2;
      p.message = e.what();
    }
    return p;
  }
  p.opts.command = app.get_subcommands().front()->get_name();
  p.opts.seed = seed;
  if (const char* env = std::getenv("GENCX_SEED")) {
    try {
      size_t used = 0;
      p.opts.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing text");
    } catch (const std::exception&) {
      p.usage_exit = 2;
      p.message = std::string("GENCX_SEED is not an unsigned integer: ") + env;
    }
  }
  return p;
}

}  // namespace

Report run(const std::vector<std::string>& args) {
  const Parsed p = parse_args(args, nullptr);
  if (p.usage_exit >= 0) {
    Report r;
    r.command = args.empty() ? "" : args.front();
    r.inputs = "fnv1a64:" + hex64(fnv1a64(""));
    r.error = p.message.empty() ? "help requested" : p.message;
    r.exit_code = p.usage_exit;
    return r;
  }
  return run(p.opts);
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  const Parsed p = parse_args(std::vector<std::string>(argv + 1, argv + argc), &out);
  if (p.usage_exit >= 0) {
    if (!p.message.empty()) err << "gencx: " << p.message << "\n";
    return p.usage_exit;
  }
  const Report r = run(p.opts);
  if (p.opts.json)
    out << to_json(r).dump(2) << "\n";
  else
    out << to_text(r, p.opts.quiet);
  if (!r.error.empty() && p.opts.json) err << "gencx: " << r.error << "\n";
  return r.exit_code;
}

}  // namespace gencx::cli
