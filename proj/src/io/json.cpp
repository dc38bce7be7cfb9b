#include <gencx/io/json.hpp>

#include <fstream>
#include <sstream>

namespace gencx::io {

namespace {

std::string child(const std::string& at, const std::string& key) { return at + "/" + key; }
std::string child(const std::string& at, size_t k) { return at + "/" + std::to_string(k); }

std::string location(const std::string& text, size_t byte) {
  size_t line = 1;
  size_t column = 1;
  for (size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const std::string& where_or_root(const std::string& at) {
  static const std::string root = "/";
  return at.empty() ? root : at;
}

[[noreturn]] void fail(const std::string& at, const std::string& what) { throw ParseError(where_or_root(at), what); }

template <class S, class Entry>
Mat<S> matrix_from(const json& v, const std::string& at, Entry entry) {
  if (!v.is_array()) fail(at, "expected a matrix (array of rows)");
  if (v.empty()) fail(at, "empty matrix; use a subspace with an empty basis instead");
  const size_t rows = v.size();
  size_t cols = 0;
  for (size_t i = 0; i < rows; ++i) {
    if (!v[i].is_array()) fail(child(at, i), "expected a row array");
    if (i == 0) cols = v[i].size();
    if (v[i].size() != cols)
      fail(child(at, i), "row has " + std::to_string(v[i].size()) + " entries, expected " + std::to_string(cols));
  }
  Mat<S> m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j)
      m(static_cast<Index>(i), static_cast<Index>(j)) = entry(v[i][j], child(child(at, i), j));
  return m;
}

template <class S>
json matrix_to(const Mat<S>& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Index count_from(const json& v, const std::string& at) {
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(at, "expected a non-negative integer");
  return static_cast<Index>(v.get<long long>());
}

/// Basis matrix with `ambient` rows; an empty array means the zero subspace.
template <class S, class Entry>
Mat<S> basis_from(const json& v, Index ambient, const std::string& at, Entry entry) {
  if (v.is_array() && v.empty()) return Mat<S>(ambient, 0);
  if (v.is_array() && v.size() == static_cast<size_t>(ambient) && v[0].is_array() && v[0].empty())
    return Mat<S>(ambient, 0);
  Mat<S> b = matrix_from<S>(v, at, entry);
  if (b.rows() != ambient)
    fail(at, "basis has " + std::to_string(b.rows()) + " rows, ambient dimension is " + std::to_string(ambient));
  return b;
}

template <class S>
json subspace_to(const Subspace<S>& s, const char* field) {
  json out;
  out["ambient"] = s.ambient_dim();
  out["field"] = field;
  out["basis"] = s.dim() == 0 ? json::array() : matrix_to(s.basis());
  return out;
}

bool is_gauss_field(const std::string& f, const std::string& at) {
  if (f == "Q") return false;
  if (f == "Qi") return true;
  fail(at, "field must be \"Q\" or \"Qi\", got \"" + f + "\"");
}

std::string field_tag(const json& v, const std::string& at) {
  if (!v.contains("field")) return "Q";
  if (!v["field"].is_string()) fail(child(at, "field"), "expected a string");
  const std::string f = v["field"].get<std::string>();
  is_gauss_field(f, child(at, "field"));
  return f;
}

template <class S, class SubFrom, class MatFrom>
dirac::DiracStructure<S> dirac_from(const json& v, const std::string& at, SubFrom sub_from, MatFrom mat_from) {
  if (!v.is_object()) fail(at, "expected a Dirac structure object");
  if (v.contains("E")) {
    const Subspace<S> e = sub_from(v["E"], child(at, "E"));
    Mat<S> eps(0, 0);
    if (e.dim() > 0) eps = mat_from(member(v, "eps", at), child(at, "eps"));
    if (eps.rows() != e.dim() || eps.cols() != e.dim())
      fail(child(at, "eps"), "eps is " + shape_of(eps) + " but dim E = " + std::to_string(e.dim()));
    if (!is_skew(eps)) fail(child(at, "eps"), "eps is not skew-symmetric");
    return dirac::build(e, eps);
  }
  const Index n = count_from(member(v, "v_dim", at), child(at, "v_dim"));
  const std::string basis_at = child(at, "basis");
  const Mat<S> b = mat_from(member(v, "basis", at), basis_at);
  if (b.rows() != 2 * n) fail(basis_at, "basis needs " + std::to_string(2 * n) + " rows");
  return dirac::DiracStructure<S>::from_subspace(n, Subspace<S>::span(b));
}

}  // namespace

const json& member(const json& v, const std::string& key, const std::string& at) {
  if (!v.is_object()) fail(at, "expected an object");
  auto it = v.find(key);
  if (it == v.end()) fail(at, "missing key \"" + key + "\"");
  return *it;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(location(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON");
  }
}

json load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open input file");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.where(), "malformed JSON");
  }
}

json to_json(const Rational& q) { return to_string(q); }

json to_json(const GaussRational& z) { return json{{"re", to_string(z.re())}, {"im", to_string(z.im())}}; }

json to_json(const MatQ& m) { return matrix_to(m); }
json to_json(const MatQi& m) { return matrix_to(m); }
json to_json(const SubspaceQ& s) { return subspace_to(s, "Q"); }
json to_json(const SubspaceQi& s) { return subspace_to(s, "Qi"); }

json to_json(const dirac::DiracQ& l) {
  const auto [e, eps] = dirac::decompose(l);
  json out;
  out["field"] = "Q";
  out["E"] = to_json(e);
  out["eps"] = e.dim() == 0 ? json::array() : to_json(eps);
  return out;
}

json to_json(const dirac::DiracQi& l) {
  const auto [e, eps] = dirac::decompose(l);
  json out;
  out["field"] = "Qi";
  out["E"] = to_json(e);
  out["eps"] = e.dim() == 0 ? json::array() : to_json(eps);
  return out;
}

json to_json(const gclin::FStructure& f) { return json{{"F", to_json(f.F)}}; }

json to_json(const gclin::GCStructure& l) { return to_json(l.dirac()); }

json to_json(const gkahler::BiHermitianData& d) {
  return json{{"g", to_json(d.g)}, {"b", to_json(d.b)}, {"Jp", to_json(d.Jp)}, {"Jm", to_json(d.Jm)}};
}

json to_json(const gkahler::TamedData& t) { return json{{"eps", to_json(t.eps)}, {"J", to_json(t.J)}}; }

json to_json(const liecourant::LieAlgebra& g) {
  const Index n = g.dim();
  json c = json::array();
  for (Index i = 0; i < n; ++i) {
    json ci = json::array();
    for (Index j = 0; j < n; ++j) {
      json cij = json::array();
      for (Index k = 0; k < n; ++k) cij.push_back(to_json(g.c(i, j, k)));
      ci.push_back(std::move(cij));
    }
    c.push_back(std::move(ci));
  }
  return json{{"dim", n}, {"c", std::move(c)}};
}

Rational rational_from(const json& v, const std::string& at) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (!v.is_string()) fail(at, "expected a rational \"p/q\" or an integer");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument&) {
    fail(at, "malformed rational \"" + v.get<std::string>() + "\"");
  }
}

GaussRational gauss_from(const json& v, const std::string& at) {
  if (!v.is_object()) return GaussRational(rational_from(v, at));
  for (const auto& [k, _] : v.items())
    if (k != "re" && k != "im") fail(child(at, k), "unexpected key in a complex number");
  const Rational re = v.contains("re") ? rational_from(v["re"], child(at, "re")) : Rational(0);
  const Rational im = v.contains("im") ? rational_from(v["im"], child(at, "im")) : Rational(0);
  return {re, im};
}

MatQ matq_from(const json& v, const std::string& at) { return matrix_from<Rational>(v, at, rational_from); }
MatQi matqi_from(const json& v, const std::string& at) { return matrix_from<GaussRational>(v, at, gauss_from); }

SubspaceQ subspaceq_from(const json& v, const std::string& at) {
  if (!v.is_object()) fail(at, "expected a subspace object");
  if (is_gauss_field(field_tag(v, at), child(at, "field"))) fail(child(at, "field"), "a real subspace is required");
  const Index n = count_from(member(v, "ambient", at), child(at, "ambient"));
  return SubspaceQ::span(basis_from<Rational>(member(v, "basis", at), n, child(at, "basis"), rational_from));
}

SubspaceQi subspaceqi_from(const json& v, const std::string& at) {
  if (!v.is_object()) fail(at, "expected a subspace object");
  const std::string f = field_tag(v, at);
  const Index n = count_from(member(v, "ambient", at), child(at, "ambient"));
  const json& b = member(v, "basis", at);
  if (f == "Q") return complexify(SubspaceQ::span(basis_from<Rational>(b, n, child(at, "basis"), rational_from)));
  return SubspaceQi::span(basis_from<GaussRational>(b, n, child(at, "basis"), gauss_from));
}

std::string field_of(const json& v, const std::string& at) {
  if (!v.is_object()) fail(at, "expected a Dirac structure object");
  if (v.contains("E") && v["E"].is_object() && !v.contains("field")) return field_tag(v["E"], child(at, "E"));
  return field_tag(v, at);
}

dirac::DiracQ diracq_from(const json& v, const std::string& at) {
  if (field_of(v, at) != "Q") fail(at, "a real Dirac structure is required");
  return dirac_from<Rational>(v, at, subspaceq_from, matq_from);
}

dirac::DiracQi diracqi_from(const json& v, const std::string& at) {
  if (field_of(v, at) == "Q") return dirac::complexify(dirac_from<Rational>(v, at, subspaceq_from, matq_from));
  return dirac_from<GaussRational>(v, at, subspaceqi_from, matqi_from);
}

GCInput gc_from(const json& v, const std::string& at) {
  GCInput in{gclin::GCStructure::from_dirac(diracqi_from(v, at)), std::nullopt, std::nullopt, std::nullopt};
  if (v.contains("F")) in.F = gclin::f_split(matq_from(v["F"], child(at, "F")));
  if (v.contains("omega")) in.omega = matq_from(v["omega"], child(at, "omega"));
  if (v.contains("B")) in.B = matq_from(v["B"], child(at, "B"));
  return in;
}

gclin::FStructure fstructure_from(const json& v, const std::string& at) {
  if (v.is_array()) return gclin::f_split(matq_from(v, at));
  return gclin::f_split(matq_from(member(v, "F", at), child(at, "F")));
}

gkahler::BiHermitianData bihermitian_from(const json& v, const std::string& at) {
  return {matq_from(member(v, "g", at), child(at, "g")), matq_from(member(v, "b", at), child(at, "b")),
          matq_from(member(v, "Jp", at), child(at, "Jp")), matq_from(member(v, "Jm", at), child(at, "Jm"))};
}

gkahler::TamedData tamed_from(const json& v, const std::string& at) {
  return {matq_from(member(v, "eps", at), child(at, "eps")), matq_from(member(v, "J", at), child(at, "J"))};
}

liecourant::LieAlgebra lie_from(const json& v, const std::string& at) {
  const Index n = count_from(member(v, "dim", at), child(at, "dim"));
  const json& c = member(v, "c", at);
  const std::string c_at = child(at, "c");
  std::vector<Rational> flat;
  flat.reserve(static_cast<size_t>(n * n * n));
  auto expect_len = [&](const json& a, const std::string& w) {
    if (!a.is_array() || a.size() != static_cast<size_t>(n))
      fail(w, "expected an array of length " + std::to_string(n));
  };
  expect_len(c, c_at);
  for (size_t i = 0; i < static_cast<size_t>(n); ++i) {
    expect_len(c[i], child(c_at, i));
    for (size_t j = 0; j < static_cast<size_t>(n); ++j) {
      expect_len(c[i][j], child(child(c_at, i), j));
      for (size_t k = 0; k < static_cast<size_t>(n); ++k)
        flat.push_back(rational_from(c[i][j][k], child(child(child(c_at, i), j), k)));
    }
  }
  return liecourant::LieAlgebra::from_structure_constants(n, std::move(flat));
}

}  // namespace gencx::io
