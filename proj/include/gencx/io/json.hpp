#pragma once

// JSON encodings: rationals as "p/q" strings (integers also accepted on
// input), complex entries as {"re", "im"}, matrices as arrays of rows,
// subspaces as {"ambient", "basis", "field"} with basis vectors as columns.

#include <gencx/gkahler/gkahler.hpp>
#include <gencx/liecourant/liecourant.hpp>

#include <json.hpp>

#include <optional>
#include <string>

namespace gencx::io {

using json = nlohmann::json;

/// Malformed or ill-typed input. `where` is a JSON pointer or "line L,
/// column C".
class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& what)
      : Error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// Parses text, reporting syntax errors by line and column.
json parse(const std::string& text);
json load_file(const std::string& path);

json to_json(const Rational& q);
json to_json(const GaussRational& z);
json to_json(const MatQ& m);
json to_json(const MatQi& m);
json to_json(const SubspaceQ& s);
json to_json(const SubspaceQi& s);
json to_json(const dirac::DiracQ& l);
json to_json(const dirac::DiracQi& l);
json to_json(const gclin::FStructure& f);
json to_json(const gclin::GCStructure& l);
json to_json(const gkahler::BiHermitianData& d);
json to_json(const gkahler::TamedData& t);
json to_json(const liecourant::LieAlgebra& g);

/// Readers take the value and its JSON pointer for diagnostics.
Rational rational_from(const json& v, const std::string& at);
GaussRational gauss_from(const json& v, const std::string& at);
MatQ matq_from(const json& v, const std::string& at);
MatQi matqi_from(const json& v, const std::string& at);
SubspaceQ subspaceq_from(const json& v, const std::string& at);
/// Accepts field "Q" and complexifies.
SubspaceQi subspaceqi_from(const json& v, const std::string& at);

/// {"v_dim", "field", "basis"} or {"E", "eps"}.
dirac::DiracQ diracq_from(const json& v, const std::string& at);
dirac::DiracQi diracqi_from(const json& v, const std::string& at);
/// Field tag of a Dirac structure object, "Q" unless stated.
std::string field_of(const json& v, const std::string& at);

struct GCInput {
  gclin::GCStructure L;
  std::optional<gclin::FStructure> F;
  std::optional<MatQ> omega;
  std::optional<MatQ> B;
};

GCInput gc_from(const json& v, const std::string& at);
gclin::FStructure fstructure_from(const json& v, const std::string& at);
gkahler::BiHermitianData bihermitian_from(const json& v, const std::string& at);
gkahler::TamedData tamed_from(const json& v, const std::string& at);
/// {"dim": n, "c": c[i][j][k]}.
liecourant::LieAlgebra lie_from(const json& v, const std::string& at);

/// Member lookup with a ParseError naming the missing key.
const json& member(const json& v, const std::string& key, const std::string& at);

}  // namespace gencx::io
