#include <doctest.h>

#include <gencx/io/json.hpp>

using namespace gencx;
using io::json;

namespace {

std::string where_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const io::ParseError& e) {
    return e.where();
  }
  return "no error";
}

}  // namespace

TEST_CASE("rationals and complex entries") {
  CHECK(io::rational_from(json("6/4"), "") == Rational(3) / Rational(2));
  CHECK(io::rational_from(json(-7), "") == Rational(-7));
  CHECK(io::to_json(Rational(3) / Rational(-6)) == json("-1/2"));
  CHECK(io::to_json(Rational(5)) == json("5"));
  CHECK(io::gauss_from(json{{"re", "1/2"}, {"im", "-3"}}, "") == GaussRational(Rational(1) / Rational(2), Rational(-3)));
  CHECK(io::gauss_from(json{{"im", 1}}, "") == GaussRational::i());
  CHECK(io::gauss_from(json("2"), "") == GaussRational(2));
  CHECK(where_of([] { io::rational_from(json("1/0"), "/x"); }) == "/x");
  CHECK(where_of([] { io::gauss_from(json{{"re", "1"}, {"imag", "1"}}, "/z"); }) == "/z/imag");
}

TEST_CASE("matrices report the offending entry") {
  const MatQ m = io::matq_from(json::parse(R"([["1", "2/3"], [0, "-1"]])"), "");
  CHECK(m(0, 1) == Rational(2) / Rational(3));
  CHECK(io::matq_from(io::to_json(m), "") == m);
  CHECK(where_of([] { io::matq_from(json::parse(R"([["1", "x"], ["0", "1"]])"), "/F"); }) == "/F/0/1");
  CHECK(where_of([] { io::matq_from(json::parse(R"([["1", "2"], ["0"]])"), "/F"); }) == "/F/1");
  CHECK(where_of([] { io::matq_from(json::parse(R"("1")"), ""); }) == "/");
  const MatQi z = io::matqi_from(json::parse(R"([[{"re": "1", "im": "1"}, "2"]])"), "");
  CHECK(z(0, 0) == GaussRational(1, 1));
  CHECK(io::matqi_from(io::to_json(z), "") == z);
}

TEST_CASE("syntax errors carry line and column") {
  CHECK(where_of([] { io::parse("{\n  \"a\": [1,\n  2 3]\n}"); }) == "line 3, column 5");
  CHECK(where_of([] { io::parse("{\"a\": 1"); }).rfind("line 1", 0) == 0);
}

TEST_CASE("subspaces and both Dirac encodings") {
  const json sub = json::parse(R"({"ambient": 3, "field": "Q", "basis": [["2", "0"], ["2", "1"], ["0", "1"]]})");
  const SubspaceQ s = io::subspaceq_from(sub, "");
  CHECK(s.dim() == 2);
  CHECK(io::subspaceq_from(io::to_json(s), "") == s);
  CHECK(io::subspaceqi_from(sub, "") == complexify(s));
  CHECK(io::subspaceq_from(json::parse(R"({"ambient": 2, "basis": []})"), "").is_zero());
  CHECK(where_of([] { io::subspaceq_from(json::parse(R"({"ambient": 2, "basis": [["1"]]})"), "/E"); }) == "/E/basis");

  const json e_eps = json::parse(R"({"E": {"ambient": 2, "basis": [["1"], ["0"]]}, "eps": [["0"]]})");
  const auto l = io::diracq_from(e_eps, "");
  const json raw = json::parse(R"({"v_dim": 2, "field": "Q", "basis": [["1", "0"], ["0", "0"], ["0", "0"], ["0", "1"]]})");
  CHECK(io::diracq_from(raw, "") == l);
  CHECK(io::diracq_from(io::to_json(l), "") == l);
  CHECK(io::diracqi_from(e_eps, "") == dirac::complexify(l));
  CHECK(io::to_json(l).contains("E"));
  CHECK(where_of([] { io::diracq_from(json::parse(R"({"E": {"ambient": 2, "basis": [["1"], ["0"]]}})"), "/L"); }) ==
        "/L");
  CHECK(where_of([] {
          io::diracq_from(json::parse(R"({"E": {"ambient": 1, "basis": [["1"]]}, "eps": [["1"]]})"), "/L");
        }) == "/L/eps");
  const json not_isotropic = json::parse(R"({"v_dim": 1, "basis": [["1"], ["1"]], "field": "Q"})");
  CHECK_THROWS_AS(io::diracq_from(json::parse(R"({"v_dim": 2, "basis": [["1"], ["0"], ["1"], ["0"]]})"), ""),
                  PreconditionError);
  CHECK_THROWS_AS(io::diracq_from(not_isotropic, ""), PreconditionError);
}

TEST_CASE("structured inputs") {
  const auto d = io::bihermitian_from(
      json::parse(R"({"g": [[1, 0], [0, 1]], "b": [[0, 0], [0, 0]], "Jp": [[0, -1], [1, 0]], "Jm": [[0, -1], [1, 0]]})"),
      "");
  CHECK(d.Jp == d.Jm);
  CHECK(io::bihermitian_from(io::to_json(d), "") == d);
  CHECK(where_of([] { io::tamed_from(json::parse(R"({"eps": [[0, 1], [-1, 0]]})"), ""); }) == "/");

  const auto g = liecourant::LieAlgebra::su2_su2();
  CHECK(io::lie_from(io::to_json(g), "").constants() == g.constants());
  CHECK(where_of([] { io::lie_from(json::parse(R"({"dim": 2, "c": [[[0, 0], [0, 0]]]})"), ""); }) == "/c");
  // [e0, e1] = e0 but [e1, e0] = e0 as well: not antisymmetric.
  CHECK_THROWS_AS(io::lie_from(json::parse(R"({"dim": 2, "c": [[[0, 0], [1, 0]], [[1, 0], [0, 0]]]})"), ""),
                  PreconditionError);
}
