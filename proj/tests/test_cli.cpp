#include <doctest.h>

#include <gencx/cli/cli.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>

using namespace gencx;
using namespace gencx::cli;

namespace {

Report run_fixture(const std::string& command, const std::string& fixture) {
  return run(std::vector<std::string>{command, "--input", fixture});
}

bool all_pass(const Report& r) {
  for (const auto& c : r.checks)
    if (c.status == Status::Fail) return false;
  return r.exit_code == 0 && !r.checks.empty();
}

std::string temp_file(const std::string& name, const std::string& body) {
  const std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("every library operation is reachable from a subcommand") {
  const std::vector<std::string> ops = {
      "canonicalize", "sum", "intersect", "kernel", "image", "contains", "preimage", "conjugate", "real_points",
      "is_positive_definite", "pairing", "build", "decompose", "is_maximal_isotropic", "pushforward_def",
      "pushforward_formula", "pullback_def", "pullback_formula", "bfield", "poisson_quotient", "is_poisson",
      "is_presymplectic", "is_poisson_morphism", "is_cr", "is_cocr", "annihilator_duality", "f_split",
      "f_from_split", "is_f_linear", "gc_from_dirac", "normal_form_build", "normalize", "is_gc_linear",
      "decompose_gc_linear", "bfield_equivalent", "graph_invariance_check", "type_decompose", "gk_from_bihermitian",
      "bihermitian_from_gk", "subspace_identities", "f_structures_of", "tamed_to_gk", "gk_to_tamed",
      "holo_poisson", "eps_pm", "im_eps1_identity", "two_of_three", "first_product", "second_product",
      "courant_bracket", "is_integrable_invariant", "so4_borel_example", "multiplication_map_check",
      "projection_cocr_check", "invariant_normal_form_criteria", "run"};
  std::set<std::string> covered;
  for (const auto& c : commands()) covered.insert(c.ops.begin(), c.ops.end());
  for (const auto& op : ops) {
    INFO(op);
    CHECK(covered.count(op) == 1);
  }
  CHECK(commands().size() == 15);
}

TEST_CASE("shipped fixtures pass") {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"check-dirac", "presymplectic_r3.json"},      {"check-dirac", "symplectic_r2.json"},
      {"pushforward", "pushforward_r3.json"},         {"pullback", "pullback_r3.json"},
      {"bfield", "bfield_r3.json"},                   {"poisson-quotient", "presymplectic_r3.json"},
      {"gc-check", "symplectic_r2.json"},             {"gc-check", "complex_r2.json"},
      {"gc-check", "mixed_r4.json"},                  {"normal-form", "mixed_r4_normal_form.json"},
      {"gc-linear", "counterexample_pure.json"},      {"graph-invariance", "counterexample_pure.json"},
      {"graph-invariance", "counterexample_11.json"}, {"gk-from-bihermitian", "hyperkahler_r4.json"},
      {"gk-from-bihermitian", "kahler_r2.json"},      {"gk-to-tamed", "hyperkahler_r4.json"},
      {"tamed-to-gk", "hyperkahler_tamed_r4.json"},   {"holo-poisson", "hyperkahler_r4.json"},
      {"holo-poisson", "hyperkahler_tamed_r4.json"},  {"lie-example", "so4_borel.json"},
  };
  for (const auto& [cmd, fixture] : cases) {
    INFO(cmd << " " << fixture);
    const Report r = run_fixture(cmd, fixture);
    CHECK(r.error == "");
    CHECK(all_pass(r));
  }
}

TEST_CASE("lie-example so4") {
  const Report r = run(std::vector<std::string>{"lie-example", "so4"});
  CHECK(all_pass(r));
  std::set<std::string> names;
  for (const auto& c : r.checks) names.insert(c.name);
  CHECK(names.count("multiplication_holomorphic_half_omega") == 1);
  CHECK(names.count("projection_cocr") == 1);
  CHECK(names.count("criteria_borel") == 1);
}

TEST_CASE("graph invariance fixture reports the counterexample values") {
  const Report r = run_fixture("graph-invariance", "counterexample_pure.json");
  for (const auto& c : r.checks) {
    if (c.name == "graph_invariance") CHECK(c.detail == "false, expected false");
    if (c.name == "gc_linear") CHECK(c.detail == "true, expected true");
  }
}

TEST_CASE("exit codes") {
  CHECK(run_fixture("check-dirac", "malformed.json").exit_code == 2);
  CHECK(run_fixture("check-dirac", "malformed.json").error.find("line 3") != std::string::npos);
  CHECK(run_fixture("gc-check", "real_symplectic_r2.json").exit_code == 3);
  CHECK(run_fixture("gc-check", "real_symplectic_r2.json").error.find("conjugate") != std::string::npos);
  CHECK(run_fixture("check-dirac", "raw_basis_r2.json").exit_code == 1);
  CHECK(run_fixture("check-dirac", "no_such_file.json").exit_code == 2);
  CHECK(run(std::vector<std::string>{"gc-check"}).exit_code == 2);
  CHECK(run(std::vector<std::string>{"frobnicate"}).exit_code == 2);
  CHECK(run(std::vector<std::string>{"lie-example", "su3"}).exit_code == 2);

  const std::string missing = temp_file("gencx_missing_key.json", R"({"f": [["1"]]})");
  const Report m = run_fixture("pushforward", missing);
  CHECK(m.exit_code == 2);
  CHECK(m.error.rfind("/: missing key \"L\"", 0) == 0);

  const std::string extra = temp_file("gencx_extra_keys.json", R"({
    "v_dim": 1, "basis": [["1"], ["0"]],
    "t": [["1", "0"], ["0", "1"]]
  })");
  CHECK(run_fixture("check-dirac", extra).exit_code == 0);
}

TEST_CASE("expectations are compared") {
  const std::string path = temp_file("gencx_expect_gw.json", R"({
    "t": [["1"]],
    "L_V": {"E": {"ambient": 1, "basis": [["1"]]}, "eps": [["0"]]},
    "L_W": {"E": {"ambient": 1, "basis": [["1"]]}, "eps": [["0"]]},
    "expect": {"gc_linear": false}
  })");
  // Not generalized complex: real structures meet their conjugate.
  CHECK(run_fixture("gc-linear", path).exit_code == 3);

  const std::string hk = temp_file("gencx_expect_hk.json", R"({
    "g": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    "b": [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
    "Jp": [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]],
    "Jm": [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]],
    "phi": [[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
  })");
  // At a Kaehler point J+ - J- = 0.
  const Report r = run_fixture("gk-from-bihermitian", hk);
  CHECK(r.exit_code == 3);
  CHECK(r.error.find("two_of_three") != std::string::npos);
}

TEST_CASE("reports are deterministic and sorted") {
  const Report a = run_fixture("gk-from-bihermitian", "hyperkahler_r4.json");
  const Report b = run_fixture("gk-from-bihermitian", "hyperkahler_r4.json");
  CHECK(to_json(a).dump() == to_json(b).dump());
  for (size_t k = 1; k < a.checks.size(); ++k) CHECK(a.checks[k - 1].name <= a.checks[k].name);
  CHECK(a.seed == 42);
  CHECK(a.inputs.rfind("fnv1a64:", 0) == 0);
  CHECK(a.inputs != run_fixture("gk-from-bihermitian", "kahler_r2.json").inputs);
  const auto j = to_json(a);
  for (const char* key : {"command", "inputs", "seed", "checks", "result", "exit_code"}) CHECK(j.contains(key));
  CHECK(to_text(a).find("PASS  round_trip") != std::string::npos);
  CHECK(to_text(a, true).find("round_trip") == std::string::npos);
}

TEST_CASE("seed flag and environment override") {
  Options o;
  o.command = "lie-example";
  o.positional = {"so4"};
  o.seed = 7;
  CHECK(run(o).seed == 7);
  CHECK(run(std::vector<std::string>{"lie-example", "so4", "--seed", "9"}).seed == 9);
  setenv("GENCX_SEED", "11", 1);
  CHECK(run(std::vector<std::string>{"lie-example", "so4", "--seed", "9"}).seed == 11);
  setenv("GENCX_SEED", "eleven", 1);
  CHECK(run(std::vector<std::string>{"lie-example", "so4"}).exit_code == 2);
  unsetenv("GENCX_SEED");
  CHECK(run(std::vector<std::string>{"lie-example", "so4"}).seed == 42);
}

TEST_CASE("fnv1a64") {
  CHECK(fnv1a64("") == 0xCBF29CE484222325ULL);
  CHECK(fnv1a64("a") == 0xAF63DC4C8601EC8CULL);
}
