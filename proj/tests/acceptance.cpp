// Runs `gencx verify-all --seed 42 --json` twice and prints one line per
// acceptance criterion.

#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>

namespace {

struct Run {
  std::string out;
  int exit_code = -1;
};

Run capture(const std::string& cmd) {
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const char* const kCriteria[] = {
    "pushforward and pullback closed formulas equal the definitions (500 instances over Q and Q(i))",
    "canonical Poisson quotient pulls back to L and is Poisson (200 instances)",
    "pushforward and pullback are functorial (200 composable triples)",
    "B-field-scrambled normal forms are recovered with a unique normalizing B (300 instances)",
    "bivector identity for pi(J|V*) and the normal-form block matrix (300 instances)",
    "gc-linearity is B-field invariant and equals B-field equivalence of the pushforward (200 isomorphisms)",
    "graph invariance fails for a (2,0)+(0,2) B-field while the identity stays gc-linear; holds for (1,1)",
    "bi-Hermitian data round-trips through (L1, L2) with all subspace identities (300 instances)",
    "tamed symplectic correspondence, eta+ expressions, image and type, Im eps1 identity, round trip (300 instances)",
    "hyper-Kaehler point reproduces J- = K, b = omega_I, L1, L2, eps+-, eta+ = -I/2",
    "no flag triple with exactly two of holo_L1, holo_L2, commutes (500 maps)",
    "su(2)+su(2) Borel example, multiplication and projection maps, integrability criteria",
    "verify-all --seed 42 is byte-identical across two runs and exits 0",
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <path to gencx>\n";
    return 2;
  }
  const std::string cmd = std::string("\"") + argv[1] + "\" verify-all --seed 42 --json";
  const Run first = capture(cmd);
  const Run second = capture(cmd);

  std::map<int, bool> verdict;
  std::map<int, std::string> why;
  try {
    const auto report = nlohmann::json::parse(first.out);
    for (const auto& c : report.at("checks")) {
      const std::string detail = c.at("detail").get<std::string>();
      if (detail.rfind("criterion ", 0) != 0) continue;
      const int n = std::stoi(detail.substr(10));
      const bool ok = c.at("status") == "pass";
      verdict[n] = (verdict.count(n) ? verdict[n] : true) && ok;
      if (!ok) why[n] = c.at("name").get<std::string>() + ": " + detail;
    }
  } catch (const std::exception& e) {
    std::cerr << "unreadable verify-all report: " << e.what() << "\n";
  }
  verdict[13] = !first.out.empty() && first.out == second.out && first.exit_code == 0 && second.exit_code == 0;
  if (!verdict[13])
    why[13] = "exit codes " + std::to_string(first.exit_code) + ", " + std::to_string(second.exit_code) +
              (first.out == second.out ? ", identical output" : ", outputs differ");

  int failed = 0;
  for (int n = 1; n <= 13; ++n) {
    const bool ok = verdict.count(n) && verdict[n];
    failed += !ok;
    std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << kCriteria[n - 1];
    if (!ok) std::cout << "  [" << (why.count(n) ? why[n] : "no result") << "]";
    std::cout << "\n";
  }
  std::cout << (13 - failed) << "/13 criteria pass\n";
  return failed == 0 ? 0 : 1;
}
