#pragma once

// Seeded property suites shared by `gencx verify-all` and the acceptance
// runner. Each suite derives its own stream from the run seed, so results
// depend only on (seed, suite).

#include <gencx/gclin/gclin.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gencx::verify {

struct SuiteResult {
  std::string name;
  int criterion = 0;
  bool pass = false;
  Index instances = 0;
  std::string detail;
};

struct Suite {
  std::string name;
  /// Acceptance criterion number, 0 for supplementary suites.
  int criterion;
  std::function<SuiteResult(std::uint64_t)> run;
};

const std::vector<Suite>& suites();

SuiteResult run_suite(const Suite& s, std::uint64_t seed);
std::vector<SuiteResult> run_all(std::uint64_t seed);

/// Identity between (Q⁴, J₀ ⊕ J₀) and its B-field transforms by a form of
/// pure (2,0)+(0,2) type and by one of type (1,1).
struct GraphCounterexample {
  MatQ t;
  gclin::GCStructure lv;
  gclin::GCStructure lw_pure;
  gclin::GCStructure lw_11;
  MatQ b_pure;
  MatQ b_11;
};

GraphCounterexample graph_counterexample();

}  // namespace gencx::verify
