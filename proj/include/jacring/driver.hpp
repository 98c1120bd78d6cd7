#pragma once

#include <cstdint>
#include <string>

#include "jacring/report.hpp"

namespace jacring {

// One invocation of the command-line tool.  Commands:
//   hodge-numbers       graded dimensions vs the closed form
//   verify-relations    basic (and, for r = 2, derived) relation families
//   verify-coefficients computed vs displayed quadric coefficients
//   resultants          closed-form resultant evaluations over random draws
//   charvar-dim         first characteristic subvariety dimension analysis
//   certify-generic     filtration certificate over repeated random draws
//   euler-identity      staged binomial identity for the twisted Euler characteristic
//   rep-check           wedge weight multiset symmetry and dimension obstructions
struct RunConfig {
  std::string command;
  int n = -1;
  int k = -1;
  int r = 2;
  std::string field = "Fp";  // "Q" or "Fp"
  std::uint64_t prime = 1000003ULL;
  std::uint64_t seed = 1;
  int q_max = -1;            // hodge-numbers: largest q (default n)
  std::string backend = "both";  // charvar-dim: groebner | certificate | both
  int trials = 1;
  int n_max = -1;            // euler-identity / rep-check ranges
  std::string params_file;   // overrides n/k/r/field/seed sampling
  std::string out;           // report path; empty or "-" means stdout
};

// Runs the command and returns the report; *exit_code receives 0 (all checks
// passed), 1 (some check failed), or 2 (the run errored).
Json run_to_json(const RunConfig& cfg, int* exit_code);

// Runs the command, writes the report to cfg.out, returns the exit code.
int run(const RunConfig& cfg);

}  // namespace jacring
