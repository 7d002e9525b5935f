#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "snd/io.hpp"
#include "snd/verdict.hpp"

namespace snd::cli {

enum ExitCode : int {
  kOk = 0,
  kParseFailure = 1,
  kInfeasible = 2,   // check: a feasibility violation; order: inclusion counterexample
  kAttack = 3,       // check: feasible trace that violates ND1
  kNoPlacement = 4,  // attack/witness: nothing to emit for these parameters
};

struct CheckOutcome {
  /// Keyed by checker: setting, protocol, leash, adversary, horizon, nd1.
  std::map<std::string, Verdict> verdicts;
  bool feasible = true;
  bool nd1_violated = false;
  int exit_code = kOk;
};

/// Runs every feasibility checker plus ND1 detection for `trace` in the scenario.
CheckOutcome evaluate_check(const Scenario& scenario, const Trace& trace);

/// Entry point of the sndcheck tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace snd::cli
