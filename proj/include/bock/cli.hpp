// Copyright 2026 The bockmst Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bock/oracle.hpp"
#include "bock/parse.hpp"

namespace bock::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitInputError = 3;
inline constexpr int kExitEquivalenceFailure = 4;

struct RunConfig {
  std::string subcommand;           // solve | trace | parse | check
  std::vector<std::string> inputs;  // check: extra fixture files added to the corpus
  std::string engine = "verbatim";  // verbatim | structured | both
  std::optional<std::string> trace_out;
  int oracle_bound = kDefaultOracleBound;
  bool allow_large_oracle = false;  // required for oracle_bound > kDefaultOracleBound
  CorpusParams corpus;
  double scale = kDefaultScale;
  std::string format = "table";     // parse output: table | json
  std::string mutant;               // check only: "greedy" swaps in a broken solver
};

/// Returns a list of problems with `config`; empty when it is usable.
std::vector<std::string> validate(const RunConfig& config);

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_trace(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_parse(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_check(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches on config.subcommand after validate().
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (program name first) and runs. Usage errors exit with
/// kExitInputError.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Cheapest finite incoming arc per node, cycles ignored. Wrong on purpose;
/// used to show that cmd_check catches a broken engine.
Solution greedy_mutant(const ProblemInstance& instance);

/// The L100-style block printed by cmd_solve.
void print_solution(const Solution& solution, const ProblemInstance& instance, std::ostream& out);

}  // namespace bock::cli
