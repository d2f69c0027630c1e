// Copyright 2026 The bockmst Authors
// SPDX-License-Identifier: Apache-2.0

#include "bock/cli.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "bock/engine.hpp"
#include "bock/structured.hpp"
#include "bock/trace.hpp"
#include "bock/verbatim.hpp"

namespace bock::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<EngineKind> selected_engines(const std::string& engine) {
  if (engine == "both") {
    return {EngineKind::kVerbatim, EngineKind::kStructured};
  }
  return {*engine_from_string(engine)};
}

class RecordWriter {
 public:
  explicit RecordWriter(std::ostream& out) : out_(out) {}
  void write(const TraceEvent& event, std::string_view engine) {
    out_ << to_record(event, engine, seq_++) << '\n';
  }

 private:
  std::ostream& out_;
  std::size_t seq_ = 0;
};

class VerbatimRecorder : public VerbatimObserver {
 public:
  explicit VerbatimRecorder(RecordWriter& writer) : writer_(writer) {}
  void on_event(const TraceEvent& event, const VerbatimState& /*state*/) override {
    writer_.write(event, "verbatim");
  }

 private:
  RecordWriter& writer_;
};

class StructuredRecorder : public StructuredObserver {
 public:
  explicit StructuredRecorder(RecordWriter& writer) : writer_(writer) {}
  void on_boundary(int k, const AbstractState& state) override {
    writer_.write(snapshot_event(k, state), "structured");
  }

 private:
  RecordWriter& writer_;
};

Solution solve_traced(const ProblemInstance& instance, EngineKind engine, RecordWriter* writer) {
  if (writer == nullptr) {
    return solve(instance, engine);
  }
  if (engine == EngineKind::kVerbatim) {
    VerbatimRecorder recorder(*writer);
    return verbatim::solve(instance, &recorder);
  }
  StructuredRecorder recorder(*writer);
  return solve_structured(instance, &recorder);
}

bool same_outcome(const Solution& a, const Solution& b, Node origin) {
  return a.status == b.status && a.z == b.z &&
         (a.status == Status::kInfeasible ||
          normalize_root(a.predecessor, origin) == normalize_root(b.predecessor, origin));
}

template <typename T>
void print_row(std::ostream& out, std::string_view name, const NodeArray<T>& values) {
  out << std::left << std::setw(10) << name << std::right;
  for (Node j = 1; j <= values.size(); ++j) {
    out << std::setw(6) << values[j];
  }
  out << '\n';
}

int solve_common(const RunConfig& config, std::ostream& out, std::ostream& err,
                 std::ostream* trace_default) {
  if (config.inputs.size() != 1) {
    err << "error: expected exactly one instance file\n";
    return kExitInputError;
  }
  std::optional<ProblemInstance> instance;
  try {
    instance = load_instance(read_file(config.inputs.front()));
  } catch (const std::exception& e) {
    err << config.inputs.front() << ":" << e.what() << '\n';
    return kExitInputError;
  }

  std::ofstream trace_file;
  std::ostream* trace_stream = trace_default;
  if (config.trace_out) {
    trace_file.open(*config.trace_out, std::ios::binary);
    if (!trace_file) {
      err << "error: cannot write " << *config.trace_out << '\n';
      return kExitInputError;
    }
    trace_stream = &trace_file;
  }
  std::ostringstream deferred;
  std::optional<RecordWriter> writer;
  if (trace_stream != nullptr) {
    writer.emplace(trace_stream == &out ? deferred : *trace_stream);
  }

  std::vector<Solution> solutions;
  for (const EngineKind engine : selected_engines(config.engine)) {
    solutions.push_back(solve_traced(*instance, engine, writer ? &*writer : nullptr));
    if (solutions.size() > 1) {
      out << '\n';
    }
    out << "engine: " << to_string(engine) << '\n';
    print_solution(solutions.back(), *instance, out);
  }
  out << deferred.str();

  if (solutions.size() == 2 &&
      !same_outcome(solutions[0], solutions[1], instance->origin())) {
    err << "error: engines disagree\n";
    return kExitEquivalenceFailure;
  }
  return solutions.front().status == Status::kOptimum ? kExitOk : kExitInfeasible;
}

std::string describe_failure(const EquivalenceReport& report) {
  std::vector<std::string> reasons;
  if (!report.engines_agree) reasons.emplace_back("engines disagree");
  if (!report.z_matches_oracle) reasons.emplace_back("Z differs from the oracle minimum");
  if (!report.tree_in_argmin) reasons.emplace_back("tree not among the oracle optima");
  if (!report.boundaries_aligned) reasons.emplace_back("scan boundaries not aligned");
  for (const auto& v : report.invariant_violations) reasons.push_back("invariant: " + v);
  std::string joined;
  for (const auto& r : reasons) {
    joined += (joined.empty() ? "" : "; ") + r;
  }
  return joined;
}

}  // namespace

void print_solution(const Solution& solution, const ProblemInstance& instance,
                    std::ostream& out) {
  out << "N = " << instance.n() << "  ORIGIN = " << instance.origin()
      << "  M = " << instance.sentinel() << '\n';
  out << (solution.status == Status::kOptimum ? "OPTIMUM SOLUTION" : "INFEASIBLE") << '\n';
  out << "Z = " << solution.z << '\n';
  NodeArray<Node> index(instance.n(), 0);
  for (Node j = 1; j <= instance.n(); ++j) {
    index[j] = j;
  }
  print_row(out, "J:", index);
  print_row(out, "U1[J]:", solution.dual);
  print_row(out, "I STAR[J]:", solution.predecessor);
  print_row(out, "I BAR[J]:", solution.bar_tail);
  print_row(out, "J BAR[J]:", solution.bar_head);
  print_row(out, "SPAN[J]:", solution.span);
}

Solution greedy_mutant(const ProblemInstance& instance) {
  const int n = instance.n();
  Solution solution;
  solution.predecessor = NodeArray<Node>(n, 0);
  solution.dual = NodeArray<Cost>(n, 0);
  solution.bar_tail = NodeArray<Node>(n, 0);
  solution.bar_head = NodeArray<Node>(n, 0);
  solution.span = NodeArray<std::int64_t>(n, 0);
  solution.status = Status::kOptimum;
  for (Node j = 1; j <= n; ++j) {
    solution.span[j] = j;
    if (j == instance.origin()) {
      continue;
    }
    for (Node i = 1; i <= n; ++i) {
      if (i != j && instance.finite(i, j) &&
          (solution.predecessor[j] == 0 ||
           instance.cost(i, j) < instance.cost(solution.predecessor[j], j))) {
        solution.predecessor[j] = i;
      }
    }
    if (solution.predecessor[j] == 0) {
      solution.status = Status::kInfeasible;
    } else {
      solution.z += instance.cost(solution.predecessor[j], j);
    }
  }
  if (solution.status == Status::kInfeasible) {
    solution.z = instance.sentinel();
  }
  return solution;
}

std::vector<std::string> validate(const RunConfig& config) {
  std::vector<std::string> problems;
  if (config.engine != "both" && !engine_from_string(config.engine)) {
    problems.push_back("unknown engine '" + config.engine + "'");
  }
  if (config.oracle_bound < 1) {
    problems.emplace_back("oracle bound must be positive");
  }
  if (config.oracle_bound > kDefaultOracleBound && !config.allow_large_oracle) {
    problems.push_back("oracle bound above " + std::to_string(kDefaultOracleBound) +
                       " needs --allow-large-oracle");
  }
  const auto& c = config.corpus;
  if (c.count < 0) problems.emplace_back("corpus count must be nonnegative");
  if (c.size_min < 1 || c.size_max < c.size_min) {
    problems.emplace_back("size range must satisfy 1 <= size-min <= size-max");
  }
  if (c.cost_max < 0 || c.cost_max > kMaxCost - 1) problems.emplace_back("cost-max out of range");
  if (c.infeasible_percent < 0 || c.infeasible_percent > 100) {
    problems.emplace_back("infeasible percent must be within 0..100");
  }
  if (!(config.scale > 0.0)) problems.emplace_back("scale must be positive");
  if (config.format != "table" && config.format != "json") {
    problems.push_back("unknown format '" + config.format + "'");
  }
  if (!config.mutant.empty() && config.mutant != "greedy") {
    problems.push_back("unknown mutant '" + config.mutant + "'");
  }
  return problems;
}

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return solve_common(config, out, err, nullptr);
}

int cmd_trace(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return solve_common(config, out, err, &out);
}

int cmd_parse(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.inputs.size() != 1) {
    err << "error: expected exactly one parse file\n";
    return kExitInputError;
  }
  std::optional<ParseInstance> parse;
  try {
    parse = load_parse_instance(read_file(config.inputs.front()));
  } catch (const std::exception& e) {
    err << config.inputs.front() << ":" << e.what() << '\n';
    return kExitInputError;
  }

  std::vector<std::optional<HeadAssignment>> results;
  try {
    for (const EngineKind engine : selected_engines(config.engine)) {
      results.push_back(decode_heads(*parse, engine, config.scale));
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  if (results.size() == 2) {
    const bool agree = results[0].has_value() == results[1].has_value() &&
                       (!results[0] || (results[0]->head == results[1]->head &&
                                        results[0]->score_units == results[1]->score_units));
    if (!agree) {
      err << "error: engines disagree\n";
      return kExitEquivalenceFailure;
    }
  }
  const auto& result = results.front();

  if (config.format == "json") {
    nlohmann::ordered_json record;
    record["status"] = result ? "OPTIMUM" : "INFEASIBLE";
    if (result) {
      record["head"] = std::vector<Node>(result->head.values().begin(), result->head.values().end());
      record["score"] = result->score();
      record["cost"] = result->cost();
      record["score_units"] = result->score_units;
      record["cost_units"] = result->cost_units;
      record["w_max_units"] = result->w_max_units;
    }
    out << record.dump() << '\n';
  } else if (result) {
    out << export_heads(*result, *parse);
    out << "score = " << result->score() << '\n';
    out << "cost = " << result->cost() << '\n';
  } else {
    out << "INFEASIBLE\n";
  }
  return result ? kExitOk : kExitInfeasible;
}

int cmd_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
  EquivalenceOptions options;
  options.oracle_bound = config.oracle_bound;
  if (config.mutant == "greedy") {
    options.verbatim_override = greedy_mutant;
  }

  std::size_t passed = 0;
  std::size_t failed = 0;
  auto record = [&](const std::string& name, const ProblemInstance& instance) {
    const EquivalenceReport report = check_equivalence(instance, options);
    if (report.consistent()) {
      ++passed;
      return report;
    }
    ++failed;
    out << "FAIL " << name << ": " << describe_failure(report) << '\n';
    out << serialize(instance);
    return report;
  };

  for (const auto& path : config.inputs) {
    std::optional<ProblemInstance> instance;
    try {
      instance = load_instance(read_file(path));
    } catch (const std::exception& e) {
      err << path << ":" << e.what() << '\n';
      return kExitInputError;
    }
    const auto report = record(path, *instance);
    out << "fixture " << path << ": " << to_string(report.verbatim.status)
        << " Z = " << report.verbatim.z << '\n';
  }

  // Instances are checked in seed order, one at a time.
  for (int index = 0; index < config.corpus.count; ++index) {
    record("seed " + std::to_string(config.corpus.seed) + " index " + std::to_string(index),
           corpus_instance(config.corpus, index));
  }

  out << "checked " << passed + failed << " instances: " << passed << " passed, " << failed
      << " failed\n";
  return failed == 0 ? kExitOk : kExitEquivalenceFailure;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto problems = validate(config);
  if (!problems.empty()) {
    for (const auto& p : problems) {
      err << "error: " << p << '\n';
    }
    return kExitInputError;
  }
  if (config.subcommand == "solve") return cmd_solve(config, out, err);
  if (config.subcommand == "trace") return cmd_trace(config, out, err);
  if (config.subcommand == "parse") return cmd_parse(config, out, err);
  if (config.subcommand == "check") return cmd_check(config, out, err);
  err << "error: unknown subcommand '" << config.subcommand << "'\n";
  return kExitInputError;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Minimum directed spanning trees (arborescences)", "bock"};
  app.require_subcommand(1);

  auto add_engine = [&](CLI::App* sub) {
    sub->add_option("--engine", config.engine, "verbatim, structured or both")
        ->check(CLI::IsMember({"verbatim", "structured", "both"}));
  };

  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("input", config.inputs, "Instance file")->required();
  add_engine(solve_cmd);
  solve_cmd->add_option("--trace-out", config.trace_out, "Write trace records here");

  auto* trace_cmd = app.add_subcommand("trace", "Solve and emit trace records");
  trace_cmd->add_option("input", config.inputs, "Instance file")->required();
  add_engine(trace_cmd);
  trace_cmd->add_option("--trace-out", config.trace_out,
                        "Write trace records here instead of standard output");

  auto* parse_cmd = app.add_subcommand("parse", "Decode dependency heads");
  parse_cmd->add_option("input", config.inputs, "Parse file")->required();
  add_engine(parse_cmd);
  parse_cmd->add_option("--scale", config.scale, "Weight quantization scale");
  parse_cmd->add_option("--format", config.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  auto* check_cmd = app.add_subcommand("check", "Cross-check engines against the oracle");
  check_cmd->add_option("inputs", config.inputs, "Extra instance files to include");
  check_cmd->add_option("--oracle-bound", config.oracle_bound, "Largest n given to the oracle");
  check_cmd->add_flag("--allow-large-oracle", config.allow_large_oracle,
                      "Permit an oracle bound above the default");
  check_cmd->add_option("--corpus-count", config.corpus.count, "Random instances");
  check_cmd->add_option("--corpus-seed", config.corpus.seed, "Corpus seed");
  check_cmd->add_option("--size-min", config.corpus.size_min, "Smallest n");
  check_cmd->add_option("--size-max", config.corpus.size_max, "Largest n");
  check_cmd->add_option("--cost-max", config.corpus.cost_max, "Largest finite cost");
  check_cmd->add_option("--infeasible-percent", config.corpus.infeasible_percent,
                        "Chance that an entry is INFEASIBLE");
  check_cmd->add_option("--mutant", config.mutant, "Replace the verbatim engine (greedy)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  for (auto* sub : {solve_cmd, trace_cmd, parse_cmd, check_cmd}) {
    if (sub->parsed()) {
      config.subcommand = sub->get_name();
    }
  }
  return run(config, out, err);
}

}  // namespace bock::cli
