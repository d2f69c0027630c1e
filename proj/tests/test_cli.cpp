// Copyright 2026 The bockmst Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "bock/cli.hpp"
#include "bock/trace.hpp"
#include "support.hpp"

using namespace bock;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "bock");
  std::vector<const char*> argv;
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<TraceEvent> records(const std::string& text, const std::string& engine) {
  std::vector<TraceEvent> events;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.front() == '{') {
      auto [event, tag] = from_record(line);
      if (tag == engine) {
        events.push_back(std::move(event));
      }
    }
  }
  return events;
}

std::size_t count_label(const std::vector<TraceEvent>& events, Label label, int k = -1) {
  std::size_t n = 0;
  for (const auto& e : events) {
    n += e.label == label && (k < 0 || e.k == k) ? 1 : 0;
  }
  return n;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("solve prints the output block in listing order") {
  const auto r = run_cli({"solve", test::data_path("bock10.txt")});
  CHECK(r.code == cli::kExitOk);
  CHECK(contains(r.out, "OPTIMUM SOLUTION\nZ = 87\n"));
  const auto order = {"J:", "U1[J]:", "I STAR[J]:", "I BAR[J]:", "J BAR[J]:", "SPAN[J]:"};
  std::size_t last = 0;
  for (const char* row : order) {
    const auto at = r.out.find(row);
    REQUIRE(at != std::string::npos);
    CHECK(at > last);
    last = at;
  }
  CHECK(contains(r.out, "I STAR[J]:     6     4     2     1     4    10     6     9     4     0"));
}

TEST_CASE("solve reports infeasibility with its own exit code") {
  const auto r = run_cli({"solve", test::data_path("infeasible3.txt")});
  CHECK(r.code == cli::kExitInfeasible);
  CHECK(contains(r.out, "INFEASIBLE\nZ = 5\n"));
}

TEST_CASE("solve on the four-node cost instance") {
  const auto r = run_cli({"solve", test::data_path("flight_cost.txt"), "--engine", "both"});
  CHECK(r.code == cli::kExitOk);
  CHECK(contains(r.out, "engine: verbatim"));
  CHECK(contains(r.out, "engine: structured"));
  CHECK(contains(r.out, "Z = 10"));
}

TEST_CASE("input errors") {
  CHECK(run_cli({"solve", test::data_path("missing.txt")}).code == cli::kExitInputError);
  const auto bad = std::filesystem::temp_directory_path() / "bock_cli_bad.txt";
  {
    std::ofstream(bad) << "2 1\n0 q\n1 0\n";
  }
  const auto r = run_cli({"solve", bad.string()});
  CHECK(r.code == cli::kExitInputError);
  CHECK(contains(r.err, "2:3:"));
  CHECK(run_cli({"solve"}).code == cli::kExitInputError);
  CHECK(run_cli({"frobnicate"}).code == cli::kExitInputError);
  CHECK(run_cli({"solve", test::data_path("bock10.txt"), "--engine", "x"}).code ==
        cli::kExitInputError);
  CHECK(run_cli({"check", "--oracle-bound", "9", "--corpus-count", "1"}).code ==
        cli::kExitInputError);
  CHECK(run_cli({"check", "--size-min", "5", "--size-max", "3"}).code == cli::kExitInputError);
}

TEST_CASE("trace: contraction events per fixture") {
  SUBCASE("ten nodes: one contraction at stage 4, with ss = 11") {
    const auto r = run_cli({"trace", test::data_path("bock10.txt")});
    CHECK(r.code == cli::kExitOk);
    const auto events = records(r.out, "verbatim");
    CHECK(count_label(events, Label::kL7Contract, 4) == 1);
    for (const auto& e : events) {
      if (e.label == Label::kL7Contract && e.k == 4) {
        CHECK(e.scalar("ss") == 11);
      }
    }
  }
  SUBCASE("four nodes: one contraction overall, with ss = 5") {
    const auto events = records(run_cli({"trace", test::data_path("flight_cost.txt")}).out, "verbatim");
    REQUIRE(count_label(events, Label::kL7Contract) == 1);
    for (const auto& e : events) {
      if (e.label == Label::kL7Contract) {
        CHECK(e.scalar("ss") == 5);
      }
    }
  }
  SUBCASE("two nodes: none") {
    const auto events = records(run_cli({"trace", test::data_path("two_node.txt")}).out, "verbatim");
    CHECK_FALSE(events.empty());
    CHECK(count_label(events, Label::kL7Contract) == 0);
  }
}

TEST_CASE("trace to a file leaves the solution unchanged") {
  const auto path = (std::filesystem::temp_directory_path() / "bock_cli_trace.jsonl").string();
  const auto traced =
      run_cli({"trace", test::data_path("bock10.txt"), "--engine", "both", "--trace-out", path});
  const auto plain = run_cli({"solve", test::data_path("bock10.txt"), "--engine", "both"});
  CHECK(traced.code == plain.code);
  CHECK(traced.out == plain.out);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(records(text.str(), "verbatim").size() == 88);
  CHECK(records(text.str(), "structured").size() == 11);
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"trace", test::data_path("bock10.txt"), "--engine", "both"},
           {"check", "--corpus-count", "40", "--corpus-seed", "5"},
           {"parse", test::data_path("book_that_flight.txt"), "--format", "json"}}) {
    CHECK(run_cli(args).out == run_cli(args).out);
  }
}

TEST_CASE("parse subcommand") {
  const auto table = run_cli({"parse", test::data_path("book_that_flight.txt")});
  CHECK(table.code == cli::kExitOk);
  CHECK(table.out == "2 Book 1\n3 that 4\n4 flight 2\nscore = 26\ncost = 10\n");
  const auto json = run_cli({"parse", test::data_path("book_that_flight.txt"), "--format", "json",
                             "--engine", "both"});
  CHECK(json.code == cli::kExitOk);
  CHECK(contains(json.out, "\"head\":[0,1,4,2]"));
  CHECK(contains(json.out, "\"score_units\":26000"));
  const auto none = run_cli({"parse", test::data_path("parse_no_head.txt")});
  CHECK(none.code == cli::kExitInfeasible);
  CHECK(none.out == "INFEASIBLE\n");
}

TEST_CASE("check passes on fixtures plus a corpus") {
  const auto r = run_cli({"check", test::data_path("bock10.txt"), test::data_path("flight_cost.txt"),
                          "--corpus-count", "100"});
  CHECK(r.code == cli::kExitOk);
  CHECK(contains(r.out, "bock10.txt: OPTIMUM Z = 87"));
  CHECK(contains(r.out, "flight_cost.txt: OPTIMUM Z = 10"));
  CHECK(contains(r.out, "checked 102 instances: 102 passed, 0 failed"));
}

TEST_CASE("check prints a counterexample for a broken engine") {
  const auto r = run_cli({"check", "--mutant", "greedy", "--corpus-count", "50"});
  CHECK(r.code == cli::kExitEquivalenceFailure);
  const auto at = r.out.find("FAIL seed 1 index ");
  REQUIRE(at != std::string::npos);
  // The instance follows verbatim and loads back.
  const auto body_start = r.out.find('\n', at) + 1;
  std::istringstream rest(r.out.substr(body_start));
  std::string header;
  std::getline(rest, header);
  std::istringstream dims(header);
  int n = 0;
  dims >> n;
  REQUIRE(n >= 2);
  std::string text = header + "\n";
  for (int row = 0; row < n; ++row) {
    std::string line;
    std::getline(rest, line);
    text += line + "\n";
  }
  CHECK_NOTHROW(load_instance(text));
}

TEST_CASE("greedy mutant is wrong on a circuit") {
  const auto solution = cli::greedy_mutant(test::load_data("flight_cost.txt"));
  CHECK(solution.z == 9);
  CHECK(solution.predecessor.values() == std::vector<Node>{0, 1, 4, 3});
}
