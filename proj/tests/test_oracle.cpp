// Copyright 2026 The bockmst Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <functional>

#include "bock/cli.hpp"
#include "bock/oracle.hpp"
#include "support.hpp"

using namespace bock;

namespace {

CandidateTree tree(std::initializer_list<Node> parents) { return {NodeArray<Node>(parents)}; }

}  // namespace

TEST_CASE("is_arborescence") {
  const auto instance = load_instance("3 1\n0 1 1\n1 0 1\n1 inf 0\n");
  CHECK(is_arborescence(tree({0, 1, 1}), instance));
  CHECK(is_arborescence(tree({0, 1, 2}), instance));
  CHECK_FALSE(is_arborescence(tree({0, 3, 2}), instance));  // 2 <-> 3 cycle
  CHECK_FALSE(is_arborescence(tree({0, 3, 1}), instance));  // 3 -> 2 is INFEASIBLE
  CHECK_FALSE(is_arborescence(tree({2, 1, 1}), instance));  // origin has a parent
  CHECK_FALSE(is_arborescence(tree({0, 0, 1}), instance));  // node 2 unreached
  CHECK_FALSE(is_arborescence(tree({0, 2, 1}), instance));  // self-loop
}

TEST_CASE("CandidateTree arcs") {
  const auto arcs = tree({0, 1, 2}).arcs();
  CHECK(arcs == std::vector<Arc>{{1, 2}, {2, 3}});
}

TEST_CASE("brute force enumerates every optimum") {
  // Two trees tie at cost 1.
  const auto instance = load_instance("3 1\n0 1 1\n1 0 0\n1 0 0\n");
  const auto result = brute_force_min(instance);
  CHECK(result.status == Status::kOptimum);
  CHECK(result.z == 1);
  REQUIRE(result.optima.size() == 2);
  CHECK(result.optima[0] == tree({0, 1, 2}));
  CHECK(result.optima[1] == tree({0, 3, 1}));
  CHECK(result.contains(NodeArray<Node>({0, 1, 2})));
  CHECK_FALSE(result.contains(NodeArray<Node>({0, 1, 1})));
  CHECK(result.assignments_checked > 0);
}

TEST_CASE("brute force reports INFEASIBLE with Z = M") {
  const auto instance = test::load_data("infeasible3.txt");
  const auto result = brute_force_min(instance);
  CHECK(result.status == Status::kInfeasible);
  CHECK(result.z == instance.sentinel());
  CHECK(result.optima.empty());
}

TEST_CASE("brute force: only cycles available is INFEASIBLE") {
  // 2 and 3 feed each other but nothing leaves the origin.
  const auto result = brute_force_min(load_instance("3 1\n0 inf inf\n1 0 1\n1 1 0\n"));
  CHECK(result.status == Status::kInfeasible);
}

TEST_CASE("brute force respects its size bound") {
  const auto instance = test::load_data("bock10.txt");
  CHECK_THROWS_AS(brute_force_min(instance), std::invalid_argument);
  CHECK_NOTHROW(brute_force_min(test::load_data("flight_cost.txt")));
}

TEST_CASE("brute force on the four-node cost instance") {
  const auto result = brute_force_min(test::load_data("flight_cost.txt"));
  CHECK(result.z == 10);
  CHECK(result.contains(NodeArray<Node>({0, 1, 4, 2})));
}

TEST_CASE("seed-pinned corpus instance") {
  // Frozen from the generator; guards against silent changes to the draw order.
  CorpusParams params;
  const auto instance = corpus_instance(params, 0);
  CHECK(serialize(instance) ==
        "5 4\n7 17 14 0 20\n4 2 14 15 9\n4 18 4 19 17\n12 1 20 11 16\ninf 4 9 3 11\n");
  const auto result = brute_force_min(instance);
  CHECK(result.status == Status::kOptimum);
  CHECK(result.z == 23);
}

TEST_CASE("normalize_root") {
  CHECK(normalize_root(NodeArray<Node>({1, 1, 2}), 1) == NodeArray<Node>({0, 1, 2}));
  CHECK(normalize_root(NodeArray<Node>({0, 1, 2}), 1) == NodeArray<Node>({0, 1, 2}));
}

TEST_CASE("check_equivalence on a small corpus") {
  CorpusParams params;
  params.count = 60;
  params.seed = 9;
  for (int index = 0; index < params.count; ++index) {
    const auto report = check_equivalence(corpus_instance(params, index));
    CAPTURE(index);
    CHECK(report.consistent());
    CHECK(report.oracle.has_value());
  }
}

TEST_CASE("check_equivalence skips the oracle above the bound") {
  const auto report = check_equivalence(test::load_data("bock10.txt"));
  CHECK_FALSE(report.oracle.has_value());
  CHECK(report.consistent());
}

TEST_CASE("check_equivalence catches a broken solver") {
  EquivalenceOptions options;
  options.verbatim_override = cli::greedy_mutant;
  const auto report = check_equivalence(test::load_data("flight_cost.txt"), options);
  CHECK_FALSE(report.consistent());
  CHECK_FALSE(report.engines_agree);
}

TEST_CASE("pruned search agrees with plain enumeration") {
  // Every parent assignment, no pruning at all.
  auto enumerate = [](const ProblemInstance& instance) {
    const int n = instance.n();
    OracleResult result;
    result.z = instance.sentinel();
    NodeArray<Node> parent(n, 0);
    std::vector<CandidateTree> optima;
    std::optional<Cost> best;
    std::function<void(Node)> visit = [&](Node j) {
      if (j > n) {
        const CandidateTree candidate{parent};
        if (!is_arborescence(candidate, instance)) {
          return;
        }
        Cost z = 0;
        for (const auto& arc : candidate.arcs()) {
          z += instance.cost(arc.tail, arc.head);
        }
        if (!best || z < *best) {
          best = z;
          optima.clear();
        }
        if (z == *best) {
          optima.push_back(candidate);
        }
        return;
      }
      if (j == instance.origin()) {
        visit(j + 1);
        return;
      }
      for (Node i = 1; i <= n; ++i) {
        parent[j] = i;
        visit(j + 1);
      }
      parent[j] = 0;
    };
    visit(1);
    if (best) {
      result.status = Status::kOptimum;
      result.z = *best;
      result.optima = optima;
    }
    return result;
  };

  CorpusParams params;
  params.size_max = 6;
  params.cost_max = 4;  // small range, many ties
  for (int index = 0; index < 150; ++index) {
    const auto instance = corpus_instance(params, index);
    const auto fast = brute_force_min(instance);
    const auto plain = enumerate(instance);
    CAPTURE(index);
    CHECK(fast.status == plain.status);
    CHECK(fast.z == plain.z);
    CHECK(fast.optima == plain.optima);
  }
}
