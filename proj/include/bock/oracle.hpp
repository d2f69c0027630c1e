// Copyright 2026 The bockmst Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bock/instance.hpp"

namespace bock {

/// A parent assignment; parent[origin] = 0.
struct CandidateTree {
  NodeArray<Node> parent;

  /// The arcs (parent[j], j) for every j with a parent.
  [[nodiscard]] std::vector<Arc> arcs() const;

  friend bool operator==(const CandidateTree&, const CandidateTree&) = default;
};

/// Every non-origin node has exactly one finite incoming arc from another
/// node, the origin has none, and every node is reachable from the origin.
bool is_arborescence(const CandidateTree& candidate, const ProblemInstance& instance);

inline constexpr int kDefaultOracleBound = 8;

struct OracleResult {
  Status status = Status::kInfeasible;
  Cost z = 0;                          // sentinel when infeasible
  std::vector<CandidateTree> optima;   // every minimum tree, lexicographic by parent array
  std::uint64_t assignments_checked = 0;

  [[nodiscard]] bool contains(const NodeArray<Node>& parent) const;
};

/// Exhaustive minimum over all parent assignments using finite arcs. Branches
/// whose cost already exceeds the best found are pruned, as are branches that
/// close a cycle. Throws std::invalid_argument when n exceeds `bound`.
OracleResult brute_force_min(const ProblemInstance& instance, int bound = kDefaultOracleBound);

/// Predecessor arrays with the origin entry cleared, so that the root
/// conventions of the two engines compare equal.
NodeArray<Node> normalize_root(const NodeArray<Node>& predecessor, Node origin);

using SolveFunction = std::function<Solution(const ProblemInstance&)>;

struct EquivalenceOptions {
  int oracle_bound = kDefaultOracleBound;
  /// Replaces the verbatim leg (harness sensitivity checks); boundary
  /// alignment and verbatim invariants are then not observed.
  SolveFunction verbatim_override;
};

struct EquivalenceReport {
  Solution verbatim;
  Solution structured;
  std::optional<OracleResult> oracle;

  bool engines_agree = false;     // status, z and parents up to the root convention
  bool z_matches_oracle = false;  // true when the oracle leg is skipped
  bool tree_in_argmin = false;    // true when the oracle leg is skipped or infeasible
  bool boundaries_aligned = false;
  std::size_t boundaries_compared = 0;
  std::vector<std::string> invariant_violations;

  [[nodiscard]] bool consistent() const {
    return engines_agree && z_matches_oracle && tree_in_argmin && boundaries_aligned &&
           invariant_violations.empty();
  }
};

/// Runs both engines (with boundary snapshots and invariant monitors) and,
/// when n is within the bound, the oracle.
EquivalenceReport check_equivalence(const ProblemInstance& instance,
                                    const EquivalenceOptions& options = {});

struct CorpusParams {
  int count = 500;
  std::uint64_t seed = 1;
  int size_min = 2;
  int size_max = 7;
  Cost cost_max = 20;
  int infeasible_percent = 10;
};

/// Instance number `index` of the corpus described by `params`: n uniform in
/// [size_min, size_max], origin uniform, every matrix entry (diagonal and
/// origin column included) INFEASIBLE with the given probability and
/// otherwise uniform in [0, cost_max]. Draws come
/// from a std::seed_seq-seeded mt19937_64, so corpora are reproducible across
/// platforms.
ProblemInstance corpus_instance(const CorpusParams& params, int index);

}  // namespace bock
