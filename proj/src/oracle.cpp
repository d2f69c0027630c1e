// Copyright 2026 The bockmst Authors
// SPDX-License-Identifier: Apache-2.0

#include "bock/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "bock/invariants.hpp"
#include "bock/structured.hpp"
#include "bock/verbatim.hpp"

namespace bock {

std::vector<Arc> CandidateTree::arcs() const {
  std::vector<Arc> result;
  for (Node j = 1; j <= parent.size(); ++j) {
    if (parent[j] != 0) {
      result.push_back({parent[j], j});
    }
  }
  return result;
}

bool is_arborescence(const CandidateTree& candidate, const ProblemInstance& instance) {
  const int n = instance.n();
  const Node origin = instance.origin();
  if (candidate.parent.size() != n || candidate.parent[origin] != 0) {
    return false;
  }
  for (Node j = 1; j <= n; ++j) {
    if (j == origin) {
      continue;
    }
    const Node p = candidate.parent[j];
    if (p < 1 || p > n || p == j || !instance.finite(p, j)) {
      return false;
    }
  }
  // Every chain of parents must reach the origin within n - 1 steps.
  for (Node j = 1; j <= n; ++j) {
    Node at = j;
    int steps = 0;
    while (at != origin && steps < n) {
      at = candidate.parent[at];
      ++steps;
    }
    if (at != origin) {
      return false;
    }
  }
  return true;
}

bool OracleResult::contains(const NodeArray<Node>& parent) const {
  return std::any_of(optima.begin(), optima.end(),
                     [&](const CandidateTree& tree) { return tree.parent == parent; });
}

namespace {

class Enumerator {
 public:
  explicit Enumerator(const ProblemInstance& instance)
      : instance_(instance), n_(instance.n()), parent_(n_, 0) {
    for (Node j = 1; j <= n_; ++j) {
      if (j != instance.origin()) {
        order_.push_back(j);
      }
    }
    // Cheapest incoming arc per remaining suffix, for the cost bound.
    suffix_floor_.assign(order_.size() + 1, 0);
    for (std::size_t at = order_.size(); at-- > 0;) {
      Cost floor = ProblemInstance::kInfeasible;
      for (Node i = 1; i <= n_; ++i) {
        if (i != order_[at] && instance.finite(i, order_[at])) {
          floor = std::min(floor, instance.cost(i, order_[at]));
        }
      }
      if (floor == ProblemInstance::kInfeasible) {
        feasible_ = false;
        floor = 0;
      }
      suffix_floor_[at] = suffix_floor_[at + 1] + floor;
    }
  }

  OracleResult run() {
    OracleResult result;
    if (feasible_) {
      descend(0, 0);
    }
    result.assignments_checked = checked_;
    if (!best_) {
      result.status = Status::kInfeasible;
      result.z = instance_.sentinel();
      return result;
    }
    result.status = Status::kOptimum;
    result.z = *best_;
    result.optima = std::move(optima_);
    std::sort(result.optima.begin(), result.optima.end(),
              [](const CandidateTree& a, const CandidateTree& b) {
                return a.parent.values() < b.parent.values();
              });
    return result;
  }

 private:
  void descend(std::size_t at, Cost partial) {
    if (best_ && partial + suffix_floor_[at] > *best_) {
      return;
    }
    if (at == order_.size()) {
      ++checked_;
      CandidateTree tree{parent_};
      if (!is_arborescence(tree, instance_)) {
        return;
      }
      if (!best_ || partial < *best_) {
        best_ = partial;
        optima_.clear();
      }
      optima_.push_back(std::move(tree));
      return;
    }
    const Node j = order_[at];
    for (Node i = 1; i <= n_; ++i) {
      if (i == j || !instance_.finite(i, j) || closes_cycle(i, j)) {
        continue;
      }
      parent_[j] = i;
      descend(at + 1, partial + instance_.cost(i, j));
      parent_[j] = 0;
    }
  }

  // Would parent[j] = i close a cycle among the nodes assigned so far?
  bool closes_cycle(Node i, Node j) const {
    Node at = i;
    for (int steps = 0; steps < n_ && at != 0; ++steps) {
      if (at == j) {
        return true;
      }
      at = parent_[at];
    }
    return false;
  }

  const ProblemInstance& instance_;
  int n_;
  NodeArray<Node> parent_;
  std::vector<Node> order_;
  std::vector<Cost> suffix_floor_;
  bool feasible_ = true;
  std::optional<Cost> best_;
  std::vector<CandidateTree> optima_;
  std::uint64_t checked_ = 0;
};

class BoundaryRecorder : public VerbatimObserver {
 public:
  BoundaryRecorder(const ProblemInstance& instance, VerbatimObserver& next)
      : origin_(instance.origin()), next_(next) {}

  void on_event(const TraceEvent& event, const VerbatimState& state) override {
    next_.on_event(event, state);
    if (event.label == Label::kL3) {
      boundaries.push_back(project_state(state, origin_));
    }
  }

  std::vector<AbstractState> boundaries;

 private:
  Node origin_;
  VerbatimObserver& next_;
};

class StructuredRecorder : public StructuredInvariantMonitor {
 public:
  using StructuredInvariantMonitor::StructuredInvariantMonitor;

  void on_boundary(int k, const AbstractState& state) override {
    StructuredInvariantMonitor::on_boundary(k, state);
    boundaries.push_back(state);
  }

  std::vector<AbstractState> boundaries;
};

}  // namespace

OracleResult brute_force_min(const ProblemInstance& instance, int bound) {
  if (instance.n() > bound) {
    throw std::invalid_argument("brute force oracle limited to n <= " + std::to_string(bound) +
                                ", got n = " + std::to_string(instance.n()));
  }
  return Enumerator(instance).run();
}

NodeArray<Node> normalize_root(const NodeArray<Node>& predecessor, Node origin) {
  NodeArray<Node> normalized = predecessor;
  normalized[origin] = 0;
  return normalized;
}

EquivalenceReport check_equivalence(const ProblemInstance& instance,
                                    const EquivalenceOptions& options) {
  EquivalenceReport report;
  const Node origin = instance.origin();

  std::vector<AbstractState> verbatim_boundaries;
  if (options.verbatim_override) {
    report.verbatim = options.verbatim_override(instance);
  } else {
    VerbatimInvariantMonitor monitor(instance);
    BoundaryRecorder recorder(instance, monitor);
    report.verbatim = verbatim::solve(instance, &recorder);
    verbatim_boundaries = std::move(recorder.boundaries);
    report.invariant_violations = monitor.violations();
  }

  StructuredRecorder structured_recorder(instance);
  report.structured = solve_structured(instance, &structured_recorder);
  for (const auto& violation : structured_recorder.violations()) {
    report.invariant_violations.push_back("structured " + violation);
  }

  if (options.verbatim_override) {
    report.boundaries_aligned = true;
  } else {
    report.boundaries_aligned =
        verbatim_boundaries.size() == structured_recorder.boundaries.size();
    const std::size_t common =
        std::min(verbatim_boundaries.size(), structured_recorder.boundaries.size());
    for (std::size_t b = 0; b < common; ++b) {
      if (!aligned(verbatim_boundaries[b], structured_recorder.boundaries[b])) {
        report.boundaries_aligned = false;
      }
    }
    report.boundaries_compared = common;
  }

  const auto& v = report.verbatim;
  const auto& s = report.structured;
  report.engines_agree = v.status == s.status && v.z == s.z;
  if (report.engines_agree && v.status == Status::kOptimum) {
    report.engines_agree = normalize_root(v.predecessor, origin) ==
                               normalize_root(s.predecessor, origin) &&
                           s.predecessor[origin] == origin;
  }

  report.z_matches_oracle = true;
  report.tree_in_argmin = true;
  if (instance.n() <= options.oracle_bound) {
    report.oracle = brute_force_min(instance, options.oracle_bound);
    const auto& oracle = *report.oracle;
    report.z_matches_oracle = v.status == oracle.status && v.z == oracle.z &&
                              s.status == oracle.status && s.z == oracle.z;
    if (oracle.status == Status::kOptimum) {
      report.tree_in_argmin = v.status == Status::kOptimum &&
                              oracle.contains(normalize_root(v.predecessor, origin)) &&
                              s.status == Status::kOptimum &&
                              oracle.contains(normalize_root(s.predecessor, origin));
    }
  }
  return report;
}

ProblemInstance corpus_instance(const CorpusParams& params, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(params.seed & 0xffffffffU),
                    static_cast<std::uint32_t>(params.seed >> 32U),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  // Modulo reduction of the raw engine output keeps draws identical on every
  // standard library; the bias is irrelevant at these ranges.
  const auto draw = [&rng](std::uint64_t bound) { return rng() % bound; };

  const int span = params.size_max - params.size_min + 1;
  const int n = params.size_min + static_cast<int>(draw(static_cast<std::uint64_t>(span)));
  const Node origin = 1 + static_cast<Node>(draw(static_cast<std::uint64_t>(n)));
  std::vector<Cost> costs;
  costs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int entry = 0; entry < n * n; ++entry) {
    if (static_cast<int>(draw(100)) < params.infeasible_percent) {
      costs.push_back(ProblemInstance::kInfeasible);
    } else {
      costs.push_back(static_cast<Cost>(draw(static_cast<std::uint64_t>(params.cost_max) + 1)));
    }
  }
  return ProblemInstance(n, origin, std::move(costs));
}

}  // namespace bock
