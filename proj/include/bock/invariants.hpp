// Copyright 2026 The bockmst Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bock/instance.hpp"
#include "bock/structured.hpp"
#include "bock/verbatim.hpp"

namespace bock {

/// Checks the verbatim engine's maintained properties on every event:
///   - origin isolation: SPAN[origin] = origin and I STAR[origin] = 0
///   - bar pairing: I BAR[j] = 0 exactly when J BAR[j] = 0
///   - monotone duals, and no dual change at all during L9/L10
///   - tightness of the selected arc right after L5
///   - no negative span label at L3, L4 or L5
///   - SS >= N, SS grows by exactly one per contraction, SS <= 2N
class VerbatimInvariantMonitor : public VerbatimObserver {
 public:
  explicit VerbatimInvariantMonitor(const ProblemInstance& instance) : instance_(instance) {}

  void on_event(const TraceEvent& event, const VerbatimState& state) override;

  [[nodiscard]] const std::vector<std::string>& violations() const { return violations_; }
  [[nodiscard]] std::size_t events() const { return events_; }
  [[nodiscard]] std::size_t contractions() const { return contractions_; }

 private:
  void fail(const TraceEvent& event, const std::string& what);

  const ProblemInstance& instance_;
  std::optional<NodeArray<Cost>> previous_u1_;
  std::int64_t previous_ss_ = 0;
  std::vector<std::string> violations_;
  std::size_t events_ = 0;
  std::size_t contractions_ = 0;
};

/// Checks the structured engine's maintained properties:
///   - after every dual raise the cheapest entering reduced cost is exactly 0
///   - the exchange leaves the duals unchanged
///   - at every boundary the starred arcs are acyclic over the components
class StructuredInvariantMonitor : public StructuredObserver {
 public:
  explicit StructuredInvariantMonitor(const ProblemInstance& instance) : instance_(instance) {}

  void on_boundary(int k, const AbstractState& state) override;
  void on_dual_raise(int k, const AbstractState& state, std::span<const Node> active,
                     Arc entering) override;
  void on_exchange(int k, const AbstractState& before, const AbstractState& after) override;

  [[nodiscard]] const std::vector<std::string>& violations() const { return violations_; }

 private:
  const ProblemInstance& instance_;
  std::vector<std::string> violations_;
};

/// True when the starred arcs of `state`, with each component collapsed to a
/// single vertex and arcs inside a component dropped, contain no cycle.
bool starred_arcs_acyclic_over_components(const AbstractState& state);

}  // namespace bock
