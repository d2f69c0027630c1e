// Copyright 2026 The bockmst Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <set>
#include <span>

#include "bock/instance.hpp"
#include "bock/trace.hpp"
#include "bock/verbatim.hpp"

namespace bock {

/// Engine-independent view of the primal-dual state: duals, starred parents,
/// carried candidate arcs and the component partition of the scanned prefix.
struct AbstractState {
  NodeArray<Cost> u;
  NodeArray<Node> parent;                 // 0 = no parent
  NodeArray<std::optional<Arc>> carried;  // nullopt = nothing carried
  NodeArray<Node> component;              // class label; 0 = outside the covered set

  /// The partition as a set family over the covered nodes.
  [[nodiscard]] std::set<std::set<Node>> classes() const;

  friend bool operator==(const AbstractState&, const AbstractState&) = default;
};

/// Projects a verbatim state taken at an L3 boundary. Components cover the
/// scanned prefix 1..K plus the origin, labeled by their smallest member.
/// Throws std::invalid_argument if any span label is negative.
AbstractState project_state(const VerbatimState& state, Node origin);

/// Equal duals, parents and carried arcs, and equal partitions up to renaming
/// of the class labels.
bool aligned(const AbstractState& a, const AbstractState& b);

/// Record for a scan boundary, in the trace record format (label L3).
TraceEvent snapshot_event(int k, const AbstractState& state);

/// Hooks into the structured engine's phases.
class StructuredObserver {
 public:
  virtual ~StructuredObserver() = default;
  /// After initialization (k = 0) and after every scanned index k.
  virtual void on_boundary(int /*k*/, const AbstractState& /*state*/) {}
  /// After a dual raise; `active` lists the members of the raised component.
  virtual void on_dual_raise(int /*k*/, const AbstractState& /*state*/,
                             std::span<const Node> /*active*/, Arc /*entering*/) {}
  /// Around every exchange.
  virtual void on_exchange(int /*k*/, const AbstractState& /*before*/,
                           const AbstractState& /*after*/) {}
};

/// Phase-structured solve: per scanned node, repeat {candidate search, dual
/// raise, backward trace, contract on re-entry} until the trace reaches an
/// unstarred node, then exchange. Ties use the same order as the verbatim
/// engine. On optimum, predecessor[origin] = origin.
Solution solve_structured(const ProblemInstance& instance, StructuredObserver* observer = nullptr);

}  // namespace bock
