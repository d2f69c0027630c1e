// Copyright 2026 The bockmst Authors
// SPDX-License-Identifier: Apache-2.0

#include "bock/invariants.hpp"

#include <algorithm>

namespace bock {

void VerbatimInvariantMonitor::fail(const TraceEvent& event, const std::string& what) {
  violations_.push_back(std::string(to_string(event.label)) + " k=" + std::to_string(event.k) +
                        ": " + what);
}

void VerbatimInvariantMonitor::on_event(const TraceEvent& event, const VerbatimState& state) {
  ++events_;
  const int n = state.n();
  const Node origin = instance_.origin();

  if (state.span[origin] != origin || state.i_star[origin] != 0) {
    fail(event, "origin not isolated");
  }
  for (Node j = 1; j <= n; ++j) {
    if ((state.i_bar[j] == 0) != (state.j_bar[j] == 0)) {
      fail(event, "unpaired bar at node " + std::to_string(j));
    }
  }

  if (previous_u1_) {
    for (Node j = 1; j <= n; ++j) {
      if (state.u1[j] < (*previous_u1_)[j]) {
        fail(event, "dual decreased at node " + std::to_string(j));
      }
    }
    const bool exchanging = event.label == Label::kL9 || event.label == Label::kL10Step;
    if (exchanging && state.u1 != *previous_u1_) {
      fail(event, "exchange changed the duals");
    }
  }
  previous_u1_ = state.u1;

  if (event.label == Label::kL3 || event.label == Label::kL4 || event.label == Label::kL5) {
    for (Node j = 1; j <= n; ++j) {
      if (state.span[j] <= 0) {
        fail(event, "non-positive span at node " + std::to_string(j));
      }
    }
  }
  if (event.label == Label::kL5 &&
      instance_.engine_cost(state.i1, state.j1) - state.u1[state.j1] != 0) {
    fail(event, "selected arc not tight after dual update");
  }

  if (state.ss < n) {
    fail(event, "SS below N");
  }
  if (event.label == Label::kL2) {
    previous_ss_ = state.ss;
  } else if (event.label == Label::kL7Contract) {
    ++contractions_;
    if (state.ss != previous_ss_ + 1) {
      fail(event, "SS did not grow by exactly one");
    }
    previous_ss_ = state.ss;
  } else if (state.ss != previous_ss_) {
    fail(event, "SS changed outside a contraction");
  }
  if ((event.label == Label::kL98 || event.label == Label::kL99) && state.ss > 2 * n) {
    fail(event, "SS exceeds 2N at termination");
  }
}

void StructuredInvariantMonitor::on_boundary(int k, const AbstractState& state) {
  if (!starred_arcs_acyclic_over_components(state)) {
    violations_.push_back("boundary k=" + std::to_string(k) +
                          ": starred arcs cycle across components");
  }
}

void StructuredInvariantMonitor::on_dual_raise(int k, const AbstractState& state,
                                               std::span<const Node> active, Arc entering) {
  const auto inside = [&](Node node) {
    return std::find(active.begin(), active.end(), node) != active.end();
  };
  std::optional<Cost> cheapest;
  for (const Node head : active) {
    if (head > k) {
      continue;
    }
    for (Node tail = 1; tail <= instance_.n(); ++tail) {
      if (instance_.finite(tail, head) && !inside(tail)) {
        const Cost reduced = instance_.cost(tail, head) - state.u[head];
        cheapest = cheapest ? std::min(*cheapest, reduced) : reduced;
      }
    }
  }
  if (!cheapest || *cheapest != 0) {
    violations_.push_back("dual raise k=" + std::to_string(k) +
                          ": cheapest entering reduced cost is not 0");
  }
  if (instance_.cost(entering.tail, entering.head) - state.u[entering.head] != 0) {
    violations_.push_back("dual raise k=" + std::to_string(k) + ": entering arc not tight");
  }
}

void StructuredInvariantMonitor::on_exchange(int k, const AbstractState& before,
                                             const AbstractState& after) {
  if (before.u != after.u) {
    violations_.push_back("exchange k=" + std::to_string(k) + ": duals changed");
  }
}

bool starred_arcs_acyclic_over_components(const AbstractState& state) {
  const int n = state.u.size();
  // Vertex of the contracted graph: the class label, or the node itself when
  // it lies outside the covered set.
  const auto vertex = [&](Node j) { return state.component[j] != 0 ? state.component[j] : j; };
  std::vector<std::vector<Node>> out(static_cast<std::size_t>(n) + 1);
  std::vector<int> indegree(static_cast<std::size_t>(n) + 1, 0);
  for (Node j = 1; j <= n; ++j) {
    const Node p = state.parent[j];
    if (p == 0 || p == j) {
      continue;
    }
    const Node from = vertex(p);
    const Node to = vertex(j);
    if (from != to) {
      out[from].push_back(to);
      ++indegree[to];
    }
  }
  // Kahn's algorithm over vertices that are in use.
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (Node j = 1; j <= n; ++j) {
    used[vertex(j)] = true;
  }
  std::vector<Node> ready;
  int total = 0;
  for (Node v = 1; v <= n; ++v) {
    if (used[v]) {
      ++total;
      if (indegree[v] == 0) {
        ready.push_back(v);
      }
    }
  }
  int removed = 0;
  while (!ready.empty()) {
    const Node v = ready.back();
    ready.pop_back();
    ++removed;
    for (const Node w : out[v]) {
      if (--indegree[w] == 0) {
        ready.push_back(w);
      }
    }
  }
  return removed == total;
}

}  // namespace bock
