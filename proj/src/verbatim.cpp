// Copyright 2026 The bockmst Authors
// SPDX-License-Identifier: Apache-2.0

#include "bock/verbatim.hpp"

#include <stdexcept>

namespace bock::verbatim {

namespace {

void emit(VerbatimObserver* observer, const TraceEvent& event, const VerbatimState& state) {
  if (observer != nullptr) {
    observer->on_event(event, state);
  }
}

TraceEvent make_event(Label label, const VerbatimState& state) {
  TraceEvent event;
  event.label = label;
  event.k = state.k;
  return event;
}

Phase phase_of(Label label) {
  switch (label) {
    case Label::kL2:
    case Label::kL3:
      return Phase::kAdvance;
    case Label::kL4:
      return Phase::kSearch;
    case Label::kL5:
      return Phase::kUpdate;
    case Label::kL8Step:
      return Phase::kTrace;
    case Label::kL7Contract:
      return Phase::kContract;
    case Label::kL9:
    case Label::kL10Step:
      return Phase::kExchange;
    case Label::kL98:
      return Phase::kInfeasible;
    case Label::kL99:
      return Phase::kDone;
  }
  return Phase::kAdvance;
}

}  // namespace

void initialize(VerbatimState& state, const ProblemInstance& instance,
                VerbatimObserver* observer) {
  const int n = instance.n();
  state = VerbatimState{};
  state.u1 = NodeArray<Cost>(n, 0);
  state.i_star = NodeArray<Node>(n, 0);
  state.i_bar = NodeArray<Node>(n, 0);
  state.j_bar = NodeArray<Node>(n, 0);
  state.span = NodeArray<std::int64_t>(n, 0);
  for (Node j = 1; j <= n; ++j) {
    state.span[j] = j;
  }
  state.ss = n;
  state.k = 0;
  state.z = 0;
  state.phase = Phase::kAdvance;
  emit(observer, make_event(Label::kL2, state).add("n", n), state);
}

std::optional<Candidate> candidate_search(VerbatimState& state, const ProblemInstance& instance,
                                          VerbatimObserver* observer) {
  const int n = instance.n();
  const Cost m = instance.sentinel();
  state.du = m;
  state.h = state.span[state.k];
  for (Node j = 1; j <= state.k; ++j) {
    if (state.span[j] != state.h) {
      continue;
    }
    for (Node i = 1; i <= n; ++i) {
      const Cost c = instance.engine_cost(i, j);
      if (state.span[i] != state.h && c < m && c - state.u1[j] < state.du) {
        state.du = c - state.u1[j];
        state.i1 = i;
        state.j1 = j;
      }
    }
  }
  const bool found = state.du != m;
  emit(observer,
       make_event(Label::kL4, state)
           .add("h", state.h)
           .add("du", state.du)
           .add("i1", state.i1)
           .add("j1", state.j1)
           .add("found", found ? 1 : 0),
       state);
  if (!found) {
    return std::nullopt;
  }
  return Candidate{state.du, state.i1, state.j1};
}

void dual_update(VerbatimState& state, VerbatimObserver* observer) {
  std::vector<std::int64_t> columns;
  for (Node j = 1; j <= state.k; ++j) {
    if (state.span[j] == state.h) {
      state.u1[j] += state.du;
      columns.push_back(j);
    }
  }
  emit(observer,
       make_event(Label::kL5, state)
           .add("h", state.h)
           .add("du", state.du)
           .add("columns", std::move(columns)),
       state);
}

TraceOutcome backward_trace(VerbatimState& state, VerbatimObserver* observer) {
  state.j_cursor = state.i1;  // L6
  while (true) {
    const Node j = state.j_cursor;
    if (state.span[j] == state.h) {  // L7
      return TraceOutcome::kCircuit;
    }
    if (state.i_star[j] <= 0) {  // L8 falls through to L9
      return TraceOutcome::kRootReached;
    }
    std::vector<std::int64_t> negated;
    if (state.span[j] > 0) {
      state.h1 = state.span[j];
      for (Node j2 = 1; j2 <= state.k; ++j2) {
        if (state.span[j2] == state.h1) {
          state.span[j2] = -state.span[j2];
          negated.push_back(j2);
        }
      }
    }
    bool bar_written = false;
    if (state.i_bar[j] == 0) {
      state.i_bar[j] = state.i1;
      state.j_bar[j] = state.j1;
      bar_written = true;
    }
    state.j_cursor = state.i_star[j];
    emit(observer,
         make_event(Label::kL8Step, state)
             .add("j", j)
             .add("h1", state.h1)
             .add("negated", std::move(negated))
             .add("bar_written", bar_written ? 1 : 0)
             .add("next", state.j_cursor),
         state);
  }
}

void contract(VerbatimState& state, VerbatimObserver* observer) {
  state.ss += 1;
  std::vector<std::int64_t> nodes;
  for (Node j = 1; j <= state.k; ++j) {
    if (state.span[j] == state.h || state.span[j] < 0) {
      state.span[j] = state.ss;
      nodes.push_back(j);
    }
  }
  emit(observer,
       make_event(Label::kL7Contract, state)
           .add("j", state.j_cursor)
           .add("ss", state.ss)
           .add("nodes", std::move(nodes)),
       state);
}

void restore_and_exchange(VerbatimState& state, VerbatimObserver* observer) {
  std::vector<std::int64_t> restored;
  for (Node j = 1; j <= state.k; ++j) {  // L9
    if (state.span[j] < 0) {
      state.span[j] = -state.span[j];
      restored.push_back(j);
    }
  }
  state.i2 = 0;
  state.j2 = 0;
  emit(observer,
       make_event(Label::kL9, state).add("j", state.j_cursor).add("restored", std::move(restored)),
       state);

  while (true) {  // L10, repeated by L11
    const Node bar_i = state.i2;
    const Node bar_j = state.j2;
    const Node starred_tail = state.i1;
    const Node starred_head = state.j1;
    std::vector<std::int64_t> rewritten;
    for (Node j = 1; j <= state.k; ++j) {
      if (state.i_bar[j] == state.i1 && state.j_bar[j] == state.j1) {
        state.i_bar[j] = state.i2;
        state.j_bar[j] = state.j2;
        rewritten.push_back(j);
      }
    }
    // The listing reuses I and J here; the fetched pair gets its own names.
    const Node fetched_i = state.i_bar[state.j1];
    const Node fetched_j = state.j_bar[state.j1];
    state.i_bar[state.j1] = state.i2;
    state.j_bar[state.j1] = state.j2;
    state.i2 = state.i_star[state.j1];
    state.i_star[state.j1] = state.i1;
    const Node displaced = state.i2;
    if (displaced != 0) {
      if (fetched_j == 0) {
        throw std::logic_error("transfer chain displaced a star but carries no bar at column " +
                               std::to_string(state.j1));
      }
      state.j2 = state.j1;
      state.i1 = fetched_i;
      state.j1 = fetched_j;
    }
    emit(observer,
         make_event(Label::kL10Step, state)
             .add("i1", starred_tail)
             .add("j1", starred_head)
             .add("bar_i", bar_i)
             .add("bar_j", bar_j)
             .add("rewritten", std::move(rewritten))
             .add("fetched_i", fetched_i)
             .add("fetched_j", fetched_j)
             .add("displaced", displaced),
         state);
    if (displaced == 0) {
      return;
    }
  }
}

Cost objective(const VerbatimState& state, const ProblemInstance& instance) {
  Cost z = 0;
  for (Node j = 1; j <= instance.n(); ++j) {
    if (j == instance.origin()) {
      continue;
    }
    if (state.i_star[j] == 0) {
      throw std::logic_error("objective requested with unstarred column " + std::to_string(j));
    }
    z += instance.engine_cost(state.i_star[j], j);
  }
  return z;
}

Solution solve(const ProblemInstance& instance, VerbatimObserver* observer) {
  VerbatimState state;
  initialize(state, instance, observer);
  const int n = instance.n();

  while (state.phase != Phase::kDone && state.phase != Phase::kInfeasible) {
    switch (state.phase) {
      case Phase::kAdvance:  // L3
        emit(observer, make_event(Label::kL3, state), state);
        if (state.k == n) {
          state.phase = Phase::kDone;
          break;
        }
        state.k += 1;
        if (state.k != instance.origin()) {
          state.phase = Phase::kSearch;
        }
        break;
      case Phase::kSearch:
        state.phase = candidate_search(state, instance, observer) ? Phase::kUpdate
                                                                  : Phase::kInfeasible;
        break;
      case Phase::kUpdate:
        dual_update(state, observer);
        state.phase = Phase::kTrace;
        break;
      case Phase::kTrace:
        state.phase = backward_trace(state, observer) == TraceOutcome::kCircuit
                          ? Phase::kContract
                          : Phase::kExchange;
        break;
      case Phase::kContract:
        contract(state, observer);
        state.phase = Phase::kSearch;
        break;
      case Phase::kExchange:
        restore_and_exchange(state, observer);
        state.phase = Phase::kAdvance;
        break;
      case Phase::kDone:
      case Phase::kInfeasible:
        break;
    }
  }

  Solution solution;
  if (state.phase == Phase::kInfeasible) {  // L98
    state.z = instance.sentinel();
    emit(observer, make_event(Label::kL98, state).add("z", state.z), state);
    solution.status = Status::kInfeasible;
  } else {  // L99
    state.z = objective(state, instance);
    emit(observer, make_event(Label::kL99, state).add("z", state.z), state);
    solution.status = Status::kOptimum;
  }
  solution.z = state.z;
  solution.predecessor = state.i_star;
  solution.dual = state.u1;
  solution.bar_tail = state.i_bar;
  solution.bar_head = state.j_bar;
  solution.span = state.span;
  return solution;
}

void replay(const TraceEvent& event, VerbatimState& state) {
  state.k = event.k;
  state.phase = phase_of(event.label);
  switch (event.label) {
    case Label::kL2: {
      const int n = static_cast<int>(event.scalar("n"));
      state = VerbatimState{};
      state.u1 = NodeArray<Cost>(n, 0);
      state.i_star = NodeArray<Node>(n, 0);
      state.i_bar = NodeArray<Node>(n, 0);
      state.j_bar = NodeArray<Node>(n, 0);
      state.span = NodeArray<std::int64_t>(n, 0);
      for (Node j = 1; j <= n; ++j) {
        state.span[j] = j;
      }
      state.ss = n;
      state.k = event.k;
      state.phase = Phase::kAdvance;
      break;
    }
    case Label::kL3:
      break;
    case Label::kL4:
      state.h = event.scalar("h");
      state.du = event.scalar("du");
      state.i1 = static_cast<Node>(event.scalar("i1"));
      state.j1 = static_cast<Node>(event.scalar("j1"));
      break;
    case Label::kL5:
      state.h = event.scalar("h");
      state.du = event.scalar("du");
      for (const auto j : event.list("columns")) {
        state.u1[static_cast<Node>(j)] += state.du;
      }
      break;
    case Label::kL8Step: {
      const auto j = static_cast<Node>(event.scalar("j"));
      state.h1 = event.scalar("h1");
      for (const auto node : event.list("negated")) {
        state.span[static_cast<Node>(node)] = -state.span[static_cast<Node>(node)];
      }
      if (event.scalar("bar_written") != 0) {
        state.i_bar[j] = state.i1;
        state.j_bar[j] = state.j1;
      }
      state.j_cursor = static_cast<Node>(event.scalar("next"));
      break;
    }
    case Label::kL7Contract:
      state.j_cursor = static_cast<Node>(event.scalar("j"));
      state.ss = event.scalar("ss");
      for (const auto node : event.list("nodes")) {
        state.span[static_cast<Node>(node)] = state.ss;
      }
      break;
    case Label::kL9:
      state.j_cursor = static_cast<Node>(event.scalar("j"));
      for (const auto node : event.list("restored")) {
        state.span[static_cast<Node>(node)] = -state.span[static_cast<Node>(node)];
      }
      state.i2 = 0;
      state.j2 = 0;
      break;
    case Label::kL10Step: {
      const auto tail = static_cast<Node>(event.scalar("i1"));
      const auto head = static_cast<Node>(event.scalar("j1"));
      const auto bar_i = static_cast<Node>(event.scalar("bar_i"));
      const auto bar_j = static_cast<Node>(event.scalar("bar_j"));
      for (const auto node : event.list("rewritten")) {
        state.i_bar[static_cast<Node>(node)] = bar_i;
        state.j_bar[static_cast<Node>(node)] = bar_j;
      }
      state.i_bar[head] = bar_i;
      state.j_bar[head] = bar_j;
      state.i_star[head] = tail;
      state.i1 = tail;
      state.j1 = head;
      state.i2 = static_cast<Node>(event.scalar("displaced"));
      state.j2 = bar_j;
      if (state.i2 != 0) {
        state.j2 = head;
        state.i1 = static_cast<Node>(event.scalar("fetched_i"));
        state.j1 = static_cast<Node>(event.scalar("fetched_j"));
      }
      break;
    }
    case Label::kL98:
    case Label::kL99:
      state.z = event.scalar("z");
      break;
  }
}

}  // namespace bock::verbatim
