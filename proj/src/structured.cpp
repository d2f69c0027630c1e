// Copyright 2026 The bockmst Authors
// SPDX-License-Identifier: Apache-2.0

#include "bock/structured.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bock {

std::set<std::set<Node>> AbstractState::classes() const {
  std::map<Node, std::set<Node>> by_label;
  for (Node j = 1; j <= component.size(); ++j) {
    if (component[j] != 0) {
      by_label[component[j]].insert(j);
    }
  }
  std::set<std::set<Node>> family;
  for (auto& [label, members] : by_label) {
    family.insert(std::move(members));
  }
  return family;
}

AbstractState project_state(const VerbatimState& state, Node origin) {
  const int n = state.n();
  AbstractState projected;
  projected.u = state.u1;
  projected.parent = state.i_star;
  projected.carried = NodeArray<std::optional<Arc>>(n);
  projected.component = NodeArray<Node>(n, 0);

  std::map<std::int64_t, Node> smallest_member;
  for (Node j = 1; j <= n; ++j) {
    if (state.span[j] < 0) {
      throw std::invalid_argument("cannot project a state with negative span at node " +
                                  std::to_string(j));
    }
    if (state.i_bar[j] != 0 || state.j_bar[j] != 0) {
      projected.carried[j] = Arc{state.i_bar[j], state.j_bar[j]};
    }
    if (j <= state.k || j == origin) {
      smallest_member.try_emplace(state.span[j], j);
    }
  }
  for (Node j = 1; j <= n; ++j) {
    if (j <= state.k || j == origin) {
      projected.component[j] = smallest_member.at(state.span[j]);
    }
  }
  return projected;
}

bool aligned(const AbstractState& a, const AbstractState& b) {
  return a.u == b.u && a.parent == b.parent && a.carried == b.carried &&
         a.classes() == b.classes();
}

TraceEvent snapshot_event(int k, const AbstractState& state) {
  std::vector<std::int64_t> u;
  std::vector<std::int64_t> parent;
  std::vector<std::int64_t> carried_tail;
  std::vector<std::int64_t> carried_head;
  std::vector<std::int64_t> component;
  for (Node j = 1; j <= state.u.size(); ++j) {
    u.push_back(state.u[j]);
    parent.push_back(state.parent[j]);
    carried_tail.push_back(state.carried[j] ? state.carried[j]->tail : 0);
    carried_head.push_back(state.carried[j] ? state.carried[j]->head : 0);
    component.push_back(state.component[j]);
  }
  TraceEvent event;
  event.label = Label::kL3;
  event.k = k;
  event.add("u", std::move(u))
      .add("parent", std::move(parent))
      .add("carried_tail", std::move(carried_tail))
      .add("carried_head", std::move(carried_head))
      .add("component", std::move(component));
  return event;
}

namespace {

/// Disjoint sets over nodes 1..n, each class keeping its member list sorted.
class Components {
 public:
  explicit Components(int n) : leader_(static_cast<std::size_t>(n) + 1), members_(leader_.size()) {
    for (Node j = 1; j <= n; ++j) {
      leader_[j] = j;
      members_[j] = {j};
    }
  }

  Node find(Node j) {
    while (leader_[j] != j) {
      leader_[j] = leader_[leader_[j]];
      j = leader_[j];
    }
    return j;
  }

  [[nodiscard]] const std::vector<Node>& members(Node leader) const { return members_[leader]; }

  /// Merges the class led by `into` with `other`; returns the new leader.
  Node merge(Node into, Node other) {
    into = find(into);
    other = find(other);
    if (into == other) {
      return into;
    }
    if (members_[into].size() < members_[other].size()) {
      std::swap(into, other);
    }
    std::vector<Node> merged;
    merged.reserve(members_[into].size() + members_[other].size());
    std::merge(members_[into].begin(), members_[into].end(), members_[other].begin(),
               members_[other].end(), std::back_inserter(merged));
    members_[into] = std::move(merged);
    members_[other].clear();
    leader_[other] = into;
    return into;
  }

 private:
  std::vector<Node> leader_;
  std::vector<std::vector<Node>> members_;
};

class StructuredSolver {
 public:
  StructuredSolver(const ProblemInstance& instance, StructuredObserver* observer)
      : instance_(instance),
        observer_(observer),
        n_(instance.n()),
        u_(n_, 0),
        parent_(n_),
        carried_(n_),
        components_(n_) {}

  Solution run() {
    notify_boundary();
    for (scanned_ = 1; scanned_ <= n_; ++scanned_) {
      if (scanned_ == instance_.origin()) {
        notify_boundary();
        continue;
      }
      if (!settle(scanned_)) {
        return infeasible();
      }
      notify_boundary();
    }
    return optimum();
  }

 private:
  struct Entering {
    Cost reduced;
    Arc arc;
  };

  enum class Walk { kReentered, kUnstarred };

  // Scans until a tight entering arc can be exchanged without closing a
  // circuit; false when the active component has no entering arc.
  bool settle(Node node) {
    Node active = components_.find(node);
    while (true) {
      const auto entering = cheapest_entering(active);
      if (!entering) {
        return false;
      }
      const auto& members = components_.members(active);
      for (const Node j : members) {
        u_[j] += entering->reduced;
      }
      if (observer_ != nullptr) {
        observer_->on_dual_raise(scanned_, project(), members, entering->arc);
      }

      std::vector<Node> visited;
      if (walk_back(entering->arc, active, visited) == Walk::kUnstarred) {
        exchange(entering->arc);
        return true;
      }
      for (const Node leader : visited) {
        active = components_.merge(active, leader);
      }
    }
  }

  std::optional<Entering> cheapest_entering(Node active) {
    std::optional<Entering> best;
    for (const Node head : components_.members(active)) {
      if (head > scanned_) {
        continue;
      }
      for (Node tail = 1; tail <= n_; ++tail) {
        if (!instance_.finite(tail, head) || components_.find(tail) == active) {
          continue;
        }
        const Cost reduced = instance_.cost(tail, head) - u_[head];
        if (!best || reduced < best->reduced) {
          best = Entering{reduced, Arc{tail, head}};
        }
      }
    }
    return best;
  }

  // Follows starred parents from the entering arc's tail, recording the
  // entering arc on every uncarried node passed and collecting the visited
  // components in first-visit order.
  Walk walk_back(Arc entering, Node active, std::vector<Node>& visited) {
    Node node = entering.tail;
    while (true) {
      const Node leader = components_.find(node);
      if (leader == active) {
        return Walk::kReentered;
      }
      if (!parent_[node]) {
        return Walk::kUnstarred;
      }
      if (std::find(visited.begin(), visited.end(), leader) == visited.end()) {
        visited.push_back(leader);
      }
      if (!carried_[node]) {
        carried_[node] = entering;
      }
      node = *parent_[node];
    }
  }

  // Stars `entering`; each displaced starred arc is carried forward in place
  // of the arc it makes obsolete, and the chain continues with the arc that
  // was carried at the newly starred head.
  void exchange(Arc entering) {
    const AbstractState before = observer_ != nullptr ? project() : AbstractState{};
    Arc arc = entering;
    std::optional<Arc> displaced_arc;
    while (true) {
      for (Node j = 1; j <= scanned_; ++j) {
        if (carried_[j] == arc) {
          carried_[j] = displaced_arc;
        }
      }
      const std::optional<Arc> next = carried_[arc.head];
      carried_[arc.head] = displaced_arc;
      const std::optional<Node> displaced = parent_[arc.head];
      parent_[arc.head] = arc.tail;
      if (!displaced) {
        break;
      }
      if (!next) {
        throw std::logic_error("exchange displaced a parent of " + std::to_string(arc.head) +
                               " with no carried arc to continue");
      }
      displaced_arc = Arc{*displaced, arc.head};
      arc = *next;
    }
    if (observer_ != nullptr) {
      observer_->on_exchange(scanned_, before, project());
    }
  }

  AbstractState project() {
    AbstractState state;
    state.u = u_;
    state.parent = NodeArray<Node>(n_, 0);
    state.carried = carried_;
    state.component = NodeArray<Node>(n_, 0);
    const int bound = std::min(scanned_, n_);
    for (Node j = 1; j <= n_; ++j) {
      state.parent[j] = parent_[j].value_or(0);
      if (j <= bound || j == instance_.origin()) {
        state.component[j] = components_.members(components_.find(j)).front();
      }
    }
    return state;
  }

  void notify_boundary() {
    if (observer_ != nullptr) {
      observer_->on_boundary(std::min(scanned_, n_), project());
    }
  }

  Solution base_solution() {
    Solution solution;
    solution.predecessor = NodeArray<Node>(n_, 0);
    solution.dual = u_;
    solution.bar_tail = NodeArray<Node>(n_, 0);
    solution.bar_head = NodeArray<Node>(n_, 0);
    solution.span = NodeArray<std::int64_t>(n_, 0);
    for (Node j = 1; j <= n_; ++j) {
      solution.predecessor[j] = parent_[j].value_or(0);
      if (carried_[j]) {
        solution.bar_tail[j] = carried_[j]->tail;
        solution.bar_head[j] = carried_[j]->head;
      }
      solution.span[j] = components_.members(components_.find(j)).front();
    }
    return solution;
  }

  Solution infeasible() {
    Solution solution = base_solution();
    solution.status = Status::kInfeasible;
    solution.z = instance_.sentinel();
    return solution;
  }

  Solution optimum() {
    parent_[instance_.origin()] = instance_.origin();
    Solution solution = base_solution();
    solution.status = Status::kOptimum;
    solution.z = 0;
    for (Node j = 1; j <= n_; ++j) {
      if (j != instance_.origin()) {
        solution.z += instance_.cost(*parent_[j], j);
      }
    }
    return solution;
  }

  const ProblemInstance& instance_;
  StructuredObserver* observer_;
  int n_;
  int scanned_ = 0;
  NodeArray<Cost> u_;
  NodeArray<std::optional<Node>> parent_;
  NodeArray<std::optional<Arc>> carried_;
  Components components_;
};

}  // namespace

Solution solve_structured(const ProblemInstance& instance, StructuredObserver* observer) {
  return StructuredSolver(instance, observer).run();
}

}  // namespace bock
