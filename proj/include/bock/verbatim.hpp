// Copyright 2026 The bockmst Authors
// SPDX-License-Identifier: Apache-2.0

// Control-flow-faithful rendering of Bock's 1971 Algol procedure for the
// minimum directed spanning tree. Variable names follow the listing:
//
//   U1      dual potential per column
//   I STAR  starred predecessor per column (0 = none)
//   I BAR,  carried candidate pair recorded during the backward trace
//   J BAR
//   SPAN    component label; negative while marked by the backward trace
//   SS      largest span label in use
//
// The listing's goto structure is realized as a small phase machine; each
// transition is one labeled jump. Scans are in ascending index order and the
// candidate comparison is strict, so ties keep the first minimizer.

#pragma once

#include <optional>

#include "bock/instance.hpp"
#include "bock/trace.hpp"

namespace bock {

enum class Phase {
  kAdvance,     // L3
  kSearch,      // L4
  kUpdate,      // L5
  kTrace,       // L6-L8
  kContract,    // L7 success branch
  kExchange,    // L9-L11
  kDone,        // L99
  kInfeasible,  // L98
};

struct VerbatimState {
  NodeArray<Cost> u1;
  NodeArray<Node> i_star;
  NodeArray<Node> i_bar;
  NodeArray<Node> j_bar;
  NodeArray<std::int64_t> span;
  std::int64_t ss = 0;
  int k = 0;
  Cost z = 0;

  // Phase temporaries.
  Cost du = 0;
  std::int64_t h = 0;
  std::int64_t h1 = 0;
  Node i1 = 0;
  Node j1 = 0;
  Node i2 = 0;
  Node j2 = 0;
  Node j_cursor = 0;

  Phase phase = Phase::kAdvance;

  [[nodiscard]] int n() const { return u1.size(); }

  friend bool operator==(const VerbatimState&, const VerbatimState&) = default;
};

/// Receives every trace event together with the state right after its effect.
class VerbatimObserver {
 public:
  virtual ~VerbatimObserver() = default;
  virtual void on_event(const TraceEvent& event, const VerbatimState& state) = 0;
};

struct Candidate {
  Cost du = 0;
  Node i1 = 0;
  Node j1 = 0;
  friend bool operator==(const Candidate&, const Candidate&) = default;
};

enum class TraceOutcome { kCircuit, kRootReached };

namespace verbatim {

/// L2. Zeroes U1, I STAR and the bars, sets SPAN[j] = j, SS = N, K = Z = 0.
void initialize(VerbatimState& state, const ProblemInstance& instance,
                VerbatimObserver* observer = nullptr);

/// L4. Sets H = SPAN[K] and scans columns J <= K of class H (ascending), rows
/// I outside H (ascending) with C[I,J] < M, for the strictly smallest
/// C[I,J] - U1[J]. Returns nullopt when DU stays at M.
std::optional<Candidate> candidate_search(VerbatimState& state, const ProblemInstance& instance,
                                          VerbatimObserver* observer = nullptr);

/// L5. U1[J] += DU for every J <= K of class H.
void dual_update(VerbatimState& state, VerbatimObserver* observer = nullptr);

/// L6-L8. Follows I STAR back from I1, negating each newly met class and
/// recording (I1, J1) into empty bars, until it meets class H (circuit) or a
/// node with no starred predecessor.
TraceOutcome backward_trace(VerbatimState& state, VerbatimObserver* observer = nullptr);

/// L7. SS += 1 and every J <= K in class H or carrying a negative label is
/// relabeled SS.
void contract(VerbatimState& state, VerbatimObserver* observer = nullptr);

/// L9-L11. Restores negated labels, then runs the transfer chain that stars
/// (I1, J1) and pushes displaced stars along the recorded bars. U1 is not
/// touched.
void restore_and_exchange(VerbatimState& state, VerbatimObserver* observer = nullptr);

/// L99 sum: C[I STAR[j], j] over j != origin.
Cost objective(const VerbatimState& state, const ProblemInstance& instance);

/// Runs the whole procedure. The returned predecessor of the origin is 0.
Solution solve(const ProblemInstance& instance, VerbatimObserver* observer = nullptr);

/// Applies the effect recorded in `event` to `state`. Replaying the events of
/// a solve from a default state reproduces the state seen by the observer
/// after each event.
void replay(const TraceEvent& event, VerbatimState& state);

}  // namespace verbatim
}  // namespace bock
