// Copyright 2026 The bockmst Authors
// SPDX-License-Identifier: Apache-2.0

// Reference stage-end values for the 10-node example (origin 10). Each entry
// lists only what is reported for that stage; arrays are prefixes 1..len.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bock/verbatim.hpp"
#include "support.hpp"

namespace bock::test {

struct StageGolden {
  int k = 0;
  std::vector<Cost> u1;
  std::vector<Node> i_star;
  std::vector<std::int64_t> span;
  std::optional<std::int64_t> ss;
  std::vector<std::pair<Node, Node>> bars;  // prefix of (I BAR, J BAR)
};

inline const std::vector<StageGolden>& bock10_stages() {
  static const std::vector<StageGolden> stages = {
      {1, {5, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {3}, {1}, std::nullopt, {}},
      {2, {5, 3, 0, 0, 0, 0, 0, 0, 0, 0}, {3, 4}, {1, 2}, std::nullopt, {{0, 0}, {0, 0}}},
      {3, {5, 3, 2, 0, 0, 0, 0, 0, 0, 0}, {3, 4, 2}, {1, 2, 3}, std::nullopt,
       {{0, 0}, {0, 0}, {0, 0}}},
      {4, {17, 15, 14, 19}, {5, 4, 2, 1}, {11, 11, 11, 11}, 11,
       {{0, 0}, {3, 1}, {3, 1}, {3, 1}}},
      {5, {22, 20, 19, 24, 5}, {6, 4, 2, 1, 4}, {12, 12, 12, 12, 12}, std::nullopt,
       {{0, 0}, {3, 1}, {3, 1}, {3, 1}, {5, 1}}},
      {6, {22, 20, 19, 24, 5, 8, 0, 0, 0, 0}, {6, 4, 2, 1, 4, 7}, {12, 12, 12, 12, 12, 6},
       std::nullopt, {}},
      {7, {32, 30, 29, 34, 15, 19, 16}, {3, 8, 2, 1, 4, 1, 6}, {14, 14, 14, 14, 14, 14, 14}, 14,
       {}},
      {8, {32, 30, 29, 34, 15, 19, 16, 6}, {3, 8, 2, 1, 4, 1, 6, 9},
       {14, 14, 14, 14, 14, 14, 14, 8}, 14, {}},
  };
  return stages;
}

inline const std::vector<Node>& bock10_predecessors() {
  static const std::vector<Node> pred = {6, 4, 2, 1, 4, 10, 6, 9, 4, 0};
  return pred;
}

inline constexpr Cost kBock10Z = 87;

/// Empty when `state` matches `golden`; otherwise the first mismatch.
inline std::string compare_stage(const StageGolden& golden, const VerbatimState& state) {
  auto fail = [&](const std::string& what) {
    return "K=" + std::to_string(golden.k) + ": " + what + " differs";
  };
  if (prefix(state.u1, static_cast<int>(golden.u1.size())) != golden.u1) return fail("U1");
  if (prefix(state.i_star, static_cast<int>(golden.i_star.size())) != golden.i_star) {
    return fail("I STAR");
  }
  if (prefix(state.span, static_cast<int>(golden.span.size())) != golden.span) return fail("SPAN");
  if (golden.ss && state.ss != *golden.ss) return fail("SS");
  for (std::size_t j = 0; j < golden.bars.size(); ++j) {
    const Node node = static_cast<Node>(j + 1);
    if (state.i_bar[node] != golden.bars[j].first || state.j_bar[node] != golden.bars[j].second) {
      return fail("bar at " + std::to_string(node));
    }
  }
  return {};
}

}  // namespace bock::test
