// Copyright 2026 The bockmst Authors
// SPDX-License-Identifier: Apache-2.0

// Dependency-parsing decoder on top of the arborescence engines. Head
// selection maximizes the summed arc weight w; the engines minimize cost, so
// weights go through c = W_max - w, which shifts every spanning tree's total
// by the same (n - 1) * W_max and leaves the optimal tree set unchanged.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bock/engine.hpp"
#include "bock/instance.hpp"

namespace bock {

inline constexpr double kDefaultScale = 1000.0;

/// Tokens (including the synthetic root) and head -> dependent weights.
class ParseInstance {
 public:
  /// `tokens[0]` is node 1. Throws std::invalid_argument if the root index is
  /// out of range.
  ParseInstance(std::vector<std::string> tokens, Node root_index);

  /// Throws std::invalid_argument for self-arcs, arcs into the root,
  /// out-of-range nodes and non-finite weights.
  void set_weight(Node head, Node dependent, double weight);

  [[nodiscard]] std::optional<double> weight(Node head, Node dependent) const;
  [[nodiscard]] int n() const { return static_cast<int>(tokens_.size()); }
  [[nodiscard]] Node root_index() const { return root_; }
  [[nodiscard]] const std::string& token(Node j) const;

  /// Largest weight present, recomputed on each call; nullopt when no arc.
  [[nodiscard]] std::optional<double> w_max() const;

 private:
  [[nodiscard]] std::size_t offset(Node head, Node dependent) const;

  std::vector<std::string> tokens_;
  Node root_;
  std::vector<std::optional<double>> weights_;
};

/// Reads:
///   line 1: token count and root index
///   line 2: the tokens, root token included
///   then one `head dependent weight` triple per line
/// Throws InputError with the offending line and column.
ParseInstance load_parse_instance(std::string_view text);

/// round-half-even(w * scale) as an integer. Throws std::invalid_argument if
/// the result does not fit the engines' cost range.
Cost quantize(double weight, double scale);

/// Minimum-cost instance rooted at the root token: c(i, j) = W_max - w(i, j)
/// on quantized weights; absent arcs, the diagonal and the root column are
/// INFEASIBLE.
ProblemInstance max_to_min(const ParseInstance& parse, double scale = kDefaultScale);

struct HeadAssignment {
  NodeArray<Node> head;  // head[root] = 0
  Cost score_units = 0;  // sum of quantized weights on the chosen arcs
  Cost cost_units = 0;   // objective of the minimum instance
  Cost w_max_units = 0;
  double scale = kDefaultScale;

  [[nodiscard]] double score() const { return static_cast<double>(score_units) / scale; }
  [[nodiscard]] double cost() const { return static_cast<double>(cost_units) / scale; }
};

/// Decodes one maximum-weight head assignment, or nullopt when some token has
/// no way to reach the root. Ties between equally scored trees follow the
/// engine's deterministic scan order. Throws std::logic_error if the affine
/// identity cost = (n - 1) * W_max - score fails.
std::optional<HeadAssignment> decode_heads(const ParseInstance& parse, EngineKind engine,
                                           double scale = kDefaultScale);

/// One line per non-root token: `index form head`.
std::string export_heads(const HeadAssignment& assignment, const ParseInstance& parse);

}  // namespace bock
