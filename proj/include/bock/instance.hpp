// Copyright 2026 The bockmst Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bock {

/// Node index. Valid nodes are 1..n; 0 means "none".
using Node = int;

/// Arc costs, duals and objectives are exact 64-bit integers.
using Cost = std::int64_t;

/// Largest finite cost (and sentinel) accepted by validate(). Duals are bounded
/// by 2n times the largest finite cost, so with n capped by the dense-matrix
/// memory footprint this keeps every intermediate inside int64.
inline constexpr Cost kMaxCost = Cost{1} << 40;

/// Fixed-size array indexed by node 1..n.
template <typename T>
class NodeArray {
 public:
  NodeArray() = default;
  explicit NodeArray(int n, const T& fill = T{}) : data_(static_cast<std::size_t>(n), fill) {}
  NodeArray(std::initializer_list<T> values) : data_(values) {}

  [[nodiscard]] int size() const { return static_cast<int>(data_.size()); }

  T& operator[](Node j) { return data_[index(j)]; }
  const T& operator[](Node j) const { return data_[index(j)]; }

  [[nodiscard]] const std::vector<T>& values() const { return data_; }

  friend bool operator==(const NodeArray&, const NodeArray&) = default;

 private:
  [[nodiscard]] std::size_t index(Node j) const {
    if (j < 1 || j > size()) {
      throw std::out_of_range("node index " + std::to_string(j) + " outside 1.." +
                              std::to_string(size()));
    }
    return static_cast<std::size_t>(j - 1);
  }

  std::vector<T> data_;
};

/// A directed arc tail -> head.
struct Arc {
  Node tail = 0;
  Node head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Dense minimum-arborescence instance: n nodes, an origin and an n x n cost
/// matrix where entry (i, j) is the cost of arc i -> j or INFEASIBLE.
class ProblemInstance {
 public:
  static constexpr Cost kInfeasible = std::numeric_limits<Cost>::max();

  /// Builds an instance. When `sentinel` is absent it is derived with
  /// choose_sentinel(). No validation is performed; see validate().
  ProblemInstance(int n, Node origin, std::vector<Cost> row_major_costs,
                  std::optional<Cost> sentinel = std::nullopt);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] Node origin() const { return origin_; }
  [[nodiscard]] Cost sentinel() const { return sentinel_; }
  [[nodiscard]] bool sentinel_explicit() const { return sentinel_explicit_; }

  /// Raw entry; kInfeasible for a missing arc.
  [[nodiscard]] Cost cost(Node i, Node j) const { return costs_[offset(i, j)]; }
  [[nodiscard]] bool finite(Node i, Node j) const { return cost(i, j) != kInfeasible; }

  /// The entry as the engines see it: a missing arc reads as the sentinel M.
  [[nodiscard]] Cost engine_cost(Node i, Node j) const {
    const Cost c = cost(i, j);
    return c == kInfeasible ? sentinel_ : c;
  }

  [[nodiscard]] const std::vector<Cost>& raw() const { return costs_; }

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;

 private:
  [[nodiscard]] std::size_t offset(Node i, Node j) const;

  int n_;
  Node origin_;
  std::vector<Cost> costs_;
  Cost sentinel_;
  bool sentinel_explicit_;
};

/// Returns (largest finite cost) + 1, or 1 when no finite cost exists.
Cost choose_sentinel(const std::vector<Cost>& row_major_costs);

/// Every invariant violation of `instance`, in a stable order. Empty means ok.
std::vector<std::string> validate(const ProblemInstance& instance);

/// Thrown for malformed problem or parse files. Line and column are 1-based.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& message, int line, int column);

  [[nodiscard]] int line() const { return line_; }
  [[nodiscard]] int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Reads the whitespace-separated problem format:
///   N ORIGIN [M]
///   N rows of N tokens, each a nonnegative integer or `inf`.
/// Throws InputError on malformed input or on any validate() violation.
ProblemInstance load_instance(std::string_view text);

/// Writes `instance` in the format read by load_instance(). The sentinel is
/// written only when it was given explicitly.
std::string serialize(const ProblemInstance& instance);

enum class Status { kOptimum, kInfeasible };

std::string_view to_string(Status status);

/// Result of a solve. Arrays are indexed by node.
struct Solution {
  Status status = Status::kInfeasible;
  Cost z = 0;
  NodeArray<Node> predecessor;
  NodeArray<Cost> dual;
  NodeArray<Node> bar_tail;
  NodeArray<Node> bar_head;
  NodeArray<std::int64_t> span;
};

}  // namespace bock
