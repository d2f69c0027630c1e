// Copyright 2026 The bockmst Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace bock {

/// Labeled statements of the Algol listing that produce trace records.
enum class Label {
  kL2,          // initialization
  kL3,          // scan boundary; emitted on every entry to L3, before the K = N test
  kL4,          // candidate search result
  kL5,          // dual update
  kL7Contract,  // circuit contraction
  kL8Step,      // one backward-trace step through a starred node
  kL9,          // sign restoration before the exchange chain
  kL10Step,     // one iteration of the star/bar transfer chain
  kL98,         // infeasible
  kL99,         // optimum objective
};

std::string_view to_string(Label label);
std::optional<Label> label_from_string(std::string_view name);

/// A named integer or integer-list field of a trace record.
struct TraceField {
  using Value = std::variant<std::int64_t, std::vector<std::int64_t>>;
  std::string name;
  Value value;

  friend bool operator==(const TraceField&, const TraceField&) = default;
};

/// One record per labeled-statement effect. Field names per label are listed
/// in the README; they are stable and used by the golden fixtures.
struct TraceEvent {
  Label label = Label::kL2;
  int k = 0;
  std::vector<TraceField> fields;

  TraceEvent& add(std::string name, std::int64_t value);
  TraceEvent& add(std::string name, std::vector<std::int64_t> values);

  /// Scalar field `name`; throws std::out_of_range when absent or a list.
  [[nodiscard]] std::int64_t scalar(std::string_view name) const;
  /// List field `name`; throws std::out_of_range when absent or a scalar.
  [[nodiscard]] const std::vector<std::int64_t>& list(std::string_view name) const;
  [[nodiscard]] bool has(std::string_view name) const;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

/// One JSON object on a single line:
///   {"engine":"verbatim","seq":3,"label":"L4","k":1,"h":1,"du":5,"i1":3,"j1":1}
/// Keys appear in insertion order. No trailing newline.
std::string to_record(const TraceEvent& event, std::string_view engine, std::size_t seq);

/// Inverse of to_record(); returns the event and its engine tag.
std::pair<TraceEvent, std::string> from_record(std::string_view line);

}  // namespace bock
