// Copyright 2026 The bockmst Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bock/instance.hpp"
#include "bock/verbatim.hpp"

namespace bock::test {

inline std::string data_path(const std::string& name) {
  return std::string(BOCK_TEST_DATA_DIR) + "/" + name;
}

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name), std::ios::binary);
  if (!in) {
    throw std::runtime_error("missing fixture " + name);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline ProblemInstance load_data(const std::string& name) { return load_instance(read_data(name)); }

/// Keeps every event with its post-state, and the state at each L3 keyed by K.
class RecordingObserver : public VerbatimObserver {
 public:
  void on_event(const TraceEvent& event, const VerbatimState& state) override {
    events.emplace_back(event, state);
    if (event.label == Label::kL3) {
      boundary[state.k] = state;
    }
  }

  [[nodiscard]] std::vector<TraceEvent> with_label(Label label, int k = -1) const {
    std::vector<TraceEvent> out;
    for (const auto& [event, state] : events) {
      if (event.label == label && (k < 0 || event.k == k)) {
        out.push_back(event);
      }
    }
    return out;
  }

  std::vector<std::pair<TraceEvent, VerbatimState>> events;
  std::map<int, VerbatimState> boundary;
};

template <typename T>
std::vector<T> prefix(const NodeArray<T>& values, int count) {
  return {values.values().begin(), values.values().begin() + count};
}

}  // namespace bock::test
