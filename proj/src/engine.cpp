// Copyright 2026 The bockmst Authors
// SPDX-License-Identifier: Apache-2.0

#include "bock/engine.hpp"

#include "bock/structured.hpp"
#include "bock/verbatim.hpp"

namespace bock {

std::string_view to_string(EngineKind engine) {
  return engine == EngineKind::kVerbatim ? "verbatim" : "structured";
}

std::optional<EngineKind> engine_from_string(std::string_view name) {
  if (name == "verbatim") {
    return EngineKind::kVerbatim;
  }
  if (name == "structured") {
    return EngineKind::kStructured;
  }
  return std::nullopt;
}

Solution solve(const ProblemInstance& instance, EngineKind engine) {
  return engine == EngineKind::kVerbatim ? verbatim::solve(instance)
                                         : solve_structured(instance);
}

}  // namespace bock
