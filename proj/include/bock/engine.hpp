// Copyright 2026 The bockmst Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string_view>

#include "bock/instance.hpp"

namespace bock {

enum class EngineKind { kVerbatim, kStructured };

std::string_view to_string(EngineKind engine);
std::optional<EngineKind> engine_from_string(std::string_view name);

/// Solves with the selected engine and no observer.
Solution solve(const ProblemInstance& instance, EngineKind engine);

}  // namespace bock
