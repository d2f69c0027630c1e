// Copyright 2026 The bockmst Authors
// SPDX-License-Identifier: Apache-2.0

#include "bock/instance.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "text_scanner.hpp"

namespace bock {

ProblemInstance::ProblemInstance(int n, Node origin, std::vector<Cost> row_major_costs,
                                 std::optional<Cost> sentinel)
    : n_(n),
      origin_(origin),
      costs_(std::move(row_major_costs)),
      sentinel_(sentinel.value_or(choose_sentinel(costs_))),
      sentinel_explicit_(sentinel.has_value()) {
  if (n_ < 1) {
    throw std::invalid_argument("node count must be positive");
  }
  if (costs_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_)) {
    throw std::invalid_argument("cost matrix must hold n*n entries");
  }
}

std::size_t ProblemInstance::offset(Node i, Node j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw std::out_of_range("arc (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside the cost matrix");
  }
  return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
         static_cast<std::size_t>(j - 1);
}

Cost choose_sentinel(const std::vector<Cost>& row_major_costs) {
  Cost largest = -1;
  for (const Cost c : row_major_costs) {
    if (c != ProblemInstance::kInfeasible) {
      largest = std::max(largest, c);
    }
  }
  return largest < 0 ? 1 : largest + 1;
}

std::vector<std::string> validate(const ProblemInstance& instance) {
  std::vector<std::string> errors;
  const int n = instance.n();
  if (instance.origin() < 1 || instance.origin() > n) {
    errors.push_back("origin out of range: " + std::to_string(instance.origin()) +
                     " not in 1.." + std::to_string(n));
  }
  Cost largest = -1;
  for (Node i = 1; i <= n; ++i) {
    for (Node j = 1; j <= n; ++j) {
      if (!instance.finite(i, j)) {
        continue;
      }
      const Cost c = instance.cost(i, j);
      if (c < 0) {
        errors.push_back("negative cost at (" + std::to_string(i) + "," + std::to_string(j) +
                         "): " + std::to_string(c));
      } else if (c > kMaxCost) {
        errors.push_back("cost too large at (" + std::to_string(i) + "," + std::to_string(j) +
                         "): " + std::to_string(c));
      }
      largest = std::max(largest, c);
    }
  }
  if (instance.sentinel() < 0) {
    errors.push_back("negative sentinel: " + std::to_string(instance.sentinel()));
  } else if (instance.sentinel() > kMaxCost + 1) {
    errors.push_back("sentinel too large: " + std::to_string(instance.sentinel()));
  }
  if (instance.sentinel() <= largest) {
    errors.push_back("sentinel " + std::to_string(instance.sentinel()) +
                     " does not exceed largest finite cost " + std::to_string(largest));
  }
  return errors;
}

InputError::InputError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

Cost parse_cost(const detail::Token& token) {
  if (token.text == "inf") {
    return ProblemInstance::kInfeasible;
  }
  Cost value = 0;
  const auto* first = token.text.data();
  const auto* last = first + token.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw InputError("expected an integer or 'inf', got '" + std::string(token.text) + "'",
                     token.line, token.column);
  }
  if (value < 0) {
    throw InputError("negative cost " + std::string(token.text), token.line, token.column);
  }
  return value;
}

}  // namespace

ProblemInstance load_instance(std::string_view text) {
  detail::TextScanner scanner(text);
  const auto header = scanner.line_tokens();
  if (!header || header->size() < 2 || header->size() > 3) {
    const int line = header && !header->empty() ? header->front().line : scanner.line();
    throw InputError("header must be 'N ORIGIN [M]'", line, 1);
  }
  const auto& tokens = *header;
  const long long n = detail::parse_integer(tokens[0], "node count");
  if (n < 1 || n > 1 << 16) {
    throw InputError("node count out of range", tokens[0].line, tokens[0].column);
  }
  const long long origin = detail::parse_integer(tokens[1], "origin");
  if (origin < 1 || origin > n) {
    throw InputError("origin out of range", tokens[1].line, tokens[1].column);
  }
  std::optional<Cost> sentinel;
  if (tokens.size() == 3) {
    sentinel = detail::parse_integer(tokens[2], "sentinel");
  }

  std::vector<Cost> costs;
  costs.reserve(static_cast<std::size_t>(n * n));
  for (long long row = 1; row <= n; ++row) {
    const auto line = scanner.line_tokens();
    if (!line) {
      throw InputError("expected " + std::to_string(n) + " matrix rows, found " +
                           std::to_string(row - 1),
                       scanner.line(), 1);
    }
    if (static_cast<long long>(line->size()) != n) {
      const auto& at = line->size() > static_cast<std::size_t>(n) ? (*line)[n] : line->back();
      throw InputError("matrix row " + std::to_string(row) + " has " +
                           std::to_string(line->size()) + " entries, expected " +
                           std::to_string(n),
                       at.line, at.column);
    }
    for (const auto& token : *line) {
      costs.push_back(parse_cost(token));
    }
  }
  if (const auto extra = scanner.line_tokens()) {
    throw InputError("unexpected trailing content", extra->front().line, extra->front().column);
  }

  ProblemInstance instance(static_cast<int>(n), static_cast<Node>(origin), std::move(costs),
                           sentinel);
  if (const auto errors = validate(instance); !errors.empty()) {
    const auto& at = tokens.size() == 3 ? tokens[2] : tokens[0];
    throw InputError(errors.front(), at.line, at.column);
  }
  return instance;
}

std::string serialize(const ProblemInstance& instance) {
  std::ostringstream out;
  out << instance.n() << ' ' << instance.origin();
  if (instance.sentinel_explicit()) {
    out << ' ' << instance.sentinel();
  }
  out << '\n';
  for (Node i = 1; i <= instance.n(); ++i) {
    for (Node j = 1; j <= instance.n(); ++j) {
      if (j > 1) {
        out << ' ';
      }
      if (instance.finite(i, j)) {
        out << instance.cost(i, j);
      } else {
        out << "inf";
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string_view to_string(Status status) {
  return status == Status::kOptimum ? "OPTIMUM" : "INFEASIBLE";
}

}  // namespace bock
