// Copyright 2026 The bockmst Authors
// SPDX-License-Identifier: Apache-2.0

#include "bock/parse.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "text_scanner.hpp"

namespace bock {

ParseInstance::ParseInstance(std::vector<std::string> tokens, Node root_index)
    : tokens_(std::move(tokens)),
      root_(root_index),
      weights_(tokens_.size() * tokens_.size()) {
  if (tokens_.empty()) {
    throw std::invalid_argument("a parse instance needs at least the root token");
  }
  if (root_ < 1 || root_ > n()) {
    throw std::invalid_argument("root index " + std::to_string(root_) + " out of range");
  }
}

std::size_t ParseInstance::offset(Node head, Node dependent) const {
  if (head < 1 || head > n() || dependent < 1 || dependent > n()) {
    throw std::invalid_argument("arc (" + std::to_string(head) + "," + std::to_string(dependent) +
                                ") out of range");
  }
  return static_cast<std::size_t>(head - 1) * tokens_.size() +
         static_cast<std::size_t>(dependent - 1);
}

void ParseInstance::set_weight(Node head, Node dependent, double weight) {
  const std::size_t at = offset(head, dependent);
  if (head == dependent) {
    throw std::invalid_argument("self-arc at token " + std::to_string(head));
  }
  if (dependent == root_) {
    throw std::invalid_argument("arc into the root token from " + std::to_string(head));
  }
  if (!std::isfinite(weight)) {
    throw std::invalid_argument("non-finite weight");
  }
  weights_[at] = weight;
}

std::optional<double> ParseInstance::weight(Node head, Node dependent) const {
  return weights_[offset(head, dependent)];
}

const std::string& ParseInstance::token(Node j) const {
  if (j < 1 || j > n()) {
    throw std::invalid_argument("token index " + std::to_string(j) + " out of range");
  }
  return tokens_[static_cast<std::size_t>(j - 1)];
}

std::optional<double> ParseInstance::w_max() const {
  std::optional<double> best;
  for (const auto& w : weights_) {
    if (w && (!best || *w > *best)) {
      best = *w;
    }
  }
  return best;
}

ParseInstance load_parse_instance(std::string_view text) {
  detail::TextScanner scanner(text);
  const auto header = scanner.line_tokens();
  if (!header || header->size() != 2) {
    throw InputError("header must be 'TOKEN_COUNT ROOT_INDEX'",
                     header ? header->front().line : scanner.line(), 1);
  }
  const long long n = detail::parse_integer((*header)[0], "token count");
  if (n < 1 || n > 1 << 16) {
    throw InputError("token count out of range", (*header)[0].line, (*header)[0].column);
  }
  const long long root = detail::parse_integer((*header)[1], "root index");
  if (root < 1 || root > n) {
    throw InputError("root index out of range", (*header)[1].line, (*header)[1].column);
  }

  const auto words = scanner.line_tokens();
  if (!words || static_cast<long long>(words->size()) != n) {
    throw InputError("expected " + std::to_string(n) + " tokens on the token line",
                     words ? words->front().line : scanner.line(), 1);
  }
  std::vector<std::string> tokens;
  tokens.reserve(words->size());
  for (const auto& word : *words) {
    tokens.emplace_back(word.text);
  }
  ParseInstance parse(std::move(tokens), static_cast<Node>(root));

  while (const auto line = scanner.line_tokens()) {
    const auto& fields = *line;
    if (fields.size() != 3) {
      throw InputError("expected 'head dependent weight'", fields.front().line,
                       fields.front().column);
    }
    const long long head = detail::parse_integer(fields[0], "head");
    const long long dependent = detail::parse_integer(fields[1], "dependent");
    double weight = 0.0;
    const auto* first = fields[2].text.data();
    const auto* last = first + fields[2].text.size();
    const auto [ptr, ec] = std::from_chars(first, last, weight);
    if (ec != std::errc{} || ptr != last) {
      throw InputError("weight: expected a number, got '" + std::string(fields[2].text) + "'",
                       fields[2].line, fields[2].column);
    }
    if (head < 1 || head > n || dependent < 1 || dependent > n) {
      throw InputError("arc endpoint out of range", fields[0].line, fields[0].column);
    }
    if (parse.weight(static_cast<Node>(head), static_cast<Node>(dependent))) {
      throw InputError("duplicate arc", fields[0].line, fields[0].column);
    }
    try {
      parse.set_weight(static_cast<Node>(head), static_cast<Node>(dependent), weight);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what(), fields[0].line, fields[0].column);
    }
  }
  return parse;
}

Cost quantize(double weight, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("scale must be positive and finite");
  }
  // nearbyint honours the default round-to-nearest-even mode.
  const double scaled = std::nearbyint(weight * scale);
  if (!std::isfinite(scaled) || std::fabs(scaled) > static_cast<double>(kMaxCost / 2)) {
    throw std::invalid_argument("weight " + std::to_string(weight) +
                                " does not fit the cost range at this scale");
  }
  return static_cast<Cost>(scaled);
}

namespace {

Cost quantized_w_max(const ParseInstance& parse, double scale) {
  const auto w_max = parse.w_max();
  return w_max ? quantize(*w_max, scale) : 0;
}

}  // namespace

ProblemInstance max_to_min(const ParseInstance& parse, double scale) {
  const int n = parse.n();
  const Cost w_max = quantized_w_max(parse, scale);
  std::vector<Cost> costs(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                          ProblemInstance::kInfeasible);
  for (Node i = 1; i <= n; ++i) {
    for (Node j = 1; j <= n; ++j) {
      if (const auto w = parse.weight(i, j)) {
        costs[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(j - 1)] = w_max - quantize(*w, scale);
      }
    }
  }
  return ProblemInstance(n, parse.root_index(), std::move(costs));
}

std::optional<HeadAssignment> decode_heads(const ParseInstance& parse, EngineKind engine,
                                           double scale) {
  const ProblemInstance instance = max_to_min(parse, scale);
  const Solution solution = solve(instance, engine);
  if (solution.status != Status::kOptimum) {
    return std::nullopt;
  }

  const int n = parse.n();
  const Node root = parse.root_index();
  HeadAssignment assignment;
  assignment.scale = scale;
  assignment.w_max_units = quantized_w_max(parse, scale);
  assignment.cost_units = solution.z;
  assignment.head = NodeArray<Node>(n, 0);
  for (Node j = 1; j <= n; ++j) {
    if (j == root) {
      continue;
    }
    const Node head = solution.predecessor[j];
    const auto w = parse.weight(head, j);
    if (head == j || !w) {
      throw std::logic_error("decoder selected an arc absent from the parse instance");
    }
    assignment.head[j] = head;
    assignment.score_units += quantize(*w, scale);
  }
  if (assignment.cost_units != (n - 1) * assignment.w_max_units - assignment.score_units) {
    throw std::logic_error("affine identity violated: cost " +
                           std::to_string(assignment.cost_units) + ", score " +
                           std::to_string(assignment.score_units));
  }
  return assignment;
}

std::string export_heads(const HeadAssignment& assignment, const ParseInstance& parse) {
  std::ostringstream out;
  for (Node j = 1; j <= parse.n(); ++j) {
    if (j != parse.root_index()) {
      out << j << ' ' << parse.token(j) << ' ' << assignment.head[j] << '\n';
    }
  }
  return out.str();
}

}  // namespace bock
