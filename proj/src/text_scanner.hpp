// Copyright 2026 The bockmst Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bock/instance.hpp"

namespace bock::detail {

struct Token {
  std::string_view text;
  int line = 0;
  int column = 0;
};

/// Splits text into lines of whitespace-separated tokens. Blank lines and
/// `#` comments are skipped.
class TextScanner {
 public:
  explicit TextScanner(std::string_view text) : text_(text) {}

  /// Tokens of the next non-empty line, or nullopt at end of input.
  std::optional<std::vector<Token>> line_tokens() {
    while (pos_ < text_.size()) {
      const std::size_t end = std::min(text_.find('\n', pos_), text_.size());
      std::string_view line = text_.substr(pos_, end - pos_);
      const int line_no = ++line_;
      pos_ = end + 1;
      if (const auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      std::vector<Token> tokens;
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) {
          ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) {
          ++i;
        }
        if (i > start) {
          tokens.push_back({line.substr(start, i - start), line_no, static_cast<int>(start) + 1});
        }
      }
      if (!tokens.empty()) {
        return tokens;
      }
    }
    return std::nullopt;
  }

  /// Line number of the most recently consumed line.
  [[nodiscard]] int line() const { return line_; }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f'; }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 0;
};

inline long long parse_integer(const Token& token, const std::string& what) {
  long long value = 0;
  const auto* first = token.text.data();
  const auto* last = first + token.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw InputError(what + ": expected an integer, got '" + std::string(token.text) + "'",
                     token.line, token.column);
  }
  return value;
}

}  // namespace bock::detail
