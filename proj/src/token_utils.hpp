#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "logdup/java_lexer.hpp"
#include "logdup/source_model.hpp"

namespace logdup::detail {

inline constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

// Partner index for every bracket token, kUnmatched elsewhere.
inline std::vector<std::size_t> bracket_matches(const std::vector<Token>& tokens) {
  std::vector<std::size_t> match(tokens.size(), kUnmatched);
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (t.kind != TokenKind::Punct || t.text.size() != 1) continue;
    const char c = t.text[0];
    if (c == '(' || c == '[' || c == '{') {
      stack.push_back(i);
    } else if (c == ')' || c == ']' || c == '}') {
      const char open = c == ')' ? '(' : c == ']' ? '[' : '{';
      while (!stack.empty() && tokens[stack.back()].text[0] != open) stack.pop_back();
      if (stack.empty()) continue;
      match[stack.back()] = i;
      match[i] = stack.back();
      stack.pop_back();
    }
  }
  return match;
}

// Splits [span.first, span.last] at top-level occurrences of `separator`.
inline std::vector<TokenSpan> split_top_level(const std::vector<Token>& tokens,
                                              TokenSpan span, std::string_view separator) {
  std::vector<TokenSpan> parts;
  int depth = 0;
  std::size_t start = span.first;
  for (std::size_t i = span.first; i <= span.last; ++i) {
    const Token& t = tokens[i];
    if (t.kind == TokenKind::Punct) {
      if (t.text == "(" || t.text == "[" || t.text == "{") ++depth;
      if (t.text == ")" || t.text == "]" || t.text == "}") --depth;
      if (depth == 0 && t.text == separator) {
        if (i > start) parts.push_back({start, i - 1});
        start = i + 1;
      }
    }
  }
  if (start <= span.last) parts.push_back({start, span.last});
  return parts;
}

}  // namespace logdup::detail
