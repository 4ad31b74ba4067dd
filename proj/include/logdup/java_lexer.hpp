#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace logdup {

enum class TokenKind : std::uint8_t {
  Identifier,
  Keyword,
  StringLiteral,  // text holds the raw contents between the quotes
  TextBlock,      // """ ... """, text holds the raw contents
  CharLiteral,    // text holds the raw contents between the quotes
  NumberLiteral,
  Punct,
};

struct Token {
  TokenKind kind;
  std::string text;
  int line;  // 1-based

  bool is(std::string_view punct_or_keyword) const {
    return (kind == TokenKind::Punct || kind == TokenKind::Keyword) &&
           text == punct_or_keyword;
  }
  bool is_identifier() const { return kind == TokenKind::Identifier; }
  bool is_identifier(std::string_view name) const {
    return kind == TokenKind::Identifier && text == name;
  }
  bool is_literal() const {
    return kind == TokenKind::StringLiteral || kind == TokenKind::TextBlock ||
           kind == TokenKind::CharLiteral || kind == TokenKind::NumberLiteral ||
           (kind == TokenKind::Keyword &&
            (text == "true" || text == "false" || text == "null"));
  }
};

struct LexDiagnostic {
  int line;
  std::string message;
};

struct LexResult {
  std::vector<Token> tokens;
  std::vector<LexDiagnostic> diagnostics;
};

// Comments and whitespace are dropped. `>>` and `>>>` are emitted as
// separate `>` tokens so generic argument lists always balance. A leading
// UTF-8 byte-order mark is skipped. Unterminated literals and comments are
// reported and closed at end of line / end of input.
LexResult lex_java(std::string_view source);

bool is_java_keyword(std::string_view word);

}  // namespace logdup
