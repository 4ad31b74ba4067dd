#include "logdup/java_lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace logdup {

namespace {

constexpr std::array<std::string_view, 53> kKeywords = {
    "abstract",   "assert",     "boolean",   "break",      "byte",
    "case",       "catch",      "char",      "class",      "const",
    "continue",   "default",    "do",        "double",     "else",
    "enum",       "extends",    "final",     "finally",    "float",
    "for",        "goto",       "if",        "implements", "import",
    "instanceof", "int",        "interface", "long",       "native",
    "new",        "package",    "private",   "protected",  "public",
    "return",     "short",      "static",    "strictfp",   "super",
    "switch",     "synchronized", "this",    "throw",      "throws",
    "transient",  "try",        "void",      "volatile",   "while",
    "true",       "false",      "null",
};

// Longest first so that maximal munch works with a linear scan.
constexpr std::array<std::string_view, 37> kPuncts = {
    "...", "<<=", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=",
    ">=",  "+=",  "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<", "(",
    ")",   "{",   "}",  "[",  "]",  ";",  ",",  ".",  "@",  "=",  "<",
    "?",   ":",   "!",  "~",
};

bool is_ident_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}

bool is_ident_part(unsigned char c) {
  return is_ident_start(c) || std::isdigit(c);
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {
    if (src_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
  }

  LexResult run() {
    while (pos_ < src_.size()) {
      const unsigned char c = static_cast<unsigned char>(src_[pos_]);
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else if (starts_with("//")) {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (starts_with("/*")) {
        block_comment();
      } else if (starts_with("\"\"\"")) {
        text_block();
      } else if (c == '"') {
        quoted('"', TokenKind::StringLiteral);
      } else if (c == '\'') {
        quoted('\'', TokenKind::CharLiteral);
      } else if (std::isdigit(c) ||
                 (c == '.' && pos_ + 1 < src_.size() &&
                  std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
        number();
      } else if (is_ident_start(c)) {
        identifier();
      } else {
        punct();
      }
    }
    return std::move(result_);
  }

 private:
  bool starts_with(std::string_view s) const {
    return src_.substr(pos_, s.size()) == s;
  }

  void emit(TokenKind kind, std::string text, int line) {
    result_.tokens.push_back(Token{kind, std::move(text), line});
  }

  void block_comment() {
    const int start_line = line_;
    pos_ += 2;
    while (pos_ < src_.size() && !starts_with("*/")) {
      if (src_[pos_] == '\n') ++line_;
      ++pos_;
    }
    if (pos_ >= src_.size()) {
      result_.diagnostics.push_back({start_line, "unterminated block comment"});
      return;
    }
    pos_ += 2;
  }

  void text_block() {
    const int start_line = line_;
    pos_ += 3;
    const std::size_t begin = pos_;
    while (pos_ < src_.size() && !starts_with("\"\"\"")) {
      if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) {
        if (src_[pos_ + 1] == '\n') ++line_;
        pos_ += 2;
        continue;
      }
      if (src_[pos_] == '\n') ++line_;
      ++pos_;
    }
    std::string body(src_.substr(begin, pos_ - begin));
    if (pos_ >= src_.size()) {
      result_.diagnostics.push_back({start_line, "unterminated text block"});
    } else {
      pos_ += 3;
    }
    emit(TokenKind::TextBlock, std::move(body), start_line);
  }

  void quoted(char quote, TokenKind kind) {
    const std::size_t begin = ++pos_;
    while (pos_ < src_.size() && src_[pos_] != quote && src_[pos_] != '\n') {
      pos_ += (src_[pos_] == '\\' && pos_ + 1 < src_.size()) ? 2 : 1;
    }
    std::string body(src_.substr(begin, std::min(pos_, src_.size()) - begin));
    if (pos_ < src_.size() && src_[pos_] == quote) {
      ++pos_;
    } else {
      result_.diagnostics.push_back({line_, "unterminated literal"});
    }
    emit(kind, std::move(body), line_);
  }

  void number() {
    const std::size_t begin = pos_;
    while (pos_ < src_.size()) {
      const unsigned char c = static_cast<unsigned char>(src_[pos_]);
      if (std::isalnum(c) || c == '_' || c == '.') {
        ++pos_;
      } else if ((c == '+' || c == '-') && pos_ > begin &&
                 (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E' ||
                  src_[pos_ - 1] == 'p' || src_[pos_ - 1] == 'P') &&
                 !(src_.substr(begin, 2) == "0x" ||
                   src_.substr(begin, 2) == "0X")) {
        ++pos_;
      } else {
        break;
      }
    }
    emit(TokenKind::NumberLiteral, std::string(src_.substr(begin, pos_ - begin)),
         line_);
  }

  void identifier() {
    const std::size_t begin = pos_;
    while (pos_ < src_.size() &&
           is_ident_part(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
    std::string word(src_.substr(begin, pos_ - begin));
    const TokenKind kind =
        is_java_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier;
    emit(kind, std::move(word), line_);
  }

  void punct() {
    for (std::string_view p : kPuncts) {
      if (starts_with(p)) {
        emit(TokenKind::Punct, std::string(p), line_);
        pos_ += p.size();
        return;
      }
    }
    emit(TokenKind::Punct, std::string(1, src_[pos_]), line_);
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  LexResult result_;
};

}  // namespace

bool is_java_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

LexResult lex_java(std::string_view source) { return Lexer(source).run(); }

}  // namespace logdup
