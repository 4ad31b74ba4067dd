#include <gtest/gtest.h>

#include "logdup/java_lexer.hpp"

namespace logdup {
namespace {

std::vector<std::string> texts(const LexResult& r) {
  std::vector<std::string> out;
  for (const Token& t : r.tokens) out.push_back(t.text);
  return out;
}

TEST(JavaLexer, DropsCommentsAndKeepsLines) {
  const auto r = lex_java("int a; // note\n/* block\n comment */ b = 1;");
  EXPECT_EQ(texts(r), (std::vector<std::string>{"int", "a", ";", "b", "=", "1", ";"}));
  EXPECT_EQ(r.tokens[3].line, 3);
  EXPECT_TRUE(r.diagnostics.empty());
}

TEST(JavaLexer, StringLiteralHoldsRawContents) {
  const auto r = lex_java(R"(log.info("a \"b\" c");)");
  ASSERT_EQ(r.tokens.size(), 7u);
  EXPECT_EQ(r.tokens[4].kind, TokenKind::StringLiteral);
  EXPECT_EQ(r.tokens[4].text, R"(a \"b\" c)");
}

TEST(JavaLexer, ClassifiesTokens) {
  const auto r = lex_java("return x + 'c' + 0x1F + true;");
  EXPECT_EQ(r.tokens[0].kind, TokenKind::Keyword);
  EXPECT_EQ(r.tokens[1].kind, TokenKind::Identifier);
  EXPECT_EQ(r.tokens[3].kind, TokenKind::CharLiteral);
  EXPECT_EQ(r.tokens[5].kind, TokenKind::NumberLiteral);
  EXPECT_TRUE(r.tokens[7].is_literal());
}

TEST(JavaLexer, SplitsShiftOperatorsForGenerics) {
  const auto r = lex_java("Map<String, List<Integer>> m;");
  int closers = 0;
  for (const Token& t : r.tokens) closers += t.is(">") ? 1 : 0;
  EXPECT_EQ(closers, 2);
}

TEST(JavaLexer, SkipsByteOrderMark) {
  const auto r = lex_java("\xEF\xBB\xBFpackage a;");
  ASSERT_FALSE(r.tokens.empty());
  EXPECT_EQ(r.tokens[0].text, "package");
}

TEST(JavaLexer, TextBlock) {
  const auto r = lex_java("String s = \"\"\"\n  hello\n  \"\"\";");
  ASSERT_GE(r.tokens.size(), 4u);
  EXPECT_EQ(r.tokens[3].kind, TokenKind::TextBlock);
}

TEST(JavaLexer, ReportsUnterminatedLiteral) {
  const auto r = lex_java("String s = \"open\nint x;");
  EXPECT_FALSE(r.diagnostics.empty());
  EXPECT_EQ(r.tokens.back().text, ";");
}

TEST(JavaLexer, KeywordTable) {
  EXPECT_TRUE(is_java_keyword("catch"));
  EXPECT_FALSE(is_java_keyword("record"));
  EXPECT_FALSE(is_java_keyword("Logger"));
}

}  // namespace
}  // namespace logdup
