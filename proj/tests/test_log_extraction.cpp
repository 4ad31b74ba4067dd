#include <gtest/gtest.h>

#include "logdup/log_extraction.hpp"
#include "test_support.hpp"

namespace logdup {
namespace {

using testing::statements_of;

std::string wrap(const std::string& body) {
  return "package p;\nclass C {\n  static final String PREFIX = \"Job \";\n"
         "  static final String FULL = PREFIX + \"runner\";\n  void m(int id, String name) {\n" +
         body + "\n  }\n}\n";
}

std::string text_of(const std::string& body) {
  const auto s = statements_of(wrap(body));
  EXPECT_EQ(s.size(), 1u) << body;
  return s.empty() ? std::string() : s[0].static_text;
}

TEST(Rendering, LiteralsConcatenationAndPlaceholders) {
  EXPECT_EQ(text_of(R"(LOG.info("Starting up");)"), "Starting up");
  EXPECT_EQ(text_of(R"(LOG.info("Job " + id + " done");)"), "Job ⟨V⟩ done");
  EXPECT_EQ(text_of(R"(LOG.info("Name: " + name.trim());)"), "Name: ⟨V⟩");
  EXPECT_EQ(text_of(R"(LOG.info(name);)"), "⟨V⟩");
}

TEST(Rendering, ConstantsFoldIncludingChains) {
  EXPECT_EQ(text_of(R"(LOG.info(PREFIX + id);)"), "Job ⟨V⟩");
  EXPECT_EQ(text_of(R"(LOG.info(FULL + " stopped");)"), "Job runner stopped");
}

TEST(Rendering, ParameterizedArgumentsAppendPlaceholders) {
  EXPECT_EQ(text_of(R"(LOG.info("Moved {} to {}", id, name);)"), "Moved {} to {}⟨V⟩⟨V⟩");
}

TEST(Rendering, ExceptionOperandsContributeNothing) {
  const auto s = statements_of(wrap(R"(try { run(); } catch (IOException e) {
      LOG.error("Failed: " + e.getMessage());
      LOG.error("Failed: " + e);
      LOG.error("Failed: ", e);
    })"));
  ASSERT_EQ(s.size(), 3u);
  for (const auto& st : s) EXPECT_EQ(st.static_text, "Failed: ");
  EXPECT_EQ(s[0].exception_usage, ExceptionUsage::MessageOnly);
  EXPECT_EQ(s[1].exception_usage, ExceptionUsage::MessageOnly);
  EXPECT_EQ(s[2].exception_usage, ExceptionUsage::FullStackTrace);
}

TEST(Classification, ExceptionUsageLevels) {
  const auto s = statements_of(wrap(R"(try { run(); } catch (IllegalStateException | IOException ex) {
      LOG.warn("Plain");
      LOG.warn("Text " + ex.toString());
      LOG.warn("Trace", ex);
    }
    LOG.warn("Outside");)"));
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s[0].exception_usage, ExceptionUsage::None);
  EXPECT_EQ(s[1].exception_usage, ExceptionUsage::MessageOnly);
  EXPECT_EQ(s[2].exception_usage, ExceptionUsage::FullStackTrace);
  EXPECT_EQ(s[3].exception_usage, ExceptionUsage::NotApplicable);
  EXPECT_EQ(s[0].in_catch_of, (std::vector<std::string>{"IllegalStateException", "IOException"}));
  EXPECT_TRUE(s[3].in_catch_of.empty());
  EXPECT_TRUE(ExceptionUsage::NotApplicable < ExceptionUsage::None);
  EXPECT_TRUE(ExceptionUsage::MessageOnly < ExceptionUsage::FullStackTrace);
}

TEST(Classification, ForwardedExceptionIsNoted) {
  const auto s = statements_of(wrap(R"(try { run(); } catch (IOException e) {
      LOG.debug("Wrapping");
      throw new IllegalStateException(e);
    }
    try { run(); } catch (IOException e) {
      LOG.debug("Dropping");
      throw new IllegalStateException(e.getMessage());
    })"));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_TRUE(s[0].catch_forwards_exception);
  EXPECT_FALSE(s[1].catch_forwards_exception);
}

TEST(Extraction, LevelsReceiversAndLocation) {
  const auto s = statements_of(wrap(R"(LOG.fatal("a");
    logger.error("b");
    s_logger.warn("c");
    LOGGING.info("d");
    log.debug("e");
    Log.trace("f");
    out.info("not a logger");
    LOG.isDebugEnabled();)"));
  ASSERT_EQ(s.size(), 6u);
  const std::vector<LogLevel> levels = {LogLevel::Fatal, LogLevel::Error, LogLevel::Warn,
                                        LogLevel::Info,  LogLevel::Debug, LogLevel::Trace};
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(s[i].level, levels[i]);
    EXPECT_EQ(s[i].line, 6 + static_cast<int>(i));
    EXPECT_EQ(s[i].enclosing_type, "p.C");
    EXPECT_EQ(s[i].enclosing_type_simple, "C");
    EXPECT_EQ(s[i].enclosing_method, "m(int,String)");
    EXPECT_EQ(s[i].method_name, "m");
  }
}

TEST(Extraction, CustomLoggerPattern) {
  LoggerConfig config;
  config.receiver_pattern = "audit";
  const auto s = extract_logging_statements(
      parse_source_unit("T.java", wrap("audit.info(\"x\");\n    LOG.info(\"y\");")), config);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].static_text, "x");
}

TEST(Extraction, MultiLineCallReportsFirstLine) {
  const auto s = statements_of(wrap("LOG.info(\"part one \"\n        + \"part two\");"));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].line, 6);
  EXPECT_EQ(s[0].static_text, "part one part two");
}

TEST(Extraction, CorpusOrderingAndIds) {
  std::vector<SourceUnit> units;
  units.push_back(parse_source_unit("b/B.java", wrap("LOG.info(\"b1\"); LOG.info(\"b2\");")));
  units.push_back(parse_source_unit("a/A.java", wrap("LOG.info(\"a1\");")));
  const Corpus corpus(std::move(units));
  for (unsigned threads : {1u, 4u}) {
    const auto all = extract_corpus_statements(corpus, LoggerConfig{}, threads);
    ASSERT_EQ(all.size(), 3u);
    EXPECT_EQ(all[0].static_text, "a1");
    EXPECT_EQ(all[1].static_text, "b1");
    EXPECT_EQ(all[2].static_text, "b2");
    for (std::uint32_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i].id, i);
  }
}

TEST(Extraction, NamesRoundTrip) {
  for (LogLevel l : {LogLevel::Fatal, LogLevel::Error, LogLevel::Warn, LogLevel::Info,
                     LogLevel::Debug, LogLevel::Trace}) {
    EXPECT_EQ(parse_log_level(to_string(l)), l);
  }
  EXPECT_EQ(to_string(ExceptionUsage::NotApplicable), "not-applicable");
  EXPECT_EQ(to_string(ExceptionUsage::None), "none");
  EXPECT_EQ(to_string(ExceptionUsage::MessageOnly), "message_only");
  EXPECT_EQ(to_string(ExceptionUsage::FullStackTrace), "full_stack_trace");
}

}  // namespace
}  // namespace logdup
