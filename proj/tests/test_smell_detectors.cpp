#include <gtest/gtest.h>

#include "logdup/smell_detectors.hpp"
#include "test_support.hpp"

namespace logdup {
namespace {

using testing::scan_sources;
using testing::Sources;

std::vector<SmellInstance> of(const ScanOutput& out, SmellPattern p, bool suppressed = false) {
  std::vector<SmellInstance> r;
  for (const auto& f : suppressed ? out.suppressed : out.findings) {
    if (f.pattern == p) r.push_back(f);
  }
  return r;
}

ScanOutput scan_one(const std::string& body, std::size_t stop_words = 0) {
  ScanConfig config;
  config.stop_word_cap = stop_words;
  return scan_sources({{"p/Worker.java", "package p;\nclass Worker {\n" + body + "\n}\n"}}, config);
}

TEST(Ic, SilentHandlersOfOneTry) {
  const auto out = scan_one(R"(void run() {
    try { go(); }
    catch (IOException e) { LOG.warn("Task failed"); }
    catch (TimeoutException e) { LOG.warn("Task failed"); }
  })");
  const auto ic = of(out, SmellPattern::IC);
  ASSERT_EQ(ic.size(), 1u);
  EXPECT_EQ(ic[0].members.size(), 2u);
  const auto& ev = std::get<IcEvidence>(ic[0].evidence);
  EXPECT_EQ(ev.caught_types[0], std::vector<std::string>{"IOException"});
}

TEST(Ic, NotFlaggedWhenExceptionLoggedOrTriesDiffer) {
  const auto logged = scan_one(R"(void run() {
    try { go(); }
    catch (IOException e) { LOG.warn("Task failed", e); }
    catch (TimeoutException e) { LOG.warn("Task failed"); }
  })");
  EXPECT_TRUE(of(logged, SmellPattern::IC).empty());
  const auto separate = scan_one(R"(void run() {
    try { go(); } catch (IOException e) { LOG.warn("Task failed"); }
    try { go(); } catch (TimeoutException e) { LOG.warn("Task failed"); }
  })");
  EXPECT_TRUE(of(separate, SmellPattern::IC).empty());
}

TEST(Ie, ProblematicPair) {
  const auto out = scan_one(R"(void a() {
    try { go(); } catch (IOException e) { LOG.error("Copy failed", e); }
  }
  void b() {
    try { go(); } catch (IOException e) { LOG.error("Copy failed"); }
  })");
  const auto ie = of(out, SmellPattern::IE);
  ASSERT_EQ(ie.size(), 1u);
  EXPECT_FALSE(ie[0].suppressed_by);
  const auto& ev = std::get<IeEvidence>(ie[0].evidence);
  EXPECT_EQ(ev.usages, (std::vector<ExceptionUsage>{ExceptionUsage::FullStackTrace,
                                                    ExceptionUsage::None}));
}

TEST(Ie, GenericVersusSpecificIsJustified) {
  const auto out = scan_one(R"(void a() {
    try { go(); }
    catch (IOException e) { LOG.error("Copy failed: " + e.getMessage()); }
    catch (Exception e) { LOG.error("Copy failed: ", e); }
  })");
  EXPECT_TRUE(of(out, SmellPattern::IE).empty());
  const auto s = of(out, SmellPattern::IE, true);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].suppressed_by, JustifiableCase::IE1);
}

TEST(Ie, VerboseLevelInSameHandlerIsJustified) {
  const auto out = scan_one(R"(void a() {
    try { go(); } catch (IOException e) {
      LOG.warn("Copy failed");
      LOG.debug("Copy failed", e);
    }
  })");
  EXPECT_TRUE(of(out, SmellPattern::IE).empty());
  const auto s = of(out, SmellPattern::IE, true);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].suppressed_by, JustifiableCase::IE2);
}

TEST(Ie, ForwardedExceptionIsJustified) {
  const auto out = scan_one(R"(void a() {
    try { go(); } catch (IOException e) { LOG.error("Copy failed", e); }
  }
  void b() {
    try { go(); } catch (IOException e) {
      LOG.error("Copy failed");
      throw new CopyException(e);
    }
  })");
  EXPECT_TRUE(of(out, SmellPattern::IE).empty());
  const auto s = of(out, SmellPattern::IE, true);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].suppressed_by, JustifiableCase::IE3);
}

TEST(Ie, DifferentSpecificTypesAreNotCompared) {
  const auto out = scan_one(R"(void a() {
    try { go(); }
    catch (IOException e) { LOG.error("Copy failed", e); }
    catch (TimeoutException e) { LOG.error("Copy failed"); }
  })");
  EXPECT_TRUE(of(out, SmellPattern::IE).empty());
  EXPECT_TRUE(of(out, SmellPattern::IE, true).empty());
}

// {scale, up} in doScaleUp against {scale} in doScaleDown.
TEST(Lm, WorkedExample) {
  const auto out = scan_one(R"(void doScaleUp() { LOG.info("Scaling up the group: " + id); }
  void doScaleDown() { LOG.info("Scaling up the group: " + id); })");
  const auto lm = of(out, SmellPattern::LM);
  ASSERT_EQ(lm.size(), 1u);
  const auto& ev = std::get<LmEvidence>(lm[0].evidence);
  EXPECT_EQ(ev.common_words[0], (std::vector<std::string>{"scale", "up"}));
  EXPECT_EQ(ev.common_words[1], (std::vector<std::string>{"scale"}));
  EXPECT_EQ(ev.common_counts, (std::vector<std::size_t>{2, 1}));
}

TEST(Lm, EqualCountsAndStopWordsDoNotFlag) {
  const auto same = scan_one(R"(void startJob() { LOG.info("Job ready"); }
  void stopJob() { LOG.info("Job ready"); })");
  EXPECT_TRUE(of(same, SmellPattern::LM).empty());
  // With every word a stop word, both counts drop to zero.
  const auto stopped = scan_one(R"(void doScaleUp() { LOG.info("Scaling up"); }
  void doScaleDown() { LOG.info("Scaling up"); })", 50);
  EXPECT_TRUE(of(stopped, SmellPattern::LM).empty());
}

TEST(Lm, ClassMethodWords) {
  LoggingStatement s;
  s.enclosing_type_simple = "AutoScaleService";
  s.method_name = "doScaleUp";
  EXPECT_EQ(class_method_words(s), (std::set<std::string>{"auto", "do", "scale", "servic", "up"}));
  s.method_name = "<clinit>";
  EXPECT_EQ(class_method_words(s), (std::set<std::string>{"auto", "scale", "servic"}));
}

TEST(Dp, SiblingsAndParentChildGroupTogether) {
  ScanConfig config;
  config.patterns = {SmellPattern::DP};
  const Sources sources = {
      {"h/Base.java", "package h;\nabstract class Base { void fire() { LOG.info(\"Fencing node\"); } }"},
      {"h/A.java", "package h;\nclass A extends Base { void fire() { LOG.info(\"Fencing node\"); } }"},
      {"h/B.java", "package h;\nclass B extends Base { void fire() { LOG.info(\"Fencing node\"); } }"},
      {"h/C.java", "package h;\nclass C { void fire() { LOG.info(\"Fencing node\"); } }"},
      {"h/D.java", "package h;\nclass D extends Base { void other() { LOG.info(\"Fencing node\"); } }"},
  };
  const auto out = scan_sources(sources, config);
  const auto dp = of(out, SmellPattern::DP);
  ASSERT_EQ(dp.size(), 1u);
  EXPECT_EQ(dp[0].members.size(), 3u);
  const auto& ev = std::get<DpEvidence>(dp[0].evidence);
  EXPECT_EQ(ev.supertypes, std::vector<std::string>{"h.Base"});
  EXPECT_TRUE(of(out, SmellPattern::IC).empty());
}

TEST(Dp, UnrelatedClassesSeparateGroups) {
  const Sources sources = {
      {"q/I.java", "package q;\ninterface I { void f(); }"},
      {"q/J.java", "package q;\ninterface J { void f(); }"},
      {"q/A.java", "package q;\nclass A implements I { public void f() { LOG.info(\"Flushing\"); } }"},
      {"q/B.java", "package q;\nclass B implements I { public void f() { LOG.info(\"Flushing\"); } }"},
      {"q/C.java", "package q;\nclass C implements J { public void f() { LOG.info(\"Flushing\"); } }"},
      {"q/D.java", "package q;\nclass D implements J { public void f() { LOG.info(\"Flushing\"); } }"},
  };
  const auto dp = of(scan_sources(sources), SmellPattern::DP);
  ASSERT_EQ(dp.size(), 2u);
  EXPECT_EQ(dp[0].dup_set, dp[1].dup_set);
}

TEST(Il, LevelsReportedButNotFindings) {
  const auto out = scan_one(R"(void a() { LOG.info("Retrying"); }
  void b() { LOG.warn("Retrying"); })");
  ASSERT_EQ(out.level_inconsistencies.size(), 1u);
  EXPECT_EQ(out.level_inconsistencies[0].levels,
            (std::vector<LogLevel>{LogLevel::Warn, LogLevel::Info}));
}

TEST(Patterns, NamesParseCaseInsensitively) {
  EXPECT_EQ(parse_smell_pattern("ic"), SmellPattern::IC);
  EXPECT_EQ(parse_smell_pattern("Dp"), SmellPattern::DP);
  EXPECT_FALSE(parse_smell_pattern("il"));
  EXPECT_EQ(to_string(JustifiableCase::IE2), "IE.2");
  EXPECT_TRUE(is_generic_exception("Throwable"));
  EXPECT_FALSE(is_generic_exception("IOException"));
}

}  // namespace
}  // namespace logdup
