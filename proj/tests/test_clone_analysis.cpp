#include <gtest/gtest.h>

#include <random>
#include <set>

#include "logdup/clone_analysis.hpp"
#include "test_support.hpp"

namespace logdup {
namespace {

using Lines = std::vector<std::string>;

std::size_t lcs_oracle(const Lines& a, const Lines& b) {
  std::vector<std::vector<std::size_t>> t(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      t[i][j] = a[i - 1] == b[j - 1] ? t[i - 1][j - 1] + 1 : std::max(t[i - 1][j], t[i][j - 1]);
    }
  }
  return t[a.size()][b.size()];
}

double similarity_oracle(const Lines& a, const Lines& b) {
  const std::size_t longest = std::max(a.size(), b.size());
  return longest == 0 ? 100.0 : 100.0 * static_cast<double>(lcs_oracle(a, b)) / longest;
}

Lines random_lines(std::mt19937& rng, std::size_t max_len, int vocabulary) {
  Lines out(rng() % (max_len + 1));
  for (auto& l : out) l = "L" + std::to_string(rng() % vocabulary);
  return out;
}

TEST(Similarity, SevenOfTenIsSeventy) {
  Lines a, b;
  for (int i = 0; i < 10; ++i) a.push_back("x" + std::to_string(i));
  b = a;
  b[1] = "y1";
  b[4] = "y4";
  b[8] = "y8";
  EXPECT_DOUBLE_EQ(block_similarity(a, b), 70.0);
  EXPECT_DOUBLE_EQ(block_similarity(Lines{}, Lines{}), 100.0);
  EXPECT_DOUBLE_EQ(block_similarity(a, Lines{}), 0.0);
}

TEST(Similarity, RandomPairsSymmetricReflexiveAndMatchOracle) {
  std::mt19937 rng(2024);
  for (int round = 0; round < 1000; ++round) {
    const Lines a = random_lines(rng, 20, 6);
    const Lines b = random_lines(rng, 20, 6);
    const double ab = block_similarity(a, b);
    EXPECT_DOUBLE_EQ(ab, block_similarity(b, a));
    EXPECT_DOUBLE_EQ(block_similarity(a, a), 100.0);
    EXPECT_DOUBLE_EQ(ab, similarity_oracle(a, b));
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, 100.0);
  }
}

// Replacing a line of b with the matching line of a never lowers similarity.
TEST(Similarity, MonotoneUnderAlignment) {
  std::mt19937 rng(5);
  for (int round = 0; round < 300; ++round) {
    Lines a = random_lines(rng, 15, 5);
    Lines b = a;
    for (auto& l : b) {
      if (rng() % 3 == 0) l = "Z" + std::to_string(rng() % 4);
    }
    double previous = block_similarity(a, b);
    for (std::size_t i = 0; i < b.size(); ++i) {
      b[i] = a[i];
      const double now = block_similarity(a, b);
      EXPECT_GE(now, previous);
      previous = now;
    }
    EXPECT_DOUBLE_EQ(previous, 100.0);
  }
}

TEST(Normalize, IdentifiersLiteralsAndLineBreaks) {
  const auto lexed = lex_java("{ int x = foo(1, \"a\"); for (int i = 0; i < n; i++) { y--; } }");
  const Lines lines = normalize_tokens(lexed.tokens);
  EXPECT_EQ(lines, (Lines{"{", "int ID = ID ( LIT , LIT ) ;",
                          "for ( int ID = LIT ; ID < ID ; ID ++ ) {", "ID -- ;", "}", "}"}));
}

TEST(Normalize, CommentsOnlyBlockHasNoLines) {
  const auto lexed = lex_java("// note\n/* more */");
  EXPECT_TRUE(normalize_tokens(lexed.tokens).empty());
}

TEST(Normalize, ExcludedSpansAreDropped) {
  const auto lexed = lex_java("a(); LOG.info(\"x\"); b();");
  const TokenSpan log{4, 10};
  EXPECT_EQ(normalize_tokens(lexed.tokens, std::span<const TokenSpan>(&log, 1)),
            (Lines{"ID ( ) ;", "ID ( ) ;"}));
}

std::vector<NormalizedBlock> as_blocks(const std::vector<Lines>& lines) {
  std::vector<NormalizedBlock> blocks;
  for (std::uint32_t i = 0; i < lines.size(); ++i) blocks.push_back({BlockId{0, i}, lines[i]});
  return blocks;
}

TEST(Detect, MinimumLinesFilter) {
  Lines nine(9, "same ;");
  Lines ten(10, "same ;");
  CloneOptions options;
  EXPECT_TRUE(detect_clones(as_blocks({nine, nine}), options).empty());
  EXPECT_EQ(detect_clones(as_blocks({ten, ten}), options).size(), 1u);
  options.min_lines = 9;
  EXPECT_EQ(detect_clones(as_blocks({nine, nine}), options).size(), 1u);
}

TEST(Detect, NestedPairsNeverCompared) {
  const Lines body(12, "x ;");
  const auto blocks = as_blocks({body, body, body});
  const NestingPredicate nested = [](BlockId a, BlockId b) {
    return (a.block == 0 && b.block == 1) || (a.block == 1 && b.block == 0);
  };
  const auto classes = detect_clones(blocks, CloneOptions{}, nested);
  ASSERT_EQ(classes.size(), 1u);
  EXPECT_EQ(classes[0].member_blocks.size(), 3u);
  EXPECT_EQ(classes[0].pairwise_similarity.count({BlockId{0, 0}, BlockId{0, 1}}), 0u);
  EXPECT_DOUBLE_EQ(classes[0].similarity(BlockId{0, 2}, BlockId{0, 0}), 100.0);
}

// Five blocks checked against an all-pairs oracle with transitive grouping.
TEST(Detect, RandomBlocksMatchAllPairsOracle) {
  std::mt19937 rng(11);
  for (int round = 0; round < 200; ++round) {
    std::vector<Lines> lines;
    const Lines seed = random_lines(rng, 14, 8);
    for (int i = 0; i < 5; ++i) {
      Lines l = rng() % 2 ? seed : random_lines(rng, 14, 8);
      for (auto& x : l) {
        if (rng() % 5 == 0) x = "M" + std::to_string(rng() % 3);
      }
      lines.push_back(l);
    }
    CloneOptions options;
    options.min_lines = 4;
    options.threshold = 60;
    options.threads = 1 + round % 3;
    const auto classes = detect_clones(as_blocks(lines), options);

    std::vector<int> comp(5);
    for (int i = 0; i < 5; ++i) comp[i] = i;
    auto eligible = [&](int i) { return static_cast<int>(lines[i].size()) >= options.min_lines; };
    for (int pass = 0; pass < 5; ++pass) {
      for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
          if (i != j && eligible(i) && eligible(j) &&
              similarity_oracle(lines[i], lines[j]) >= options.threshold) {
            comp[i] = comp[j] = std::min(comp[i], comp[j]);
          }
        }
      }
    }
    std::map<int, std::vector<std::uint32_t>> groups;
    for (int i = 0; i < 5; ++i) groups[comp[i]].push_back(i);
    std::set<std::vector<std::uint32_t>> expected, actual;
    for (const auto& [c, members] : groups) {
      if (members.size() >= 2) expected.insert(members);
    }
    for (const auto& cls : classes) {
      std::vector<std::uint32_t> members;
      for (BlockId b : cls.member_blocks) members.push_back(b.block);
      actual.insert(members);
      for (const auto& [pair, sim] : cls.pairwise_similarity) {
        EXPECT_DOUBLE_EQ(sim, similarity_oracle(lines[pair.first.block], lines[pair.second.block]));
      }
      EXPECT_EQ(cls.pairwise_similarity.size(), members.size() * (members.size() - 1) / 2);
    }
    EXPECT_EQ(actual, expected) << "round " << round;
  }
}

std::string long_method(const std::string& name, const std::string& message, int extra) {
  std::string s = "  void " + name + "(int a) {\n";
  for (int i = 0; i < 4; ++i) s += "    step" + std::to_string(i) + "(a);\n";
  s += "    LOG.info(\"" + message + "\");\n";
  for (int i = 0; i < extra; ++i) s += "    other" + std::to_string(i) + "(a);\n";
  return s + "  }\n";
}

TEST(Correlate, CloneDetectedSetLosesCloneWhenLogsStripped) {
  // Two methods of ten normalized lines sharing seven (70%). Without the log
  // line six of nine remain.
  std::string a = "package c;\nclass A {\n" + long_method("one", "Syncing peers", 3) + "}\n";
  std::string b = "package c;\nclass B {\n";
  b += "  void two(int a) {\n";
  for (int i = 0; i < 4; ++i) b += "    step" + std::to_string(i) + "(a);\n";
  b += "    LOG.info(\"Syncing peers\");\n    return;\n    return;\n    return;\n  }\n}\n";
  ScanConfig config;
  config.with_clone_analysis = true;
  config.clone.min_lines = 9;
  const auto out = testing::scan_sources({{"c/A.java", a}, {"c/B.java", b}}, config);
  ASSERT_EQ(out.sets.size(), 1u);
  ASSERT_TRUE(out.clone_correlation);
  const auto& corr = out.clone_correlation->correlations.at(0);
  EXPECT_EQ(corr.classification, CloneRelation::CloneDetected) << corr.similarity.value_or(-1);
  ASSERT_TRUE(out.clone_strip);
  EXPECT_EQ(out.clone_strip->clone_sets, 1u);
  EXPECT_EQ(out.clone_strip->reduced, 1u);
  EXPECT_EQ(out.clone_strip->reduced_sets, std::vector<std::uint32_t>{0});
  EXPECT_DOUBLE_EQ(out.clone_strip->percent_reduced, 100.0);
}

TEST(Correlate, SmallBlocksAreMicroClones) {
  const std::string src =
      "package m;\nclass M {\n"
      "  void a() { try { go(); } catch (Exception e) { LOG.warn(\"Lost lock\"); } }\n"
      "  void b() { try { go(); } catch (Exception e) { LOG.warn(\"Lost lock\"); } }\n}\n";
  ScanConfig config;
  config.with_clone_analysis = true;
  const auto out = testing::scan_sources({{"m/M.java", src}}, config);
  ASSERT_TRUE(out.clone_correlation);
  EXPECT_EQ(out.clone_correlation->correlations.at(0).classification, CloneRelation::MicroClone);
  EXPECT_EQ(out.clone_correlation->summary.micro_clone_sets, 1u);
  EXPECT_EQ(out.clone_correlation->summary.clone_sets, 0u);
}

TEST(Correlate, UnrelatedBlocksAreNonClones) {
  const std::string src =
      "package n;\nclass N {\n"
      "  void a() { LOG.warn(\"Lost lock\"); }\n"
      "  void b(int x) { if (x > 1) { x++; } while (x < 9) { x += 2; } "
      "LOG.warn(\"Lost lock\"); return; }\n}\n";
  ScanConfig config;
  config.with_clone_analysis = true;
  const auto out = testing::scan_sources({{"n/N.java", src}}, config);
  EXPECT_EQ(out.clone_correlation->correlations.at(0).classification, CloneRelation::NonClone);
  EXPECT_EQ(to_string(CloneRelation::NonClone), "non-clone");
}

}  // namespace
}  // namespace logdup
